// Walks one template through the library: structure, symbolic chi under a
// few continuum settings, its finite hypergraph on small grids, and its
// polynomial.

#include <iostream>

#include "template_chroma/template_chroma.hpp"

using namespace template_chroma;

int main() {
  auto corner = validate_template(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}});
  auto dist = min_distinguisher(corner);
  std::cout << "corner template: e = " << dist.e << ", simple = " << std::boolalpha << is_simple(corner)
            << ", connected = " << is_connected(corner) << "\n";

  for (std::uint64_t c = 1; c <= 3; ++c) {
    auto v = chi_template(corner, ContinuumSetting(c));
    std::cout << "  2^aleph_0 = aleph_" << c << ": chi = " << v.chi.str() << "\n";
  }

  for (std::size_t side = 2; side <= 4; ++side) {
    auto h = build_L(GridSpec({side, side}), corner);
    auto r = chromatic_exact(h);
    std::cout << "  L(" << side << "x" << side << "): " << h.edges().size() << " edges, chi = " << r.colors << "\n";
  }

  auto poly = template_to_polynomial(corner);
  std::cout << "  polynomial: " << to_text(poly) << "\n";
  std::cout << "  back to template: " << (polynomial_to_template(poly) == corner ? "same class" : "different") << "\n";

  auto lift = star_lift(corner);
  auto report = verify_embedding(corner, lift.q, g_map(corner.dim()), SamplerSpec{500, 20, 7});
  std::cout << "  g-map check on the lift: " << report.samples_checked << " samples, " << report.failures.size()
            << " failures\n";
}
