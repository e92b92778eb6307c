#pragma once

// Command-line surface. run() parses argv, dispatches to one library
// operation or pipeline and renders its result as one line of JSON.
// Exit status: 0 success, 1 domain error (JSON error object), 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "template_chroma/json_io.hpp"

namespace template_chroma::cli {

struct CliResult {
  int exit_code = 0;
  std::string out;
};

namespace detail {

using json_io::Json;

/// Inline JSON, or "@path" to read the payload from a file.
inline std::string load_payload(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read payload file '" + arg.substr(1) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Template load_template(const std::string& arg, const Budget& budget) {
  return json_io::template_from_json(json_io::parse_text(load_payload(arg)), budget);
}

struct Options {
  std::string points, q_points, text, vertices, name, kappa, map = "g", a, b;
  std::vector<std::size_t> grid;
  std::uint64_t continuum = 0, param = 0, seed = 1;
  std::size_t dim = 0, k = 0, n = 0, samples = 1000;
  std::int64_t bound = 50;
  bool simple = false, witness = false, symmetrize = false, reflexive = false, as_template = false, chi = false;
};

inline CLI::Option* continuum_flag(CLI::App* cmd, Options& o) {
  return cmd->add_option("--continuum", o.continuum, "c in 2^aleph_0 = aleph_c (c >= 1)")->required();
}

inline CLI::Option* points_flag(CLI::App* cmd, Options& o) {
  return cmd->add_option("--points", o.points, "template points as JSON, or @file")->required();
}

/// Deepest subcommand that was named on the command line.
inline const CLI::App* deepest(const CLI::App& app) {
  const CLI::App* cur = &app;
  while (true) {
    auto subs = cur->get_subcommands();
    if (subs.empty()) return cur;
    cur = subs.front();
  }
}

}  // namespace detail

inline CliResult run(const std::vector<std::string>& args) {
  using detail::Json;
  using detail::Options;
  Options o;
  Budget budget;
  std::function<Json()> action;

  CLI::App app{"Template hypergraphs: distinguishing numbers, chromatic numbers, polynomials", "template_chroma"};
  app.require_subcommand(1);

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc, std::function<Json()> fn) {
    auto* cmd = group->add_subcommand(name, desc);
    cmd->callback([&action, fn = std::move(fn)] { action = fn; });
    return cmd;
  };

  // ---- template --------------------------------------------------------------
  auto* tmpl = app.add_subcommand("template", "template structure")->require_subcommand(1);
  {
    auto* c = leaf(tmpl, "analyze", "e(P), simplicity, connectivity and chi", [&] {
      auto p = detail::load_template(o.points, budget);
      auto verdict = chi_template(p, ContinuumSetting(o.continuum));
      return Json{{"e", verdict.e_used},
                  {"simple", is_simple(p)},
                  {"connected", is_connected(p)},
                  {"chi", json_io::to_json(verdict.chi)}};
    });
    detail::points_flag(c, o);
    detail::continuum_flag(c, o);

    c = leaf(tmpl, "enumerate", "all isomorphism classes of d-dimensional k-templates", [&] {
      auto all = enumerate_templates(o.dim, o.k, o.simple, budget);
      Json list = Json::array();
      for (const auto& p : all) list.push_back(json_io::to_json(p));
      return Json{{"dim", o.dim}, {"k", o.k}, {"simple_only", o.simple}, {"count", all.size()}, {"templates", list}};
    });
    c->add_option("--dim", o.dim, "dimension d")->required();
    c->add_option("--k", o.k, "number of points k")->required();
    c->add_flag("--simple", o.simple, "simple templates only");

    c = leaf(tmpl, "images", "homomorphic images up to isomorphism", [&] {
      auto p = detail::load_template(o.points, budget);
      auto images = homomorphic_images(p, budget);
      Json list = Json::array();
      for (const auto& q : images) list.push_back(json_io::to_json(q));
      return Json{{"template", json_io::to_json(p)}, {"count", images.size()}, {"images", list}};
    });
    detail::points_flag(c, o);
  }

  // ---- chi -----------------------------------------------------------------
  auto* chi = app.add_subcommand("chi", "chromatic numbers")->require_subcommand(1);
  {
    auto* c = leaf(chi, "symbolic", "chi of L(R^d, P) under a continuum setting", [&] {
      return json_io::to_json(chi_template(detail::load_template(o.points, budget), ContinuumSetting(o.continuum)));
    });
    detail::points_flag(c, o);
    detail::continuum_flag(c, o);

    c = leaf(chi, "exact", "exact chromatic number of L(grid, P)", [&] {
      auto p = detail::load_template(o.points, budget);
      auto h = build_L(GridSpec(o.grid, budget), p, budget);
      return json_io::to_json(chromatic_exact(h, budget), o.witness);
    });
    c->add_option("--grid", o.grid, "grid side lengths, e.g. 2,2")->required()->delimiter(',');
    detail::points_flag(c, o);
    c->add_flag("--witness", o.witness, "include an optimal coloring");

    c = leaf(chi, "achievable", "chromatic numbers of algebraic k-hypergraphs", [&] {
      return json_io::to_json(achievable_chromatics(o.k, ContinuumSetting(o.continuum)));
    });
    c->add_option("--k", o.k, "edge size k")->required();
    detail::continuum_flag(c, o);

    c = leaf(chi, "forbidden", "simple templates whose hypergraphs exceed kappa", [&] {
      return json_io::to_json(forbidden_family(o.k, Cardinal::parse(o.kappa), ContinuumSetting(o.continuum), budget));
    });
    c->add_option("--k", o.k, "edge size k")->required();
    c->add_option("--kappa", o.kappa, "infinite cardinal, e.g. aleph_0")->required();
    detail::continuum_flag(c, o);
  }

  // ---- embed -----------------------------------------------------------------
  auto* embed = app.add_subcommand("embed", "embeddings between template hypergraphs")->require_subcommand(1);
  {
    auto* c = leaf(embed, "lift", "lift P to a template one (or more) dimensions up", [&] {
      auto p = detail::load_template(o.points, budget);
      return json_io::to_json(o.dim == 0 ? star_lift(p) : lift_to_dim(p, o.dim));
    });
    detail::points_flag(c, o);
    c->add_option("--dim", o.dim, "target dimension (default dim P + 1)");

    c = leaf(embed, "verify", "sample the edge correspondence of a grid map", [&] {
      auto p = detail::load_template(o.points, budget);
      SamplerSpec spec{o.samples, o.bound, o.seed};
      if (o.map == "pad") {
        auto data = projection_data(p);
        auto q = o.q_points.empty() ? data.q : detail::load_template(o.q_points, budget);
        auto map = data.map.as_vertex_map();
        Json j{{"map", map.name}, {"domain", json_io::to_json(q)}, {"q_is_simple", data.q_is_simple}};
        j.update(json_io::to_json(verify_embedding(p, q, map, spec)));
        return j;
      }
      if (o.map != "g") throw Error(ErrorKind::InvalidArgument, "unknown map '" + o.map + "'; expected g or pad");
      auto q = o.q_points.empty() ? star_lift(p).q : detail::load_template(o.q_points, budget);
      auto map = g_map(p.dim());
      Json j{{"map", map.name}, {"domain", json_io::to_json(q)}};
      j.update(json_io::to_json(verify_embedding(p, q, map, spec)));
      return j;
    });
    detail::points_flag(c, o);
    c->add_option("--map", o.map, "g (default) or pad");
    c->add_option("--q", o.q_points, "domain template (default: the lift of P, or its projection for pad)");
    c->add_option("--samples", o.samples, "number of sampled subsets");
    c->add_option("--bound", o.bound, "coordinates drawn from [0, bound)");
    c->add_option("--seed", o.seed, "sampler seed");
  }

  // ---- poly ------------------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "template polynomials")->require_subcommand(1);
  auto source = [&] {
    if (!o.text.empty()) return parse_polynomial(o.text, o.k, o.n);
    if (o.points.empty()) throw Error(ErrorKind::InvalidArgument, "give --text (with --k and --n) or --points");
    return template_to_polynomial(detail::load_template(o.points, budget), o.symmetrize, o.reflexive, budget);
  };
  {
    auto* c = leaf(poly, "gen", "polynomial of a template", [&] {
      return json_io::to_json(
          template_to_polynomial(detail::load_template(o.points, budget), o.symmetrize, o.reflexive, budget));
    });
    detail::points_flag(c, o);
    c->add_flag("--symmetrize", o.symmetrize, "product over all renamings of the variables");
    c->add_flag("--reflexive", o.reflexive, "also vanish on tuples with a repeated point");

    c = leaf(poly, "parse", "parse polynomial text", [&] {
      auto p = parse_polynomial(o.text, o.k, o.n);
      auto j = json_io::to_json(p);
      if (o.as_template) j["template"] = json_io::to_json(polynomial_to_template(p));
      return j;
    });
    c->add_option("--text", o.text, "polynomial text")->required();
    c->add_option("--k", o.k, "number of variable tuples")->required();
    c->add_option("--n", o.n, "coordinates per tuple")->required();
    c->add_flag("--template", o.as_template, "also convert to a template");

    c = leaf(poly, "zero-graph", "zero hypergraph on a grid or point list", [&] {
      auto p = source();
      std::vector<VertexLabel> pts;
      if (!o.vertices.empty()) pts = json_io::vertices_from_json(json_io::parse_text(detail::load_payload(o.vertices)));
      else if (!o.grid.empty()) pts = grid_points(GridSpec(o.grid, budget));
      else throw Error(ErrorKind::InvalidArgument, "give --grid or --vertices");
      return json_io::to_json(zero_hypergraph_on_grid(p, pts, budget));
    });
    c->add_option("--text", o.text, "polynomial text");
    c->add_option("--k", o.k, "number of variable tuples (with --text)");
    c->add_option("--n", o.n, "coordinates per tuple (with --text)");
    c->add_option("--points", o.points, "template points instead of --text");
    c->add_flag("--symmetrize", o.symmetrize, "with --points: symmetrized polynomial");
    c->add_flag("--reflexive", o.reflexive, "with --points: reflexive polynomial");
    c->add_option("--grid", o.grid, "grid side lengths")->delimiter(',');
    c->add_option("--vertices", o.vertices, "point list as JSON (integers or \"p/q\" strings), or @file");
  }

  // ---- registry --------------------------------------------------------------
  auto* registry = app.add_subcommand("registry", "named hypergraphs with known colorability")->require_subcommand(1);
  {
    auto* c = leaf(registry, "query", "is the named hypergraph kappa-avoidable", [&] {
      auto entry = registry_lookup(o.name, o.param);
      return Json{{"avoidable", registry_avoidable(entry, Cardinal::parse(o.kappa), ContinuumSetting(o.continuum))}};
    });
    c->add_option("--name", o.name, "fox, simplex, isosceles or pythagorean")->required();
    c->add_option("--param", o.param, "family parameter");
    c->add_option("--kappa", o.kappa, "infinite cardinal, e.g. aleph_1")->required();
    detail::continuum_flag(c, o);
  }

  // ---- shift -----------------------------------------------------------------
  auto* shift = app.add_subcommand("shift", "shift graphs")->require_subcommand(1);
  {
    auto* c = leaf(shift, "graph", "shift graph on {0..n-1}", [&] {
      auto h = build_shift_graph(o.n);
      auto j = json_io::to_json(h);
      if (o.chi) j["chi"] = chromatic_exact(h, budget).colors;
      return j;
    });
    c->add_option("--n", o.n, "ground set size")->required();
    c->add_flag("--chi", o.chi, "also report the exact chromatic number");

    c = leaf(shift, "color", "countable coloring of the pair (a, b)", [&] {
      return json_io::to_json(shift_color(Rational::parse(o.a), Rational::parse(o.b)));
    });
    c->add_option("--a", o.a, "first coordinate (integer or p/q)")->required();
    c->add_option("--b", o.b, "second coordinate (integer or p/q)")->required();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, detail::deepest(app)->help()};
  } catch (const CLI::ParseError& e) {
    Json err{{"error", {{"kind", "Usage"}, {"message", e.what()}, {"usage", detail::deepest(app)->help()}}}};
    return {2, err.dump() + "\n"};
  }

  try {
    budget = Budget::from_env();
    return {0, action().dump() + "\n"};
  } catch (const Error& e) {
    return {1, json_io::error_json(e).dump() + "\n"};
  }
}

}  // namespace template_chroma::cli
