#pragma once

// Template polynomials: sums and products of squared coordinate differences
// (v_{a,i} - v_{b,j})^2 between k variable tuples of arity n. Every node is
// a sum or product of squares, hence non-negative, so a sum vanishes iff all
// of its terms do and a product iff one of its factors does.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "template_chroma/budget.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/hypergraph.hpp"
#include "template_chroma/rational.hpp"
#include "template_chroma/templates.hpp"

namespace template_chroma {

/// (v_{a,i} - v_{b,j})^2
struct Atom {
  std::size_t a = 0, i = 0, b = 0, j = 0;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct PolyNode {
  enum class Kind { Atom, Sum, Product };
  Kind kind = Kind::Sum;  // an empty sum is the zero polynomial
  Atom atom;
  std::vector<PolyNode> children;

  static PolyNode zero() { return {}; }
  static PolyNode of(const Atom& a) { return {Kind::Atom, a, {}}; }
  static PolyNode sum(std::vector<PolyNode> c) { return {Kind::Sum, {}, std::move(c)}; }
  static PolyNode product(std::vector<PolyNode> c) { return {Kind::Product, {}, std::move(c)}; }

  bool is_zero() const { return kind == Kind::Sum && children.empty(); }
  friend bool operator==(const PolyNode&, const PolyNode&) = default;
};

struct TemplatePolynomial {
  std::size_t k = 0;  // variable tuples x0..x{k-1}
  std::size_t n = 0;  // coordinates per tuple
  PolyNode body;
  bool symmetrized = false;
  bool reflexive = false;
};

using Assignment = std::vector<std::vector<Rational>>;  // one n-tuple per variable

namespace detail {

inline std::string atom_text(const Atom& t) {
  return "(x" + std::to_string(t.a) + "_" + std::to_string(t.i) + " - x" + std::to_string(t.b) + "_" +
         std::to_string(t.j) + ")^2";
}

inline std::string node_text(const PolyNode& node, bool as_factor) {
  switch (node.kind) {
    case PolyNode::Kind::Atom: return atom_text(node.atom);
    case PolyNode::Kind::Sum: {
      if (node.children.empty()) return "0";
      if (node.children.size() == 1) return node_text(node.children.front(), as_factor);
      std::string s;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) s += " + ";
        s += node_text(node.children[i], false);
      }
      return as_factor ? "(" + s + ")" : s;
    }
    case PolyNode::Kind::Product: {
      if (node.children.empty()) throw Error(ErrorKind::InvalidArgument, "empty product has no text form");
      std::string s;
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) s += " * ";
        s += node_text(node.children[i], true);
      }
      return s;
    }
  }
  return {};
}

inline void check_indices(const PolyNode& node, std::size_t k, std::size_t n) {
  if (node.kind == PolyNode::Kind::Atom) {
    const auto& t = node.atom;
    if (t.a >= k || t.b >= k) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range in " + atom_text(t));
    if (t.i >= n || t.j >= n) throw Error(ErrorKind::IndexOutOfRange, "coordinate index out of range in " + atom_text(t));
  }
  for (const auto& c : node.children) check_indices(c, k, n);
}

inline PolyNode rename(const PolyNode& node, const std::vector<std::size_t>& perm) {
  if (node.kind == PolyNode::Kind::Atom) {
    auto t = node.atom;
    t.a = perm[t.a];
    t.b = perm[t.b];
    return PolyNode::of(t);
  }
  PolyNode out{node.kind, {}, {}};
  for (const auto& c : node.children) out.children.push_back(rename(c, perm));
  return out;
}

}  // namespace detail

/// Text in the grammar accepted by parse_polynomial().
inline std::string to_text(const TemplatePolynomial& p) { return detail::node_text(p.body, false); }

/// Exact value; may raise Overflow on deep products.
inline Rational evaluate(const PolyNode& node, const Assignment& vars) {
  switch (node.kind) {
    case PolyNode::Kind::Atom: {
      auto diff = vars[node.atom.a][node.atom.i] - vars[node.atom.b][node.atom.j];
      return diff * diff;
    }
    case PolyNode::Kind::Sum: {
      Rational s(0);
      for (const auto& c : node.children) s += evaluate(c, vars);
      return s;
    }
    case PolyNode::Kind::Product: {
      Rational p(1);
      for (const auto& c : node.children) p *= evaluate(c, vars);
      return p;
    }
  }
  return Rational(0);
}

/// evaluate(node, vars) == 0, decided without forming products.
inline bool vanishes(const PolyNode& node, const Assignment& vars) {
  switch (node.kind) {
    case PolyNode::Kind::Atom: return vars[node.atom.a][node.atom.i] == vars[node.atom.b][node.atom.j];
    case PolyNode::Kind::Sum:
      return std::all_of(node.children.begin(), node.children.end(), [&](const auto& c) { return vanishes(c, vars); });
    case PolyNode::Kind::Product:
      return std::any_of(node.children.begin(), node.children.end(), [&](const auto& c) { return vanishes(c, vars); });
  }
  return false;
}

/// Sum of (x_u,i - x_v,i)^2 over every coordinate equality x_u,i = x_v,i of
/// P. With `symmetrize`, the product of its copies under all k! renamings of
/// the variables; with `reflexive`, further multiplied by |x_i - x_j|^2 for
/// all i < j so that any tuple with a repeated point is a zero.
inline TemplatePolynomial template_to_polynomial(const Template& p, bool symmetrize = false, bool reflexive = false,
                                                 const Budget& budget = {}) {
  const auto k = p.size();
  const auto n = p.dim();
  std::vector<PolyNode> atoms;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t u = 0; u < k; ++u)
      for (std::size_t v = u + 1; v < k; ++v)
        if (p[u][c] == p[v][c]) atoms.push_back(PolyNode::of({u, c, v, c}));
  PolyNode body = PolyNode::sum(std::move(atoms));
  if (body.children.size() == 1) body = body.children.front();

  TemplatePolynomial out{k, n, body, symmetrize, reflexive};
  if (symmetrize && !body.is_zero()) {
    if (k > budget.max_symmetrize_points) {
      throw Error(ErrorKind::BudgetExceeded, "symmetrizing over " + std::to_string(k) + "! permutations exceeds budget");
    }
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<PolyNode> copies;
    do copies.push_back(detail::rename(body, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    out.body = PolyNode::product(std::move(copies));
  }
  if (reflexive && !out.body.is_zero()) {
    std::vector<PolyNode> factors;
    if (out.body.kind == PolyNode::Kind::Product) factors = out.body.children;
    else factors.push_back(out.body);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        std::vector<PolyNode> dist;
        for (std::size_t c = 0; c < n; ++c) dist.push_back(PolyNode::of({a, c, b, c}));
        factors.push_back(dist.size() == 1 ? dist.front() : PolyNode::sum(std::move(dist)));
      }
    }
    out.body = PolyNode::product(std::move(factors));
  }
  return out;
}

/// Inverse of template_to_polynomial on unsymmetrized bodies: the template
/// whose coordinate equalities are the closure of those the atoms force.
inline Template polynomial_to_template(const TemplatePolynomial& poly) {
  detail::check_indices(poly.body, poly.k, poly.n);
  std::vector<Atom> atoms;
  if (poly.body.kind == PolyNode::Kind::Atom) {
    atoms.push_back(poly.body.atom);
  } else if (poly.body.kind == PolyNode::Kind::Sum) {
    for (const auto& c : poly.body.children) {
      if (c.kind != PolyNode::Kind::Atom) {
        throw Error(ErrorKind::NotConjunctive, "body is not a plain sum of squared differences");
      }
      atoms.push_back(c.atom);
    }
  } else {
    throw Error(ErrorKind::NotConjunctive, "body is a product; only plain sums describe a single template");
  }
  for (const auto& t : atoms) {
    if (t.i != t.j) {
      throw Error(ErrorKind::NotConjunctive, detail::atom_text(t) + " equates different coordinates");
    }
  }
  if (poly.k < 2) throw Error(ErrorKind::TooFewPoints, "a template needs at least 2 points", poly.k);
  // Union-find per coordinate over the k variables.
  std::vector<std::vector<std::size_t>> parent(poly.n, std::vector<std::size_t>(poly.k));
  for (auto& row : parent) std::iota(row.begin(), row.end(), std::size_t{0});
  auto find = [&](std::size_t c, std::size_t x) {
    while (parent[c][x] != x) x = parent[c][x] = parent[c][parent[c][x]];
    return x;
  };
  for (const auto& t : atoms) {
    auto ra = find(t.i, t.a), rb = find(t.i, t.b);
    if (ra != rb) parent[t.i][std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<Point> rows(poly.k, Point(poly.n));
  for (std::size_t v = 0; v < poly.k; ++v)
    for (std::size_t c = 0; c < poly.n; ++c) rows[v][c] = static_cast<int>(find(c, v));
  for (std::size_t u = 0; u < poly.k; ++u) {
    for (std::size_t v = u + 1; v < poly.k; ++v) {
      if (rows[u] == rows[v]) {
        throw Error(ErrorKind::DegenerateTemplate,
                    "the polynomial forces x" + std::to_string(u) + " = x" + std::to_string(v), v);
      }
    }
  }
  return detail::make_canonical(rows);
}

/// Rational points of a grid, row-major.
inline std::vector<VertexLabel> grid_points(const GridSpec& grid) {
  std::vector<VertexLabel> out;
  for (const auto& p : grid.points()) out.push_back(detail::to_label(p));
  return out;
}

/// Edges: k-sets of the given points on which the polynomial vanishes under
/// some ordering of the points.
inline FiniteHypergraph zero_hypergraph_on_grid(const TemplatePolynomial& poly, const std::vector<VertexLabel>& points,
                                                const Budget& budget = {}) {
  detail::check_indices(poly.body, poly.k, poly.n);
  if (points.size() > budget.max_vertices) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(points.size()) + " points exceed the vertex budget");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != poly.n) {
      throw Error(ErrorKind::DimensionMismatch, "point " + std::to_string(i) + " has " +
                                                    std::to_string(points[i].size()) + " coordinates, expected " +
                                                    std::to_string(poly.n), i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorKind::DuplicatePoint, "point " + std::to_string(i) + " repeats point " + std::to_string(j), i);
      }
    }
  }
  const auto k = poly.k;
  std::vector<Edge> edges;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> chosen;
  auto walk = [&](auto& self, std::size_t start) -> void {
    if (chosen.size() == k) {
      if (++nodes > budget.max_nodes) {
        throw Error(ErrorKind::BudgetExceeded, "zero hypergraph exceeded " + std::to_string(budget.max_nodes) + " subsets");
      }
      auto order = chosen;
      do {
        Assignment vars;
        for (auto v : order) vars.push_back(points[v]);
        if (vanishes(poly.body, vars)) {
          edges.push_back(chosen);
          return;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (std::size_t v = start; v + (k - chosen.size()) <= points.size(); ++v) {
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  if (k >= 1) walk(walk, 0);
  return FiniteHypergraph(k, points, std::move(edges));
}

namespace detail {

/// Recursive descent over
///   expr   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := '0' | '(' var '-' var ')' '^' '2' | '(' expr ')'
///   var    := 'x' INDEX '_' COORD | ('x' | 'y' | 'z') '_' COORD
/// Whitespace is free; U+2212 is read as '-'.
class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t k, std::size_t n) : text_(text), k_(k), n_(n) {}

  PolyNode parse() {
    auto node = expr();
    skip_space();
    if (pos_ != text_.size()) fail("'+', '*' or end of input");
    return node;
  }

 private:
  PolyNode expr() {
    std::vector<PolyNode> terms{term()};
    while (accept('+')) terms.push_back(term());
    return collapse(PolyNode::Kind::Sum, std::move(terms));
  }

  PolyNode term() {
    std::vector<PolyNode> factors{factor()};
    while (accept('*')) factors.push_back(factor());
    return collapse(PolyNode::Kind::Product, std::move(factors));
  }

  PolyNode factor() {
    skip_space();
    if (accept('0')) return PolyNode::zero();
    if (!accept('(')) fail("'(' or '0'");
    skip_space();
    if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'y' || text_[pos_] == 'z')) {
      auto [a, i] = var();
      if (!accept_minus()) fail("'-'");
      auto [b, j] = var();
      expect(')');
      expect('^');
      expect('2');
      return PolyNode::of({a, i, b, j});
    }
    auto inner = expr();
    expect(')');
    return inner;
  }

  std::pair<std::size_t, std::size_t> var() {
    skip_space();
    const auto start = pos_;
    if (pos_ >= text_.size()) fail("a variable");
    const char head = text_[pos_++];
    std::size_t index = 0;
    if (head == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = number();
    } else if (head == 'x' || head == 'y' || head == 'z') {
      if (k_ > 3) {
        pos_ = start;
        fail("x<index>_<coordinate>; the x, y, z aliases need k <= 3");
      }
      index = static_cast<std::size_t>(head - 'x');
    } else {
      pos_ = start;
      fail("a variable");
    }
    if (pos_ >= text_.size() || text_[pos_] != '_') fail("'_'");
    ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("a coordinate index");
    const auto coord = number();
    if (index >= k_) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "variable " + std::to_string(index) + " at position " + std::to_string(start) +
                      " is out of range for k = " + std::to_string(k_), start);
    }
    if (coord >= n_) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "coordinate " + std::to_string(coord) + " at position " + std::to_string(start) +
                      " is out of range for n = " + std::to_string(n_), start);
    }
    return {index, coord};
  }

  std::size_t number() {
    std::size_t v = 0;
    const auto* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("a natural number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  static PolyNode collapse(PolyNode::Kind kind, std::vector<PolyNode> items) {
    if (items.size() == 1) return std::move(items.front());
    return {kind, {}, std::move(items)};
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_minus() {
    if (accept('-')) return true;
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw Error(ErrorKind::SyntaxError,
                "expected " + expected + " at position " + std::to_string(pos_) + ", found " + found, pos_);
  }

  std::string_view text_;
  std::size_t k_, n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text format written by to_text(). Parsed polynomials carry
/// neither the symmetrized nor the reflexive flag.
inline TemplatePolynomial parse_polynomial(std::string_view text, std::size_t k, std::size_t n) {
  return {k, n, detail::PolyParser(text, k, n).parse(), false, false};
}

}  // namespace template_chroma
