#pragma once

// JSON rendering and parsing for the public types. Keys keep insertion
// order; rationals render as JSON integers when integral and as "p/q"
// strings otherwise.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "template_chroma/budget.hpp"
#include "template_chroma/cardinals.hpp"
#include "template_chroma/coloring.hpp"
#include "template_chroma/distinguishers.hpp"
#include "template_chroma/embeddings.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/hypergraph.hpp"
#include "template_chroma/polynomials.hpp"
#include "template_chroma/rational.hpp"
#include "template_chroma/shift_coloring.hpp"
#include "template_chroma/symbolic_chromatic.hpp"
#include "template_chroma/templates.hpp"

namespace template_chroma::json_io {

using Json = nlohmann::ordered_json;

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

// ---- scalars ---------------------------------------------------------------

inline Json to_json(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorKind::InvalidArgument, "expected an integer or a \"p/q\" string, got " + j.dump());
}

inline Json to_json(const Cardinal& c) { return c.str(); }

inline Json to_json(const ContinuumSetting& s) { return Json{{"c", s.c()}, {"continuum", s.continuum().str()}}; }

// ---- templates -------------------------------------------------------------

inline Json to_json(const Template& p) {
  Json pts = Json::array();
  for (const auto& x : p.points()) pts.push_back(x);
  return Json{{"dim", p.dim()}, {"points", pts}};
}

/// Accepts a bare point list or {"dim": d, "points": [...]}, in any labelling.
inline Template template_from_json(const Json& j, const Budget& budget = {}) {
  const Json* pts = &j;
  std::optional<std::size_t> declared;
  if (j.is_object()) {
    if (!j.contains("points")) throw Error(ErrorKind::InvalidArgument, "template object lacks \"points\"");
    pts = &j.at("points");
    if (j.contains("dim")) {
      if (!j.at("dim").is_number_unsigned()) throw Error(ErrorKind::InvalidArgument, "\"dim\" must be a natural number");
      declared = j.at("dim").get<std::size_t>();
    }
  }
  if (!pts->is_array()) throw Error(ErrorKind::InvalidArgument, "points must be a JSON array of integer arrays");
  std::vector<RawPoint> raw;
  for (std::size_t i = 0; i < pts->size(); ++i) {
    const auto& row = (*pts)[i];
    if (!row.is_array()) throw Error(ErrorKind::RaggedTuple, "point " + std::to_string(i) + " is not an array", i);
    RawPoint x;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw Error(ErrorKind::InvalidArgument, "point " + std::to_string(i) + " has a non-integer coordinate", i);
      }
      x.push_back(v.get<std::int64_t>());
    }
    raw.push_back(std::move(x));
  }
  auto p = validate_template(raw, budget);
  if (declared && *declared != p.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "declared dim " + std::to_string(*declared) + " but points have " +
                                                  std::to_string(p.dim()) + " coordinates");
  }
  return p;
}

inline Json to_json(const DistinguisherResult& r) {
  Json j{{"e", r.e}, {"witness", r.witness}};
  if (r.all_minimum) j["all_minimum"] = *r.all_minimum;
  return j;
}

// ---- symbolic chromatic ----------------------------------------------------

inline Json to_json(const ChromaticVerdict& v) {
  return Json{{"chi", to_json(v.chi)},
              {"e", v.e_used},
              {"template", to_json(v.tmpl)},
              {"setting", to_json(v.setting)},
              {"citation", kTemplateChiRule}};
}

inline Json to_json(const AchievableSet& a) {
  Json inf = Json::array();
  for (const auto& c : a.infinite_members()) inf.push_back(to_json(c));
  return Json{{"k", a.k}, {"setting", to_json(a.setting)}, {"finite", "every n >= 1"}, {"infinite", inf}};
}

inline Json to_json(const ForbiddenFamily& f) {
  Json members = Json::array();
  for (const auto& m : f.members) members.push_back(Json{{"e", m.e}, {"chi", to_json(m.chi)}, {"template", to_json(m.tmpl)}});
  return Json{{"k", f.k}, {"kappa", to_json(f.kappa)}, {"setting", to_json(f.setting)}, {"count", f.members.size()},
              {"members", members}};
}

// ---- finite hypergraphs ----------------------------------------------------

inline Json to_json(const VertexLabel& label) {
  Json j = Json::array();
  for (const auto& r : label) j.push_back(to_json(r));
  return j;
}

inline Json to_json(const FiniteHypergraph& h) {
  Json vertices = Json::array();
  for (const auto& v : h.labels()) vertices.push_back(to_json(v));
  return Json{{"k", h.k()}, {"vertices", vertices}, {"edges", h.edges()}};
}

inline std::vector<VertexLabel> vertices_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "vertices must be a JSON array of coordinate arrays");
  std::vector<VertexLabel> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw Error(ErrorKind::RaggedTuple, "vertex " + std::to_string(i) + " is not an array", i);
    VertexLabel v;
    for (const auto& x : j[i]) v.push_back(rational_from_json(x));
    out.push_back(std::move(v));
  }
  return out;
}

inline Json to_json(const ColoringResult& r, bool witness) {
  Json j{{"chi", r.colors}};
  if (witness) j["coloring"] = r.coloring;
  return j;
}

inline Json to_json(const ShiftColor& c) {
  const char* tag = c.tag == ShiftColor::Tag::Zero ? "zero" : c.tag == ShiftColor::Tag::Increasing ? "increasing" : "decreasing";
  Json j{{"tag", tag}};
  if (c.tag != ShiftColor::Tag::Zero) j["value"] = to_json(c.value);
  return j;
}

// ---- embeddings ------------------------------------------------------------

inline Json to_json(const LiftResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) {
    trace.push_back(Json{{"level", s.level}, {"depth", s.depth}, {"points", s.points}, {"branch", s.branch}});
  }
  return Json{{"template", to_json(r.q)}, {"lifted", r.lifted}, {"trace", trace}};
}

inline Json to_json(const EmbeddingReport& r) {
  Json failures = Json::array();
  for (const auto& t : r.failures) failures.push_back(t);
  return Json{{"seed", r.sampler.seed},
              {"bound", r.sampler.bound},
              {"samples", r.sampler.samples},
              {"samples_checked", r.samples_checked},
              {"domain_edges", r.domain_edges},
              {"edge_agreements", r.edge_agreements},
              {"failures", failures}};
}

// ---- polynomials -----------------------------------------------------------

inline Json to_json(const PolyNode& node) {
  switch (node.kind) {
    case PolyNode::Kind::Atom: return Json{{"atom", {node.atom.a, node.atom.i, node.atom.b, node.atom.j}}};
    case PolyNode::Kind::Sum:
    case PolyNode::Kind::Product: {
      Json children = Json::array();
      for (const auto& c : node.children) children.push_back(to_json(c));
      return Json{{node.kind == PolyNode::Kind::Sum ? "sum" : "product", children}};
    }
  }
  return nullptr;
}

inline Json to_json(const TemplatePolynomial& p) {
  return Json{{"k", p.k},
              {"n", p.n},
              {"symmetrized", p.symmetrized},
              {"reflexive", p.reflexive},
              {"text", to_text(p)},
              {"body", to_json(p.body)}};
}

// ---- errors ----------------------------------------------------------------

inline Json error_json(const Error& e) {
  Json inner{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.index()) inner["index"] = *e.index();
  return Json{{"error", inner}};
}

}  // namespace template_chroma::json_io
