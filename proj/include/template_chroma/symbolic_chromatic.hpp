#pragma once

// Chromatic numbers of template hypergraphs over the reals, evaluated
// symbolically under a continuum setting 2^aleph_0 = aleph_c.
//
// chi(L(R^d, P)) is the least kappa with kappa^{+(e(P)-1)} >= 2^aleph_0, so
// everything here reduces to e(P) and least_aleph_reaching(). Hypergraphs over
// R are not finitely representable; results carry templates as certificates.

#include <optional>
#include <string>
#include <vector>

#include "template_chroma/cardinals.hpp"
#include "template_chroma/distinguishers.hpp"
#include "template_chroma/error.hpp"
#include "template_chroma/templates.hpp"

namespace template_chroma {

inline constexpr const char* kTemplateChiRule = "chi = least kappa with kappa^{+(e-1)} >= 2^aleph_0";

struct ChromaticVerdict {
  Cardinal chi;
  std::size_t e_used;
  Template tmpl;
  ContinuumSetting setting;
};

inline ChromaticVerdict chi_template(const Template& p, const ContinuumSetting& setting) {
  const auto e = distinguishing_number(p);
  return {least_aleph_reaching(setting, e - 1), e, p, setting};
}

/// chi of L(R^d, P) for any simple d-dimensional P.
inline Cardinal chi_simple_dim(std::size_t d, const ContinuumSetting& setting) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be at least 1");
  return least_aleph_reaching(setting, d - 1);
}

/// Chromatic numbers of algebraic k-hypergraphs: every finite n >= 1,
/// aleph_0, and aleph_m for aleph_m <= 2^aleph_0 <= aleph_m^{+(k-2)}.
struct AchievableSet {
  std::size_t k;
  ContinuumSetting setting;
  std::uint64_t aleph_low;   // inclusive
  std::uint64_t aleph_high;  // inclusive, equals c

  bool contains(const Cardinal& kappa) const {
    switch (kappa.kind()) {
      case Cardinal::Kind::Finite: return kappa.value() >= 1;
      case Cardinal::Kind::AlephOmega: return false;
      case Cardinal::Kind::Aleph:
        return kappa.value() == 0 || (kappa.value() >= aleph_low && kappa.value() <= aleph_high);
    }
    return false;
  }

  /// aleph_0 followed by the aleph range, without repeats.
  std::vector<Cardinal> infinite_members() const {
    std::vector<Cardinal> out{Cardinal::aleph(0)};
    for (auto m = std::max<std::uint64_t>(aleph_low, 1); m <= aleph_high; ++m) out.push_back(Cardinal::aleph(m));
    return out;
  }
};

inline AchievableSet achievable_chromatics(std::size_t k, const ContinuumSetting& setting) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
  const auto c = setting.c();
  const auto span = static_cast<std::uint64_t>(k - 2);
  return {k, setting, c > span ? c - span : 0, c};
}

/// A simple d-dimensional k-template with chi = kappa, d = c - a + 1 for
/// kappa = aleph_a. Needs aleph_a <= 2^aleph_0 <= aleph_a^{+(k-2)}.
inline Template construct_template_with_chi(std::size_t k, const Cardinal& kappa, const ContinuumSetting& setting) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
  const auto c = setting.c();
  if (kappa.kind() != Cardinal::Kind::Aleph || kappa.value() > c || kappa.value() + (k - 2) < c) {
    throw Error(ErrorKind::Unachievable, kappa.str() + " is not the chromatic number of a " + std::to_string(k) +
                                             "-template hypergraph when 2^aleph_0 = aleph_" + std::to_string(c));
  }
  const auto d = static_cast<std::size_t>(c - kappa.value() + 1);
  return basis_template(d, k);
}

struct ForbiddenMember {
  std::size_t e;
  Template tmpl;
  Cardinal chi;
};

/// Simple e-dimensional k-templates (1 <= e <= k-1) whose hypergraphs have
/// chi > kappa. An algebraic k-hypergraph is kappa-colorable iff it contains
/// none of the corresponding L(R^e, P).
struct ForbiddenFamily {
  std::size_t k;
  Cardinal kappa;
  ContinuumSetting setting;
  std::vector<ForbiddenMember> members;
};

inline ForbiddenFamily forbidden_family(std::size_t k, const Cardinal& kappa, const ContinuumSetting& setting,
                                        const Budget& budget = {}) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
  if (kappa.is_finite()) throw Error(ErrorKind::InvalidArgument, "forbidden families need an infinite kappa");
  ForbiddenFamily fam{k, kappa, setting, {}};
  for (std::size_t e = 1; e + 1 <= k; ++e) {
    auto chi = chi_simple_dim(e, setting);
    if (!(chi > kappa)) continue;
    for (auto& t : enumerate_templates(e, k, /*simple_only=*/true, budget)) {
      fam.members.push_back({e, std::move(t), chi});
    }
  }
  return fam;
}

/// A named algebraic hypergraph whose colorability is known in closed form:
/// kappa-avoidable iff kappa^{+offset} >= 2^aleph_0, or avoidable for every
/// infinite kappa when `offset` is empty.
struct RegistryEntry {
  std::string name;
  std::uint64_t parameter = 0;
  std::optional<std::uint64_t> offset;
  std::string description;
};

inline std::vector<std::string> registry_names() { return {"fox", "simplex", "isosceles", "pythagorean"}; }

inline RegistryEntry registry_lookup(const std::string& name, std::uint64_t parameter = 0) {
  if (name == "fox") {
    return {name, parameter, parameter,
            "x_0 + ... + x_k - x_{k+1} - k x_{k+2} over R, k = " + std::to_string(parameter)};
  }
  if (name == "simplex") {
    if (parameter < 2) throw Error(ErrorKind::InvalidArgument, "orthogonal simplex hypergraphs need n >= 2");
    return {name, parameter, parameter - 1,
            "vertex sets of orthogonal " + std::to_string(parameter) + "-simplices in R^" + std::to_string(parameter)};
  }
  if (name == "isosceles") {
    return {name, parameter, std::nullopt, "|x - y|^2 - |y - z|^2 (isosceles triangles)"};
  }
  if (name == "pythagorean") {
    return {name, parameter, 1, "|x - y|^2 + |y - z|^2 - |x - z|^2 in R^2 (right angles at y)"};
  }
  throw Error(ErrorKind::InvalidArgument, "unknown registry entry '" + name + "'");
}

inline bool registry_avoidable(const RegistryEntry& entry, const Cardinal& kappa, const ContinuumSetting& setting) {
  if (kappa.is_finite()) throw Error(ErrorKind::InvalidArgument, "avoidability is tabulated for infinite kappa only");
  if (!entry.offset) return true;
  if (kappa >= setting.continuum()) return true;
  return successor_n(kappa, *entry.offset) >= setting.continuum();
}

/// Upper bound |D| + aleph_0 for the D-distance graph on R^n.
inline Cardinal distance_chromatic_upper(const Cardinal& card_d) { return card_sum(card_d, Cardinal::aleph(0)); }

}  // namespace template_chroma
