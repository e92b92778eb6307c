#pragma once

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "template_chroma/error.hpp"

namespace template_chroma {

/// A finite cardinal n or an aleph with a natural index or index omega.
/// Every finite cardinal lies below aleph_0; aleph_omega lies above every
/// aleph with a natural index.
class Cardinal {
 public:
  enum class Kind { Finite, Aleph, AlephOmega };

  static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(Kind::Finite, n); }
  static constexpr Cardinal aleph(std::uint64_t index) { return Cardinal(Kind::Aleph, index); }
  static constexpr Cardinal aleph_omega() { return Cardinal(Kind::AlephOmega, 0); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  constexpr bool is_infinite() const noexcept { return kind_ != Kind::Finite; }
  /// Value of a finite cardinal or index of an aleph; 0 for aleph_omega.
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
    return a.value_ <=> b.value_;
  }

  /// "5", "aleph_3", "aleph_omega".
  std::string str() const {
    switch (kind_) {
      case Kind::Finite: return std::to_string(value_);
      case Kind::Aleph: return "aleph_" + std::to_string(value_);
      case Kind::AlephOmega: return "aleph_omega";
    }
    return {};
  }

  static Cardinal parse(std::string_view text) {
    auto number = [&](std::string_view digits) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() ||
          (digits.size() > 1 && digits.front() == '0')) {
        throw Error(ErrorKind::InvalidArgument, "malformed cardinal '" + std::string(text) + "'");
      }
      return v;
    };
    constexpr std::string_view prefix = "aleph_";
    if (text.starts_with(prefix)) {
      auto rest = text.substr(prefix.size());
      if (rest == "omega") return aleph_omega();
      return aleph(number(rest));
    }
    return finite(number(text));
  }

 private:
  constexpr Cardinal(Kind k, std::uint64_t v) : kind_(k), value_(v) {}

  Kind kind_;
  std::uint64_t value_;
};

/// The assumption 2^aleph_0 = aleph_c for a natural c >= 1.
class ContinuumSetting {
 public:
  explicit ContinuumSetting(std::uint64_t c) : c_(c) {
    if (c < 1) throw Error(ErrorKind::InvalidArgument, "continuum index must be at least 1");
  }
  std::uint64_t c() const noexcept { return c_; }
  Cardinal continuum() const { return Cardinal::aleph(c_); }
  friend bool operator==(const ContinuumSetting&, const ContinuumSetting&) = default;

 private:
  std::uint64_t c_;
};

/// kappa^{+n}. Defined for alephs with a natural index; aleph_omega^{+0} is
/// itself, anything else is UnsupportedIndex.
inline Cardinal successor_n(const Cardinal& kappa, std::uint64_t n) {
  switch (kappa.kind()) {
    case Cardinal::Kind::Finite:
      throw Error(ErrorKind::UnsupportedIndex, "successor of the finite cardinal " + kappa.str() + " is not supported");
    case Cardinal::Kind::AlephOmega:
      if (n == 0) return kappa;
      throw Error(ErrorKind::UnsupportedIndex, "aleph_omega^{+" + std::to_string(n) + "} is beyond the supported indices");
    case Cardinal::Kind::Aleph:
      if (kappa.value() > std::numeric_limits<std::uint64_t>::max() - n) {
        throw Error(ErrorKind::UnsupportedIndex, "aleph index overflow");
      }
      return Cardinal::aleph(kappa.value() + n);
  }
  return kappa;
}

/// kappa^{+omega}, which for every aleph with a natural index is aleph_omega.
inline Cardinal successor_omega(const Cardinal& kappa) {
  if (kappa.is_finite()) {
    throw Error(ErrorKind::UnsupportedIndex, "successor of the finite cardinal " + kappa.str() + " is not supported");
  }
  return Cardinal::aleph_omega();
}

inline std::strong_ordering compare(const Cardinal& a, const Cardinal& b) { return a <=> b; }

inline Cardinal card_sum(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) {
    if (a.value() > std::numeric_limits<std::uint64_t>::max() - b.value()) {
      throw Error(ErrorKind::Overflow, "finite cardinal sum overflows");
    }
    return Cardinal::finite(a.value() + b.value());
  }
  return std::max(a, b);
}

/// Least kappa with kappa^{+steps} >= 2^aleph_0. No finite cardinal
/// qualifies, and aleph_m does iff m + steps >= c.
inline Cardinal least_aleph_reaching(const ContinuumSetting& setting, std::uint64_t steps) {
  return Cardinal::aleph(setting.c() > steps ? setting.c() - steps : 0);
}

}  // namespace template_chroma
