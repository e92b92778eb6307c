#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace template_chroma {

enum class ErrorKind {
  DuplicatePoint,
  RaggedTuple,
  TooFewPoints,
  BudgetExceeded,
  DimensionMismatch,
  CollapseError,
  IndexOutOfRange,
  UnsupportedIndex,
  Unachievable,
  SamplerExhausted,
  SyntaxError,
  NotConjunctive,
  DegenerateTemplate,
  InvalidArgument,
  Overflow,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::RaggedTuple: return "RaggedTuple";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CollapseError: return "CollapseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::Unachievable: return "Unachievable";
    case ErrorKind::SamplerExhausted: return "SamplerExhausted";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotConjunctive: return "NotConjunctive";
    case ErrorKind::DegenerateTemplate: return "DegenerateTemplate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

/// Domain error raised by every library operation. `index` names the
/// offending point, coordinate or input position when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace template_chroma
