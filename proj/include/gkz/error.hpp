#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkz {

enum class ErrorKind {
  NoIntegerSolution,
  Singular,
  DimensionMismatch,
  RankDeficient,
  DegenerateHeights,
  WallWeight,
  NotRegular,
  InternalInconsistency,
  RankMismatch,
  DegenerateXi,
  NotNilpotent,
  NotInLattice,
  OutsideDomain,
  NoDegreeFunctional,
  PreconditionFailed,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DegenerateHeights: return "DegenerateHeights";
    case ErrorKind::WallWeight: return "WallWeight";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::DegenerateXi: return "DegenerateXi";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::NoDegreeFunctional: return "NoDegreeFunctional";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every module. `kind()` is what the CLI reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace gkz
