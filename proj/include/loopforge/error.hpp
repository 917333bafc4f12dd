#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopforge {

enum class ErrorKind {
  EmptyMeet,
  NotCovering,
  InvalidBasis,
  NotDoublyEven,
  NotInvertible,
  AssociativeLoop,
  UnsupportedRank,
  UnknownOrbit,
  UnexpectedRadical,
  NoFactorSet,
  InfeasibleProfile,
  NotReduced,
  DegenerateBasis,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyMeet: return "EmptyMeet";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::NotDoublyEven: return "NotDoublyEven";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::AssociativeLoop: return "AssociativeLoop";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::UnknownOrbit: return "UnknownOrbit";
    case ErrorKind::UnexpectedRadical: return "UnexpectedRadical";
    case ErrorKind::NoFactorSet: return "NoFactorSet";
    case ErrorKind::InfeasibleProfile: return "InfeasibleProfile";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every library failure is reported as an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace loopforge
