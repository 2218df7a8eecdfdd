#include "rinv/errors.hpp"

namespace rinv {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::UndefinedGcd: return "UndefinedGcd";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::EmptySection: return "EmptySection";
    case Errc::NotACrossSection: return "NotACrossSection";
    case Errc::UndefinedOnGroup: return "UndefinedOnGroup";
    case Errc::NotInvariantOrNotRational: return "NotInvariantOrNotRational";
    case Errc::JetOrderExceeded: return "JetOrderExceeded";
    case Errc::DegenerateAction: return "DegenerateAction";
    case Errc::VerticalCurve: return "VerticalCurve";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::ExceptionalCurve: return "ExceptionalCurve";
    case Errc::NotACurve: return "NotACurve";
    case Errc::SpecError: return "SpecError";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

bool errc_is_mathematical(Errc c) {
  switch (c) {
    case Errc::InvalidAction:
    case Errc::EmptySection:
    case Errc::NotACrossSection:
    case Errc::UndefinedOnGroup:
    case Errc::NotInvariantOrNotRational:
    case Errc::JetOrderExceeded:
    case Errc::DegenerateAction:
    case Errc::VerticalCurve:
    case Errc::UnsupportedDegree:
    case Errc::ExceptionalCurve:
    case Errc::NotACurve:
      return true;
    default:
      return false;
  }
}

}  // namespace rinv
