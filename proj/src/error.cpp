#include "semiglue/error.hpp"

namespace semiglue {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Empty: return "Empty";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::Overflow: return "Overflow";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NonGlobalOrder: return "NonGlobalOrder";
    case Errc::NonLocalOrder: return "NonLocalOrder";
    case Errc::ParseError: return "ParseError";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::GcdViolation: return "GcdViolation";
    case Errc::PIsMinimalGenerator: return "PIsMinimalGenerator";
    case Errc::QIsMinimalGenerator: return "QIsMinimalGenerator";
    case Errc::NotInSemigroup: return "NotInSemigroup";
    case Errc::GeneratorCollision: return "GeneratorCollision";
    case Errc::NotPositive: return "NotPositive";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::InvalidPriority: return "InvalidPriority";
  }
  return "Unknown";
}

}  // namespace semiglue
