#ifndef SEMIGLUE_ERROR_HPP
#define SEMIGLUE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace semiglue {

/// Named failure kinds. The CLI prints `name()` verbatim, so renaming an
/// enumerator changes the public error vocabulary.
enum class Errc {
  Empty,
  GcdNotOne,
  NegativeInput,
  Overflow,
  ArityMismatch,
  ZeroPolynomial,
  OrderMismatch,
  NonGlobalOrder,
  NonLocalOrder,
  ParseError,
  DimensionMismatch,
  GcdViolation,
  PIsMinimalGenerator,
  QIsMinimalGenerator,
  NotInSemigroup,
  GeneratorCollision,
  NotPositive,
  InvalidConfig,
  TheoremViolation,
  NotMinimal,
  InvalidPriority,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace semiglue

#endif  // SEMIGLUE_ERROR_HPP
