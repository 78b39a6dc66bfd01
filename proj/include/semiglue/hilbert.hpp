#ifndef SEMIGLUE_HILBERT_HPP
#define SEMIGLUE_HILBERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "semiglue/polynomial.hpp"
#include "semiglue/semigroup.hpp"
#include "semiglue/toric.hpp"

namespace semiglue {

/// Univariate integer polynomial in t, coefficient i of t^i; no trailing zeros
/// (the zero polynomial is empty).
using IntPoly = std::vector<Int>;

IntPoly poly_trim(IntPoly p);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_shift(const IntPoly& p, Int by);  // t^by * p
Int poly_eval_at_one(const IntPoly& p);
/// 1 + t + ... + t^{n-1}
IntPoly geometric_sum(Int n);
/// Exact quotient p / (1-t)^power; Error{DimensionMismatch} on a remainder.
IntPoly divide_by_one_minus_t(const IntPoly& p, std::size_t power);
/// First `count` coefficients of p / (1-t)^power.
std::vector<Int> series_coefficients(const IntPoly& p, std::size_t power, std::size_t count);
std::string poly_to_string(const IntPoly& p, const std::string& var = "t");

enum class PivotRule { MostFrequent, LeastFrequent, LastVariable };

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of
/// K[x_1..x_nvars]/<lms>, by the pivot recursion
/// N(I) = N(I + <p>) + t^deg(p) N(I : p).
IntPoly hilbert_numerator(const std::vector<Monomial>& lms, std::size_t nvars,
                          PivotRule rule = PivotRule::MostFrequent);

struct HilbertData {
  IntPoly numerator;          // over (1-t)^nvars
  IntPoly reduced_numerator;  // h(t), over (1-t)
  std::vector<Int> hf_prefix;
  Int multiplicity = 0;  // h(1)
  bool nondecreasing = true;
  std::optional<std::size_t> first_violation;  // index of the first negative h-coefficient
};

struct Monotonicity {
  bool nondecreasing = true;
  std::optional<std::size_t> first_violation;
};

/// Non-decreasing iff every coefficient of h(t) is non-negative.
Monotonicity is_nondecreasing(const IntPoly& reduced_numerator);
inline Monotonicity is_nondecreasing(const HilbertData& data) { return is_nondecreasing(data.reduced_numerator); }

/// Hilbert data of a one-dimensional graded quotient given by the minimal
/// generators of its leading ideal. `limit` defaults to deg h + 3.
HilbertData hilbert_from_leading_ideal(const std::vector<Monomial>& lms, std::size_t nvars,
                                       std::optional<Int> limit = std::nullopt);

/// Hilbert function of the local ring of the curve, read off the leading
/// ideal of its tangent cone.
HilbertData local_hilbert_function(const MonomialCurve& curve, std::optional<Int> limit = std::nullopt);

/// h_glued == h1 * h2 * (1 + t + ... + t^{a1-1}).
bool product_factorization_check(const HilbertData& glued, const IntPoly& h1, const IntPoly& h2, Int a1);

}  // namespace semiglue

#endif  // SEMIGLUE_HILBERT_HPP
