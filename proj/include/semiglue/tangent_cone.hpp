#ifndef SEMIGLUE_TANGENT_CONE_HPP
#define SEMIGLUE_TANGENT_CONE_HPP

#include <optional>
#include <vector>

#include "semiglue/basis.hpp"
#include "semiglue/toric.hpp"

namespace semiglue {

struct TangentConeReport {
  MonomialCurve curve;
  OrderPtr order;  // negdegrevlex, smallest-generator slot lowest
  BasisResult basis;
  std::vector<Monomial> leading_monomials;  // minimal generators of the leading ideal
  std::vector<Polynomial> cone_generators;  // least-degree forms of the basis elements
  bool is_cohen_macaulay = true;
  std::optional<Polynomial> witness;  // basis element whose LM the lowest variable divides
};

/// Slots sorted by descending weight, the smallest generator last.
std::vector<std::size_t> canonical_priority(const MonomialCurve& curve);

/// Decides Cohen-Macaulayness of the tangent cone from a minimal standard
/// basis of I(C) under negdegrevlex: CM iff the lowest variable divides no
/// leading monomial. `priority` overrides the canonical one but must keep
/// the smallest generator's slot last (Error{InvalidPriority} otherwise).
TangentConeReport tangent_cone(const MonomialCurve& curve,
                               const std::optional<std::vector<std::size_t>>& priority = std::nullopt);

/// Same analysis starting from a known generating set of I(C) instead of the
/// elimination route.
TangentConeReport tangent_cone_from_generators(const MonomialCurve& curve, const std::vector<Polynomial>& gens,
                                               const std::optional<std::vector<std::size_t>>& priority = std::nullopt);

std::vector<Polynomial> cone_generators(const MonomialCurve& curve);

}  // namespace semiglue

#endif  // SEMIGLUE_TANGENT_CONE_HPP
