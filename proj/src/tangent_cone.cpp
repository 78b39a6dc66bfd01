#include "semiglue/tangent_cone.hpp"

#include <algorithm>
#include <numeric>

#include "semiglue/error.hpp"

namespace semiglue {

std::vector<std::size_t> canonical_priority(const MonomialCurve& curve) {
  std::vector<std::size_t> slots(curve.nvars());
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  const auto& w = curve.weights();
  std::sort(slots.begin(), slots.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  return slots;
}

TangentConeReport tangent_cone_from_generators(const MonomialCurve& curve, const std::vector<Polynomial>& gens,
                                               const std::optional<std::vector<std::size_t>>& priority) {
  std::vector<std::size_t> prio = priority.value_or(canonical_priority(curve));
  if (prio.size() != curve.nvars()) throw Error(Errc::ArityMismatch, "priority length differs from the variable count");
  const std::size_t lowest = curve.lowest_slot();
  if (prio.back() != lowest) {
    throw Error(Errc::InvalidPriority, "the smallest generator's variable must be the lowest in the priority");
  }
  auto order = make_order(MonomialOrder::negdegrevlex(std::move(prio)));
  TangentConeReport report{curve, order, standard_basis(gens, order), {}, {}, true, std::nullopt};
  report.leading_monomials = leading_ideal(report.basis);
  for (const auto& g : report.basis.elements) {
    report.cone_generators.push_back(least_degree_form(g));
    if (report.is_cohen_macaulay && g.leading_monomial()[lowest] > 0) {
      report.is_cohen_macaulay = false;
      report.witness = g;
    }
  }
  return report;
}

TangentConeReport tangent_cone(const MonomialCurve& curve, const std::optional<std::vector<std::size_t>>& priority) {
  return tangent_cone_from_generators(curve, defining_ideal(curve), priority);
}

std::vector<Polynomial> cone_generators(const MonomialCurve& curve) { return tangent_cone(curve).cone_generators; }

}  // namespace semiglue
