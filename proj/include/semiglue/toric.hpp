#ifndef SEMIGLUE_TORIC_HPP
#define SEMIGLUE_TORIC_HPP

#include <vector>

#include "semiglue/basis.hpp"
#include "semiglue/polynomial.hpp"
#include "semiglue/semigroup.hpp"

namespace semiglue {

/// Affine monomial curve t -> (t^w_1, ..., t^w_k). Variable slot i carries
/// weight w_i; the weights form the minimal generating set of the semigroup
/// but need not be sorted (glued curves keep the x-block/y-block layout).
class MonomialCurve {
 public:
  /// Throws Error{NotMinimal} when the weights are not a minimal generating
  /// set, and the semigroup errors for empty or gcd != 1 input.
  MonomialCurve(std::vector<Int> weights, VariableNames names);
  /// Normalizes through minimal_generators and names the slots x1..xk.
  static MonomialCurve from_generators(std::span<const Int> raw);

  const NumericalSemigroup& semigroup() const { return semigroup_; }
  const std::vector<Int>& weights() const { return weights_; }
  const VariableNames& names() const { return names_; }
  std::size_t nvars() const { return weights_.size(); }
  /// Slot carrying the smallest generator.
  std::size_t lowest_slot() const;

 private:
  NumericalSemigroup semigroup_;
  std::vector<Int> weights_;
  VariableNames names_;
};

/// S-degree of a monomial: sum of exponent * weight.
Int semigroup_degree(const Monomial& m, std::span<const Int> weights);

/// Generators of the defining ideal, as binomials over the curve's slots
/// stored under degrevlex with the natural priority. Computed by eliminating
/// t from <x_i - t^{w_i}> and pruning redundant generators.
std::vector<Polynomial> defining_ideal(const MonomialCurve& curve);

/// Reduced Groebner basis of the defining ideal (degrevlex, natural priority).
BasisResult toric_groebner_basis(const MonomialCurve& curve);

/// Size of an irredundant generating subset; equals the minimal number of
/// generators for ideals homogeneous under a positive grading.
std::size_t minimal_generator_count(const std::vector<Polynomial>& gens);

/// Irredundant subset obtained by deleting generators that lie in the ideal
/// of the remaining ones.
std::vector<Polynomial> prune_redundant(const std::vector<Polynomial>& gens);

bool is_complete_intersection(const MonomialCurve& curve);

/// True when both lists generate the same ideal (mutual membership under a
/// global order).
bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

}  // namespace semiglue

#endif  // SEMIGLUE_TORIC_HPP
