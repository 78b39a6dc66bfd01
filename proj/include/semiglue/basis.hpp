#ifndef SEMIGLUE_BASIS_HPP
#define SEMIGLUE_BASIS_HPP

#include <cstdint>
#include <vector>

#include "semiglue/polynomial.hpp"

namespace semiglue {

struct BasisResult {
  std::vector<Polynomial> elements;
  OrderPtr order;
  bool minimal = false;
};

struct BasisOptions {
  /// Weights used to rank critical pairs by the weighted degree of their
  /// lcm (normal strategy). Empty means plain total degree.
  std::vector<std::int64_t> selection_weights;
  bool product_criterion = true;
  /// Global orders only.
  bool chain_criterion = true;
};

/// Reduced Groebner basis for a global order.
/// Throws Error{NonGlobalOrder} for a local order.
BasisResult buchberger(const std::vector<Polynomial>& gens, OrderPtr order, const BasisOptions& options = {});

/// Full reduction modulo `basis` under a global order.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Mora's weak normal form under a local order: returns r with u*f = sum q_i g_i + r
/// for a unit u, and r = 0 or LM(r) divisible by no LM(g_i). Reductors are
/// chosen by minimal ecart and intermediate remainders join the reductor set
/// when their ecart is smaller than the chosen reductor's.
/// Throws Error{NonLocalOrder} for a global order.
Polynomial mora_weak_nf(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Minimal standard basis for a local order. Elements are monic and pruned by
/// leading-monomial divisibility only; tails are not reduced.
BasisResult standard_basis(const std::vector<Polynomial>& gens, OrderPtr order, const BasisOptions& options = {});

/// Normal form with the algorithm matching the basis order.
Polynomial normal_form(const Polynomial& f, const BasisResult& basis);
bool ideal_contains(const BasisResult& basis, const Polynomial& f);

/// Minimal generators of the monomial ideal generated by the leading
/// monomials of the basis, sorted by the basis order (descending).
std::vector<Monomial> leading_ideal(const BasisResult& basis);

/// Divisibility-pruned copy, deduplicated, in input order of first occurrence.
std::vector<Monomial> minimize_monomials(const std::vector<Monomial>& monomials);

/// Drop elements whose leading monomial is divisible by another element's
/// (for equal leading monomials the earliest survives).
std::vector<Polynomial> minimalize(const std::vector<Polynomial>& elements);

/// Completeness witness: every s-polynomial of a pair of elements has normal
/// form 0 with respect to the elements.
bool satisfies_pair_criterion(const BasisResult& basis);

}  // namespace semiglue

#endif  // SEMIGLUE_BASIS_HPP
