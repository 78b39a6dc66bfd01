#include "semiglue/toric.hpp"

#include <algorithm>
#include <stdexcept>

#include "semiglue/checked.hpp"
#include "semiglue/error.hpp"

namespace semiglue {

MonomialCurve::MonomialCurve(std::vector<Int> weights, VariableNames names)
    : semigroup_(NumericalSemigroup::from_generators(weights)), weights_(std::move(weights)), names_(std::move(names)) {
  std::vector<Int> sorted(weights_);
  std::sort(sorted.begin(), sorted.end());
  if (sorted != semigroup_.generators()) {
    throw Error(Errc::NotMinimal, "curve weights are not a minimal generating set");
  }
  if (names_.size() != weights_.size()) throw Error(Errc::ArityMismatch, "one variable name per weight");
}

MonomialCurve MonomialCurve::from_generators(std::span<const Int> raw) {
  const auto s = NumericalSemigroup::from_generators(raw);
  return MonomialCurve(s.generators(), indexed_names("x", s.embedding_dimension()));
}

std::size_t MonomialCurve::lowest_slot() const {
  return static_cast<std::size_t>(std::min_element(weights_.begin(), weights_.end()) - weights_.begin());
}

Int semigroup_degree(const Monomial& m, std::span<const Int> weights) {
  Int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d = checked_add(d, checked_mul<Int>(m[i], weights[i]));
  return d;
}

namespace {

OrderPtr natural_degrevlex(std::size_t nvars) {
  return make_order(MonomialOrder::degrevlex(MonomialOrder::natural_priority(nvars)));
}

void check_homogeneous(const Polynomial& f, std::span<const Int> weights) {
  const Int d = semigroup_degree(f.terms().front().monomial, weights);
  for (const auto& t : f.terms()) {
    if (semigroup_degree(t.monomial, weights) != d) {
      throw std::logic_error("defining ideal element is not homogeneous for the semigroup grading");
    }
  }
}

}  // namespace

BasisResult toric_groebner_basis(const MonomialCurve& curve) {
  const std::size_t k = curve.nvars();
  const std::size_t t_slot = k;
  auto elim = make_order(MonomialOrder::elimination(MonomialOrder::natural_priority(k + 1), {t_slot}));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Monomial x(k + 1);
    x.set(i, 1);
    Monomial t(k + 1);
    t.set(t_slot, static_cast<Exponent>(curve.weights()[i]));
    gens.push_back(Polynomial::binomial(elim, std::move(x), std::move(t)));
  }
  BasisOptions options;
  options.selection_weights.assign(curve.weights().begin(), curve.weights().end());
  options.selection_weights.push_back(1);
  const BasisResult full = buchberger(gens, elim, options);

  auto target = natural_degrevlex(k);
  std::vector<Polynomial> eliminated;
  for (const auto& g : full.elements) {
    if (g.leading_monomial()[t_slot] != 0) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      std::vector<Exponent> e(term.monomial.exponents().begin(), term.monomial.exponents().begin() + k);
      terms.push_back({Monomial(std::move(e)), term.coefficient});
    }
    Polynomial f(target, std::move(terms));
    check_homogeneous(f, curve.weights());
    eliminated.push_back(f.monic());
  }
  return {std::move(eliminated), target, true};
}

std::vector<Polynomial> defining_ideal(const MonomialCurve& curve) {
  auto candidates = toric_groebner_basis(curve).elements;
  const auto& w = curve.weights();
  std::stable_sort(candidates.begin(), candidates.end(), [&](const Polynomial& a, const Polynomial& b) {
    return semigroup_degree(a.leading_monomial(), w) < semigroup_degree(b.leading_monomial(), w);
  });
  // Ascending S-degree: a candidate is redundant iff it lies in the ideal of
  // the generators already kept.
  std::vector<Polynomial> kept;
  if (candidates.empty()) return kept;
  const OrderPtr order = candidates.front().order_ptr();
  for (const auto& f : candidates) {
    if (!kept.empty() && ideal_contains(buchberger(kept, order), f)) continue;
    kept.push_back(f);
  }
  return kept;
}

std::vector<Polynomial> prune_redundant(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> current;
  for (const auto& g : gens) {
    if (!g.is_zero()) current.push_back(g);
  }
  if (current.empty()) return current;
  const OrderPtr order = natural_degrevlex(current.front().nvars());
  for (std::size_t i = current.size(); i-- > 0;) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (j != i) others.push_back(current[j]);
    }
    if (others.empty()) continue;
    if (ideal_contains(buchberger(others, order), current[i])) current.erase(current.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return current;
}

std::size_t minimal_generator_count(const std::vector<Polynomial>& gens) { return prune_redundant(gens).size(); }

bool is_complete_intersection(const MonomialCurve& curve) {
  return minimal_generator_count(defining_ideal(curve)) + 1 == curve.nvars();
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::size_t nvars = 0;
  if (!a.empty()) nvars = a.front().nvars();
  if (!b.empty()) nvars = b.front().nvars();
  if (nvars == 0) return true;
  const OrderPtr order = natural_degrevlex(nvars);
  const BasisResult ga = buchberger(a, order);
  const BasisResult gb = buchberger(b, order);
  for (const auto& f : a) {
    if (!f.is_zero() && !ideal_contains(gb, f)) return false;
  }
  for (const auto& f : b) {
    if (!f.is_zero() && !ideal_contains(ga, f)) return false;
  }
  return true;
}

}  // namespace semiglue
