#include "semiglue/basis.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>

#include "semiglue/error.hpp"

namespace semiglue {

namespace {

std::vector<Polynomial> prepare(const std::vector<Polynomial>& gens, const OrderPtr& order) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.nvars() != order->nvars()) throw Error(Errc::ArityMismatch, "generator arity does not match the order");
    if (g.is_zero()) continue;
    out.push_back(g.reordered(order).monic());
  }
  return out;
}

struct Pair {
  std::int64_t weight;
  std::size_t i;
  std::size_t j;
  bool operator>(const Pair& o) const { return std::tie(weight, j, i) > std::tie(o.weight, o.j, o.i); }
};

std::int64_t weighted_degree(const Monomial& m, const std::vector<std::int64_t>& weights) {
  if (weights.empty()) return m.degree();
  std::int64_t d = 0;
  for (std::size_t v = 0; v < m.size(); ++v) d += weights[v] * m[v];
  return d;
}

/// Pair queue with bookkeeping for Buchberger's chain criterion.
class PairQueue {
 public:
  explicit PairQueue(const std::vector<std::int64_t>& weights) : weights_(weights) {}

  void add_element(const std::vector<Polynomial>& basis) {
    const std::size_t j = basis.size() - 1;
    pending_.emplace_back(j, 0);
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
      queue_.push({weighted_degree(l, weights_), i, j});
      pending_[j][i] = 1;
    }
  }

  bool empty() const { return queue_.empty(); }

  Pair pop() {
    Pair p = queue_.top();
    queue_.pop();
    pending_[p.j][p.i] = 0;
    return p;
  }

  bool pending(std::size_t a, std::size_t b) const {
    return a < b ? pending_[b][a] != 0 : pending_[a][b] != 0;
  }

 private:
  const std::vector<std::int64_t>& weights_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue_;
  std::vector<std::vector<char>> pending_;
};

bool chain_criterion(const std::vector<Polynomial>& basis, const PairQueue& pairs, std::size_t i, std::size_t j) {
  const Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == i || k == j) continue;
    if (!basis[k].leading_monomial().divides(l)) continue;
    if (!pairs.pending(i, k) && !pairs.pending(j, k)) return true;
  }
  return false;
}

template <class NormalForm>
std::vector<Polynomial> complete(std::vector<Polynomial> basis, const BasisOptions& options, bool use_chain,
                                 NormalForm&& nf) {
  PairQueue pairs(options.selection_weights);
  std::vector<Polynomial> seeded;
  for (auto& g : basis) {
    seeded.push_back(std::move(g));
    pairs.add_element(seeded);
  }
  basis = std::move(seeded);
  while (!pairs.empty()) {
    const Pair p = pairs.pop();
    const Monomial& a = basis[p.i].leading_monomial();
    const Monomial& b = basis[p.j].leading_monomial();
    if (options.product_criterion && a.coprime(b)) continue;
    if (use_chain && chain_criterion(basis, pairs, p.i, p.j)) continue;
    Polynomial h = nf(spoly(basis[p.i], basis[p.j]), basis);
    if (h.is_zero()) continue;
    basis.push_back(h.monic());
    pairs.add_element(basis);
  }
  return basis;
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (f.is_zero()) return f;
  if (f.order().is_local()) throw Error(Errc::NonGlobalOrder, "full reduction needs a global order");
  Polynomial h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    const Polynomial* reductor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lt.monomial)) {
        reductor = &g;
        break;
      }
    }
    if (reductor == nullptr) {
      remainder.push_back(lt);
      std::vector<Term> rest(h.terms().begin() + 1, h.terms().end());
      h = Polynomial(h.order_ptr(), std::move(rest));
      continue;
    }
    const Monomial shift = reductor->leading_monomial().quotient_of(lt.monomial);
    const Coefficient c = lt.coefficient / reductor->leading_coefficient();
    h = h.minus_term_times(shift, c, *reductor);
  }
  return Polynomial(f.order_ptr(), std::move(remainder));
}

Polynomial mora_weak_nf(const Polynomial& f, const std::vector<Polynomial>& basis) {
  if (f.is_zero()) return f;
  if (!f.order().is_local()) throw Error(Errc::NonLocalOrder, "Mora normal form needs a local order");
  std::vector<const Polynomial*> reductors;
  std::vector<std::int64_t> ecarts;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    reductors.push_back(&g);
    ecarts.push_back(ecart(g));
  }
  std::deque<Polynomial> intermediates;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    std::size_t best = reductors.size();
    for (std::size_t i = 0; i < reductors.size(); ++i) {
      if (!reductors[i]->leading_monomial().divides(lm)) continue;
      if (best == reductors.size() || ecarts[i] < ecarts[best]) best = i;
    }
    if (best == reductors.size()) break;
    const std::int64_t ecart_h = ecart(h);
    const Polynomial* g = reductors[best];
    const std::int64_t ecart_g = ecarts[best];
    if (ecart_g > ecart_h) {
      intermediates.push_back(h);
      reductors.push_back(&intermediates.back());
      ecarts.push_back(ecart_h);
    }
    const Monomial shift = g->leading_monomial().quotient_of(lm);
    const Coefficient c = h.leading_coefficient() / g->leading_coefficient();
    h = h.minus_term_times(shift, c, *g);
  }
  return h;
}

std::vector<Polynomial> minimalize(const std::vector<Polynomial>& elements) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Monomial& mi = elements[i].leading_monomial();
    bool redundant = false;
    for (std::size_t j = 0; j < elements.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& mj = elements[j].leading_monomial();
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(elements[i]);
  }
  return out;
}

BasisResult buchberger(const std::vector<Polynomial>& gens, OrderPtr order, const BasisOptions& options) {
  if (order->is_local()) throw Error(Errc::NonGlobalOrder, "Buchberger's algorithm needs a global order");
  auto basis = complete(prepare(gens, order), options, options.chain_criterion,
                        [](const Polynomial& s, const std::vector<Polynomial>& g) { return reduce(s, g); });
  basis = minimalize(basis);
  // Interreduce tails to reach the reduced basis.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i) others.push_back(basis[j]);
    }
    const Term lt = basis[i].leading_term();
    Polynomial tail(order, std::vector<Term>(basis[i].terms().begin() + 1, basis[i].terms().end()));
    basis[i] = (Polynomial::monomial(order, lt.monomial, lt.coefficient) + reduce(tail, others)).monic();
  }
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return {std::move(basis), std::move(order), true};
}

BasisResult standard_basis(const std::vector<Polynomial>& gens, OrderPtr order, const BasisOptions& options) {
  if (!order->is_local()) throw Error(Errc::NonLocalOrder, "standard bases here are for local orders");
  auto basis = complete(prepare(gens, order), options, false,
                        [](const Polynomial& s, const std::vector<Polynomial>& g) { return mora_weak_nf(s, g); });
  return {minimalize(basis), std::move(order), true};
}

Polynomial normal_form(const Polynomial& f, const BasisResult& basis) {
  Polynomial g = f.reordered(basis.order);
  return basis.order->is_local() ? mora_weak_nf(g, basis.elements) : reduce(g, basis.elements);
}

bool ideal_contains(const BasisResult& basis, const Polynomial& f) { return normal_form(f, basis).is_zero(); }

std::vector<Monomial> minimize_monomials(const std::vector<Monomial>& monomials) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < monomials.size() && !redundant; ++j) {
      if (j == i) continue;
      if (monomials[j].divides(monomials[i]) && (monomials[j] != monomials[i] || j < i)) redundant = true;
    }
    if (!redundant) out.push_back(monomials[i]);
  }
  return out;
}

std::vector<Monomial> leading_ideal(const BasisResult& basis) {
  std::vector<Monomial> lms;
  for (const auto& g : basis.elements) lms.push_back(g.leading_monomial());
  auto out = minimize_monomials(lms);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return basis.order->greater(a, b); });
  return out;
}

bool satisfies_pair_criterion(const BasisResult& basis) {
  const auto& g = basis.elements;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!normal_form(spoly(g[i], g[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace semiglue
