#include "semiglue/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "semiglue/checked.hpp"
#include "semiglue/error.hpp"

namespace semiglue {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw Error(Errc::NegativeInput, "negative exponent");
    degree_ += e;
  }
}

void Monomial::set(std::size_t i, Exponent e) {
  if (e < 0) throw Error(Errc::NegativeInput, "negative exponent");
  degree_ += static_cast<std::int64_t>(e) - exps_[i];
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.size() != size()) throw Error(Errc::ArityMismatch, "monomial arity mismatch");
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
  out.degree_ = other.degree_ - degree_;
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  if (other.size() != size()) throw Error(Errc::ArityMismatch, "monomial arity mismatch");
  Monomial out(*this);
  out.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  if (other.size() != size()) throw Error(Errc::ArityMismatch, "monomial arity mismatch");
  Monomial out(*this);
  out.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    out.exps_[i] = std::min(exps_[i], other.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

void check_permutation(const std::vector<std::size_t>& priority) {
  std::vector<std::size_t> sorted(priority);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw Error(Errc::ArityMismatch, "variable priority is not a permutation");
  }
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority, std::vector<char> block)
    : kind_(kind), priority_(std::move(priority)), block_(std::move(block)) {
  check_permutation(priority_);
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> priority) {
  return MonomialOrder(OrderKind::DegRevLex, std::move(priority), {});
}

MonomialOrder MonomialOrder::negdegrevlex(std::vector<std::size_t> priority) {
  return MonomialOrder(OrderKind::NegDegRevLex, std::move(priority), {});
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> priority,
                                         std::vector<std::size_t> first_block) {
  std::vector<char> block(priority.size(), 0);
  for (std::size_t slot : first_block) {
    if (slot >= block.size()) throw Error(Errc::ArityMismatch, "block slot out of range");
    block[slot] = 1;
  }
  return MonomialOrder(OrderKind::Elimination, std::move(priority), std::move(block));
}

std::vector<std::size_t> MonomialOrder::natural_priority(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

std::strong_ordering MonomialOrder::revlex_tail(const Monomial& a, const Monomial& b, int block) const {
  for (std::size_t i = priority_.size(); i-- > 0;) {
    const std::size_t v = priority_[i];
    if (block >= 0 && block_[v] != block) continue;
    const Exponent d = a[v] - b[v];
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != priority_.size() || b.size() != priority_.size()) {
    throw Error(Errc::ArityMismatch, "monomial arity does not match the order");
  }
  switch (kind_) {
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(a, b, -1);
    case OrderKind::NegDegRevLex:
      if (a.degree() != b.degree()) return b.degree() <=> a.degree();
      return revlex_tail(a, b, -1);
    case OrderKind::Elimination: {
      for (char block : {char{1}, char{0}}) {
        std::int64_t da = 0;
        std::int64_t db = 0;
        for (std::size_t v = 0; v < a.size(); ++v) {
          if (block_[v] != block) continue;
          da += a[v];
          db += b[v];
        }
        if (da != db) return da <=> db;
        auto tail = revlex_tail(a, b, block);
        if (tail != 0) return tail;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(OrderPtr order) : order_(std::move(order)) {}

Polynomial::Polynomial(OrderPtr order, std::vector<Term> terms) : order_(std::move(order)) {
  for (const Term& t : terms) {
    if (t.monomial.size() != order_->nvars()) throw Error(Errc::ArityMismatch, "term arity mismatch");
  }
  const MonomialOrder& ord = *order_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ord.greater(x.monomial, y.monomial); });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient == 0) terms_.pop_back();
    } else if (t.coefficient != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(OrderPtr order, Coefficient c) {
  Monomial one(order->nvars());
  return monomial(std::move(order), std::move(one), std::move(c));
}

Polynomial Polynomial::monomial(OrderPtr order, Monomial m, Coefficient c) {
  std::vector<Term> terms;
  terms.push_back({std::move(m), std::move(c)});
  return Polynomial(std::move(order), std::move(terms));
}

Polynomial Polynomial::binomial(OrderPtr order, Monomial u, Monomial v) {
  std::vector<Term> terms;
  terms.push_back({std::move(u), 1});
  terms.push_back({std::move(v), -1});
  return Polynomial(std::move(order), std::move(terms));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::total_degree() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::int64_t Polynomial::low_degree() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
  std::int64_t d = terms_.front().monomial.degree();
  for (const auto& t : terms_) d = std::min(d, t.monomial.degree());
  return d;
}

Polynomial Polynomial::reordered(OrderPtr order) const {
  if (order->nvars() != nvars()) throw Error(Errc::ArityMismatch, "reorder across different arities");
  return Polynomial(std::move(order), terms_);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Coefficient inv = 1 / leading_coefficient();
  return scaled(inv);
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (order_ != other.order_ && !(*order_ == *other.order_)) {
    throw Error(Errc::OrderMismatch, "polynomials stored under different monomial orders");
  }
}

Polynomial Polynomial::combine(const Polynomial& other, const Monomial* shift, const Coefficient& scale) const {
  check_compatible(other);
  Polynomial out(order_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  const MonomialOrder& ord = *order_;
  auto lhs = terms_.begin();
  auto rhs = other.terms_.begin();
  Monomial shifted;
  auto load_rhs = [&] {
    if (shift != nullptr && rhs != other.terms_.end()) shifted = *shift * rhs->monomial;
  };
  auto rhs_monomial = [&]() -> const Monomial& { return shift != nullptr ? shifted : rhs->monomial; };
  load_rhs();
  while (lhs != terms_.end() || rhs != other.terms_.end()) {
    std::strong_ordering cmp = std::strong_ordering::less;
    if (rhs == other.terms_.end()) {
      cmp = std::strong_ordering::greater;
    } else if (lhs != terms_.end()) {
      cmp = ord.compare(lhs->monomial, rhs_monomial());
    }
    if (cmp > 0) {
      out.terms_.push_back(*lhs);
      ++lhs;
      continue;
    }
    Coefficient c = scale * rhs->coefficient;
    if (cmp == 0) {
      c += lhs->coefficient;
      ++lhs;
    }
    if (c != 0) out.terms_.push_back({rhs_monomial(), std::move(c)});
    ++rhs;
    load_rhs();
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const { return combine(other, nullptr, 1); }

Polynomial Polynomial::operator-(const Polynomial& other) const { return combine(other, nullptr, -1); }

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Coefficient& c) const {
  Polynomial out(order_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coefficient *= c;
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Coefficient& c) const {
  Polynomial out(order_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) out.terms_.push_back({m * t.monomial, c * t.coefficient});
  return out;
}

Polynomial Polynomial::minus_term_times(const Monomial& m, const Coefficient& c, const Polynomial& g) const {
  return combine(g, &m, -c);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) products.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
  }
  return Polynomial(order_, std::move(products));
}

// ----------------------------------------------------------- free helpers

std::pair<Monomial, Coefficient> leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "leading monomial of the zero polynomial");
  if (order.nvars() != f.nvars()) throw Error(Errc::ArityMismatch, "order arity mismatch");
  if (order == f.order()) return {f.leading_monomial(), f.leading_coefficient()};
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return {best->monomial, best->coefficient};
}

Polynomial least_degree_form(const Polynomial& f) {
  const std::int64_t low = f.low_degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial.degree() == low) terms.push_back(t);
  }
  return Polynomial(f.order_ptr(), std::move(terms));
}

Polynomial spoly(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  const Monomial l = lf.monomial.lcm(lg.monomial);
  Polynomial left = f.times_term(lf.monomial.quotient_of(l), 1 / lf.coefficient);
  return left.minus_term_times(lg.monomial.quotient_of(l), 1 / lg.coefficient, g);
}

std::int64_t ecart(const Polynomial& f) { return f.total_degree() - f.leading_monomial().degree(); }

}  // namespace semiglue
