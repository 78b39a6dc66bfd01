#ifndef SEMIGLUE_POLYNOMIAL_HPP
#define SEMIGLUE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semiglue {

using Exponent = std::int32_t;
using Coefficient = mpq_class;

/// Exponent vector; slot i is the exponent of variable i.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e);
  const std::vector<Exponent>& exponents() const { return exps_; }

  /// Total degree.
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  /// Structural (slot-lexicographic) comparison, for containers only.
  auto operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::int64_t degree_ = 0;
};

enum class OrderKind {
  DegRevLex,     // global
  NegDegRevLex,  // local: 1 is the largest monomial
  Elimination,   // global block order, first block eliminated
};

/// A monomial order over a fixed number of variable slots. `priority` lists
/// slots from highest to lowest variable. The reverse lexicographic
/// tie-break scans a - b starting from the lowest variable; the first
/// nonzero entry being negative makes a the larger monomial.
class MonomialOrder {
 public:
  static MonomialOrder degrevlex(std::vector<std::size_t> priority);
  static MonomialOrder negdegrevlex(std::vector<std::size_t> priority);
  /// degrevlex on the `first_block` slots, ties broken by degrevlex on the
  /// remaining slots. Both blocks follow `priority`.
  static MonomialOrder elimination(std::vector<std::size_t> priority,
                                   std::vector<std::size_t> first_block);

  /// Identity priority x_0 > x_1 > ... > x_{n-1}.
  static std::vector<std::size_t> natural_priority(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  bool is_local() const { return kind_ == OrderKind::NegDegRevLex; }
  bool is_global() const { return !is_local(); }
  std::size_t nvars() const { return priority_.size(); }
  const std::vector<std::size_t>& priority() const { return priority_; }
  bool in_first_block(std::size_t slot) const { return !block_.empty() && block_[slot]; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority, std::vector<char> block);
  std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, int block) const;

  OrderKind kind_;
  std::vector<std::size_t> priority_;
  std::vector<char> block_;  // Elimination only: 1 for first-block slots
};

using OrderPtr = std::shared_ptr<const MonomialOrder>;

inline OrderPtr make_order(MonomialOrder order) {
  return std::make_shared<const MonomialOrder>(std::move(order));
}

struct Term {
  Monomial monomial;
  Coefficient coefficient;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial with exact rational coefficients. Terms are kept
/// sorted strictly descending under the polynomial's monomial order, so the
/// leading term is terms().front(). Switching orders is explicit
/// (`reordered`). Binary operations require operands over the same order.
class Polynomial {
 public:
  explicit Polynomial(OrderPtr order);
  Polynomial(OrderPtr order, std::vector<Term> terms);  // sorts, combines, drops zeros

  static Polynomial constant(OrderPtr order, Coefficient c);
  static Polynomial monomial(OrderPtr order, Monomial m, Coefficient c = 1);
  /// x^u - x^v
  static Polynomial binomial(OrderPtr order, Monomial u, Monomial v);

  const MonomialOrder& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }
  std::size_t nvars() const { return order_->nvars(); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Throw Error{ZeroPolynomial} on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Coefficient& leading_coefficient() const { return leading_term().coefficient; }

  std::int64_t total_degree() const;  // max term degree
  std::int64_t low_degree() const;    // min term degree
  bool is_homogeneous() const { return total_degree() == low_degree(); }

  Polynomial reordered(OrderPtr order) const;
  /// Scaled so that the leading coefficient is 1.
  Polynomial monic() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(const Coefficient& c) const;
  Polynomial times_term(const Monomial& m, const Coefficient& c) const;
  /// *this - c * m * g, a single merge pass.
  Polynomial minus_term_times(const Monomial& m, const Coefficient& c, const Polynomial& g) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  void check_compatible(const Polynomial& other) const;
  Polynomial combine(const Polynomial& other, const Monomial* shift, const Coefficient& scale) const;

  OrderPtr order_;
  std::vector<Term> terms_;
};

/// Leading monomial and coefficient of f under `order` (f need not be stored
/// in that order).
std::pair<Monomial, Coefficient> leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Sum of the terms of least total degree.
Polynomial least_degree_form(const Polynomial& f);

/// (lcm/LT(f)) f - (lcm/LT(g)) g for lcm = lcm(LM f, LM g).
Polynomial spoly(const Polynomial& f, const Polynomial& g);

/// deg f - deg LM(f).
std::int64_t ecart(const Polynomial& f);

// Text syntax: integer or rational coefficients, `*` between factors, `^`
// for powers, variables drawn from `names`.
using VariableNames = std::vector<std::string>;

/// x1..x{l}, y1..y{k}
VariableNames block_names(std::size_t l, std::size_t k);
VariableNames indexed_names(std::string_view stem, std::size_t count);

Polynomial parse_polynomial(std::string_view text, const VariableNames& names, OrderPtr order);
std::string to_string(const Polynomial& f, const VariableNames& names);
std::string to_string(const Monomial& m, const VariableNames& names);

}  // namespace semiglue

#endif  // SEMIGLUE_POLYNOMIAL_HPP
