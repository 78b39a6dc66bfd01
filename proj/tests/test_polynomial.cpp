#include <doctest.h>

#include <random>

#include "semiglue/error.hpp"
#include "semiglue/polynomial.hpp"

using namespace semiglue;

namespace {

const VariableNames kXY = block_names(2, 2);  // x1 x2 y1 y2
const VariableNames kX3 = block_names(3, 0);

OrderPtr local(std::vector<std::size_t> priority) { return make_order(MonomialOrder::negdegrevlex(std::move(priority))); }
OrderPtr global(std::vector<std::size_t> priority) { return make_order(MonomialOrder::degrevlex(std::move(priority))); }

Polynomial P(std::string_view text, const VariableNames& names, OrderPtr order) {
  return parse_polynomial(text, names, std::move(order));
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Exponent> v(n);
  for (auto& x : v) x = e(rng);
  return Monomial(v);
}

Polynomial random_poly(std::mt19937_64& rng, OrderPtr order, int terms) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) t.push_back({random_monomial(rng, order->nvars(), 3), Coefficient(c(rng)) / (1 + i % 3)});
  return Polynomial(order, t);
}

std::vector<OrderPtr> sample_orders() {
  return {global({0, 1, 2, 3}), global({1, 3, 2, 0}), local({0, 1, 2, 3}), local({1, 3, 2, 0}),
          make_order(MonomialOrder::elimination({3, 0, 1, 2}, {3}))};
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial a{2, 0, 1};
  Monomial b{1, 0, 1};
  CHECK(a.degree() == 3);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(b.quotient_of(a) == Monomial{1, 0, 0});
  CHECK(a.lcm(Monomial{0, 2, 0}) == Monomial{2, 2, 1});
  CHECK(a.gcd(Monomial{5, 1, 0}) == Monomial{2, 0, 0});
  CHECK(Monomial{1, 0, 0}.coprime(Monomial{0, 3, 1}));
  CHECK(a * b == Monomial{3, 0, 2});
  CHECK(Monomial(3).is_one());
}

TEST_CASE("compare") {
  auto ord = local({1, 3, 2, 0});  // x2 > y2 > y1 > x1
  CHECK(ord->compare(Monomial{1, 1, 0, 0}, Monomial{0, 0, 3, 0}) > 0);
  Monomial m{2, 1, 0, 4};
  CHECK(ord->compare(m, m) == 0);
  auto ord3 = local({1, 2, 0});  // x2 > x3 > x1
  CHECK(ord3->compare(Monomial{1, 0, 1}, Monomial{0, 3, 0}) > 0);
  CHECK_THROWS_AS(ord->compare(Monomial{1, 0}, Monomial{1, 0, 0, 0}), Error);

  // reverse lexicographic tie-break: the smaller power of the lowest variable wins
  auto g = global({0, 1, 2});
  CHECK(g->greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
  CHECK(g->greater(Monomial{0, 2, 0}, Monomial{1, 0, 1}));
  CHECK(g->greater(Monomial{2, 0, 0}, Monomial{0, 2, 0}));
}

TEST_CASE("elimination order") {
  auto e = make_order(MonomialOrder::elimination({2, 0, 1}, {2}));  // t = slot 2
  CHECK(e->greater(Monomial{0, 0, 1}, Monomial{5, 5, 0}));
  CHECK(e->greater(Monomial{4, 0, 1}, Monomial{0, 3, 1}));
  CHECK(e->greater(Monomial{3, 0, 1}, Monomial{0, 3, 1}));
  CHECK(e->is_global());
}

TEST_CASE("order is total and multiplicative") {
  std::mt19937_64 rng(7);
  for (const auto& ord : sample_orders()) {
    for (int i = 0; i < 10000; ++i) {
      auto a = random_monomial(rng, 4, 4);
      auto b = random_monomial(rng, 4, 4);
      auto c = random_monomial(rng, 4, 4);
      auto ab = ord->compare(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(ord->compare(b, a) == (0 <=> ab));
      if (ab > 0 && ord->compare(b, c) > 0) CHECK(ord->compare(a, c) > 0);
      if (ab > 0) CHECK(ord->compare(a * c, b * c) > 0);
      if (ord->is_local() && !a.is_one()) CHECK(ord->greater(Monomial(4), a));
    }
  }
}

TEST_CASE("leading monomial") {
  auto ord = local({1, 3, 2, 0});
  auto f = P("x1^12 - x2^5", kXY, ord);
  CHECK(f.leading_monomial() == Monomial{0, 5, 0, 0});
  auto g = P("y1^8 - y2^7", kXY, ord);
  CHECK(g.leading_monomial() == Monomial{0, 0, 0, 7});
  auto five = Polynomial::constant(ord, 5);
  CHECK(five.leading_monomial().is_one());
  CHECK(five.leading_coefficient() == 5);
  auto [m, c] = leading_monomial(f, *global({0, 1, 2, 3}));
  CHECK(m == Monomial{12, 0, 0, 0});
  CHECK(c == 1);
  CHECK_THROWS_AS(Polynomial(ord).leading_term(), Error);
}

TEST_CASE("least degree form") {
  auto ord = local({1, 3, 2, 0});
  CHECK(least_degree_form(P("x1*x2 - y1^3", kXY, ord)) == P("x1*x2", kXY, ord));
  auto h = P("x1*x2 - y1*y2 + 3*x1^2", kXY, ord);
  CHECK(least_degree_form(h) == h);
  auto o3 = local({2, 1, 0});
  CHECK(least_degree_form(P("x1^5 - x3^2", kX3, o3)) == P("-x3^2", kX3, o3));
  CHECK_THROWS_AS(least_degree_form(Polynomial(ord)), Error);
}

TEST_CASE("spoly and ecart") {
  auto ord = local({1, 3, 2, 0});
  auto f = P("x1*x2 - y1^3", kXY, ord);
  CHECK(ecart(f) == 1);
  CHECK(ecart(P("x1*x2 - y1*y2", kXY, ord)) == 0);
  for (int q : {2, 3, 11}) {
    auto b = P("y1^" + std::to_string(q) + " - x1^" + std::to_string(q) + "*x2", kXY, ord);
    CHECK(ecart(b) == 1);
  }
  auto g = global({1, 0});
  auto u = P("x1^3 - x2^2", block_names(2, 0), g);
  auto v = P("x2^2 - x1^3", block_names(2, 0), g);
  CHECK(spoly(u, v).is_zero());
  CHECK_THROWS_AS(spoly(u, Polynomial(g)), Error);
}

TEST_CASE("parse and print round trip") {
  auto ord = global({0, 1, 2, 3});
  for (std::string text : {"x1^12 - x2^5", "x1*x2 - y1^3", "3/2*x1^2*y2 + 7 - y1", "-x2", "0", "1"}) {
    auto f = P(text, kXY, ord);
    auto again = P(to_string(f, kXY), kXY, ord);
    CHECK(again == f);
  }
  CHECK(to_string(P("x1^12 - x2^5", kXY, ord), kXY) == "x1^12 - x2^5");
  CHECK(to_string(P("2*y1 + y1", kXY, ord), kXY) == "3*y1");
  for (std::string bad : {"x3", "x1^", "x1 +", "2**x1", "x1^-1", "(x1)"}) {
    INFO("bad = ", bad);
    CHECK_THROWS_AS(P(bad, kXY, ord), Error);
  }
}

TEST_CASE("arithmetic laws") {
  std::mt19937_64 rng(11);
  for (const auto& ord : sample_orders()) {
    for (int i = 0; i < 60; ++i) {
      auto f = random_poly(rng, ord, 4);
      auto g = random_poly(rng, ord, 3);
      auto h = random_poly(rng, ord, 5);
      CHECK((f + g) + h == f + (g + h));
      CHECK(f * (g + h) == f * g + f * h);
      CHECK(f - f == Polynomial(ord));
      CHECK(f + (-f) == Polynomial(ord));
      CHECK(f * g == g * f);
      if (!f.is_zero() && !g.is_zero()) {
        CHECK((f * g).leading_monomial() == f.leading_monomial() * g.leading_monomial());
        CHECK((f * g).leading_coefficient() == f.leading_coefficient() * g.leading_coefficient());
      }
      if (!f.is_zero() && ord->is_local()) {
        auto low = least_degree_form(f);
        CHECK(least_degree_form(low) == low);
        CHECK(low.leading_monomial() == f.leading_monomial());
      }
      auto m = random_monomial(rng, 4, 2);
      CHECK(f.minus_term_times(m, 3, g) == f - g.times_term(m, 3));
      for (std::size_t t = 1; t < f.terms().size(); ++t) {
        CHECK(ord->greater(f.terms()[t - 1].monomial, f.terms()[t].monomial));
        CHECK(f.terms()[t].coefficient != 0);
      }
    }
  }
}

TEST_CASE("mixing orders is rejected") {
  auto a = P("x1 + x2", kXY, global({0, 1, 2, 3}));
  auto b = P("x1 + x2", kXY, local({0, 1, 2, 3}));
  CHECK_THROWS_AS(a + b, Error);
  CHECK(a.reordered(b.order_ptr()) == b);
}
