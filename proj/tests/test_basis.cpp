#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "semiglue/basis.hpp"
#include "semiglue/error.hpp"
#include "semiglue/toric.hpp"

using namespace semiglue;

namespace {

OrderPtr local(std::vector<std::size_t> priority) { return make_order(MonomialOrder::negdegrevlex(std::move(priority))); }
OrderPtr global(std::vector<std::size_t> priority) { return make_order(MonomialOrder::degrevlex(std::move(priority))); }

std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, const VariableNames& names, const OrderPtr& order) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, names, order));
  return out;
}

std::vector<std::string> lm_strings(const BasisResult& b, const VariableNames& names) {
  std::vector<std::string> out;
  for (const auto& m : leading_ideal(b)) out.push_back(to_string(m, names));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Checks every basis invariant that does not depend on the input.
void check_basis(const BasisResult& b, const std::vector<Polynomial>& gens, bool binomial_input) {
  CHECK(satisfies_pair_criterion(b));
  for (const auto& f : gens) CHECK(ideal_contains(b, f));
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    CHECK(b.elements[i].leading_coefficient() == 1);
    if (binomial_input) CHECK(b.elements[i].size() <= 2);
    for (std::size_t j = 0; j < b.elements.size(); ++j) {
      if (i != j) CHECK_FALSE(b.elements[j].leading_monomial().divides(b.elements[i].leading_monomial()));
    }
  }
}

std::vector<Polynomial> curve_ideal(const std::vector<Int>& gens, const OrderPtr& order) {
  std::vector<Polynomial> out;
  for (const auto& f : defining_ideal(MonomialCurve::from_generators(gens))) out.push_back(f.reordered(order));
  return out;
}

}  // namespace

TEST_CASE("buchberger small cases") {
  const auto n2 = block_names(2, 0);
  auto g = global({0, 1});
  auto single = buchberger(parse_all({"x1^3 - x2^2"}, n2, g), g);
  REQUIRE(single.elements.size() == 1);
  CHECK(to_string(single.elements[0], n2) == "x1^3 - x2^2");

  // t in slot 2, eliminated
  VariableNames nt{"x1", "x2", "t"};
  auto e = make_order(MonomialOrder::elimination({2, 0, 1}, {2}));
  auto b = buchberger(parse_all({"t^2 - x1", "t^3 - x2"}, nt, e), e);
  bool found = false;
  for (const auto& f : b.elements) {
    if (f.leading_monomial()[2] != 0) continue;
    found = found || f == parse_polynomial("x1^3 - x2^2", nt, e) || f == parse_polynomial("x2^2 - x1^3", nt, e);
  }
  CHECK(found);
  check_basis(b, parse_all({"t^2 - x1", "t^3 - x2"}, nt, e), true);

  CHECK_THROWS_AS(buchberger(parse_all({"x1"}, n2, local({0, 1})), local({0, 1})), Error);
  try {
    buchberger({}, local({0, 1}));
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NonGlobalOrder);
  }
}

TEST_CASE("standard basis of C(6,7,15)") {
  const auto n3 = block_names(3, 0);
  for (auto priority : {std::vector<std::size_t>{1, 2, 0}, std::vector<std::size_t>{2, 1, 0}}) {
    auto ord = local(priority);
    auto gens = parse_all({"x1^5 - x3^2", "x1*x3 - x2^3"}, n3, ord);
    auto b = standard_basis(gens, ord);
    CHECK(lm_strings(b, n3) == sorted({"x3^2", "x1*x3", "x2^3*x3", "x2^6"}));
    check_basis(b, gens, true);
  }
  try {
    standard_basis({}, global({0, 1, 2}));
    FAIL("global order accepted");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::NonLocalOrder);
  }
}

TEST_CASE("standard basis of the first gluing example") {
  const auto names = block_names(2, 2);
  auto ord = local({1, 3, 2, 0});  // x2 > y2 > y1 > x1
  auto gens = parse_all({"x1^12 - x2^5", "y1^8 - y2^7", "x1*x2 - y1^3"}, names, ord);
  auto b = standard_basis(gens, ord);
  CHECK(lm_strings(b, names) ==
        sorted({"x1*x2", "x2^5", "y1^15", "y2^7", "x2^4*y1^3", "x2^3*y1^6", "x2^2*y1^9", "x2*y1^12"}));
  check_basis(b, gens, true);
  auto single = standard_basis({gens[2]}, ord);
  REQUIRE(single.elements.size() == 1);
  CHECK(single.elements[0] == gens[2]);
}

TEST_CASE("mora weak normal form") {
  const auto n1 = block_names(1, 0);
  auto ord = local({0});
  auto g = parse_polynomial("x1 - x1^2", n1, ord);
  // x1 = (1 - x1)^{-1} (x1 - x1^2) in the local ring
  CHECK(mora_weak_nf(parse_polynomial("x1", n1, ord), {g}).is_zero());
  auto r = mora_weak_nf(parse_polynomial("1 + x1", n1, ord), {g});
  REQUIRE_FALSE(r.is_zero());
  CHECK(r.leading_monomial().is_one());
  CHECK_THROWS_AS(mora_weak_nf(parse_polynomial("x1", n1, global({0})), {}), Error);
}

TEST_CASE("leading ideal pruning") {
  auto ord = global({0, 1});
  BasisResult b{{Polynomial::monomial(ord, Monomial{1, 0}), Polynomial::monomial(ord, Monomial{1, 1})}, ord, false};
  CHECK(leading_ideal(b) == std::vector<Monomial>{Monomial{1, 0}});
  CHECK(minimize_monomials({Monomial{2, 0}, Monomial{1, 1}, Monomial{2, 0}, Monomial{3, 1}}) ==
        std::vector<Monomial>{Monomial{2, 0}, Monomial{1, 1}});
}

TEST_CASE("random toric ideals: basis invariants") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> k(2, 4);
    auto w = oracle::random_semigroup(rng, k(rng), 3, 30);
    INFO("w = ", oracle::show(w));
    const std::size_t n = w.size();
    std::vector<std::size_t> priority(n);
    std::iota(priority.begin(), priority.end(), std::size_t{0});
    std::shuffle(priority.begin(), priority.end(), rng);

    auto lo = local(priority);
    auto gens = curve_ideal(w, lo);
    auto sb = standard_basis(gens, lo);
    check_basis(sb, gens, true);

    // the minimal leading ideal does not depend on the generator order
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(leading_ideal(standard_basis(shuffled, lo)) == leading_ideal(sb));
    BasisOptions no_product;
    no_product.product_criterion = false;
    CHECK(leading_ideal(standard_basis(gens, lo, no_product)) == leading_ideal(sb));

    auto gl = global(priority);
    auto ggens = curve_ideal(w, gl);
    auto gb = buchberger(ggens, gl);
    check_basis(gb, ggens, true);
    // reduced bases are unique
    auto reshuffled = ggens;
    std::shuffle(reshuffled.begin(), reshuffled.end(), rng);
    BasisOptions plain;
    plain.chain_criterion = false;
    plain.product_criterion = false;
    CHECK(buchberger(reshuffled, gl, plain).elements == gb.elements);
  }
}

TEST_CASE("random general ideals under a global order") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_int_distribution<int> c(-3, 3);
  auto ord = global({0, 1, 2});
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      std::vector<Term> terms;
      for (int t = 0; t < 3; ++t) terms.push_back({Monomial{e(rng), e(rng), e(rng)}, Coefficient(c(rng))});
      gens.emplace_back(ord, terms);
    }
    auto gb = buchberger(gens, ord);
    check_basis(gb, gens, false);
    BasisOptions plain;
    plain.chain_criterion = false;
    plain.product_criterion = false;
    CHECK(buchberger(gens, ord, plain).elements == gb.elements);
    std::reverse(gens.begin(), gens.end());
    CHECK(buchberger(gens, ord).elements == gb.elements);
  }
}
