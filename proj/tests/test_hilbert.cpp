#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semiglue/basis.hpp"
#include "semiglue/error.hpp"
#include "semiglue/hilbert.hpp"
#include "semiglue/semigroup.hpp"
#include "semiglue/toric.hpp"

using namespace semiglue;

namespace {

std::vector<oracle::Exps> to_exps(const std::vector<Monomial>& ms) {
  std::vector<oracle::Exps> out;
  for (const auto& m : ms) out.emplace_back(m.exponents().begin(), m.exponents().end());
  return out;
}

std::vector<Monomial> to_monomials(const std::vector<oracle::Exps>& gens) {
  std::vector<Monomial> out;
  for (const auto& e : gens) out.emplace_back(std::vector<Exponent>(e.begin(), e.end()));
  return out;
}

HilbertData curve_hilbert(std::vector<Int> g, std::optional<Int> limit = std::nullopt) {
  return local_hilbert_function(MonomialCurve::from_generators(g), limit);
}

}  // namespace

TEST_CASE("polynomial helpers") {
  CHECK(poly_trim({1, 2, 0, 0}) == IntPoly{1, 2});
  CHECK(poly_mul({1, 1}, {1, -1}) == IntPoly{1, 0, -1});
  CHECK(poly_add({1, 1}, {0, -1}) == IntPoly{1});
  CHECK(poly_shift({1, 2}, 2) == IntPoly{0, 0, 1, 2});
  CHECK(geometric_sum(4) == IntPoly{1, 1, 1, 1});
  CHECK(poly_eval_at_one({1, 3, 4}) == 8);
  CHECK(divide_by_one_minus_t({1, 0, -1}, 1) == IntPoly{1, 1});
  CHECK(series_coefficients({1}, 2, 4) == std::vector<Int>{1, 2, 3, 4});
  CHECK(poly_to_string({1, 3, 0, -1}) == "1 + 3*t - t^3");
  try {
    divide_by_one_minus_t({1, 1}, 1);
    FAIL("remainder ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("hilbert numerator examples") {
  CHECK(hilbert_numerator({Monomial{0, 2}}, 2) == IntPoly{1, 0, -1});
  CHECK(hilbert_numerator({}, 3) == IntPoly{1});
  // x3^2, x1*x3, x2^3*x3, x2^6
  std::vector<Monomial> lms{Monomial{0, 0, 2}, Monomial{1, 0, 1}, Monomial{0, 3, 1}, Monomial{0, 6, 0}};
  auto n = hilbert_numerator(lms, 3);
  CHECK(series_coefficients(n, 3, 11) == oracle::standard_monomial_counts(to_exps(lms), 3, 10));
  auto data = hilbert_from_leading_ideal(lms, 3, 6);
  CHECK(data.hf_prefix == std::vector<Int>{1, 3, 4, 5, 5, 6, 6});
}

TEST_CASE("local hilbert functions of small curves") {
  auto cusp = curve_hilbert({2, 3}, 4);
  CHECK(cusp.reduced_numerator == IntPoly{1, 1});
  CHECK(cusp.hf_prefix == std::vector<Int>{1, 2, 2, 2, 2});

  auto c6 = curve_hilbert({6, 7, 15}, 6);
  CHECK(c6.hf_prefix == std::vector<Int>{1, 3, 4, 5, 5, 6, 6});
  CHECK(c6.nondecreasing);
  CHECK(c6.hf_prefix == order_filtration_hilbert(minimal_generators(std::vector<Int>{6, 7, 15}), 6));

  auto r1 = curve_hilbert({16, 24, 28, 35}, 7);
  CHECK(r1.reduced_numerator == poly_mul(poly_mul({1, 1}, {1, 1}), geometric_sum(4)));
  CHECK(r1.reduced_numerator == IntPoly{1, 3, 4, 4, 3, 1});
  CHECK(r1.hf_prefix == std::vector<Int>{1, 4, 8, 12, 15, 16, 16, 16});
  CHECK(r1.multiplicity == 16);

  auto regular = curve_hilbert({1}, 2);
  CHECK(regular.hf_prefix == std::vector<Int>{1, 1, 1});
}

TEST_CASE("monotonicity") {
  CHECK(is_nondecreasing(IntPoly{1, 3, 4}).nondecreasing);
  auto bad = is_nondecreasing(IntPoly{1, 2, -1, 1});
  CHECK_FALSE(bad.nondecreasing);
  REQUIRE(bad.first_violation);
  CHECK(*bad.first_violation == 2);
  auto glued = local_hilbert_function(MonomialCurve({105, 252, 119, 136}, block_names(2, 2)));
  CHECK(glued.nondecreasing);
  CHECK(glued.multiplicity == 105);
}

TEST_CASE("product factorization") {
  auto h1 = curve_hilbert({2, 3}).reduced_numerator;
  auto h2 = curve_hilbert({4, 5}).reduced_numerator;
  HilbertData fake;
  fake.reduced_numerator = poly_mul(h1, h2);
  CHECK(product_factorization_check(fake, h1, h2, 1));
  CHECK_FALSE(product_factorization_check(fake, h1, h2, 2));

  // C(12,14,30,19): C(6,7,15) glued to C(1) with p = 19, q = 2
  auto glued = local_hilbert_function(MonomialCurve({12, 14, 30, 19}, block_names(3, 1)));
  auto base = curve_hilbert({6, 7, 15}).reduced_numerator;
  CHECK(glued.reduced_numerator == poly_mul(base, IntPoly{1, 1}));
  CHECK(product_factorization_check(glued, base, IntPoly{1}, 2));
}

TEST_CASE("random monomial ideals: numerator against standard monomial counts") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 150; ++trial) {
    auto ideal = oracle::random_monomial_ideal(rng);
    auto gens = to_monomials(ideal.gens);
    std::string text;
    for (const auto& m : gens) text += to_string(m, indexed_names("x", ideal.nvars)) + " ";
    INFO("ideal = ", text);
    CHECK(minimize_monomials(gens) == gens);
    auto expected = oracle::standard_monomial_counts(ideal.gens, ideal.nvars, 12);
    auto n = hilbert_numerator(gens, ideal.nvars);
    CHECK(series_coefficients(n, ideal.nvars, 13) == expected);
    CHECK(hilbert_numerator(gens, ideal.nvars, PivotRule::LeastFrequent) == n);
    CHECK(hilbert_numerator(gens, ideal.nvars, PivotRule::LastVariable) == n);
    auto reversed = gens;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(hilbert_numerator(reversed, ideal.nvars) == n);
  }
}

TEST_CASE("random curves: algebraic path equals the order oracle") {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> k(1, 4);
    auto w = oracle::random_semigroup(rng, k(rng), 2, 40);
    INFO("w = ", oracle::show(w));
    auto data = curve_hilbert(w, 20);
    CHECK(data.hf_prefix == order_filtration_hilbert(minimal_generators(w), 20));
    CHECK(data.multiplicity >= 1);
    CHECK(data.multiplicity == poly_eval_at_one(data.reduced_numerator));
    auto stable = curve_hilbert(w);
    const std::size_t deg_h = stable.reduced_numerator.size() - 1;
    for (std::size_t n = deg_h; n < stable.hf_prefix.size(); ++n) CHECK(stable.hf_prefix[n] == stable.multiplicity);
  }
}
