#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "semiglue/error.hpp"
#include "semiglue/semigroup.hpp"

using namespace semiglue;

namespace {

NumericalSemigroup sg(std::vector<Int> g) { return minimal_generators(g); }

Int dot(const Representation& r, const NumericalSemigroup& s) {
  Int v = 0;
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) v += r.coefficients[i] * s.generators()[i];
  return v;
}

}  // namespace

TEST_CASE("minimal generators") {
  CHECK(sg({2, 3, 4}).generators() == std::vector<Int>{2, 3});
  CHECK(sg({5, 12}).generators() == std::vector<Int>{5, 12});
  CHECK(sg({15, 7, 6}).generators() == std::vector<Int>{6, 7, 15});
  CHECK(sg({1, 5, 9}).generators() == std::vector<Int>{1});
  CHECK(sg({4, 6, 9, 10, 4}).generators() == std::vector<Int>{4, 6, 9});
}

TEST_CASE("minimal generators errors") {
  auto code = [](std::vector<Int> g) {
    try {
      minimal_generators(g);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::TheoremViolation;
  };
  CHECK(code({}) == Errc::Empty);
  CHECK(code({4, 6}) == Errc::GcdNotOne);
  CHECK(code({0, 3}) == Errc::NotPositive);
  CHECK(code({-2, 3}) == Errc::NotPositive);
}

TEST_CASE("contains") {
  auto s = sg({5, 12});
  auto r = contains(s, 17);
  REQUIRE(r);
  CHECK(r->coefficients == std::vector<Int>{1, 1});
  auto zero = contains(s, 0);
  REQUIRE(zero);
  CHECK(zero->coefficients == std::vector<Int>{0, 0});
  CHECK_FALSE(contains(s, 13));
  CHECK(oracle::representations({5, 12}, 13).empty());
  CHECK_THROWS_AS(contains(s, -1), Error);
}

TEST_CASE("all representations") {
  auto coeffs = [](const std::vector<Representation>& rs) {
    std::vector<std::vector<Int>> out;
    for (const auto& r : rs) out.push_back(r.coefficients);
    return out;
  };
  CHECK(coeffs(all_representations(sg({2, 3}), 7)) == std::vector<std::vector<Int>>{{2, 1}});
  CHECK(coeffs(all_representations(sg({5, 12}), 17)) == std::vector<std::vector<Int>>{{1, 1}});
  CHECK(coeffs(all_representations(sg({1}), 5)) == std::vector<std::vector<Int>>{{5}});
  CHECK(all_representations(sg({5, 12}), 13).empty());
}

TEST_CASE("frobenius and apery") {
  auto fa = frobenius_and_apery(sg({2, 3}));
  CHECK(fa.frobenius == 1);
  CHECK(fa.apery == std::vector<Int>{0, 3});
  CHECK(sg({5, 12}).frobenius() == 5 * 12 - 5 - 12);
  CHECK(sg({5, 12}).frobenius() == oracle::frobenius({5, 12}));
  CHECK(sg({6, 7, 15}).frobenius() == oracle::frobenius({6, 7, 15}));
  CHECK(sg({1}).frobenius() == -1);
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(sg({2, 3})));
  CHECK(is_symmetric(sg({16, 24, 28, 35})));
  CHECK_FALSE(is_symmetric(sg({3, 4, 5})));
  for (Int a = 2; a <= 30; ++a) {
    for (Int b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) == 1) CHECK(is_symmetric(sg({a, b})));
    }
  }
}

TEST_CASE("order filtration hilbert") {
  CHECK(order_filtration_hilbert(sg({2, 3}), 3) == std::vector<Int>{1, 2, 2, 2});
  CHECK(order_filtration_hilbert(sg({1}), 2) == std::vector<Int>{1, 1, 1});
  CHECK(order_filtration_hilbert(sg({6, 7, 15}), 6) == std::vector<Int>{1, 3, 4, 5, 5, 6, 6});
  CHECK(oracle::order_hilbert({6, 7, 15}, 6) == std::vector<Int>{1, 3, 4, 5, 5, 6, 6});
}

TEST_CASE("random semigroups against brute force") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<Int> value(2, 25);
    std::vector<Int> raw;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) raw.push_back(value(rng));
    raw.push_back(value(rng) | 1);
    raw.push_back(raw.back() + 1);  // forces gcd 1
    auto s = minimal_generators(raw);
    INFO("raw = ", oracle::show(raw));

    // idempotent, strictly increasing, no generator reachable from the others
    CHECK(minimal_generators(s.generators()) == s);
    CHECK(std::is_sorted(s.generators().begin(), s.generators().end()));
    CHECK(oracle::minimal_or_empty(s.generators()) == s.generators());

    const Int f = oracle::frobenius(s.generators());
    CHECK(s.frobenius() == f);
    auto in = oracle::members(s.generators(), f + 60);
    for (Int n = 0; n <= f + 60; ++n) {
      auto r = contains(s, n);
      CHECK(r.has_value() == static_cast<bool>(in[static_cast<std::size_t>(n)]));
      if (r) {
        CHECK(r->value == n);
        CHECK(dot(*r, s) == n);
      }
    }

    // apery elements: least member in each residue class
    const auto& ap = s.apery();
    for (Int r = 0; r < s.multiplicity(); ++r) {
      Int least = r;
      while (!in[static_cast<std::size_t>(least)]) least += s.multiplicity();
      CHECK(ap[static_cast<std::size_t>(r)] == least);
    }

    for (Int n : {Int{0}, f + 1, f + 7, 2 * s.largest_generator() + 3}) {
      auto mine = all_representations(s, n);
      auto theirs = oracle::representations(s.generators(), n);
      REQUIRE(mine.size() == theirs.size());
      for (std::size_t i = 0; i < mine.size(); ++i) {
        CHECK(std::vector<int>(mine[i].coefficients.begin(), mine[i].coefficients.end()) == theirs[i]);
      }
    }

    if (s.generators().size() <= 3 && s.largest_generator() <= 20) {
      CHECK(order_filtration_hilbert(s, 8) == oracle::order_hilbert(s.generators(), 8));
    }

    // stabilizes at the multiplicity by degree F + largest generator
    const Int bound = std::max<Int>(f + s.largest_generator(), 0);
    auto hf = order_filtration_hilbert(s, bound + 3);
    CHECK(hf.back() == hf[static_cast<std::size_t>(bound)]);
    CHECK(hf.back() == s.multiplicity());
  }
}

TEST_CASE("overflowing input is reported") {
  const Int big = std::numeric_limits<Int>::max() / 2 + 1;
  try {
    minimal_generators(std::vector<Int>{big, big + 1});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Overflow);
  }
}
