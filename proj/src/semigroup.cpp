#include "semiglue/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "semiglue/checked.hpp"
#include "semiglue/error.hpp"

namespace semiglue {

Int Representation::length() const {
  Int total = 0;
  for (Int c : coefficients) total = checked_add(total, c);
  return total;
}

Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> raw) {
  if (raw.empty()) throw Error(Errc::Empty, "empty generator list");
  std::vector<Int> sorted(raw.begin(), raw.end());
  for (Int g : sorted) {
    if (g <= 0) throw Error(Errc::NotPositive, "generators must be positive integers");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (gcd_of(sorted) != 1) throw Error(Errc::GcdNotOne, "gcd of generators is not 1");
  if (sorted.back() > kMaxGenerator) throw Error(Errc::Overflow, "generator exceeds the supported size");

  // A generator is redundant iff it is a combination of strictly smaller ones.
  const Int top = sorted.back();
  std::vector<char> reach(static_cast<std::size_t>(top) + 1, 0);
  reach[0] = 1;
  std::vector<Int> kept;
  for (Int g : sorted) {
    if (reach[static_cast<std::size_t>(g)]) continue;
    kept.push_back(g);
    for (Int v = g; v <= top; ++v) {
      if (reach[static_cast<std::size_t>(v - g)]) reach[static_cast<std::size_t>(v)] = 1;
    }
  }
  return NumericalSemigroup(std::move(kept));
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> gens) : gens_(std::move(gens)) {
  // Dijkstra on residues modulo the multiplicity.
  const Int m = gens_.front();
  constexpr Int kInf = std::numeric_limits<Int>::max();
  apery_.assign(static_cast<std::size_t>(m), kInf);
  apery_[0] = 0;
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [dist, r] = queue.top();
    queue.pop();
    if (dist != apery_[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens_.size(); ++i) {
      const Int next = checked_add(dist, gens_[i]);
      const Int nr = next % m;
      if (next < apery_[static_cast<std::size_t>(nr)]) {
        apery_[static_cast<std::size_t>(nr)] = next;
        queue.emplace(next, nr);
      }
    }
  }
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - m;
}

bool NumericalSemigroup::is_member(Int n) const {
  if (n < 0) return false;
  const Int m = gens_.front();
  return n >= apery_[static_cast<std::size_t>(n % m)];
}

bool NumericalSemigroup::is_generator(Int n) const {
  return std::binary_search(gens_.begin(), gens_.end(), n);
}

NumericalSemigroup minimal_generators(std::span<const Int> raw) {
  return NumericalSemigroup::from_generators(raw);
}

std::optional<Representation> contains(const NumericalSemigroup& s, Int n) {
  if (n < 0) throw Error(Errc::NegativeInput, "membership query for a negative integer");
  if (!s.is_member(n)) return std::nullopt;
  const auto& gens = s.generators();
  Representation rep{std::vector<Int>(gens.size(), 0), n};
  // Greedy descent: always subtract the largest generator that keeps the
  // remainder inside S. Membership of the remainder guarantees progress.
  Int rest = n;
  while (rest > 0) {
    bool stepped = false;
    for (std::size_t i = gens.size(); i-- > 0;) {
      if (rest - gens[i] >= 0 && s.is_member(rest - gens[i])) {
        rest -= gens[i];
        ++rep.coefficients[i];
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error(Errc::NotInSemigroup, "inconsistent Apery table");
  }
  return rep;
}

namespace {

void enumerate(std::span<const Int> gens, std::span<const Int> suffix_gcd, std::size_t i, Int rest,
               std::vector<Int>& coeffs, Int value, std::vector<Representation>& out) {
  if (i + 1 == gens.size()) {
    if (rest % gens[i] == 0) {
      coeffs[i] = rest / gens[i];
      out.push_back({coeffs, value});
      coeffs[i] = 0;
    }
    return;
  }
  for (Int c = 0; c * gens[i] <= rest; ++c) {
    const Int left = rest - c * gens[i];
    if (left % suffix_gcd[i + 1] != 0) continue;
    coeffs[i] = c;
    enumerate(gens, suffix_gcd, i + 1, left, coeffs, value, out);
  }
  coeffs[i] = 0;
}

}  // namespace

std::vector<Representation> all_representations(const NumericalSemigroup& s, Int n) {
  if (n < 0) throw Error(Errc::NegativeInput, "representation query for a negative integer");
  std::vector<Representation> out;
  if (!s.is_member(n)) return out;
  const auto& gens = s.generators();
  std::vector<Int> suffix_gcd(gens.size() + 1, 0);
  for (std::size_t i = gens.size(); i-- > 0;) suffix_gcd[i] = std::gcd(suffix_gcd[i + 1], gens[i]);
  std::vector<Int> coeffs(gens.size(), 0);
  enumerate(gens, suffix_gcd, 0, n, coeffs, n, out);
  return out;
}

FrobeniusApery frobenius_and_apery(const NumericalSemigroup& s) {
  FrobeniusApery out{s.frobenius(), s.apery()};
  std::sort(out.apery.begin(), out.apery.end());
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  for (Int z = 0; z <= f; ++z) {
    if (s.is_member(z) == s.is_member(f - z)) return false;
  }
  return true;
}

std::vector<Int> order_filtration_hilbert(const NumericalSemigroup& s, Int limit) {
  if (limit < 0) throw Error(Errc::NegativeInput, "negative Hilbert function length");
  const auto& gens = s.generators();
  // Past this bound every element has order > limit.
  const Int bound = checked_add(s.frobenius(), checked_mul(limit + 1, s.largest_generator()));
  std::vector<Int> order(static_cast<std::size_t>(bound) + 1, -1);
  std::vector<Int> hf(static_cast<std::size_t>(limit) + 1, 0);
  order[0] = 0;
  hf[0] = 1;
  for (Int v = 1; v <= bound; ++v) {
    Int best = -1;
    for (Int g : gens) {
      if (g > v) break;
      best = std::max(best, order[static_cast<std::size_t>(v - g)]);
    }
    if (best < 0) continue;
    const Int ord = best + 1;
    order[static_cast<std::size_t>(v)] = ord;
    if (ord <= limit) ++hf[static_cast<std::size_t>(ord)];
  }
  return hf;
}

}  // namespace semiglue
