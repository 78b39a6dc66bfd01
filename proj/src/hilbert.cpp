#include "semiglue/hilbert.hpp"

#include <algorithm>

#include "semiglue/basis.hpp"
#include "semiglue/checked.hpp"
#include "semiglue/error.hpp"
#include "semiglue/tangent_cone.hpp"

namespace semiglue {

IntPoly poly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], b[i]);
  return poly_trim(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return poly_trim(std::move(out));
}

IntPoly poly_shift(const IntPoly& p, Int by) {
  if (p.empty()) return p;
  IntPoly out(static_cast<std::size_t>(by), 0);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

Int poly_eval_at_one(const IntPoly& p) {
  Int s = 0;
  for (Int c : p) s = checked_add(s, c);
  return s;
}

IntPoly geometric_sum(Int n) { return IntPoly(static_cast<std::size_t>(std::max<Int>(n, 0)), 1); }

IntPoly divide_by_one_minus_t(const IntPoly& p, std::size_t power) {
  IntPoly q = poly_trim(p);
  for (std::size_t step = 0; step < power; ++step) {
    // p = (1 - t) r  <=>  r_i = sum_{j<=i} p_j, and sum of all p_j = 0.
    if (poly_eval_at_one(q) != 0) {
      throw Error(Errc::DimensionMismatch, "numerator is not divisible by the expected power of (1-t)");
    }
    if (q.empty()) return q;
    IntPoly r(q.size() - 1, 0);
    Int acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc = checked_add(acc, q[i]);
      r[i] = acc;
    }
    q = poly_trim(std::move(r));
  }
  return q;
}

std::vector<Int> series_coefficients(const IntPoly& p, std::size_t power, std::size_t count) {
  std::vector<Int> s(count, 0);
  for (std::size_t i = 0; i < count && i < p.size(); ++i) s[i] = p[i];
  for (std::size_t step = 0; step < power; ++step) {
    for (std::size_t i = 1; i < count; ++i) s[i] = checked_add(s[i], s[i - 1]);
  }
  return s;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Int c = p[i];
    if (c == 0) continue;
    const Int mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += std::to_string(mag);
    if (i > 0) {
      if (mag != 1) out += '*';
      out += var;
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out;
}

namespace {

IntPoly one_minus_t_power(Int degree) {
  IntPoly p(static_cast<std::size_t>(degree) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(degree)] -= 1;
  return poly_trim(std::move(p));
}

std::vector<Monomial> with_generator(const std::vector<Monomial>& gens, const Monomial& pivot) {
  std::vector<Monomial> out;
  out.push_back(pivot);
  for (const auto& g : gens) {
    if (!pivot.divides(g)) out.push_back(g);
  }
  return minimize_monomials(out);
}

std::vector<Monomial> colon(const std::vector<Monomial>& gens, const Monomial& pivot) {
  std::vector<Monomial> out;
  for (const auto& g : gens) out.push_back(g.gcd(pivot).quotient_of(g));
  return minimize_monomials(out);
}

IntPoly numerator(const std::vector<Monomial>& gens, std::size_t nvars, PivotRule rule) {
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};  // unit ideal
  }
  std::vector<std::size_t> frequency(nvars, 0);
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < nvars; ++v) frequency[v] += g[v] > 0 ? 1 : 0;
  }
  std::size_t pivot_var = nvars;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (frequency[v] < 2) continue;
    if (pivot_var == nvars) {
      pivot_var = v;
      continue;
    }
    switch (rule) {
      case PivotRule::MostFrequent:
        if (frequency[v] > frequency[pivot_var]) pivot_var = v;
        break;
      case PivotRule::LeastFrequent:
        if (frequency[v] < frequency[pivot_var]) pivot_var = v;
        break;
      case PivotRule::LastVariable:
        pivot_var = v;
        break;
    }
  }
  if (pivot_var == nvars) {
    // Pairwise coprime generators form a regular sequence.
    IntPoly out{1};
    for (const auto& g : gens) out = poly_mul(out, one_minus_t_power(g.degree()));
    return out;
  }
  Exponent e = 0;
  for (const auto& g : gens) {
    if (g[pivot_var] > 0 && (e == 0 || g[pivot_var] < e)) e = g[pivot_var];
  }
  Monomial pivot(nvars);
  pivot.set(pivot_var, e);
  const IntPoly sum_part = numerator(with_generator(gens, pivot), nvars, rule);
  const IntPoly colon_part = numerator(colon(gens, pivot), nvars, rule);
  return poly_add(sum_part, poly_shift(colon_part, e));
}

}  // namespace

IntPoly hilbert_numerator(const std::vector<Monomial>& lms, std::size_t nvars, PivotRule rule) {
  for (const auto& m : lms) {
    if (m.size() != nvars) throw Error(Errc::ArityMismatch, "monomial arity differs from the ring");
  }
  return numerator(minimize_monomials(lms), nvars, rule);
}

Monotonicity is_nondecreasing(const IntPoly& reduced_numerator) {
  for (std::size_t i = 0; i < reduced_numerator.size(); ++i) {
    if (reduced_numerator[i] < 0) return {false, i};
  }
  return {true, std::nullopt};
}

HilbertData hilbert_from_leading_ideal(const std::vector<Monomial>& lms, std::size_t nvars, std::optional<Int> limit) {
  HilbertData data;
  data.numerator = hilbert_numerator(lms, nvars);
  if (nvars == 0) throw Error(Errc::DimensionMismatch, "a curve needs at least one variable");
  data.reduced_numerator = divide_by_one_minus_t(data.numerator, nvars - 1);
  data.multiplicity = poly_eval_at_one(data.reduced_numerator);
  const Int length = limit.value_or(static_cast<Int>(data.reduced_numerator.size()) + 2);
  if (length < 0) throw Error(Errc::NegativeInput, "negative Hilbert function length");
  data.hf_prefix = series_coefficients(data.reduced_numerator, 1, static_cast<std::size_t>(length) + 1);
  const Monotonicity m = is_nondecreasing(data.reduced_numerator);
  data.nondecreasing = m.nondecreasing;
  data.first_violation = m.first_violation;
  return data;
}

HilbertData local_hilbert_function(const MonomialCurve& curve, std::optional<Int> limit) {
  const TangentConeReport cone = tangent_cone(curve);
  return hilbert_from_leading_ideal(cone.leading_monomials, curve.nvars(), limit);
}

bool product_factorization_check(const HilbertData& glued, const IntPoly& h1, const IntPoly& h2, Int a1) {
  const IntPoly expected = poly_mul(poly_mul(h1, h2), geometric_sum(a1));
  return poly_trim(glued.reduced_numerator) == poly_trim(expected);
}

}  // namespace semiglue
