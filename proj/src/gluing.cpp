#include "semiglue/gluing.hpp"

#include <algorithm>
#include <numeric>

#include "semiglue/checked.hpp"
#include "semiglue/error.hpp"

namespace semiglue {

GluingSpec validate_gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int p, Int q) {
  if (p <= 0 || q <= 0) throw Error(Errc::NotPositive, "p and q must be positive");
  if (std::gcd(p, q) != 1) {
    throw Error(Errc::GcdViolation, "gcd(p, q) = " + std::to_string(std::gcd(p, q)) + " is not 1");
  }
  if (!s1.is_member(p)) throw Error(Errc::NotInSemigroup, "p = " + std::to_string(p) + " is not in S1");
  if (!s2.is_member(q)) throw Error(Errc::NotInSemigroup, "q = " + std::to_string(q) + " is not in S2");
  if (s1.is_generator(p)) throw Error(Errc::PIsMinimalGenerator, "p is a minimal generator of S1");
  if (s2.is_generator(q)) throw Error(Errc::QIsMinimalGenerator, "q is a minimal generator of S2");
  for (Int m : s1.generators()) {
    for (Int n : s2.generators()) {
      if (checked_mul(q, m) == checked_mul(p, n)) {
        throw Error(Errc::GeneratorCollision, "q*" + std::to_string(m) + " = p*" + std::to_string(n));
      }
    }
  }

  GluingSpec spec{s1, s2, p, q, {}, {}, false};
  const auto reps_p = all_representations(s1, p);
  const Int n1 = s2.multiplicity();
  std::optional<Representation> concentrated;
  if (q % n1 == 0) {
    concentrated = Representation{std::vector<Int>(s2.embedding_dimension(), 0), q};
    concentrated->coefficients.front() = q / n1;
    for (const auto& b : reps_p) {
      if (b.length() >= q / n1) {
        spec.b = b;
        spec.a = *concentrated;
        spec.nice = true;
        return spec;
      }
    }
  }
  spec.b = *std::max_element(reps_p.begin(), reps_p.end(), [](const Representation& x, const Representation& y) {
    // max_element keeps the first maximum; reps are in lexicographic order.
    return x.length() < y.length();
  });
  spec.a = concentrated ? *concentrated : all_representations(s2, q).front();
  return spec;
}

MonomialCurve glued_curve(const GluingSpec& spec) {
  std::vector<Int> weights;
  for (Int m : spec.s1.generators()) weights.push_back(checked_mul(spec.q, m));
  for (Int n : spec.s2.generators()) weights.push_back(checked_mul(spec.p, n));
  return MonomialCurve(std::move(weights), block_names(spec.l(), spec.k()));
}

namespace {

Polynomial embed(const Polynomial& f, std::size_t offset, const OrderPtr& order) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(order->nvars());
    for (std::size_t v = 0; v < t.monomial.size(); ++v) m.set(offset + v, t.monomial[v]);
    terms.push_back({std::move(m), t.coefficient});
  }
  return Polynomial(order, std::move(terms));
}

Monomial embed(const Monomial& m, std::size_t offset, std::size_t nvars) {
  Monomial out(nvars);
  for (std::size_t v = 0; v < m.size(); ++v) out.set(offset + v, m[v]);
  return out;
}

Monomial block_monomial(const Representation& r, std::size_t offset, std::size_t nvars) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < r.coefficients.size(); ++i) m.set(offset + i, static_cast<Exponent>(r.coefficients[i]));
  return m;
}

ComponentSummary summarize(const MonomialCurve& curve, const std::vector<Polynomial>& ideal, Int limit) {
  const auto cone = tangent_cone_from_generators(curve, ideal, component_priority(curve.nvars()));
  return {cone.is_cohen_macaulay, hilbert_from_leading_ideal(cone.leading_monomials, curve.nvars(), limit),
          cone.leading_monomials};
}

std::vector<Monomial> sorted_structurally(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end());
  return ms;
}

}  // namespace

std::vector<Polynomial> glued_ideal(const GluingSpec& spec, const std::vector<Polynomial>& g1,
                                    const std::vector<Polynomial>& g2, OrderPtr order) {
  const std::size_t l = spec.l();
  const std::size_t nvars = l + spec.k();
  if (order->nvars() != nvars) throw Error(Errc::ArityMismatch, "order arity differs from l + k");
  std::vector<Polynomial> out;
  for (const auto& f : g1) out.push_back(embed(f, 0, order));
  for (const auto& g : g2) out.push_back(embed(g, l, order));
  out.push_back(Polynomial::binomial(order, block_monomial(spec.b, 0, nvars), block_monomial(spec.a, l, nvars)));
  for (auto& f : out) f = f.monic();
  return out;
}

std::vector<Polynomial> glued_ideal(const GluingSpec& spec) {
  const auto c1 = MonomialCurve(spec.s1.generators(), indexed_names("x", spec.l()));
  const auto c2 = MonomialCurve(spec.s2.generators(), indexed_names("y", spec.k()));
  auto order = make_order(MonomialOrder::degrevlex(MonomialOrder::natural_priority(spec.l() + spec.k())));
  return glued_ideal(spec, defining_ideal(c1), defining_ideal(c2), order);
}

std::vector<std::size_t> component_priority(std::size_t l) {
  std::vector<std::size_t> p;
  for (std::size_t i = 1; i < l; ++i) p.push_back(i);
  p.push_back(0);
  return p;
}

std::vector<std::size_t> gluing_priority(std::size_t l, std::size_t k) {
  std::vector<std::size_t> p;
  for (std::size_t j = 1; j < k; ++j) p.push_back(l + j);
  p.push_back(l);
  for (std::size_t i = 1; i < l; ++i) p.push_back(i);
  p.push_back(0);
  return p;
}

VerificationReport verify_instance(const GluingSpec& spec, const VerifyOptions& options) {
  const std::size_t l = spec.l();
  const std::size_t k = spec.k();
  const std::size_t nvars = l + k;
  const MonomialCurve curve = glued_curve(spec);
  const MonomialCurve c1(spec.s1.generators(), indexed_names("x", l));
  const MonomialCurve c2(spec.s2.generators(), indexed_names("y", k));
  const auto i1 = defining_ideal(c1);
  const auto i2 = defining_ideal(c2);
  auto order = make_order(MonomialOrder::degrevlex(MonomialOrder::natural_priority(nvars)));
  const auto g = glued_ideal(spec, i1, i2, order);
  auto cone = tangent_cone_from_generators(curve, g);

  VerificationReport r{spec,
                       curve.weights(),
                       g,
                       summarize(c1, i1, options.hf_limit),
                       summarize(c2, i2, options.hf_limit),
                       cone,
                       hilbert_from_leading_ideal(cone.leading_monomials, nvars, options.hf_limit)};

  const auto& w = curve.weights();
  r.smallest_generator_rule = std::all_of(w.begin() + 1, w.end(), [&](Int x) { return w.front() < x; });
  if (options.cross_check_ideal) r.ideal_agreement = same_ideal(g, defining_ideal(curve));
  if (options.check_oracle) {
    r.oracle_agreement = order_filtration_hilbert(curve.semigroup(), options.hf_limit) == r.glued_hilbert.hf_prefix;
  }
  r.gorenstein = is_symmetric(curve.semigroup());
  r.complete_intersection = minimal_generator_count(g) + 1 == nvars;

  r.cm_theorem_applicable = spec.nice && r.c1.cohen_macaulay && r.c2.cohen_macaulay;
  r.cm_theorem_confirmed = r.glued_cone.is_cohen_macaulay;
  r.hf_theorem_applicable = spec.nice && r.c1.hilbert.nondecreasing && r.c2.cohen_macaulay;
  r.hf_theorem_confirmed = r.glued_hilbert.nondecreasing;
  if (r.hf_theorem_applicable) {
    const auto proof_order_cone = tangent_cone_from_generators(curve, g, gluing_priority(l, k));
    std::vector<Monomial> expected;
    for (const auto& m : r.c1.leading_monomials) expected.push_back(embed(m, 0, nvars));
    for (const auto& m : r.c2.leading_monomials) expected.push_back(embed(m, l, nvars));
    Monomial y1_power(nvars);
    y1_power.set(l, static_cast<Exponent>(spec.a1()));
    expected.push_back(y1_power);
    r.leading_ideal_decomposition =
        sorted_structurally(minimize_monomials(expected)) == sorted_structurally(proof_order_cone.leading_monomials);
    r.factorization_ok = product_factorization_check(r.glued_hilbert, r.c1.hilbert.reduced_numerator,
                                                     r.c2.hilbert.reduced_numerator, spec.a1());
  }
  return r;
}

std::vector<std::string> VerificationReport::violations() const {
  std::vector<std::string> out;
  if (cm_theorem_applicable && !cm_theorem_confirmed) {
    out.push_back("nice gluing of CM tangent cones produced a non-CM tangent cone");
  }
  if (hf_theorem_applicable && !hf_theorem_confirmed) {
    out.push_back("nice gluing with nondecreasing HF(C1) and CM C2 produced a decreasing Hilbert function");
  }
  if (leading_ideal_decomposition == false) out.push_back("glued leading ideal is not <LM(G1), LM(G2), y1^a1>");
  if (factorization_ok == false) out.push_back("glued h-polynomial is not h1*h2*(1+...+t^(a1-1))");
  if (spec.nice && !smallest_generator_rule) out.push_back("q*m1 is not the smallest glued generator");
  if (ideal_agreement == false) out.push_back("glued generator set and elimination ideal differ");
  if (oracle_agreement == false) out.push_back("Hilbert function differs from the order filtration oracle");
  if (glued_cone.is_cohen_macaulay && glued_hilbert.multiplicity != *std::min_element(glued_generators.begin(), glued_generators.end())) {
    out.push_back("CM tangent cone but multiplicity differs from the smallest generator");
  }
  if (glued_cone.is_cohen_macaulay && !glued_hilbert.nondecreasing) {
    out.push_back("CM tangent cone with a decreasing Hilbert function");
  }
  return out;
}

}  // namespace semiglue
