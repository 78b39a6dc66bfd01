#include "semiglue/report.hpp"

namespace semiglue {

using json = Json;

json to_json(const std::vector<Polynomial>& polys, const VariableNames& names) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(to_string(f, names));
  return out;
}

json to_json(const std::vector<Monomial>& monomials, const VariableNames& names) {
  json out = json::array();
  for (const auto& m : monomials) out.push_back(to_string(m, names));
  return out;
}

json to_json(const NumericalSemigroup& s) {
  return {{"generators", s.generators()},
          {"multiplicity", s.multiplicity()},
          {"embedding_dimension", s.embedding_dimension()},
          {"frobenius", s.frobenius()},
          {"apery", frobenius_and_apery(s).apery},
          {"symmetric", is_symmetric(s)}};
}

json to_json(const Representation& r) { return {{"value", r.value}, {"coefficients", r.coefficients}}; }

json to_json(const HilbertData& h) {
  json out{{"numerator", h.numerator},
           {"reduced_numerator", h.reduced_numerator},
           {"series", "(" + poly_to_string(h.reduced_numerator) + ") / (1 - t)"},
           {"hilbert_function", h.hf_prefix},
           {"multiplicity", h.multiplicity},
           {"nondecreasing", h.nondecreasing}};
  out["first_violation"] = h.first_violation ? json(*h.first_violation) : json(nullptr);
  return out;
}

json to_json(const TangentConeReport& report) {
  const auto& names = report.curve.names();
  json priority = json::array();
  for (std::size_t slot : report.order->priority()) priority.push_back(names[slot]);
  json out{{"generators", report.curve.weights()},
           {"variables", names},
           {"order", "negdegrevlex"},
           {"priority", priority},
           {"standard_basis", to_json(report.basis.elements, names)},
           {"leading_monomials", to_json(report.leading_monomials, names)},
           {"cone_generators", to_json(report.cone_generators, names)},
           {"cohen_macaulay", report.is_cohen_macaulay}};
  if (report.witness) {
    out["witness"] = {{"element", to_string(*report.witness, names)},
                      {"leading_monomial", to_string(report.witness->leading_monomial(), names)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const GluingSpec& spec) {
  return {{"s1", spec.s1.generators()}, {"s2", spec.s2.generators()}, {"p", spec.p},     {"q", spec.q},
          {"b", spec.b.coefficients},   {"a", spec.a.coefficients},   {"nice", spec.nice}};
}

namespace {

json optional_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json component(const ComponentSummary& c, const VariableNames& names) {
  return {{"cohen_macaulay", c.cohen_macaulay},
          {"leading_monomials", to_json(c.leading_monomials, names)},
          {"hilbert", to_json(c.hilbert)}};
}

}  // namespace

json to_json(const VerificationReport& r) {
  const auto names = block_names(r.spec.l(), r.spec.k());
  json out{{"spec", to_json(r.spec)},
           {"glued_generators", r.glued_generators},
           {"glued_ideal", to_json(r.glued_ideal, names)},
           {"c1", component(r.c1, indexed_names("x", r.spec.l()))},
           {"c2", component(r.c2, indexed_names("y", r.spec.k()))},
           {"glued_tangent_cone", to_json(r.glued_cone)},
           {"glued_hilbert", to_json(r.glued_hilbert)},
           {"smallest_generator_rule", r.smallest_generator_rule},
           {"ideal_agreement", optional_bool(r.ideal_agreement)},
           {"oracle_agreement", optional_bool(r.oracle_agreement)},
           {"gorenstein", r.gorenstein},
           {"complete_intersection", r.complete_intersection},
           {"cm_theorem", {{"applicable", r.cm_theorem_applicable}, {"confirmed", r.cm_theorem_confirmed}}},
           {"hf_theorem",
            {{"applicable", r.hf_theorem_applicable},
             {"confirmed", r.hf_theorem_confirmed},
             {"leading_ideal_decomposition", optional_bool(r.leading_ideal_decomposition)},
             {"factorization", optional_bool(r.factorization_ok)}}},
           {"rossi_candidate", r.rossi_candidate()},
           {"violations", r.violations()}};
  return out;
}

}  // namespace semiglue
