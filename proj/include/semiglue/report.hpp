#ifndef SEMIGLUE_REPORT_HPP
#define SEMIGLUE_REPORT_HPP

#include <json.hpp>

#include "semiglue/gluing.hpp"
#include "semiglue/hilbert.hpp"
#include "semiglue/semigroup.hpp"
#include "semiglue/tangent_cone.hpp"

namespace semiglue {

// Structured views used by the CLI and by scan reproduction bundles.
// Polynomials and monomials are rendered in the textual syntax.

constexpr int kSchemaVersion = 1;
using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& s);
Json to_json(const Representation& r);
Json to_json(const HilbertData& h);
Json to_json(const TangentConeReport& report);
Json to_json(const GluingSpec& spec);
Json to_json(const VerificationReport& report);

Json to_json(const std::vector<Polynomial>& polys, const VariableNames& names);
Json to_json(const std::vector<Monomial>& monomials, const VariableNames& names);

}  // namespace semiglue

#endif  // SEMIGLUE_REPORT_HPP
