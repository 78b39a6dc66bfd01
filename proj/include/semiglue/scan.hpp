#ifndef SEMIGLUE_SCAN_HPP
#define SEMIGLUE_SCAN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semiglue/error.hpp"
#include "semiglue/gluing.hpp"
#include "semiglue/report.hpp"

namespace semiglue {

/// slope * parameter + offset
struct LinearExpr {
  Int slope = 0;
  Int offset = 0;

  Int operator()(Int x) const;
  /// Accepts sums of integer terms and (integer multiples of) the parameter,
  /// e.g. "6*q + 7", "q", "-2 + 3q", "8".
  static LinearExpr parse(std::string_view text, std::string_view parameter);
  std::string to_string(std::string_view parameter) const;
  bool operator==(const LinearExpr&) const = default;
};

/// A one-parameter family of gluings.
struct ScanTemplate {
  std::string name;
  std::vector<LinearExpr> s1;
  std::vector<LinearExpr> s2;
  std::string parameter = "r";
  LinearExpr p;
  LinearExpr q;
  Int from = 1;
  Int to = 1;
  std::optional<std::string> output;
};

/// YAML mapping with keys name, s1, s2, parameter, p, q, range: [from, to],
/// output. Throws Error{InvalidConfig}.
ScanTemplate parse_scan_config(const std::string& text);
ScanTemplate load_scan_config(const std::string& path);

struct ScanRecord {
  Int parameter = 0;
  std::optional<VerificationReport> report;
  std::string skipped_reason;  // set when the parameter gives no valid gluing
};

struct ScanOptions {
  unsigned jobs = 1;
  VerifyOptions verify;
};

/// Thrown by scan_family when an instance falsifies a verified claim.
/// `bundle` holds the full report of the offending instance.
class TheoremViolationError : public Error {
 public:
  TheoremViolationError(const std::string& what, Json bundle)
      : Error(Errc::TheoremViolation, what), bundle_(std::move(bundle)) {}
  const Json& bundle() const { return bundle_; }

 private:
  Json bundle_;
};

/// Evaluates every parameter in [from, to]; records come back in parameter
/// order regardless of `jobs`. Invalid parameters are skipped with a reason.
std::vector<ScanRecord> scan_family(const ScanTemplate& family, const ScanOptions& options = {});

Json to_json(const ScanRecord& record, const ScanTemplate& family);

}  // namespace semiglue

#endif  // SEMIGLUE_SCAN_HPP
