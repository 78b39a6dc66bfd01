#include "semiglue/scan.hpp"

#include <yaml-cpp/yaml.h>

#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>
#include <thread>

#include "semiglue/checked.hpp"
#include "semiglue/report.hpp"

namespace semiglue {

Int LinearExpr::operator()(Int x) const { return checked_add(checked_mul(slope, x), offset); }

LinearExpr LinearExpr::parse(std::string_view text, std::string_view parameter) {
  auto fail = [&](const std::string& why) -> LinearExpr {
    throw Error(Errc::InvalidConfig, "bad linear expression '" + std::string(text) + "': " + why);
  };
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) return fail("empty");
  LinearExpr out;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    Int sign = 1;
    if (compact[pos] == '+' || compact[pos] == '-') {
      sign = compact[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      return fail("expected '+' or '-'");
    }
    std::size_t end = pos;
    while (end < compact.size() && compact[end] != '+' && compact[end] != '-') ++end;
    std::string term = compact.substr(pos, end - pos);
    pos = end;
    if (term.empty()) return fail("empty term");
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    if (digits > 18) return fail("number too large");
    const Int number = digits > 0 ? std::stoll(term.substr(0, digits)) : 1;
    std::string rest = term.substr(digits);
    if (!rest.empty() && rest.front() == '*') {
      if (digits == 0) return fail("dangling '*'");
      rest.erase(0, 1);
    }
    if (rest.empty()) {
      if (digits == 0) return fail("missing number");
      out.offset = checked_add(out.offset, sign * number);
    } else if (rest == parameter) {
      out.slope = checked_add(out.slope, sign * number);
    } else {
      return fail("unknown symbol '" + rest + "'");
    }
  }
  return out;
}

std::string LinearExpr::to_string(std::string_view parameter) const {
  std::ostringstream s;
  if (slope != 0) {
    if (slope == -1) s << '-';
    else if (slope != 1) s << slope << '*';
    s << parameter;
    if (offset > 0) s << " + " << offset;
    if (offset < 0) s << " - " << -offset;
  } else {
    s << offset;
  }
  return s.str();
}

namespace {

std::vector<LinearExpr> expr_list(const YAML::Node& node, const std::string& key, const std::string& parameter) {
  if (!node || !node.IsSequence() || node.size() == 0) {
    throw Error(Errc::InvalidConfig, "'" + key + "' must be a non-empty list");
  }
  std::vector<LinearExpr> out;
  for (const auto& item : node) out.push_back(LinearExpr::parse(item.as<std::string>(), parameter));
  return out;
}

std::vector<Int> instantiate(const std::vector<LinearExpr>& exprs, Int x) {
  std::vector<Int> out;
  for (const auto& e : exprs) out.push_back(e(x));
  return out;
}

}  // namespace

ScanTemplate parse_scan_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw Error(Errc::InvalidConfig, std::string("malformed scan config: ") + e.what());
  }
  if (!root.IsMap()) throw Error(Errc::InvalidConfig, "scan config must be a mapping");
  try {
    ScanTemplate t;
    if (root["name"]) t.name = root["name"].as<std::string>();
    if (root["parameter"]) t.parameter = root["parameter"].as<std::string>();
    if (t.parameter.empty() || !std::isalpha(static_cast<unsigned char>(t.parameter.front()))) {
      throw Error(Errc::InvalidConfig, "parameter must be an identifier");
    }
    t.s1 = expr_list(root["s1"], "s1", t.parameter);
    t.s2 = expr_list(root["s2"], "s2", t.parameter);
    for (const char* key : {"p", "q", "range"}) {
      if (!root[key]) throw Error(Errc::InvalidConfig, std::string("missing key '") + key + "'");
    }
    t.p = LinearExpr::parse(root["p"].as<std::string>(), t.parameter);
    t.q = LinearExpr::parse(root["q"].as<std::string>(), t.parameter);
    const auto range = root["range"];
    if (!range.IsSequence() || range.size() != 2) throw Error(Errc::InvalidConfig, "range must be [from, to]");
    t.from = range[0].as<Int>();
    t.to = range[1].as<Int>();
    if (t.from > t.to) throw Error(Errc::InvalidConfig, "empty range");
    if (root["output"]) t.output = root["output"].as<std::string>();
    return t;
  } catch (const YAML::Exception& e) {
    throw Error(Errc::InvalidConfig, std::string("scan config: ") + e.what());
  }
}

ScanTemplate load_scan_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidConfig, "cannot read scan config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scan_config(buffer.str());
}

std::vector<ScanRecord> scan_family(const ScanTemplate& family, const ScanOptions& options) {
  const auto count = static_cast<std::size_t>(family.to - family.from + 1);
  std::vector<ScanRecord> records(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto work = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      ScanRecord& rec = records[i];
      rec.parameter = family.from + static_cast<Int>(i);
      try {
        const auto s1 = NumericalSemigroup::from_generators(instantiate(family.s1, rec.parameter));
        const auto s2 = NumericalSemigroup::from_generators(instantiate(family.s2, rec.parameter));
        const auto spec = validate_gluing(s1, s2, family.p(rec.parameter), family.q(rec.parameter));
        rec.report = verify_instance(spec, options.verify);
        if (!rec.report->violations().empty()) stop.store(true);
      } catch (const Error& e) {
        rec.skipped_reason = std::string(e.name()) + ": " + e.what();
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }

  for (const auto& rec : records) {
    if (rec.report && !rec.report->violations().empty()) {
      throw TheoremViolationError("instance " + family.parameter + " = " + std::to_string(rec.parameter) + ": " +
                                      rec.report->violations().front(),
                                  to_json(rec, family));
    }
  }
  return records;
}

Json to_json(const ScanRecord& record, const ScanTemplate& family) {
  Json out{{"schema", kSchemaVersion},
                     {"family", family.name},
                     {"parameter_name", family.parameter},
                     {"parameter", record.parameter}};
  if (record.report) {
    out["status"] = "verified";
    out["report"] = to_json(*record.report);
  } else {
    out["status"] = "skipped";
    out["reason"] = record.skipped_reason;
  }
  return out;
}

}  // namespace semiglue
