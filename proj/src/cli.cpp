#include "semiglue/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "semiglue/basis.hpp"
#include "semiglue/error.hpp"
#include "semiglue/gluing.hpp"
#include "semiglue/hilbert.hpp"
#include "semiglue/report.hpp"
#include "semiglue/scan.hpp"
#include "semiglue/tangent_cone.hpp"
#include "semiglue/toric.hpp"

namespace semiglue {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    std::string item;
    std::istringstream in(token);
    while (std::getline(in, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

std::vector<Int> parse_integers(const std::vector<std::string>& tokens, const std::string& what) {
  std::vector<Int> out;
  for (const auto& item : split_list(tokens)) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw UsageError(what + ": '" + item + "' is not an integer");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError(what + ": expected at least one integer");
  return out;
}

std::vector<std::size_t> parse_priority(const std::string& text, const VariableNames& names) {
  std::vector<std::size_t> out;
  for (const auto& name : split_list({text})) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw UsageError("--order: unknown variable '" + name + "'");
    out.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  if (out.size() != names.size()) throw UsageError("--order must list every variable exactly once");
  std::set<std::size_t> unique(out.begin(), out.end());
  if (unique.size() != out.size()) throw UsageError("--order lists a variable twice");
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "-";
  return v.dump();
}

// Human-readable rendering of a report: one `key: value` line per scalar,
// scalar lists joined on one line, nested objects indented.
void render(const Json& value, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : value.items()) {
    std::string label = key;
    std::replace(label.begin(), label.end(), '_', ' ');
    if (v.is_object()) {
      out << pad << label << ":\n";
      render(v, out, indent + 2);
    } else if (v.is_array()) {
      const bool scalars = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
      const bool polys = std::any_of(v.begin(), v.end(), [](const Json& x) {
        return x.is_string() && x.get<std::string>().find(' ') != std::string::npos;
      });
      if (scalars && !polys) {
        out << pad << label << ": ";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << "\n";
      } else {
        out << pad << label << ":" << (v.empty() ? " (none)" : "") << "\n";
        for (const auto& x : v) {
          if (x.is_primitive()) {
            out << pad << "  " << scalar_text(x) << "\n";
          } else {
            render(x, out, indent + 2);
          }
        }
      }
    } else {
      out << pad << label << ": " << scalar_text(v) << "\n";
    }
  }
}

void emit(const Json& doc, bool json, std::ostream& out) {
  if (json) {
    out << doc.dump(2) << "\n";
  } else {
    Json body = doc;
    body.erase("schema");
    render(body, out);
  }
}

Json header(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

VariableNames raw_variable_names(const std::vector<std::string>& polys) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string> seen;
  for (const auto& p : polys) {
    for (auto it = std::sregex_iterator(p.begin(), p.end(), ident); it != std::sregex_iterator(); ++it) {
      seen.insert(it->str());
    }
  }
  VariableNames names(seen.begin(), seen.end());
  // x before y, then numeric index order (x2 before x10).
  static const std::regex indexed("([A-Za-z_]+)([0-9]+)");
  std::stable_sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    std::smatch ma, mb;
    const bool ia = std::regex_match(a, ma, indexed);
    const bool ib = std::regex_match(b, mb, indexed);
    if (ia && ib && ma[1] == mb[1]) return std::stoll(ma[2]) < std::stoll(mb[2]);
    if (ia && ib) return ma[1].str() < mb[1].str();
    return a < b;
  });
  return names;
}

struct Flags {
  bool json = false;
};

struct GlueArgs {
  std::string s1;
  std::string s2;
  Int p = 0;
  Int q = 0;
};

GluingSpec spec_from(const GlueArgs& g) {
  const auto s1 = NumericalSemigroup::from_generators(parse_integers({g.s1}, "--s1"));
  const auto s2 = NumericalSemigroup::from_generators(parse_integers({g.s2}, "--s2"));
  return validate_gluing(s1, s2, g.p, g.q);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gluings of numerical semigroups, tangent cones and Hilbert functions of monomial curves",
               "semiglue"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--json", flags.json, "Emit machine-readable JSON");
  app.fallthrough();

  std::vector<std::string> gens;
  std::optional<Int> limit;
  std::string order_text;

  auto* semigroup_cmd = app.add_subcommand("semigroup", "Minimal generators, Frobenius number, Apery set, symmetry");
  semigroup_cmd->add_option("generators", gens, "Generators (space or comma separated)")->required();
  semigroup_cmd->add_option("--limit", limit, "Length of the order-filtration Hilbert function prefix");

  auto* ideal_cmd = app.add_subcommand("ideal", "Defining ideal of a monomial curve, or a basis of raw polynomials");
  bool raw = false;
  bool global = false;
  ideal_cmd->add_option("inputs", gens, "Generators, or polynomials with --raw")->required();
  ideal_cmd->add_flag("--raw", raw, "Treat inputs as polynomials and compute a standard basis");
  ideal_cmd->add_flag("--global", global, "With --raw: reduced Groebner basis under degrevlex");
  ideal_cmd->add_option("--order", order_text, "Variable priority, highest first (e.g. x2,x3,x1)");

  auto* cone_cmd = app.add_subcommand("tangent-cone", "Standard basis, tangent cone and Cohen-Macaulay test");
  cone_cmd->add_option("generators", gens, "Generators")->required();
  cone_cmd->add_option("--order", order_text, "Variable priority, highest first; smallest generator last");

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of the local ring of a monomial curve");
  hilbert_cmd->add_option("generators", gens, "Generators")->required();
  hilbert_cmd->add_option("--limit", limit, "Last index of the printed Hilbert function");

  GlueArgs glue_args;
  auto add_glue_options = [&](CLI::App* cmd) {
    cmd->add_option("--s1", glue_args.s1, "Generators of S1")->required();
    cmd->add_option("--s2", glue_args.s2, "Generators of S2")->required();
    cmd->add_option("--p", glue_args.p, "Element of S1")->required();
    cmd->add_option("--q", glue_args.q, "Element of S2")->required();
  };
  auto* glue_cmd = app.add_subcommand("glue", "Validate a gluing and build the glued curve and ideal");
  add_glue_options(glue_cmd);
  auto* verify_cmd = app.add_subcommand("verify", "Check both gluing theorems on one instance");
  add_glue_options(verify_cmd);
  verify_cmd->add_option("--limit", limit, "Last index of the Hilbert functions");

  std::string config_path;
  std::string output_path;
  unsigned jobs = 1;
  auto* scan_cmd = app.add_subcommand("scan", "Verify a parameterized family of gluings");
  scan_cmd->add_option("--config", config_path, "Scan configuration (YAML)")->required();
  scan_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  scan_cmd->add_option("--output", output_path, "JSON Lines output (overrides the config)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (semigroup_cmd->parsed()) {
      const auto s = NumericalSemigroup::from_generators(parse_integers(gens, "generators"));
      Json doc = header("semigroup");
      doc.update(to_json(s));
      const Int n = limit.value_or(10);
      if (n < 0) throw UsageError("--limit must be non-negative");
      doc["hilbert_function"] = order_filtration_hilbert(s, n);
      emit(doc, flags.json, out);
    } else if (ideal_cmd->parsed() && raw) {
      const VariableNames names = raw_variable_names(gens);
      if (names.empty()) throw UsageError("--raw needs at least one variable");
      std::vector<std::size_t> priority =
          order_text.empty() ? MonomialOrder::natural_priority(names.size()) : parse_priority(order_text, names);
      auto order = make_order(global ? MonomialOrder::degrevlex(priority) : MonomialOrder::negdegrevlex(priority));
      std::vector<Polynomial> polys;
      for (const auto& text : gens) polys.push_back(parse_polynomial(text, names, order));
      const BasisResult basis = global ? buchberger(polys, order) : standard_basis(polys, order);
      Json doc = header("ideal");
      doc["mode"] = "raw";
      doc["variables"] = names;
      doc["order"] = global ? "degrevlex" : "negdegrevlex";
      Json prio = Json::array();
      for (std::size_t slot : priority) prio.push_back(names[slot]);
      doc["priority"] = prio;
      doc["input"] = to_json(polys, names);
      doc["basis"] = to_json(basis.elements, names);
      doc["leading_monomials"] = to_json(leading_ideal(basis), names);
      emit(doc, flags.json, out);
    } else if (ideal_cmd->parsed()) {
      if (!order_text.empty() || global) throw UsageError("--order and --global apply to --raw only");
      const auto curve = MonomialCurve::from_generators(parse_integers(gens, "generators"));
      const auto ideal = defining_ideal(curve);
      Json doc = header("ideal");
      doc["generators"] = curve.weights();
      doc["variables"] = curve.names();
      doc["defining_ideal"] = to_json(ideal, curve.names());
      doc["minimal_generator_count"] = minimal_generator_count(ideal);
      doc["complete_intersection"] = minimal_generator_count(ideal) + 1 == curve.nvars();
      emit(doc, flags.json, out);
    } else if (cone_cmd->parsed()) {
      const auto curve = MonomialCurve::from_generators(parse_integers(gens, "generators"));
      std::optional<std::vector<std::size_t>> priority;
      if (!order_text.empty()) priority = parse_priority(order_text, curve.names());
      Json doc = header("tangent-cone");
      doc.update(to_json(tangent_cone(curve, priority)));
      emit(doc, flags.json, out);
    } else if (hilbert_cmd->parsed()) {
      const auto curve = MonomialCurve::from_generators(parse_integers(gens, "generators"));
      if (limit && *limit < 0) throw UsageError("--limit must be non-negative");
      const HilbertData data = local_hilbert_function(curve, limit);
      const auto oracle = order_filtration_hilbert(curve.semigroup(), static_cast<Int>(data.hf_prefix.size()) - 1);
      Json doc = header("hilbert");
      doc["generators"] = curve.weights();
      doc.update(to_json(data));
      doc["oracle_agreement"] = oracle == data.hf_prefix;
      emit(doc, flags.json, out);
    } else if (glue_cmd->parsed()) {
      const GluingSpec spec = spec_from(glue_args);
      const MonomialCurve curve = glued_curve(spec);
      Json doc = header("glue");
      doc["spec"] = to_json(spec);
      doc["glued_generators"] = curve.weights();
      doc["variables"] = curve.names();
      doc["glued_ideal"] = to_json(glued_ideal(spec), curve.names());
      const auto& w = curve.weights();
      doc["smallest_generator_rule"] = std::all_of(w.begin() + 1, w.end(), [&](Int x) { return w.front() < x; });
      emit(doc, flags.json, out);
    } else if (verify_cmd->parsed()) {
      const GluingSpec spec = spec_from(glue_args);
      VerifyOptions options;
      if (limit) {
        if (*limit < 0) throw UsageError("--limit must be non-negative");
        options.hf_limit = *limit;
      }
      Json doc = header("verify");
      doc.update(to_json(verify_instance(spec, options)));
      emit(doc, flags.json, out);
    } else if (scan_cmd->parsed()) {
      ScanTemplate family = load_scan_config(config_path);
      if (!output_path.empty()) family.output = output_path;
      ScanOptions options;
      options.jobs = jobs;
      std::vector<ScanRecord> records;
      try {
        records = scan_family(family, options);
      } catch (const TheoremViolationError& e) {
        const std::string bundle_path = family.output.value_or("scan") + ".repro.json";
        std::ofstream bundle(bundle_path);
        bundle << e.bundle().dump(2) << "\n";
        err << "error: " << e.name() << ": " << e.what() << " (reproduction bundle: " << bundle_path << ")\n";
        return 1;
      }
      std::ofstream file;
      if (family.output) {
        file.open(*family.output);
        if (!file) throw Error(Errc::InvalidConfig, "cannot write '" + *family.output + "'");
      }
      std::size_t verified = 0;
      std::size_t candidates = 0;
      for (const auto& rec : records) {
        const Json line = to_json(rec, family);
        if (file.is_open()) file << line.dump() << "\n";
        if (flags.json && !file.is_open()) out << line.dump() << "\n";
        if (!rec.report) {
          if (!flags.json) out << family.parameter << " = " << rec.parameter << ": skipped (" << rec.skipped_reason << ")\n";
          continue;
        }
        ++verified;
        const auto& r = *rec.report;
        if (r.rossi_candidate()) ++candidates;
        if (!flags.json) {
          out << family.parameter << " = " << rec.parameter << ": C(";
          for (std::size_t i = 0; i < r.glued_generators.size(); ++i) out << (i ? ", " : "") << r.glued_generators[i];
          out << ") nice=" << (r.spec.nice ? "yes" : "no") << " cm=" << (r.glued_cone.is_cohen_macaulay ? "yes" : "no")
              << " hf=" << (r.glued_hilbert.nondecreasing ? "nondecreasing" : "DECREASING")
              << " gorenstein=" << (r.gorenstein ? "yes" : "no") << (r.rossi_candidate() ? " ROSSI-CANDIDATE" : "")
              << "\n";
        }
      }
      if (!flags.json) {
        out << "verified " << verified << " of " << records.size() << " instances, " << candidates
            << " counterexample candidates\n";
      } else if (file.is_open()) {
        Json summary = header("scan");
        summary["output"] = *family.output;
        summary["instances"] = records.size();
        summary["verified"] = verified;
        summary["counterexample_candidates"] = candidates;
        out << summary.dump(2) << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace semiglue
