#include "momentkit/json_io.hpp"

namespace momentkit {

using nlohmann::json;

std::string dump_json(const json& value) { return value.dump(2) + "\n"; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; translate to line/column
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::invalid_input,
                "malformed JSON at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + e.what());
  }
}

namespace {

double require_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw Error(ErrorKind::invalid_input, what + " must be a number");
  return j.get<double>();
}

int require_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::invalid_input, what + " must be an integer");
  return j.get<int>();
}

const json& require_field(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::invalid_input, "missing field \"" + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json measure_to_json(const AtomicMeasure& mu) {
  json atoms = json::array();
  for (const Atom& a : mu.atoms()) {
    atoms.push_back({{"point", a.point}, {"weight", a.weight}});
  }
  return {{"num_vars", mu.num_vars()}, {"atoms", atoms}};
}

AtomicMeasure measure_from_json(const json& j) {
  const int s = require_int(require_field(j, "num_vars"), "num_vars");
  std::vector<Atom> atoms;
  for (const json& a : require_field(j, "atoms")) {
    Atom atom;
    for (const json& x : require_field(a, "point")) {
      atom.point.push_back(require_number(x, "point entry"));
    }
    atom.weight = require_number(require_field(a, "weight"), "weight");
    atoms.push_back(std::move(atom));
  }
  return AtomicMeasure(s, std::move(atoms));
}

json moments_to_json(const MomentSequence& L) {
  json moments = json::array();
  for (const auto& [e, v] : L.values()) {
    moments.push_back({{"exponent", e}, {"value", v}});
  }
  return {{"num_vars", L.num_vars()}, {"max_degree", L.max_degree()}, {"moments", moments}};
}

MomentSequence moments_from_json(const json& j) {
  const int s = require_int(require_field(j, "num_vars"), "num_vars");
  const int max_degree = require_int(require_field(j, "max_degree"), "max_degree");
  MomentSequence::ValueMap values;
  for (const json& entry : require_field(j, "moments")) {
    Exponent e;
    for (const json& k : require_field(entry, "exponent")) {
      e.push_back(require_int(k, "exponent entry"));
    }
    const double v = require_number(require_field(entry, "value"), "moment value");
    if (!values.emplace(std::move(e), v).second) {
      throw Error(ErrorKind::invalid_input, "duplicate exponent in moment data");
    }
  }
  return MomentSequence(s, max_degree, std::move(values));
}

json sequence_to_json(const Sequence1D& f) { return {{"values", f.values()}}; }

Sequence1D sequence_from_json(const json& j) {
  std::vector<double> values;
  for (const json& v : require_field(j, "values")) {
    values.push_back(require_number(v, "sequence value"));
  }
  return Sequence1D(std::move(values));
}

json recovered_to_json(const Recovered1D& recovered) {
  json atoms = json::array();
  for (const RecoveredAtom& a : recovered.atoms) {
    atoms.push_back({{"location", a.location}, {"weight", a.weight}});
  }
  return {{"atoms", atoms},
          {"residual", recovered.residual},
          {"rank", recovered.rank},
          {"vandermonde_condition", recovered.vandermonde_condition},
          {"ill_conditioned", recovered.ill_conditioned}};
}

json vnorm_to_json(const VnormEstimate& estimate) {
  json sequence = json::array();
  for (const std::optional<double>& v : estimate.sequence) {
    if (v.has_value()) {
      sequence.push_back(*v);
    } else {
      sequence.push_back(nullptr);
    }
  }
  return {{"kind", to_string(estimate.kind)},
          {"value", estimate.value},
          {"level", estimate.level},
          {"budget", estimate.budget},
          {"denominator_floor", estimate.denominator_floor},
          {"unbounded_suspect", estimate.unbounded_suspect},
          {"sequence", sequence}};
}

json certificate_to_json(const Certificate& certificate) {
  json coefficients = json::array();
  for (const CertificateEntry& entry : certificate.entries) {
    coefficients.push_back(
        {{"label", entry.label}, {"value", entry.value}, {"term", entry.term.str()}});
  }
  return {{"status", certificate.verified ? "verified" : "unverified"},
          {"kind", to_string(certificate.kind)},
          {"num_vars", certificate.num_vars},
          {"degree", certificate.degree},
          {"coefficients", coefficients},
          {"target", certificate.target.str()},
          {"residual", certificate.residual}};
}

Certificate certificate_from_json(const json& j) {
  const int num_vars = require_int(require_field(j, "num_vars"), "num_vars");
  Certificate cert{basis_kind_from_string(require_field(j, "kind").get<std::string>()),
                   num_vars,
                   require_int(require_field(j, "degree"), "degree"),
                   {},
                   Polynomial::parse(require_field(j, "target").get<std::string>(), num_vars),
                   0.0,
                   false};
  for (const json& entry : require_field(j, "coefficients")) {
    CertificateEntry e{require_field(entry, "label").get<std::string>(),
                       require_number(require_field(entry, "value"), "coefficient value"),
                       Polynomial::parse(require_field(entry, "term").get<std::string>(),
                                         cert.num_vars)};
    cert.entries.push_back(std::move(e));
  }
  cert.residual = require_number(require_field(j, "residual"), "residual");
  cert.verified = require_field(j, "status").get<std::string>() == "verified";
  return cert;
}

json psd_report_to_json(const PsdReport& report) {
  json out = {{"psd", report.psd},
              {"min_eigenvalue", report.min_eigenvalue},
              {"max_abs_eigenvalue", report.max_abs_eigenvalue}};
  if (report.witness.has_value()) {
    out["witness"] = report.witness->str();
    out["witness_value"] = report.witness_value;
  }
  return out;
}

json cone_report_to_json(const ConeCheckReport& report) {
  json violations = json::array();
  for (const ConeViolation& v : report.violations) {
    violations.push_back({{"p", v.p}, {"q", v.q}, {"value", v.value}});
  }
  return {{"ok", report.ok},
          {"bound", report.bound},
          {"budget", report.budget},
          {"terms_checked", report.terms_checked},
          {"violations", violations}};
}

json ball_report_to_json(const BallCheckReport& report) {
  json violations = json::array();
  for (const BallViolation& v : report.violations) {
    violations.push_back({{"label", v.label}, {"value", v.value}});
  }
  return {{"ok", report.ok},
          {"budget", report.budget},
          {"terms_checked", report.terms_checked},
          {"violations", violations}};
}

}  // namespace momentkit
