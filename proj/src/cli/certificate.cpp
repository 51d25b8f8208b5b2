#include "catalan/cli/certificate.hpp"

#include <json.hpp>
#include <sstream>

namespace catalan {

namespace {

constexpr std::string_view kHeader = "catalan-certificate 1";

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::size_t matching_paren(std::string_view text, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) return i;
  }
  throw UsageError("unbalanced parentheses in fraction: " + std::string(text));
}

std::string poly_text(const Polynomial& p, std::size_t var_index, const std::vector<std::string>& names) {
  return to_multi_poly(p, var_index).to_string(names);
}

CoefficientField prefix_field(const std::vector<std::string>& names, std::size_t count) {
  return CoefficientField(std::vector<std::string>(names.begin(), names.begin() + static_cast<long>(count)));
}

}  // namespace

std::string canonical_fraction(const RationalFunction& r, const std::vector<std::string>& names) {
  const auto [num, den] = to_fraction(r);
  return "(" + num.to_string(names) + ")/(" + den.to_string(names) + ")";
}

RationalFunction parse_fraction(std::string_view text, const std::vector<std::string>& names,
                                const std::string& variable) {
  const std::string t = trim(text);
  if (t.empty() || t.front() != '(') throw UsageError("fraction must look like (num)/(den): " + t);
  const std::size_t close = matching_paren(t, 0);
  const std::string rest = trim(std::string_view(t).substr(close + 1));
  if (rest.size() < 3 || rest.front() != '/') throw UsageError("fraction must look like (num)/(den): " + t);
  const CoefficientField field = prefix_field(names, names.size() - 1);
  const MultiPoly num = parse_polynomial(std::string_view(t).substr(1, close - 1), names);
  const MultiPoly den = parse_polynomial(std::string_view(rest).substr(1), names);
  if (den.is_zero()) throw UsageError("fraction with zero denominator");
  return RationalFunction(to_polynomial(num, variable, field), to_polynomial(den, variable, field));
}

CertificateRecord make_gosper_record(const std::string& identity, const TermExpression& term,
                                     const GosperCertificate& cert) {
  CertificateRecord rec;
  rec.identity = identity;
  rec.kind = "gosper";
  rec.term = serialize(term);
  rec.variable = term.variable;
  rec.parameters = term.parameters;
  rec.certificate = canonical_fraction(cert.r, term.symbols());
  reverify(rec);
  rec.claimed_verdict = rec.verified ? "verified" : "failed";
  return rec;
}

CertificateRecord make_zeilberger_record(const std::string& identity, const TermExpression& term,
                                         const TelescopedRecurrence& telescoped) {
  if (term.parameters.empty()) throw UsageError("zeilberger record needs a recurrence variable");
  CertificateRecord rec;
  rec.identity = identity;
  rec.kind = "zeilberger";
  rec.term = serialize(term);
  rec.variable = term.variable;
  rec.recurrence_variable = term.parameters.back();
  rec.parameters.assign(term.parameters.begin(), term.parameters.end() - 1);
  const auto symbols = term.symbols();
  rec.certificate = canonical_fraction(telescoped.certificate, symbols);
  const std::vector<std::string> coefficient_names(term.parameters.begin(), term.parameters.end());
  const std::size_t n_index = term.parameters.size() - 1;
  for (const auto& a : telescoped.coefficients) rec.recurrence.push_back(poly_text(a, n_index, coefficient_names));
  if (telescoped.inhomogeneous) rec.inhomogeneous = poly_text(*telescoped.inhomogeneous, n_index, coefficient_names);
  reverify(rec);
  rec.claimed_verdict = rec.verified ? "verified" : "failed";
  return rec;
}

void reverify(CertificateRecord& record) {
  record.verified = false;
  record.detail.clear();
  try {
    if (record.kind == "gosper") {
      const TermExpression term = parse_term(record.term, record.variable, record.parameters);
      const HyperTerm t = hyper_term_of(term);
      const GosperCertificate cert{parse_fraction(record.certificate, term.symbols(), record.variable)};
      record.verified = verify_gosper(t, cert);
      if (!record.verified) record.detail = "R(k+1) r(k) - R(k) != 1";
    } else if (record.kind == "zeilberger") {
      std::vector<std::string> params = record.parameters;
      params.push_back(record.recurrence_variable);
      const TermExpression term = parse_term(record.term, record.variable, params);
      const BivariateHyperTerm f = bivariate_term_of(term);
      const CoefficientField param_field(record.parameters);
      TelescopedRecurrence rec{{}, parse_fraction(record.certificate, term.symbols(), record.variable), std::nullopt};
      for (const auto& text : record.recurrence) {
        rec.coefficients.push_back(to_polynomial(parse_polynomial(text, params), record.recurrence_variable, param_field));
      }
      if (!record.inhomogeneous.empty()) {
        rec.inhomogeneous =
            to_polynomial(parse_polynomial(record.inhomogeneous, params), record.recurrence_variable, param_field);
      }
      const ZeilbergerCheck check = check_zeilberger(f, rec, default_replay_plan(f.param_count()));
      record.verified = check.ok();
      record.detail = check.detail;
    } else {
      record.detail = "unknown certificate kind '" + record.kind + "'";
    }
  } catch (const UsageError& e) {
    record.detail = e.what();
  } catch (const DomainError& e) {
    record.detail = e.what();
  }
}

std::string to_text(const CertificateRecord& r) {
  std::ostringstream out;
  out << kHeader << '\n';
  out << "identity: " << r.identity << '\n';
  out << "kind: " << r.kind << '\n';
  out << "term: " << r.term << '\n';
  out << "variable: " << r.variable << '\n';
  if (r.kind == "zeilberger") out << "recurrence-variable: " << r.recurrence_variable << '\n';
  out << "parameters: " << join(r.parameters, ", ") << '\n';
  out << "certificate: " << r.certificate << '\n';
  if (r.kind == "zeilberger") {
    out << "recurrence: " << join(r.recurrence, " ; ") << '\n';
    out << "inhomogeneous: " << r.inhomogeneous << '\n';
  }
  out << "verdict: " << (r.verified ? "verified" : "failed") << '\n';
  return out.str();
}

std::string to_json(const CertificateRecord& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["kind"] = r.kind;
  j["term"] = r.term;
  j["variable"] = r.variable;
  if (r.kind == "zeilberger") j["recurrence_variable"] = r.recurrence_variable;
  j["parameters"] = r.parameters;
  j["certificate"] = r.certificate;
  if (r.kind == "zeilberger") {
    j["recurrence"] = r.recurrence;
    j["inhomogeneous"] = r.inhomogeneous;
  }
  j["verdict"] = r.verified ? "verified" : "failed";
  return j.dump(2) + "\n";
}

CertificateRecord parse_certificate_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || trim(line) != kHeader) throw UsageError("missing certificate header");
  CertificateRecord r;
  bool has_term = false;
  bool has_certificate = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw UsageError("malformed certificate line: " + line);
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    if (key == "identity") r.identity = value;
    else if (key == "kind") r.kind = value;
    else if (key == "term") r.term = value, has_term = true;
    else if (key == "variable") r.variable = value;
    else if (key == "recurrence-variable") r.recurrence_variable = value;
    else if (key == "parameters") r.parameters = split(value, ',');
    else if (key == "certificate") r.certificate = value, has_certificate = true;
    else if (key == "recurrence") r.recurrence = split(value, ';');
    else if (key == "inhomogeneous") r.inhomogeneous = value;
    else if (key == "verdict") r.claimed_verdict = value;
    else throw UsageError("unknown certificate field: " + key);
  }
  if (!has_term || !has_certificate || r.variable.empty() || r.kind.empty()) {
    throw UsageError("certificate lacks a required field");
  }
  reverify(r);
  return r;
}

CertificateRecord parse_certificate_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    CertificateRecord r;
    r.identity = j.value("identity", "");
    r.kind = j.at("kind").get<std::string>();
    r.term = j.at("term").get<std::string>();
    r.variable = j.at("variable").get<std::string>();
    r.recurrence_variable = j.value("recurrence_variable", "");
    r.parameters = j.value("parameters", std::vector<std::string>{});
    r.certificate = j.at("certificate").get<std::string>();
    r.recurrence = j.value("recurrence", std::vector<std::string>{});
    r.inhomogeneous = j.value("inhomogeneous", "");
    r.claimed_verdict = j.value("verdict", "");
    reverify(r);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed certificate json: ") + e.what());
  }
}

CertificateRecord load_certificate(std::string_view text) {
  const std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_certificate_json(text);
  return parse_certificate_text(text);
}

}  // namespace catalan
