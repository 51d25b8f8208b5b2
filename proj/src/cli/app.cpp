#include "catalan/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "catalan/cli/certificate.hpp"
#include "catalan/sweeps.hpp"
#include "catalan/trees.hpp"

namespace catalan {

namespace {

using Json = nlohmann::ordered_json;

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const long a = std::stol(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const long b = std::stol(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("expected a range such as 1..200, got '" + text + "'");
  }
}

// Result of a batch of checks, in parameter order.
struct Outcome {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<std::string> exceptions;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;

  bool ok() const { return !counterexample && passed == checked; }
};

Outcome from_summary(const std::string& name, const SweepSummary& s) {
  Outcome o{name, s.checked, s.passed, {}, std::nullopt, {}};
  for (const auto& e : s.exceptions) o.exceptions.push_back(e.describe() + " (documented exception)");
  if (s.first_counterexample) o.counterexample = s.first_counterexample->describe();
  return o;
}

int emit(const Outcome& o, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j;
    j["check"] = o.name;
    j["status"] = o.ok() ? "OK" : "FAIL";
    j["checked"] = o.checked;
    j["passed"] = o.passed;
    j["exceptions"] = o.exceptions;
    if (o.counterexample) j["counterexample"] = *o.counterexample;
    if (!o.notes.empty()) j["notes"] = o.notes;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& n : o.notes) out << n << '\n';
    for (const auto& e : o.exceptions) out << "exception " << e << '\n';
    if (o.counterexample) out << "counterexample " << *o.counterexample << '\n';
    out << (o.ok() ? "OK " : "FAIL ") << o.passed << '/' << o.checked << '\n';
  }
  return o.ok() ? kExitPass : kExitCounterexample;
}

Outcome f_induction(Range l_range, Range m_range) {
  Outcome o{"f-induction", 0, 0, {}, std::nullopt, {}};
  for (long l = l_range.lo; l <= l_range.hi; ++l) {
    // f(m) is defined while binomial(l-m-1, m) != 0, i.e. for 2m+1 <= l.
    const long top = std::min(m_range.hi, (l - 1) / 2);
    if (top < 1) continue;
    ++o.checked;
    Rational predicted = 1;
    std::optional<std::string> failure;
    if (f_value(l, 1) != 1) failure = "f-induction l=" + std::to_string(l) + ": f(1)=" + f_value(l, 1).get_str();
    for (long m = 1; m < top && !failure; ++m) {
      // -(m+1) f(m) + (m+2) f(m+1) = 1
      predicted = (Rational(1) + Rational(m + 1) * predicted) / Rational(m + 2);
      const Rational direct = f_value(l, m + 1);
      if (predicted != direct || direct != 1) {
        failure = "f-induction l=" + std::to_string(l) + " m=" + std::to_string(m + 1) +
                  ": predicted=" + predicted.get_str() + " direct=" + direct.get_str();
      }
    }
    if (failure) {
      if (!o.counterexample) o.counterexample = failure;
    } else {
      ++o.passed;
    }
  }
  return o;
}

std::string recurrence_line(const std::vector<std::string>& coefficients, const std::string& n,
                            const std::string& inhomogeneous) {
  std::string out;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    if (j) out += " + ";
    out += "(" + coefficients[j] + ")*f(" + n + (j ? " + " + std::to_string(j) : "") + ")";
  }
  return out + " = " + (inhomogeneous.empty() ? "?" : inhomogeneous);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string render(const CertificateRecord& r, const std::string& format) {
  return format == "json" ? to_json(r) : to_text(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks, involutions and summation certificates for Catalan identities", "catalan"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  bool serial = false;
  app.add_flag("--serial", serial, "Run sweeps on one thread");

  auto* verify = app.add_subcommand("verify", "Exact range sweeps of the identities");
  std::string which;
  verify->add_option("identity", which)
      ->required()
      ->check(CLI::IsMember({"identity1", "identity2prime", "identity3", "recurrenceA", "f-induction"}));
  std::string s_range = "1..200";
  std::optional<std::string> l_range;
  std::optional<std::string> m_range;
  std::string offset_range = "0..40";
  verify->add_option("--s", s_range, "Range of s");
  verify->add_option("--l", l_range, "Range of l");
  verify->add_option("--m", m_range, "Range of m");
  verify->add_option("--l-offset", offset_range, "Range of l - m");

  auto* involution = app.add_subcommand("involution", "Sign-reversing involutions on creatures");
  involution->require_subcommand(1);
  involution->fallthrough();
  auto* census = involution->add_subcommand("census", "Tally an involution over all creatures");
  auto* trace = involution->add_subcommand("trace", "Print the orbit of one creature");
  std::optional<long> inv_s;
  std::optional<long> inv_l;
  std::optional<long> inv_m;
  std::string creature;
  std::string shape;
  std::string word;
  for (auto* sub : {census, trace}) {
    sub->add_option("--s", inv_s, "Weight minus one (first identity)");
    sub->add_option("--l", inv_l, "l (third identity)");
    sub->add_option("--m", inv_m, "m (third identity)");
  }
  trace->add_option("--creature", creature, "Labeled tree such as (1,(1,1))");
  trace->add_option("--shape", shape, "Tree shape such as (·,·)");
  trace->add_option("--word", word, "Word over {1,2}");

  auto* gosper_cmd = app.add_subcommand("gosper", "Indefinite summation certificate");
  std::string expr;
  std::string var = "k";
  std::vector<std::string> params;
  std::string identity_name;
  std::optional<std::string> upper;
  long lower = 0;
  std::optional<std::string> check_range;
  std::optional<std::string> out_path;
  gosper_cmd->add_option("expr", expr, "Summand")->required();
  gosper_cmd->add_option("--var", var, "Summation variable");
  gosper_cmd->add_option("--params", params, "Parameters")->delimiter(',');
  gosper_cmd->add_option("--identity", identity_name, "Identity name stored in the certificate");
  gosper_cmd->add_option("--upper", upper, "Parameter used as the upper limit of a definite sum");
  gosper_cmd->add_option("--lower", lower, "Lower limit of the definite sum");
  gosper_cmd->add_option("--check", check_range, "Values of the upper limit to telescope");
  gosper_cmd->add_option("--out", out_path, "Write the certificate here");

  auto* zeil_cmd = app.add_subcommand("zeilberger", "Creative telescoping recurrence");
  std::string sumvar = "k";
  std::string recvar = "n";
  long max_order = 3;
  zeil_cmd->add_option("expr", expr, "Summand")->required();
  zeil_cmd->add_option("--sumvar", sumvar, "Summation variable");
  zeil_cmd->add_option("--recvar", recvar, "Recurrence variable");
  zeil_cmd->add_option("--params", params, "Other parameters")->delimiter(',');
  zeil_cmd->add_option("--max-order", max_order, "Largest order to try")->check(CLI::Range(1, 8));
  zeil_cmd->add_option("--identity", identity_name, "Identity name stored in the certificate");
  zeil_cmd->add_option("--out", out_path, "Write the certificate here");

  auto* cert_cmd = app.add_subcommand("certificate", "Certificate files");
  cert_cmd->require_subcommand(1);
  cert_cmd->fallthrough();
  auto* cert_check = cert_cmd->add_subcommand("check", "Recompute the verdict of a certificate file");
  std::string cert_path;
  cert_check->add_option("file", cert_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Execution execution = serial ? Execution::Serial : Execution::Parallel;
  try {
    if (*verify) {
      if (which == "identity1") {
        return emit(from_summary(which, summarize(sweep_identity1(parse_range(s_range), execution))), format, out);
      }
      if (which == "identity2prime" || which == "recurrenceA") {
        const Range l = parse_range(l_range.value_or("1..12"));
        const Range m = parse_range(m_range.value_or("1..12"));
        const auto reports =
            which == "identity2prime" ? sweep_identity2prime(l, m, execution) : sweep_recurrence_a(l, m, execution);
        return emit(from_summary(which, summarize(reports)), format, out);
      }
      if (which == "identity3") {
        const Range m = parse_range(m_range.value_or("0..40"));
        return emit(from_summary(which, summarize(sweep_identity3(m, parse_range(offset_range), execution))),
                    format, out);
      }
      return emit(f_induction(parse_range(l_range.value_or("3..60")), parse_range(m_range.value_or("1..12"))),
                  format, out);
    }

    if (*census) {
      Outcome o{"census", 1, 0, {}, std::nullopt, {}};
      Census c;
      bool ok = false;
      if (inv_s) {
        c = census_identity1(*inv_s, execution);
        Integer expected = 0;
        for (long i = 0; i <= *inv_s; ++i) expected += catalan_number(i) * binomial_gen(i + 1, *inv_s - i);
        ok = c.fixed_points == 0 && c.odd_leaves == c.even_leaves && Integer(c.total) == expected;
        o.name = "census s=" + std::to_string(*inv_s);
        o.notes.push_back("expected total " + expected.get_str());
      } else if (inv_l && inv_m) {
        c = census_identity3(*inv_l, *inv_m, execution);
        const long survivors = survivor_count(*inv_l, *inv_m);
        ok = c.fixed_points_are_survivors && static_cast<long>(c.fixed_points) == survivors &&
             Integer(survivors) == binomial_gen(*inv_l - *inv_m - 1, *inv_m) &&
             Integer(c.signed_count()) == lhs_identity3(*inv_l, *inv_m);
        o.name = "census l=" + std::to_string(*inv_l) + " m=" + std::to_string(*inv_m);
        o.notes.push_back("survivors " + std::to_string(survivors));
      } else {
        throw UsageError("census needs --s, or --l and --m");
      }
      ok = ok && c.weight_preserving && c.flips_parity && c.involutive;
      auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
      o.notes.insert(o.notes.begin(),
                     {"total " + std::to_string(c.total), "odd-leaves " + std::to_string(c.odd_leaves),
                      "even-leaves " + std::to_string(c.even_leaves),
                      "fixed-points " + std::to_string(c.fixed_points),
                      "weight-preserving " + yes(c.weight_preserving), "flips-parity " + yes(c.flips_parity),
                      "involutive " + yes(c.involutive)});
      if (ok) o.passed = 1;
      else o.counterexample = o.name;
      return emit(o, format, out);
    }

    if (*trace) {
      std::vector<std::string> lines;
      if (inv_s) {
        if (creature.empty()) throw UsageError("trace --s needs --creature");
        const LabeledTree start = LabeledTree::parse(creature);
        if (start.weight() != *inv_s + 1) {
          throw UsageError("creature weight " + std::to_string(start.weight()) + " does not equal s + 1");
        }
        lines = trace_orbit1(start);
      } else if (inv_l && inv_m) {
        if (shape.empty() || word.empty()) throw UsageError("pair trace needs --shape and --word");
        lines = trace_orbit3(CreaturePair(BinaryTree::parse(shape), parse_word(word), *inv_l, *inv_m));
      } else {
        throw UsageError("trace needs --s, or --l and --m");
      }
      if (format == "json") {
        out << Json{{"orbit", lines}}.dump(2) << '\n';
      } else {
        for (const auto& line : lines) out << line << '\n';
      }
      return kExitPass;
    }

    if (*gosper_cmd) {
      const TermExpression term = parse_term(expr, var, params);
      const HyperTerm t = hyper_term_of(term);
      const auto result = gosper(t);
      if (const auto* no = std::get_if<NotGosperSummable>(&result)) {
        if (format == "json") {
          out << Json{{"term", serialize(term)}, {"summable", false}, {"stage", no->stage}}.dump(2) << '\n';
        } else {
          out << "term: " << serialize(term) << '\n' << "NOT GOSPER-SUMMABLE: " << no->stage << '\n';
        }
        return kExitCounterexample;
      }
      const auto& cert = std::get<GosperCertificate>(result);
      const CertificateRecord record = make_gosper_record(identity_name.empty() ? "adhoc" : identity_name, term, cert);
      Outcome o{"gosper", 1, record.verified ? 1u : 0u, {}, std::nullopt, {}};
      if (!record.verified) o.counterexample = "certificate fails verification";
      if (check_range) {
        if (!upper) throw UsageError("--check needs --upper");
        const DefiniteSum sum = telescope_definite(t, cert, lower, *upper);
        const Range r = parse_range(*check_range);
        const std::size_t upper_index = *t.field.index_of(*upper);
        std::vector<Integer> point(params.size(), Integer(0));
        std::vector<std::string> values;
        for (long v = r.lo; v <= r.hi; ++v) {
          point[upper_index] = v;
          const TelescopedValue tv = sum.evaluate(point);
          ++o.checked;
          const std::string label = *upper + "=" + std::to_string(v);
          if (!tv.agrees()) {
            if (!o.counterexample) {
              o.counterexample = label + ": telescoped=" + tv.value.get_str() + " direct=" + tv.direct.get_str();
            }
          } else if (tv.endpoint_singular) {
            o.exceptions.push_back(label + ": sum=" + tv.direct.get_str() + " (endpoint-singular; direct summation)");
            ++o.passed;
          } else {
            values.push_back(tv.value.get_str());
            ++o.passed;
          }
        }
        const bool constant = !values.empty() && std::all_of(values.begin(), values.end(),
                                                             [&](const auto& x) { return x == values.front(); });
        if (constant) o.notes.push_back("telescoped value " + values.front() + " at every regular point");
      }
      if (out_path) write_file(*out_path, render(record, format));
      if (format == "json") {
        out << to_json(record);
        emit(o, format, out);
      } else {
        out << "term: " << record.term << '\n';
        out << "ratio: " << t.ratio.to_string() << '\n';
        out << "certificate: " << record.certificate << '\n';
        out << "verified: " << (record.verified ? "yes" : "no") << '\n';
        emit(o, format, out);
      }
      return o.ok() ? kExitPass : kExitCounterexample;
    }

    if (*zeil_cmd) {
      std::vector<std::string> all = params;
      all.push_back(recvar);
      const TermExpression term = parse_term(expr, sumvar, all);
      const BivariateHyperTerm f = bivariate_term_of(term);
      const auto result = zeilberger(f, max_order);
      if (const auto* no = std::get_if<NoRecurrenceFound>(&result)) {
        if (format == "json") {
          out << Json{{"term", serialize(term)}, {"found", false}, {"attempts", no->attempts}}.dump(2) << '\n';
        } else {
          out << "NO RECURRENCE up to order " << no->max_order << '\n';
          for (const auto& a : no->attempts) out << "  " << a << '\n';
        }
        return kExitCounterexample;
      }
      const auto& rec = std::get<TelescopedRecurrence>(result);
      const CertificateRecord record =
          make_zeilberger_record(identity_name.empty() ? "adhoc" : identity_name, term, rec);
      if (out_path) write_file(*out_path, render(record, format));
      if (format == "json") {
        out << to_json(record);
      } else {
        out << "term: " << record.term << '\n';
        out << "order: " << rec.order() << '\n';
        out << "recurrence: " << recurrence_line(record.recurrence, recvar, record.inhomogeneous) << '\n';
        out << "certificate: " << record.certificate << '\n';
        out << "verified: " << (record.verified ? "yes" : "no") << '\n';
      }
      return record.verified ? kExitPass : kExitCounterexample;
    }

    if (*cert_check) {
      const CertificateRecord record = load_certificate(read_file(cert_path));
      if (format == "json") {
        out << Json{{"identity", record.identity},
                    {"kind", record.kind},
                    {"claimed", record.claimed_verdict},
                    {"verdict", record.verified ? "verified" : "failed"},
                    {"detail", record.detail}}
                   .dump(2)
            << '\n';
      } else {
        out << "identity: " << record.identity << '\n';
        out << "claimed: " << record.claimed_verdict << '\n';
        out << "verdict: " << (record.verified ? "verified" : "failed") << '\n';
        if (!record.detail.empty()) out << "detail: " << record.detail << '\n';
      }
      return record.verified ? kExitPass : kExitCounterexample;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace catalan
