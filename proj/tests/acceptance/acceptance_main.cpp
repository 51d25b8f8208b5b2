// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "catalan/cli/term_expression.hpp"
#include "catalan/summation/gosper.hpp"
#include "catalan/summation/zeilberger.hpp"
#include "catalan/sweeps.hpp"
#include "catalan/trees.hpp"

using namespace catalan;

namespace {

const char* const kAlternatingCatalan = "(-1)^i * binomial(2*i,i)/(i+1) * binomial(i+1, s-i)";
const char* const kNormalizedCatalanBinomial =
    "(-1)**k*binomial(2*k,k)/(k+1)*binomial(l-m+k,m-k)/binomial(l-m-1,m)";

struct Verdict {
  bool pass;
  std::string detail;
};

bool all_equal(const std::vector<IdentityReport>& reports, std::string& detail) {
  const SweepSummary s = summarize(reports);
  detail = std::to_string(s.passed) + "/" + std::to_string(s.checked) + " cells";
  if (s.first_counterexample) detail += "; first counterexample " + s.first_counterexample->describe();
  return !s.first_counterexample && s.passed == s.checked;
}

Verdict criterion1() {
  const auto reports = sweep_identity1({0, 500}, Execution::Parallel);
  std::string detail;
  bool ok = all_equal(reports, detail);
  const auto& zero = reports.front();
  ok = ok && zero.documented_exception && zero.lhs == 1;
  for (std::size_t i = 1; i < reports.size(); ++i) ok = ok && reports[i].lhs == 0 && !reports[i].documented_exception;
  return {ok, detail + "; s=0 gives " + zero.lhs.get_str() + " (documented exception)"};
}

Verdict criterion2() {
  std::string detail;
  const bool ok = all_equal(sweep_identity2prime({1, 18}, {1, 18}, Execution::Parallel), detail);
  return {ok, detail + " with 1 <= m <= l <= 18"};
}

Verdict criterion3() {
  std::string detail;
  const bool ok = all_equal(sweep_recurrence_a({1, 18}, {1, 18}, Execution::Parallel), detail);
  return {ok, detail + ", recurrence table against brute force"};
}

Verdict criterion4() {
  const auto reports = sweep_identity3({0, 60}, {0, 60}, Execution::Parallel);
  std::string detail;
  bool ok = all_equal(reports, detail);
  long diagonal = 0;
  for (const auto& r : reports) {
    const long l = r.parameters[0].second;
    const long m = r.parameters[1].second;
    if (l == m) {
      ok = ok && r.rhs == (m % 2 == 0 ? 1 : -1);
      ++diagonal;
    }
  }
  ok = ok && diagonal == 61;
  return {ok, detail + "; " + std::to_string(diagonal) + " cells with l = m give (-1)^m"};
}

Verdict criterion5() {
  bool ok = true;
  std::string detail;
  for (long s = 1; s <= 10; ++s) {
    const Census c = census_identity1(s, Execution::Parallel);
    Integer expected = 0;
    for (long i = 0; i <= s; ++i) expected += catalan_number(i) * binomial_gen(i + 1, s - i);
    const bool cell = c.fixed_points == 0 && c.weight_preserving && c.flips_parity && c.involutive &&
                      c.odd_leaves == c.even_leaves && Integer(c.total) == expected;
    if (!cell && detail.empty()) detail = "fails at s=" + std::to_string(s);
    ok = ok && cell;
  }
  return {ok, detail.empty() ? "s = 1..10: fixed-point-free, weight-preserving, parity-flipping involution" : detail};
}

Verdict criterion6() {
  bool ok = true;
  std::string detail;
  int cells = 0;
  for (long m = 0; m <= 6; ++m) {
    for (long l = m + 1; l <= m + 6; ++l) {
      const Census c = census_identity3(l, m, Execution::Parallel);
      const bool cell = c.fixed_points_are_survivors && Integer(c.fixed_points) == binomial_gen(l - m - 1, m) &&
                        Integer(c.signed_count()) == lhs_identity3(l, m) &&
                        Integer(c.signed_count()) == rhs_identity3(l, m) && c.weight_preserving &&
                        c.flips_parity && c.involutive;
      if (!cell && detail.empty()) detail = "fails at l=" + std::to_string(l) + " m=" + std::to_string(m);
      ok = ok && cell;
      ++cells;
    }
  }
  return {ok, detail.empty() ? std::to_string(cells) + " cells: survivors are (leaf, 1w), count and sign match"
                             : detail};
}

Verdict criterion7() {
  const TermExpression expr = parse_term(kAlternatingCatalan, "i", {"s"});
  const HyperTerm t = hyper_term_of(expr);
  const auto result = gosper(t);
  if (!std::holds_alternative<GosperCertificate>(result)) {
    return {false, "gosper failed: " + std::get<NotGosperSummable>(result).stage};
  }
  const auto& cert = std::get<GosperCertificate>(result);
  if (!verify_gosper(t, cert)) return {false, "certificate fails the rational identity"};
  const DefiniteSum sum = telescope_definite(t, cert, 0, "s");
  for (long s = 1; s <= 50; ++s) {
    const Integer p[] = {s};
    const TelescopedValue v = sum.evaluate(p);
    if (v.value != 0 || !v.agrees() || v.endpoint_singular) {
      return {false, "telescoping at s=" + std::to_string(s) + " gives " + v.value.get_str()};
    }
  }
  return {true, "R(i) = " + cert.r.to_string() + "; telescoped sum is 0 for s = 1..50"};
}

Verdict criterion8() {
  const auto start = std::chrono::steady_clock::now();
  const TermExpression expr = parse_term(kNormalizedCatalanBinomial, "k", {"l", "m"});
  const BivariateHyperTerm f = bivariate_term_of(expr);
  const auto result = zeilberger(f, 2);
  if (!std::holds_alternative<TelescopedRecurrence>(result)) return {false, "no recurrence found"};
  const auto& rec = std::get<TelescopedRecurrence>(result);
  if (rec.order() != 1 || rec.coefficients[0].degree() != 1 || rec.coefficients[1].degree() != 1 ||
      !rec.inhomogeneous || rec.inhomogeneous->degree() != 0) {
    return {false, "unexpected recurrence shape"};
  }
  for (long l : {7L, 19L, 64L}) {
    for (long m = 0; m <= 3; ++m) {
      const Integer p[] = {l};
      if (*evaluate_coefficient(rec.coefficients[0], m, p) != Rational(-(m + 1)) ||
          *evaluate_coefficient(rec.coefficients[1], m, p) != Rational(m + 2) ||
          *evaluate_coefficient(*rec.inhomogeneous, m, p) != Rational(1)) {
        return {false, "coefficients differ from (-(m+1), m+2) with right side 1"};
      }
    }
  }
  if (!verify_zeilberger(f, rec)) return {false, "certificate fails verification"};
  // f(1) = 1, then f(m+1) = (1 - a_0(m) f(m)) / a_1(m) against direct sums.
  for (long l : {25L, 26L, 31L, 40L, 57L, 101L}) {
    const Integer params[] = {l};
    if (natural_sum(f, 1, params) != Rational(1)) return {false, "f(1) != 1 at l=" + std::to_string(l)};
    Rational predicted = 1;
    for (long m = 1; m < 12 && 2 * (m + 1) + 1 <= l; ++m) {
      predicted = (Rational(1) - *evaluate_coefficient(rec.coefficients[0], m, params) * predicted) /
                  *evaluate_coefficient(rec.coefficients[1], m, params);
      const auto direct = natural_sum(f, m + 1, params);
      if (!direct || *direct != predicted || predicted != 1) {
        return {false, "induction breaks at l=" + std::to_string(l) + " m=" + std::to_string(m + 1)};
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  return {seconds <= 10.0, "-(m+1) f(m) + (m+2) f(m+1) = 1, induction f(m) = 1 for m <= 12; " + std::string(timing)};
}

Verdict criterion9() {
  struct Src {
    const char* text;
    const char* var;
    std::vector<std::string> params;
  };
  const std::vector<Src> summable = {
      {"k*factorial(k)", "k", {}},
      {"k", "k", {}},
      {"k^3", "k", {}},
      {"2^k", "k", {}},
      {"k*2^k", "k", {}},
      {"1/(k*(k+1))", "k", {}},
      {"1/((k+1)*(k+2)*(k+3))", "k", {}},
      {"binomial(2*k,k)/4^k", "k", {}},
      {"(-1)^k*binomial(n,k)", "k", {"n"}},
      {"binomial(k,m)", "k", {"m"}},
      {"k/factorial(k+1)", "k", {}},
      {kAlternatingCatalan, "i", {"s"}},
  };
  const std::vector<Src> non_summable = {
      {"1/k", "k", {}}, {"factorial(k)", "k", {}}, {"binomial(n,k)", "k", {"n"}}, {"catalan(k)", "k", {}}};
  const std::vector<Src> recurrences = {
      {"binomial(n,k)", "k", {"n"}},
      {"1", "k", {"n"}},
      {"binomial(n,k)^2", "k", {"n"}},
      {"k*binomial(n,k)", "k", {"n"}},
      {kNormalizedCatalanBinomial, "k", {"l", "m"}},
  };
  for (const auto& s : summable) {
    const HyperTerm t = hyper_term_of(parse_term(s.text, s.var, s.params));
    const auto r = gosper(t);
    if (!std::holds_alternative<GosperCertificate>(r)) return {false, std::string("not summable: ") + s.text};
    if (!verify_gosper(t, std::get<GosperCertificate>(r))) return {false, std::string("bad certificate: ") + s.text};
  }
  for (const auto& s : non_summable) {
    const auto r = gosper(hyper_term_of(parse_term(s.text, s.var, s.params)));
    if (!std::holds_alternative<NotGosperSummable>(r) || std::get<NotGosperSummable>(r).stage.empty()) {
      return {false, std::string("expected a staged rejection: ") + s.text};
    }
  }
  for (const auto& s : recurrences) {
    const BivariateHyperTerm f = bivariate_term_of(parse_term(s.text, s.var, s.params));
    const auto r = zeilberger(f, 3);
    if (!std::holds_alternative<TelescopedRecurrence>(r)) return {false, std::string("no recurrence: ") + s.text};
    if (!verify_zeilberger(f, std::get<TelescopedRecurrence>(r))) {
      return {false, std::string("recurrence fails verification: ") + s.text};
    }
  }
  return {true, std::to_string(summable.size()) + " summable, " + std::to_string(non_summable.size()) +
                    " non-summable, " + std::to_string(recurrences.size()) + " recurrence fixtures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"alternating Catalan sum vanishes for s = 1..500", criterion1},
      {"composition sum equals (-1)^m C_{m-1} for 1 <= m <= l <= 18", criterion2},
      {"recurrence for A(l,m) reproduces the brute-force table", criterion3},
      {"Catalan-binomial sum equals binomial_gen(l-m-1, m) for m <= 60, m <= l <= m+60", criterion4},
      {"creature involution proves the alternating sum for s = 1..10", criterion5},
      {"pair involution survivors and signed census for m <= 6, m+1 <= l <= m+6", criterion6},
      {"Gosper certificate for the alternating Catalan summand", criterion7},
      {"Zeilberger recurrence for the normalized Catalan-binomial summand", criterion8},
      {"certificate soundness over the fixture corpus", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s [%s] (%.2fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
