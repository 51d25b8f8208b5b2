#include "catalan/summation/zeilberger.hpp"

#include <algorithm>

#include "catalan/errors.hpp"
#include "catalan/exact/linear_algebra.hpp"
#include "catalan/summation/gosper.hpp"

namespace catalan {

namespace {

constexpr long kFitPoints = 13;
constexpr long kFitParameterValues = 12;

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  return (*(a * b).divide_exact(poly_gcd(a, b))).monic();
}

MultiPoly multi_lcm(const MultiPoly& a, const MultiPoly& b) { return *(a * b).divide_exact(gcd(a, b)); }

// Lagrange interpolation through (xs[i], ys[i]) in variable 0.
MultiPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys, std::size_t count) {
  MultiPoly out;
  const MultiPoly x = MultiPoly::variable(0);
  for (std::size_t i = 0; i < count; ++i) {
    MultiPoly basis{ys[i]};
    for (std::size_t j = 0; j < count; ++j) {
      if (j != i) basis = (basis * (x - MultiPoly(xs[j]))).scaled(Rational(1) / (xs[i] - xs[j]));
    }
    out += basis;
  }
  return out;
}

// Lowest-degree interpolant that also matches every remaining point (at least two spare).
std::optional<MultiPoly> fit(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() < 3) return std::nullopt;
  for (std::size_t count = 1; count + 2 <= xs.size(); ++count) {
    const MultiPoly p = interpolate(xs, ys, count);
    bool consistent = true;
    for (std::size_t i = count; i < xs.size() && consistent; ++i) {
      const Rational at[] = {xs[i]};
      consistent = p.evaluate(at) == ys[i];
    }
    if (consistent) return p;
  }
  return std::nullopt;
}

std::optional<MultiPoly> fit_in_n(const BivariateHyperTerm& term, const TelescopedRecurrence& rec,
                                  const std::vector<Integer>& params) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (long n = 0; n < kFitPoints; ++n) {
    if (const auto b = boundary_value(term, rec, n, params)) {
      xs.emplace_back(n);
      ys.push_back(*b);
    }
  }
  return fit(xs, ys);
}

std::vector<Integer> fit_parameters(std::size_t count, long i) {
  std::vector<Integer> out;
  for (std::size_t c = 0; c < count; ++c) out.emplace_back(60 + 7 * i + 13 * static_cast<long>(c));
  return out;
}

std::optional<Polynomial> fit_inhomogeneous(const BivariateHyperTerm& term, const TelescopedRecurrence& rec) {
  const std::size_t params = term.param_count();
  const CoefficientField param_field(std::vector<std::string>(term.field.parameters().begin(),
                                                              term.field.parameters().end() - 1));
  if (params == 0) {
    const auto p = fit_in_n(term, rec, {});
    if (!p) return std::nullopt;
    return to_polynomial(*p, term.rec_variable, param_field);
  }
  if (params >= 2) {
    std::optional<MultiPoly> common;
    for (long i = 0; i < 4; ++i) {
      const auto p = fit_in_n(term, rec, fit_parameters(params, i));
      if (!p || (common && !(*common == *p))) return std::nullopt;
      common = p;
    }
    return to_polynomial(common->substitute(0, MultiPoly::variable(params)), term.rec_variable, param_field);
  }
  std::vector<Rational> values;
  std::vector<MultiPoly> fits;
  for (long i = 0; i < kFitParameterValues; ++i) {
    const auto point = fit_parameters(1, i);
    if (auto p = fit_in_n(term, rec, point)) {
      values.emplace_back(point[0]);
      fits.push_back(std::move(*p));
    }
  }
  int degree = -1;
  for (const MultiPoly& p : fits) degree = std::max(degree, p.degree_in(0));
  MultiPoly out;
  const MultiPoly n = MultiPoly::variable(1);
  for (int d = 0; d <= degree; ++d) {
    std::vector<Rational> ys;
    for (const MultiPoly& p : fits) {
      const auto coeffs = p.coefficients_in(0);
      ys.push_back(static_cast<std::size_t>(d) < coeffs.size() ? coeffs[d].constant_value() : Rational(0));
    }
    const auto c = fit(values, ys);
    if (!c) return std::nullopt;
    out += *c * n.pow(static_cast<unsigned>(d));
  }
  if (fits.size() < 3) return std::nullopt;
  return to_polynomial(out, term.rec_variable, param_field);
}

FieldElement as_field_element(const Polynomial& a, std::size_t n_index) {
  FieldElement out;
  FieldElement power(1);
  for (const FieldElement& c : a.coefficients()) {
    out += c * power;
    power *= FieldElement::parameter(n_index);
  }
  return out;
}

std::vector<RationalFunction> shifted_ratios(const BivariateHyperTerm& term, long order) {
  std::vector<RationalFunction> q;
  q.emplace_back(term.ratio_k.num().constant_like(FieldElement(1)));
  for (long j = 1; j <= order; ++j) q.push_back(q.back() * shift_parameter(term.ratio_n, term.rec_index(), j - 1));
  return q;
}

bool telescopes(const BivariateHyperTerm& term, const std::vector<FieldElement>& alpha, const RationalFunction& r) {
  const auto q = shifted_ratios(term, static_cast<long>(alpha.size()) - 1);
  RationalFunction lhs(term.ratio_k.num().zero_like());
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    lhs = lhs + RationalFunction(q[j].num().scaled(alpha[j]), q[j].den());
  }
  return lhs == r.shift(1) * term.ratio_k - r;
}

std::optional<TelescopedRecurrence> attempt(const BivariateHyperTerm& term, long order, std::string& why) {
  const std::size_t n_index = term.rec_index();
  const auto q = shifted_ratios(term, order);
  Polynomial common = q[0].den();
  for (const auto& r : q) common = poly_lcm(common, r.den());
  std::vector<Polynomial> u;
  for (const auto& r : q) u.push_back(r.num() * *common.divide_exact(r.den()));

  const RationalFunction reduced_ratio = term.ratio_k * RationalFunction(common, poly_shift(common, 1));
  const GosperForm form = gosper_normal_form(reduced_ratio);
  const Polynomial lower = poly_shift(form.b, -1);
  int rhs_degree = kMinusInfinity;
  for (const auto& p : u) rhs_degree = std::max(rhs_degree, form.c.degree() + p.degree());
  const long bound = key_equation_degree_bound(form.a, lower, rhs_degree);

  const std::size_t alphas = static_cast<std::size_t>(order) + 1;
  const std::size_t xs = bound < 0 ? 0 : static_cast<std::size_t>(bound) + 1;
  std::vector<Polynomial> columns;
  for (const auto& p : u) columns.push_back(-(form.c * p));
  const Polynomial k = Polynomial::identity(form.a.variable(), form.a.field());
  const Polynomial k1 = k + k.constant_like(FieldElement(1));
  for (std::size_t i = 0; i < xs; ++i) {
    columns.push_back(form.a * k1.pow(static_cast<unsigned>(i)) - lower * k.pow(static_cast<unsigned>(i)));
  }
  int rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.degree() + 1);
  FieldMatrix matrix(static_cast<std::size_t>(rows), std::vector<FieldElement>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (int d = 0; d <= columns[j].degree(); ++d) matrix[static_cast<std::size_t>(d)][j] = columns[j].coefficient(d);
  }
  std::vector<FieldElement> solution;
  for (auto& v : nullspace(matrix, columns.size())) {
    if (!v[alphas - 1].is_zero()) {
      solution = std::move(v);
      break;
    }
  }
  if (solution.empty()) {
    why = "order " + std::to_string(order) + ": no telescoper with nonzero leading coefficient (x degree <= " +
          std::to_string(bound) + ")";
    return std::nullopt;
  }

  // Clear denominators and content in the coefficients, with a positive leading coefficient of a_J.
  MultiPoly denominator{1};
  for (std::size_t j = 0; j < alphas; ++j) denominator = multi_lcm(denominator, solution[j].den());
  std::vector<MultiPoly> cleared;
  MultiPoly content;
  for (std::size_t j = 0; j < alphas; ++j) {
    cleared.push_back(solution[j].num() * *denominator.divide_exact(solution[j].den()));
    content = gcd(content, cleared.back());
  }
  MultiPoly stacked;
  for (std::size_t j = 0; j < alphas; ++j) {
    cleared[j] = *cleared[j].divide_exact(content);
    stacked += cleared[j] * MultiPoly::variable(n_index + 1).pow(static_cast<unsigned>(j));
  }
  Rational scale = Rational(1) / rational_content(stacked);
  if (cleared.back().coefficients_in(n_index).back().leading_coefficient() * scale < 0) scale = -scale;
  const FieldElement lambda(denominator.scaled(scale), content);

  Polynomial x = k.zero_like();
  for (std::size_t i = 0; i < xs; ++i) x = x + k.pow(static_cast<unsigned>(i)).scaled(solution[alphas + i]);
  const RationalFunction certificate((lower * x).scaled(lambda), form.c * common);

  const CoefficientField param_field(
      std::vector<std::string>(term.field.parameters().begin(), term.field.parameters().end() - 1));
  std::vector<FieldElement> alpha;
  TelescopedRecurrence rec{{}, certificate, std::nullopt};
  for (std::size_t j = 0; j < alphas; ++j) {
    alpha.push_back(solution[j] * lambda);
    rec.coefficients.push_back(to_polynomial(cleared[j].scaled(scale), term.rec_variable, param_field));
  }
  if (!telescopes(term, alpha, certificate)) throw std::logic_error("telescoper fails its own identity");
  rec.inhomogeneous = fit_inhomogeneous(term, rec);
  return rec;
}

}  // namespace

std::variant<TelescopedRecurrence, NoRecurrenceFound> zeilberger(const BivariateHyperTerm& term, long max_order) {
  if (max_order < 1) throw UsageError("max_order must be at least 1");
  if (!term.compatible()) throw UsageError("shift ratios are not compatible");
  NoRecurrenceFound failure{max_order, {}};
  for (long order = 1; order <= max_order; ++order) {
    std::string why;
    if (auto rec = attempt(term, order, why)) return std::move(*rec);
    failure.attempts.push_back(why);
  }
  return failure;
}

ReplayPlan default_replay_plan(std::size_t parameter_count) {
  static const long kValues[] = {23, 31, 47};
  ReplayPlan plan;
  plan.parameter_points.emplace_back();
  for (std::size_t c = 0; c < parameter_count; ++c) {
    std::vector<std::vector<long>> next;
    for (const auto& p : plan.parameter_points) {
      for (long v : kValues) {
        next.push_back(p);
        next.back().push_back(v);
      }
    }
    plan.parameter_points = std::move(next);
  }
  return plan;
}

std::optional<Rational> natural_sum(const BivariateHyperTerm& term, long n, std::span<const Integer> params) {
  Rational sum = 0;
  for (long k = 0; k <= n; ++k) {
    const auto t = term.evaluate(n, k, params);
    if (!t) return std::nullopt;
    sum += *t;
  }
  return sum;
}

std::optional<Rational> evaluate_coefficient(const Polynomial& a, long n, std::span<const Integer> params) {
  const std::vector<Rational> point(params.begin(), params.end());
  Rational out = 0;
  for (int d = a.degree(); d >= 0; --d) {
    const auto c = a.coefficient(d).evaluate(point);
    if (!c) return std::nullopt;
    out = out * n + *c;
  }
  return out;
}

std::optional<Rational> boundary_value(const BivariateHyperTerm& term, const TelescopedRecurrence& rec, long n,
                                       std::span<const Integer> params) {
  std::vector<Integer> point(params.begin(), params.end());
  point.emplace_back(n);
  point.emplace_back(n + 1);
  const auto top = evaluate_certificate_product(rec.certificate, term.product, point);
  point.back() = 0;
  const auto bottom = evaluate_certificate_product(rec.certificate, term.product, point);
  if (!top || !bottom) return std::nullopt;
  Rational out = *top - *bottom;
  for (long j = 1; j <= rec.order(); ++j) {
    const auto a = evaluate_coefficient(rec.coefficients[static_cast<std::size_t>(j)], n, params);
    if (!a) return std::nullopt;
    for (long k = n + 1; k <= n + j; ++k) {
      const auto t = term.evaluate(n + j, k, params);
      if (!t) return std::nullopt;
      out += *a * *t;
    }
  }
  return out;
}

ZeilbergerCheck check_zeilberger(const BivariateHyperTerm& term, const TelescopedRecurrence& rec,
                                 const ReplayPlan& plan) {
  ZeilbergerCheck out;
  if (rec.coefficients.size() < 2 || !(rec.certificate.field() == term.field) ||
      rec.certificate.variable() != term.sum_variable) {
    out.detail = "recurrence does not match the term";
    return out;
  }
  std::vector<FieldElement> alpha;
  for (const auto& a : rec.coefficients) alpha.push_back(as_field_element(a, term.rec_index()));
  out.algebraic = std::any_of(alpha.begin(), alpha.end(), [](const auto& a) { return !a.is_zero(); }) &&
                  telescopes(term, alpha, rec.certificate);
  if (!out.algebraic) out.detail = "telescoping identity fails";

  out.numeric = true;
  for (const auto& raw : plan.parameter_points) {
    const std::vector<Integer> params(raw.begin(), raw.end());
    for (long n = plan.n_lo; n <= plan.n_hi; ++n) {
      const auto b = boundary_value(term, rec, n, params);
      if (!b) continue;
      Rational lhs = 0;
      bool defined = true;
      for (long j = 0; j <= rec.order() && defined; ++j) {
        const auto a = evaluate_coefficient(rec.coefficients[static_cast<std::size_t>(j)], n, params);
        const auto f = natural_sum(term, n + j, params);
        defined = a && f;
        if (defined) lhs += *a * *f;
      }
      if (!defined) continue;
      ++out.samples;
      bool ok = lhs == *b;
      if (ok && rec.inhomogeneous) {
        const auto inh = evaluate_coefficient(*rec.inhomogeneous, n, params);
        ok = inh && *inh == lhs;
      }
      if (!ok) {
        out.numeric = false;
        if (out.detail.empty()) out.detail = "numeric replay fails at n = " + std::to_string(n);
      }
    }
  }
  if (out.samples == 0) {
    out.numeric = false;
    if (out.detail.empty()) out.detail = "no sample point where the term is defined";
  }
  return out;
}

bool verify_zeilberger(const BivariateHyperTerm& term, const TelescopedRecurrence& rec) {
  return check_zeilberger(term, rec, default_replay_plan(term.param_count())).ok();
}

}  // namespace catalan
