#include "catalan/summation/gosper.hpp"

#include "catalan/errors.hpp"

namespace catalan {

GosperForm gosper_normal_form(const RationalFunction& ratio) {
  if (ratio.is_zero()) throw UsageError("zero shift ratio");
  const FieldElement z = ratio.num().leading_coefficient();
  Polynomial a = ratio.num().monic();
  Polynomial b = ratio.den();
  Polynomial c = a.constant_like(FieldElement(1));
  for (long j : dispersion_set(a, b)) {
    if (j == 0) continue;
    const Polynomial g = poly_gcd(a, poly_shift(b, j));
    if (g.degree() <= 0) continue;
    a = *a.divide_exact(g);
    b = *b.divide_exact(poly_shift(g, -j));
    for (long i = 1; i <= j; ++i) c = c * poly_shift(g, -i);
  }
  return {a.scaled(z), b, c};
}

long key_equation_degree_bound(const Polynomial& p, const Polynomial& q, int rhs_degree) {
  const int dp = p.degree();
  const int dq = q.degree();
  const auto rhs = static_cast<long>(rhs_degree);
  if (dp != dq || p.leading_coefficient() != q.leading_coefficient()) {
    if (rhs_degree == kMinusInfinity) return -1;
    return rhs - std::max(dp, dq);
  }
  long bound = rhs_degree == kMinusInfinity ? -1 : rhs - dp + 1;
  const FieldElement lambda = (p - q).coefficient(dp - 1);
  const FieldElement d0 = -lambda / p.leading_coefficient();
  if (d0.is_rational()) {
    const Rational v = d0.rational_value();
    if (is_integer(v) && v >= 0) bound = std::max(bound, v.get_num().get_si());
  }
  return bound < 0 ? -1 : bound;
}

std::variant<GosperCertificate, NotGosperSummable> gosper(const HyperTerm& term) {
  if (term.ratio.is_zero()) return NotGosperSummable{"ratio vanishes identically", -1};
  const GosperForm form = gosper_normal_form(term.ratio);
  const Polynomial q = poly_shift(form.b, -1);
  const long bound = key_equation_degree_bound(form.a, q, form.c.degree());
  if (bound < 0) return NotGosperSummable{"degree bound: no nonnegative candidate degree", bound};
  const auto x = solve_degree_bounded(form.a, q, form.c, bound);
  if (!x) {
    return NotGosperSummable{"key equation: no polynomial solution of degree <= " + std::to_string(bound), bound};
  }
  GosperCertificate cert{RationalFunction(q * *x, form.c)};
  if (!verify_gosper(term, cert)) throw std::logic_error("gosper produced a certificate that fails verification");
  return cert;
}

bool verify_gosper(const HyperTerm& term, const GosperCertificate& cert) {
  if (!(cert.r.field() == term.ratio.field()) || cert.r.variable() != term.ratio.variable()) return false;
  const RationalFunction one(term.ratio.num().constant_like(FieldElement(1)));
  return cert.r.shift(1) * term.ratio - cert.r == one;
}

DefiniteSum::DefiniteSum(HyperTerm term, GosperCertificate cert, long lower, std::size_t upper_parameter)
    : term_(std::move(term)), cert_(std::move(cert)), lower_(lower), upper_(upper_parameter) {
  if (upper_ >= term_.field.size()) throw UsageError("upper limit must be a parameter of the term");
}

TelescopedValue DefiniteSum::evaluate(std::span<const Integer> params) const {
  if (params.size() != term_.field.size()) throw UsageError("wrong number of parameter values");
  const Integer upper = params[upper_];
  std::vector<Integer> point(params.begin(), params.end());
  point.emplace_back(0);
  TelescopedValue out;
  out.direct = 0;
  for (Integer k = lower_; k <= upper; ++k) {
    point.back() = k;
    const auto t = term_.product.evaluate(point);
    if (!t) throw DomainError("summand undefined at k = " + k.get_str());
    out.direct += *t;
  }
  point.back() = upper + 1;
  const auto top = evaluate_certificate_product(cert_.r, term_.product, point);
  point.back() = lower_;
  const auto bottom = evaluate_certificate_product(cert_.r, term_.product, point);
  if (top && bottom) {
    out.value = *top - *bottom;
  } else {
    out.value = out.direct;
    out.endpoint_singular = true;
  }
  return out;
}

DefiniteSum telescope_definite(const HyperTerm& term, const GosperCertificate& cert, long lower,
                               const std::string& upper_parameter) {
  const auto index = term.field.index_of(upper_parameter);
  if (!index) throw UsageError("unknown upper limit parameter: " + upper_parameter);
  return DefiniteSum(term, cert, lower, *index);
}

}  // namespace catalan
