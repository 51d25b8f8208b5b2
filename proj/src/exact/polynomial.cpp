#include "catalan/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "catalan/errors.hpp"
#include "catalan/exact/linear_algebra.hpp"

namespace catalan {

Polynomial::Polynomial(std::string variable, CoefficientField field)
    : variable_(std::move(variable)), field_(std::move(field)) {}

Polynomial::Polynomial(std::string variable, CoefficientField field, std::vector<FieldElement> coefficients)
    : variable_(std::move(variable)), field_(std::move(field)), coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(std::string variable, CoefficientField field, const FieldElement& value) {
  return Polynomial(std::move(variable), std::move(field), std::vector<FieldElement>{value});
}

Polynomial Polynomial::identity(std::string variable, CoefficientField field) {
  return Polynomial(std::move(variable), std::move(field), std::vector<FieldElement>{FieldElement(0), FieldElement(1)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!same_ring(other))
    throw UsageError("polynomials over different rings: " + variable_ + " vs " + other.variable_);
}

FieldElement Polynomial::coefficient(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(degree)];
}

FieldElement Polynomial::leading_coefficient() const { return coeffs_.empty() ? FieldElement() : coeffs_.back(); }

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const Polynomial& other = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  out.trim();
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial out(a.variable_, a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

Polynomial Polynomial::scaled(const FieldElement& factor) const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  out.trim();
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant_like(FieldElement(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  require_same_ring(divisor);
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial quotient = zero_like();
  Polynomial remainder = *this;
  if (remainder.degree() < divisor.degree()) return {quotient, remainder};
  const FieldElement lead_inverse = divisor.leading_coefficient().inverse();
  quotient.coeffs_.assign(static_cast<std::size_t>(degree() - divisor.degree() + 1), FieldElement());
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const int shift = remainder.degree() - divisor.degree();
    const FieldElement factor = remainder.leading_coefficient() * lead_inverse;
    quotient.coeffs_[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
      remainder.coeffs_[i + static_cast<std::size_t>(shift)] -= factor * divisor.coeffs_[i];
    remainder.coeffs_.back() = FieldElement();  // cancelled exactly
    remainder.trim();
  }
  quotient.trim();
  return {quotient, remainder};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

FieldElement Polynomial::evaluate(const FieldElement& at) const {
  FieldElement acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::map_coefficients(const std::function<FieldElement(const FieldElement&)>& fn,
                                        std::optional<CoefficientField> field) const {
  std::vector<FieldElement> mapped;
  mapped.reserve(coeffs_.size());
  for (const auto& c : coeffs_) mapped.push_back(fn(c));
  return Polynomial(variable_, field ? *field : field_, std::move(mapped));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& names = field_.parameters();
  for (int d = degree(); d >= 0; --d) {
    const FieldElement& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    std::string text = c.to_string(names);
    const bool simple = c.is_rational() || c.num().term_count() == 1;
    bool negative = false;
    if (simple && text.front() == '-') {
      negative = true;
      text.erase(0, 1);
    }
    if (!simple) text = "(" + text + ")";
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (d == 0) {
      out << text;
      continue;
    }
    if (text != "1") out << text << '*';
    out << variable_;
    if (d > 1) out << '^' << d;
  }
  return out.str();
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (!p.same_ring(q)) throw UsageError("poly_gcd: operands over different rings");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.degree() == 0 || q.degree() == 0) return p.constant_like(FieldElement(1));
  // Fraction-free: clear parameter denominators and take the gcd in Q[params, variable].
  const std::size_t var = p.field().size();
  auto cleared = [var](const Polynomial& f) {
    MultiPoly lcm{1};
    for (const FieldElement& c : f.coefficients()) lcm = *(lcm * c.den()).divide_exact(gcd(lcm, c.den()));
    MultiPoly out;
    MultiPoly power{1};
    for (const FieldElement& c : f.coefficients()) {
      out += c.num() * *lcm.divide_exact(c.den()) * power;
      power *= MultiPoly::variable(var);
    }
    return out;
  };
  const MultiPoly g = gcd(cleared(p), cleared(q));
  std::vector<FieldElement> coeffs;
  for (const MultiPoly& c : g.coefficients_in(var)) coeffs.emplace_back(c);
  return Polynomial(p.variable(), p.field(), std::move(coeffs)).monic();
}

Polynomial poly_shift(const Polynomial& p, const FieldElement& j) {
  if (j.is_zero() || p.degree() <= 0) return p;
  const Polynomial step = Polynomial::identity(p.variable(), p.field()) + p.constant_like(j);
  Polynomial acc = p.zero_like();
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
    acc = acc * step + p.constant_like(*it);
  return acc;
}

Polynomial poly_shift(const Polynomial& p, long j) { return poly_shift(p, FieldElement(j)); }

FieldElement resultant(const Polynomial& p, const Polynomial& q) {
  if (!p.same_ring(q)) throw UsageError("resultant: operands over different rings");
  if (p.is_zero() || q.is_zero()) return {};
  Polynomial a = p;
  Polynomial b = q;
  FieldElement scale(1);
  while (true) {
    const int m = a.degree();
    const int n = b.degree();
    if (n == 0) return scale * b.leading_coefficient().pow(m);
    if (m == 0) return scale * a.leading_coefficient().pow(n);
    if (m < n) {
      if ((m * n) % 2 != 0) scale = -scale;
      std::swap(a, b);
      continue;
    }
    Polynomial r = a.divmod(b).second;
    if (r.is_zero()) return {};
    // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    if ((m * n) % 2 != 0) scale = -scale;
    scale *= b.leading_coefficient().pow(m - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

// Newton interpolation through (x_i, y_i) with x_i = 0, 1, ..., n.
Polynomial interpolate_at_naturals(const std::vector<FieldElement>& values, const std::string& variable,
                                   const CoefficientField& field) {
  std::vector<FieldElement> diffs = values;
  const std::size_t n = diffs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      diffs[i] = (diffs[i] - diffs[i - 1]) / FieldElement(static_cast<long>(level));
  const Polynomial x = Polynomial::identity(variable, field);
  Polynomial acc(variable, field);
  for (std::size_t i = n; i-- > 0;) acc = acc * (x - acc.constant_like(FieldElement(static_cast<long>(i)))) + acc.constant_like(diffs[i]);
  return acc;
}

Integer horner(const std::vector<Integer>& coeffs, const Integer& x) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Nonnegative integer roots of a nonzero polynomial over Q.
std::vector<long> nonnegative_integer_roots(const Polynomial& g) {
  Integer den_lcm = 1;
  for (const auto& c : g.coefficients()) {
    const Rational v = c.rational_value();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  for (const auto& c : g.coefficients()) {
    const Rational v = c.rational_value() * den_lcm;
    ints.push_back(v.get_num());
  }
  std::vector<long> roots;
  std::size_t lowest = 0;
  while (lowest < ints.size() && ints[lowest] == 0) ++lowest;
  if (lowest > 0) roots.push_back(0);
  ints.erase(ints.begin(), ints.begin() + static_cast<std::ptrdiff_t>(lowest));
  if (ints.size() <= 1) return roots;
  // Integer roots divide the constant term and obey the Cauchy bound.
  Integer bound = abs(ints.front());
  Rational cauchy = 0;
  for (std::size_t i = 0; i + 1 < ints.size(); ++i)
    cauchy = std::max(cauchy, Rational(abs(ints[i]), abs(ints.back())));
  cauchy.canonicalize();
  const Integer cauchy_int = Integer(cauchy.get_num() / cauchy.get_den()) + 1;
  if (cauchy_int < bound) bound = cauchy_int;
  if (bound > 10'000'000) throw SizeError("dispersion bound too large to scan");
  const long limit = bound.get_si();
  for (long j = 1; j <= limit; ++j)
    if (horner(ints, Integer(j)) == 0) roots.push_back(j);
  return roots;
}

}  // namespace

std::vector<long> dispersion_set(const Polynomial& p, const Polynomial& q) {
  if (!p.same_ring(q)) throw UsageError("dispersion_set: operands over different rings");
  if (p.is_zero() || q.is_zero()) throw UsageError("dispersion_set of a zero polynomial");
  if (p.degree() == 0 || q.degree() == 0) return {};

  // R(j) = Res_k(p(k), q(k + j)) has degree <= deg p * deg q in j.
  const int points = p.degree() * q.degree() + 1;
  std::vector<FieldElement> values;
  values.reserve(static_cast<std::size_t>(points));
  for (int j = 0; j < points; ++j) values.push_back(resultant(p, poly_shift(q, static_cast<long>(j))));
  const Polynomial in_j = interpolate_at_naturals(values, "j", p.field());
  if (in_j.is_zero()) throw std::logic_error("dispersion: resultant vanished identically");

  // An integer j is a root over Q(params) iff it kills every parameter
  // monomial's coefficient polynomial in Q[j]; intersect them via gcd.
  MultiPoly den_lcm(Rational(1));
  for (const auto& c : in_j.coefficients()) {
    const MultiPoly g = gcd(den_lcm, c.den());
    den_lcm = *(den_lcm * c.den()).divide_exact(g);
  }
  std::map<MultiPoly::Exponents, std::vector<FieldElement>, MultiPoly::LexGreater> by_monomial;
  for (int d = 0; d <= in_j.degree(); ++d) {
    const MultiPoly cleared = *(in_j.coefficient(d).num() * den_lcm).divide_exact(in_j.coefficient(d).den());
    for (const auto& [e, c] : cleared.terms()) {
      auto& row = by_monomial[e];
      row.resize(static_cast<std::size_t>(in_j.degree() + 1));
      row[static_cast<std::size_t>(d)] = FieldElement(c);
    }
  }
  Polynomial common("j", CoefficientField());
  for (const auto& [e, row] : by_monomial) common = poly_gcd(common, Polynomial("j", CoefficientField(), row));

  std::vector<long> result;
  for (long j : nonnegative_integer_roots(common))
    if (poly_gcd(p, poly_shift(q, j)).degree() > 0) result.push_back(j);
  return result;
}

std::optional<Polynomial> solve_degree_bounded(const Polynomial& a, const Polynomial& b, const Polynomial& c,
                                               long dmax) {
  if (!a.same_ring(b) || !a.same_ring(c)) throw UsageError("solve_degree_bounded: operands over different rings");
  if (dmax < 0) return std::nullopt;
  const auto unknowns = static_cast<std::size_t>(dmax + 1);
  const Polynomial k = Polynomial::identity(a.variable(), a.field());
  const Polynomial k1 = k + k.constant_like(FieldElement(1));
  std::vector<Polynomial> columns;
  columns.reserve(unknowns);
  Polynomial power = k.constant_like(FieldElement(1));
  Polynomial shifted_power = power;
  int rows = std::max(c.degree(), 0) + 1;
  for (std::size_t i = 0; i < unknowns; ++i) {
    columns.push_back(a * shifted_power - b * power);
    rows = std::max(rows, columns.back().degree() + 1);
    power = power * k;
    shifted_power = shifted_power * k1;
  }
  FieldMatrix matrix(static_cast<std::size_t>(rows), std::vector<FieldElement>(unknowns));
  std::vector<FieldElement> rhs(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < unknowns; ++i) matrix[static_cast<std::size_t>(r)][i] = columns[i].coefficient(r);
    rhs[static_cast<std::size_t>(r)] = c.coefficient(r);
  }
  auto solution = solve_linear(matrix, rhs, unknowns);
  if (!solution) return std::nullopt;
  return Polynomial(a.variable(), a.field(), *std::move(solution));
}

}  // namespace catalan
