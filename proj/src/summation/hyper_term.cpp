#include "catalan/summation/hyper_term.hpp"

#include "catalan/errors.hpp"
#include "catalan/identities.hpp"

namespace catalan {

namespace {

Integer factorial(const Integer& n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n.get_ui());
  return out;
}

Rational rational_pow(const Rational& base, long exponent) {
  Rational out = 1;
  const Rational b = exponent < 0 ? Rational(1) / base : base;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out *= b;
  return out;
}

std::vector<Rational> as_rationals(std::span<const Integer> point) {
  return {point.begin(), point.end()};
}

// Gamma-style germ of x! along a line where x = x0 + gamma*eps.
std::optional<Germ> factorial_germ(const Integer& x0, const Integer& gamma) {
  if (x0 >= 0) return Germ{0, Rational(factorial(x0)), false};
  if (gamma == 0) return std::nullopt;
  const Integer q = -x0 - 1;
  Rational c = Rational(1) / (Rational(factorial(q)) * Rational(gamma));
  if (q % 2 != 0) c = -c;
  return Germ{-1, c, false};
}

// Germ of a univariate polynomial (in variable 0) at x0.
Germ poly_germ(const MultiPoly& univariate, const Rational& x0) {
  if (univariate.is_zero()) return Germ::zero();
  const auto coeffs = univariate.shift(0, x0).coefficients_in(0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) return Germ{static_cast<long>(i), coeffs[i].constant_value(), false};
  }
  return Germ::zero();
}

// Restricts p to the line through `point` along `var`, as a polynomial in variable 0.
MultiPoly restrict_to_line(const MultiPoly& p, std::span<const Integer> point, std::size_t var) {
  MultiPoly out = p;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i != var) out = out.specialize(i, Rational(point[i]));
  }
  if (var != 0) out = out.substitute(var, MultiPoly::variable(0));
  return out;
}

std::optional<Germ> combine(std::initializer_list<std::pair<std::optional<Germ>, int>> parts) {
  Germ out;
  for (const auto& [g, e] : parts) {
    if (!g) return std::nullopt;
    if (g->identically_zero && e < 0) return std::nullopt;
    out *= g->pow(e);
  }
  return out;
}

// Pair (num, den) of MultiPolys.
struct Fraction {
  MultiPoly num{1};
  MultiPoly den{1};
  void multiply(const MultiPoly& n, const MultiPoly& d, int exponent) {
    const auto e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    if (exponent > 0) {
      num *= n.pow(e);
      den *= d.pow(e);
    } else {
      num *= d.pow(e);
      den *= n.pow(e);
    }
  }
};

// x! at x + alpha over x!, as a fraction of products of linear factors.
Fraction factorial_shift(const MultiPoly& x, const Integer& alpha) {
  Fraction out;
  if (alpha >= 0) {
    for (long i = 1; i <= alpha.get_si(); ++i) out.num *= x + MultiPoly(i);
  } else {
    for (long i = 0; i < -alpha.get_si(); ++i) out.den *= x - MultiPoly(i);
  }
  return out;
}

}  // namespace

Integer LinearForm::coefficient(std::size_t symbol) const {
  return symbol < coefficients.size() ? coefficients[symbol] : Integer(0);
}

Integer LinearForm::evaluate(std::span<const Integer> point) const {
  Integer out = constant;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) out += coefficients[i] * point[i];
  }
  return out;
}

MultiPoly LinearForm::to_poly() const {
  MultiPoly out{Rational(constant)};
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) out += MultiPoly::variable(i).scaled(Rational(coefficients[i]));
  }
  return out;
}

Germ& Germ::operator*=(const Germ& other) {
  if (identically_zero || other.identically_zero) return *this = zero();
  order += other.order;
  coefficient *= other.coefficient;
  return *this;
}

Germ Germ::pow(int exponent) const {
  if (identically_zero) return exponent == 0 ? Germ{} : zero();
  return Germ{order * exponent, rational_pow(coefficient, exponent), false};
}

std::optional<Rational> Germ::value() const {
  if (identically_zero || order > 0) return Rational(0);
  if (order < 0) return std::nullopt;
  return coefficient;
}

FactorProduct::FactorProduct(std::vector<std::string> symbols, Rational constant, std::vector<Factor> factors)
    : symbols_(std::move(symbols)), constant_(std::move(constant)), factors_(std::move(factors)) {
  if (symbols_.empty()) throw UsageError("term needs at least one symbol");
  if (constant_ == 0) throw UsageError("zero term");
  for (const Factor& f : factors_) {
    if (f.exponent == 0) throw UsageError("factor with zero exponent");
    if (f.kind == Factor::Kind::Polynomial && f.poly.is_zero()) throw UsageError("zero polynomial factor");
    if (f.kind == Factor::Kind::Polynomial && f.poly.variable_bound() > symbols_.size())
      throw UsageError("polynomial factor uses an unknown symbol");
    if (f.kind == Factor::Kind::Power && f.base == 0) throw UsageError("zero base in power factor");
    if (f.arg.coefficients.size() > symbols_.size() || f.lower.coefficients.size() > symbols_.size())
      throw UsageError("linear argument uses an unknown symbol");
  }
}

CoefficientField FactorProduct::field() const {
  return CoefficientField(std::vector<std::string>(symbols_.begin(), symbols_.end() - 1));
}

std::optional<Rational> FactorProduct::evaluate(std::span<const Integer> point) const {
  if (point.size() != symbols_.size()) throw UsageError("evaluation point has the wrong dimension");
  Rational out = constant_;
  const auto rationals = as_rationals(point);
  for (const Factor& f : factors_) {
    Rational v;
    switch (f.kind) {
      case Factor::Kind::Polynomial:
        v = f.poly.evaluate(rationals);
        break;
      case Factor::Kind::Factorial: {
        const Integer x = f.arg.evaluate(point);
        if (x < 0) return std::nullopt;
        v = Rational(factorial(x));
        break;
      }
      case Factor::Kind::Binomial:
        v = Rational(binomial_gen(f.arg.evaluate(point), f.lower.evaluate(point)));
        break;
      case Factor::Kind::Catalan: {
        const Integer x = f.arg.evaluate(point);
        if (x < 0) return std::nullopt;
        v = Rational(catalan_number(x.get_si()));
        break;
      }
      case Factor::Kind::Power:
        v = rational_pow(f.base, f.arg.evaluate(point).get_si());
        break;
    }
    if (v == 0) {
      if (f.exponent < 0) return std::nullopt;
      out = 0;
    } else {
      out *= rational_pow(v, f.exponent);
    }
  }
  return out;
}

std::optional<Germ> FactorProduct::germ_along(std::span<const Integer> point, std::size_t var) const {
  if (point.size() != symbols_.size()) throw UsageError("evaluation point has the wrong dimension");
  Germ out{0, constant_, false};
  for (const Factor& f : factors_) {
    std::optional<Germ> g;
    switch (f.kind) {
      case Factor::Kind::Polynomial:
        g = poly_germ(restrict_to_line(f.poly, point, var), Rational(point[var]));
        break;
      case Factor::Kind::Factorial:
        g = factorial_germ(f.arg.evaluate(point), f.arg.coefficient(var));
        break;
      case Factor::Kind::Binomial: {
        const Integer a0 = f.arg.evaluate(point);
        const Integer b0 = f.lower.evaluate(point);
        const Integer alpha = f.arg.coefficient(var);
        const Integer beta = f.lower.coefficient(var);
        if (alpha == 0 && beta == 0) {
          const Integer v = binomial_gen(a0, b0);
          g = v == 0 ? Germ::zero() : Germ{0, Rational(v), false};
        } else if (a0 >= 0) {
          // A fixed negative factorial argument in the denominator pins the binomial to zero.
          if ((b0 < 0 && beta == 0) || (a0 - b0 < 0 && alpha == beta)) {
            g = Germ::zero();
          } else {
            g = combine({{factorial_germ(a0, alpha), 1},
                         {factorial_germ(b0, beta), -1},
                         {factorial_germ(a0 - b0, alpha - beta), -1}});
          }
        } else if (b0 >= 0) {
          g = Germ{0, Rational(binomial_gen(a0, b0)), false};
        }
        break;
      }
      case Factor::Kind::Catalan: {
        const Integer x0 = f.arg.evaluate(point);
        const Integer gamma = f.arg.coefficient(var);
        if (x0 >= 0) {
          g = Germ{0, Rational(catalan_number(x0.get_si())), false};
        } else {
          g = combine({{factorial_germ(2 * x0, 2 * gamma), 1},
                       {factorial_germ(x0, gamma), -1},
                       {factorial_germ(x0 + 1, gamma), -1}});
        }
        break;
      }
      case Factor::Kind::Power:
        g = Germ{0, rational_pow(f.base, f.arg.evaluate(point).get_si()), false};
        break;
    }
    if (!g) return std::nullopt;
    if (g->identically_zero && f.exponent < 0) return std::nullopt;
    out *= g->pow(f.exponent);
  }
  return out;
}

RationalFunction FactorProduct::shift_ratio(std::size_t shift_symbol) const {
  if (shift_symbol >= symbols_.size()) throw UsageError("shift symbol out of range");
  Fraction acc;
  Rational scalar = 1;
  for (const Factor& f : factors_) {
    switch (f.kind) {
      case Factor::Kind::Polynomial:
        acc.multiply(f.poly.shift(shift_symbol, 1), f.poly, f.exponent);
        break;
      case Factor::Kind::Factorial: {
        const Fraction r = factorial_shift(f.arg.to_poly(), f.arg.coefficient(shift_symbol));
        acc.multiply(r.num, r.den, f.exponent);
        break;
      }
      case Factor::Kind::Binomial: {
        const MultiPoly a = f.arg.to_poly();
        const MultiPoly b = f.lower.to_poly();
        const Integer alpha = f.arg.coefficient(shift_symbol);
        const Integer beta = f.lower.coefficient(shift_symbol);
        const Fraction top = factorial_shift(a, alpha);
        const Fraction low = factorial_shift(b, beta);
        const Fraction rest = factorial_shift(a - b, alpha - beta);
        acc.multiply(top.num, top.den, f.exponent);
        acc.multiply(low.num, low.den, -f.exponent);
        acc.multiply(rest.num, rest.den, -f.exponent);
        break;
      }
      case Factor::Kind::Catalan: {
        const MultiPoly x = f.arg.to_poly();
        const Integer gamma = f.arg.coefficient(shift_symbol);
        const Fraction twice = factorial_shift(x.scaled(2), 2 * gamma);
        const Fraction once = factorial_shift(x, gamma);
        const Fraction next = factorial_shift(x + MultiPoly(1), gamma);
        acc.multiply(twice.num, twice.den, f.exponent);
        acc.multiply(once.num, once.den, -f.exponent);
        acc.multiply(next.num, next.den, -f.exponent);
        break;
      }
      case Factor::Kind::Power:
        scalar *= rational_pow(rational_pow(f.base, f.arg.coefficient(shift_symbol).get_si()), f.exponent);
        break;
    }
  }
  const CoefficientField fld = field();
  const std::string& var = symbols_.back();
  return RationalFunction(to_polynomial(acc.num.scaled(scalar), var, fld), to_polynomial(acc.den, var, fld));
}

Polynomial to_polynomial(const MultiPoly& p, const std::string& variable, const CoefficientField& field) {
  if (p.variable_bound() > field.size() + 1) throw UsageError("polynomial uses symbols outside the ring");
  std::vector<FieldElement> coeffs;
  for (const MultiPoly& c : p.coefficients_in(field.size())) coeffs.emplace_back(c);
  return Polynomial(variable, field, std::move(coeffs));
}

MultiPoly to_multi_poly(const Polynomial& p, std::size_t var_index) {
  MultiPoly out;
  MultiPoly power{1};
  for (const FieldElement& c : p.coefficients()) {
    if (!c.den().is_constant()) throw UsageError("coefficient is not polynomial in the parameters");
    out += c.num().scaled(Rational(1) / c.den().constant_value()) * power;
    power *= MultiPoly::variable(var_index);
  }
  return out;
}

std::pair<MultiPoly, MultiPoly> to_fraction(const RationalFunction& r) {
  const std::size_t var = r.field().size();
  auto cleared = [var](const Polynomial& p) {
    MultiPoly lcm{1};
    for (const FieldElement& c : p.coefficients()) {
      const MultiPoly g = gcd(lcm, c.den());
      lcm = *(lcm * c.den()).divide_exact(g);
    }
    MultiPoly out;
    MultiPoly power{1};
    for (const FieldElement& c : p.coefficients()) {
      out += c.num() * *lcm.divide_exact(c.den()) * power;
      power *= MultiPoly::variable(var);
    }
    return std::pair{out, lcm};
  };
  auto [n, ln] = cleared(r.num());
  auto [d, ld] = cleared(r.den());
  MultiPoly num = n * ld;
  MultiPoly den = d * ln;
  const MultiPoly g = gcd(num, den);
  num = *num.divide_exact(g);
  den = *den.divide_exact(g);
  const Rational cn = rational_content(num);
  const Rational cd = rational_content(den);
  const Rational q = cn / cd;
  return {num.scaled(Rational(q.get_num()) / cn), den.scaled(Rational(q.get_den()) / cd)};
}

HyperTerm HyperTerm::from_product(FactorProduct product) {
  std::string variable = product.symbols().back();
  CoefficientField field = product.field();
  RationalFunction ratio = product.shift_ratio(product.symbols().size() - 1);
  return HyperTerm{std::move(variable), std::move(field), std::move(ratio), std::move(product)};
}

std::optional<Rational> HyperTerm::evaluate(const Integer& k, std::span<const Integer> params) const {
  std::vector<Integer> point(params.begin(), params.end());
  point.push_back(k);
  return product.evaluate(point);
}

BivariateHyperTerm BivariateHyperTerm::from_product(FactorProduct product) {
  const std::size_t s = product.symbols().size();
  if (s < 2) throw UsageError("bivariate term needs a recurrence and a summation symbol");
  std::string sum_variable = product.symbols()[s - 1];
  std::string rec_variable = product.symbols()[s - 2];
  CoefficientField field = product.field();
  RationalFunction ratio_k = product.shift_ratio(s - 1);
  RationalFunction ratio_n = product.shift_ratio(s - 2);
  return BivariateHyperTerm{std::move(sum_variable), std::move(rec_variable), std::move(field),
                            std::move(ratio_k),      std::move(ratio_n),      std::move(product)};
}

std::optional<Rational> BivariateHyperTerm::evaluate(const Integer& n, const Integer& k,
                                                     std::span<const Integer> params) const {
  std::vector<Integer> point(params.begin(), params.end());
  point.push_back(n);
  point.push_back(k);
  return product.evaluate(point);
}

bool BivariateHyperTerm::compatible() const {
  return ratio_n.shift(1) * ratio_k == shift_parameter(ratio_k, rec_index(), 1) * ratio_n;
}

RationalFunction shift_parameter(const RationalFunction& r, std::size_t index, long offset) {
  return r.map_coefficients([&](const FieldElement& c) { return c.shift_parameter(index, Rational(offset)); });
}

std::optional<Rational> evaluate_certificate_product(const RationalFunction& r, const FactorProduct& product,
                                                     std::span<const Integer> point) {
  const std::size_t var = product.symbols().size() - 1;
  const std::vector<Rational> params(point.begin(), point.begin() + static_cast<long>(var));
  auto specialize = [&](const Polynomial& p) -> std::optional<MultiPoly> {
    MultiPoly out;
    MultiPoly power{1};
    for (const FieldElement& c : p.coefficients()) {
      const auto v = c.evaluate(params);
      if (!v) return std::nullopt;
      out += power.scaled(*v);
      power *= MultiPoly::variable(0);
    }
    return out;
  };
  const auto num = specialize(r.num());
  const auto den = specialize(r.den());
  if (!num || !den || den->is_zero()) return std::nullopt;
  const Rational k0(point[var]);
  Germ g = poly_germ(*num, k0);
  g *= poly_germ(*den, k0).pow(-1);
  const auto t = product.germ_along(point, var);
  if (!t) return std::nullopt;
  g *= *t;
  return g.value();
}

}  // namespace catalan
