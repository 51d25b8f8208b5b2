#include "catalan/exact/field.hpp"

#include <algorithm>

#include "catalan/errors.hpp"

namespace catalan {

CoefficientField::CoefficientField(std::vector<std::string> parameters) {
  auto sorted = parameters;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UsageError("coefficient field parameters must be distinct");
  params_ = std::make_shared<const std::vector<std::string>>(std::move(parameters));
}

std::optional<std::size_t> CoefficientField::index_of(const std::string& name) const {
  const auto it = std::find(params_->begin(), params_->end(), name);
  if (it == params_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - params_->begin());
}

CoefficientField CoefficientField::extended(const std::string& name) const {
  auto names = *params_;
  names.push_back(name);
  return CoefficientField(std::move(names));
}

namespace {

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("field reduction: gcd does not divide");
  return *std::move(q);
}

}  // namespace

FieldElement::FieldElement(MultiPoly num, MultiPoly den) {
  if (den.is_zero()) throw DomainError("field element with zero denominator");
  if (num.is_zero()) {
    den_ = MultiPoly(Rational(1));
    return;
  }
  if (!den.is_constant()) {
    const MultiPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  const Rational lead = den.leading_coefficient();
  num_ = num.scaled(1 / lead);
  den_ = den.scaled(1 / lead);
}

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw UsageError("field element depends on parameters");
  return num_.constant_value() / den_.constant_value();
}

FieldElement FieldElement::operator-() const { return FieldElement(-num_, den_, Reduced{}); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return FieldElement(a.num_ + b.num_, a.den_);
  return FieldElement(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_rational()) {
    const Rational s = a.rational_value();
    return FieldElement(b.num_.scaled(s), b.den_, FieldElement::Reduced{});
  }
  if (b.is_rational()) {
    const Rational s = b.rational_value();
    return FieldElement(a.num_.scaled(s), a.den_, FieldElement::Reduced{});
  }
  // Cross-cancel first so the product of reduced parts is already reduced.
  const MultiPoly g1 = gcd(a.num_, b.den_);
  const MultiPoly g2 = gcd(b.num_, a.den_);
  MultiPoly num = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
  MultiPoly den = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
  const Rational lead = den.leading_coefficient();
  return FieldElement(num.scaled(1 / lead), den.scaled(1 / lead), FieldElement::Reduced{});
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in coefficient field");
  const Rational lead = num_.leading_coefficient();
  return FieldElement(den_.scaled(1 / lead), num_.scaled(1 / lead), Reduced{});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return FieldElement(num_.pow(e), den_.pow(e), Reduced{});
}

FieldElement FieldElement::shift_parameter(std::size_t index, const Rational& offset) const {
  if (offset == 0 || (!num_.depends_on(index) && !den_.depends_on(index))) return *this;
  const MultiPoly den = den_.shift(index, offset);
  const Rational lead = den.leading_coefficient();
  // A shift is a ring automorphism, so coprimality survives.
  return FieldElement(num_.shift(index, offset).scaled(1 / lead), den.scaled(1 / lead), Reduced{});
}

FieldElement FieldElement::specialize(std::size_t index, const Rational& value) const {
  MultiPoly den = den_.specialize(index, value);
  if (den.is_zero()) throw DomainError("parameter value is a pole of the field element");
  return FieldElement(num_.specialize(index, value), std::move(den));
}

std::optional<Rational> FieldElement::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) return std::nullopt;
  return num_.evaluate(point) / d;
}

std::string FieldElement::to_string(std::span<const std::string> names) const {
  if (den_.is_constant()) {
    const Rational d = den_.constant_value();
    if (d == 1) return num_.to_string(names);
  }
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace catalan
