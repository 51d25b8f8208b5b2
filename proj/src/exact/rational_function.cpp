#include "catalan/exact/rational_function.hpp"

#include "catalan/errors.hpp"

namespace catalan {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(num_.constant_like(FieldElement(1))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (!num_.same_ring(den_)) throw UsageError("rational function over mixed rings");
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = num_.constant_like(FieldElement(1));
    return;
  }
  if (den_.degree() > 0) {
    const Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  const FieldElement lead = den_.leading_coefficient().inverse();
  num_ = num_.scaled(lead);
  den_ = den_.scaled(lead);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent < 0) return (RationalFunction(den_) / RationalFunction(num_)).pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RationalFunction(num_.pow(e), den_.pow(e), Reduced{});
}

RationalFunction RationalFunction::shift(long j) const {
  if (j == 0) return *this;
  // Shifting is a ring automorphism: coprime parts stay coprime, monic stays monic.
  return RationalFunction(poly_shift(num_, j), poly_shift(den_, j), Reduced{});
}

std::optional<FieldElement> RationalFunction::evaluate(const FieldElement& at) const {
  const FieldElement d = den_.evaluate(at);
  if (d.is_zero()) return std::nullopt;
  return num_.evaluate(at) / d;
}

RationalFunction RationalFunction::map_coefficients(const std::function<FieldElement(const FieldElement&)>& fn,
                                                    std::optional<CoefficientField> field) const {
  return RationalFunction(num_.map_coefficients(fn, field), den_.map_coefficients(fn, field));
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace catalan
