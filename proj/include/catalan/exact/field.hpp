#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catalan/exact/multi_poly.hpp"

namespace catalan {

/// Q(p_0, ..., p_{n-1}): rationals extended by the named parameters.
///
/// An empty parameter list is plain Q. The names are shared, so copying a
/// field is cheap; two fields compare equal when their name lists match.
class CoefficientField {
 public:
  CoefficientField() : params_(std::make_shared<const std::vector<std::string>>()) {}
  explicit CoefficientField(std::vector<std::string> parameters);

  std::size_t size() const { return params_->size(); }
  const std::vector<std::string>& parameters() const { return *params_; }
  const std::string& name(std::size_t index) const { return params_->at(index); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same field with one more parameter appended.
  CoefficientField extended(const std::string& name) const;

  friend bool operator==(const CoefficientField& a, const CoefficientField& b) {
    return a.params_ == b.params_ || *a.params_ == *b.params_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> params_;
};

/// Element of a CoefficientField: a reduced ratio num/den of MultiPolys in the
/// parameters. Canonical form: gcd(num, den) = 1, den has leading coefficient
/// 1, and zero is 0/1, so structural equality is value equality.
class FieldElement {
 public:
  FieldElement() : den_(Rational(1)) {}
  FieldElement(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT
  FieldElement(long value) : FieldElement(Rational(value)) {}              // NOLINT
  explicit FieldElement(MultiPoly num) : num_(std::move(num)), den_(Rational(1)) {}
  FieldElement(MultiPoly num, MultiPoly den);

  static FieldElement parameter(std::size_t index) { return FieldElement(MultiPoly::variable(index)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1; }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  /// Value when no parameter occurs; UsageError otherwise.
  Rational rational_value() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  FieldElement inverse() const;
  FieldElement pow(int exponent) const;

  /// Parameter `index` -> parameter + offset.
  FieldElement shift_parameter(std::size_t index, const Rational& offset) const;
  /// Fixes one parameter; DomainError if the denominator vanishes there.
  FieldElement specialize(std::size_t index, const Rational& value) const;
  /// Value at a full parameter assignment; nullopt where the denominator vanishes.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  /// Number of terms in num and den; a cheap size measure for pivoting.
  std::size_t weight() const { return num_.term_count() + den_.term_count(); }

  std::string to_string(std::span<const std::string> names) const;

 private:
  struct Reduced {};
  FieldElement(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace catalan
