#pragma once

#include <functional>
#include <optional>
#include <string>

#include "catalan/exact/polynomial.hpp"

namespace catalan {

/// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const std::string& variable() const { return num_.variable(); }
  const CoefficientField& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RationalFunction pow(int exponent) const;

  /// r(k + j).
  RationalFunction shift(long j) const;
  /// Value at a field point; nullopt at a pole.
  std::optional<FieldElement> evaluate(const FieldElement& at) const;
  RationalFunction map_coefficients(const std::function<FieldElement(const FieldElement&)>& fn,
                                    std::optional<CoefficientField> field = std::nullopt) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

}  // namespace catalan
