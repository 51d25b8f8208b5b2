#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalan/exact/field.hpp"

namespace catalan {

/// Degree reported for the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// Dense univariate polynomial in a named variable over a CoefficientField.
///
/// Coefficients are stored by degree with no trailing zeros, so the zero
/// polynomial has no coefficients at all. Binary operations require both
/// operands to live in the same ring (same variable, same field) and throw
/// UsageError otherwise.
class Polynomial {
 public:
  explicit Polynomial(std::string variable = "k", CoefficientField field = {});
  Polynomial(std::string variable, CoefficientField field, std::vector<FieldElement> coefficients);

  static Polynomial constant(std::string variable, CoefficientField field, const FieldElement& value);
  /// The polynomial `variable` itself.
  static Polynomial identity(std::string variable, CoefficientField field);

  const std::string& variable() const { return variable_; }
  const CoefficientField& field() const { return field_; }
  bool same_ring(const Polynomial& other) const {
    return variable_ == other.variable_ && field_ == other.field_;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement coefficient(int degree) const;
  FieldElement leading_coefficient() const;

  Polynomial constant_like(const FieldElement& value) const { return constant(variable_, field_, value); }
  Polynomial zero_like() const { return Polynomial(variable_, field_); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.same_ring(b) && a.coeffs_ == b.coeffs_;
  }
  Polynomial scaled(const FieldElement& factor) const;
  Polynomial pow(unsigned exponent) const;

  /// Euclidean division: (quotient, remainder) with deg remainder < deg divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  Polynomial monic() const;

  FieldElement evaluate(const FieldElement& at) const;
  /// Applies `fn` to every coefficient, landing in `field` (default: this field).
  Polynomial map_coefficients(const std::function<FieldElement(const FieldElement&)>& fn,
                              std::optional<CoefficientField> field = std::nullopt) const;

  /// Canonical text, descending degree, e.g. "k^2 + (s + 1)*k - 3".
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& other) const;
  void trim();
  std::string variable_;
  CoefficientField field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd; gcd(p, 0) is p made monic and gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// p(k + j) expanded in k.
Polynomial poly_shift(const Polynomial& p, long j);
Polynomial poly_shift(const Polynomial& p, const FieldElement& j);

/// Resultant of p and q with respect to their common variable.
FieldElement resultant(const Polynomial& p, const Polynomial& q);

/// All j >= 0 with deg gcd(p(k), q(k + j)) > 0, ascending. Throws UsageError on zero input.
std::vector<long> dispersion_set(const Polynomial& p, const Polynomial& q);

/// Solves a * x(k + 1) - b * x(k) = c for deg x <= dmax. Underdetermined
/// systems return the solution whose free coordinates are zero; nullopt
/// means no solution of that degree exists (or dmax < 0).
std::optional<Polynomial> solve_degree_bounded(const Polynomial& a, const Polynomial& b,
                                               const Polynomial& c, long dmax);

}  // namespace catalan
