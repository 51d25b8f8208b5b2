#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catalan/exact/number.hpp"

namespace catalan {

/// Sparse multivariate polynomial with Rational coefficients.
///
/// Variables are positional (index 0, 1, ...); names live with whoever owns
/// the polynomial. Exponent vectors are stored with trailing zeros trimmed so
/// that a constant has the empty exponent vector regardless of how many
/// variables the surrounding context declares. Terms are kept in
/// lexicographic order with variable 0 most significant, largest first.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  struct LexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, LexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(long constant) : MultiPoly(Rational(constant)) {}  // NOLINT

  static MultiPoly variable(std::size_t index);
  static MultiPoly monomial(Exponents exponents, const Rational& coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; UsageError otherwise.
  Rational constant_value() const;
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// One past the largest variable index that occurs.
  std::size_t variable_bound() const;
  bool depends_on(std::size_t var) const;
  /// Degree in one variable; -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  int total_degree() const;

  /// Coefficients with respect to `var`, indexed by degree. Each entry is free of `var`.
  std::vector<MultiPoly> coefficients_in(std::size_t var) const;
  static MultiPoly from_coefficients(std::size_t var, std::span<const MultiPoly> coefficients);
  MultiPoly leading_coefficient_in(std::size_t var) const;
  /// Coefficient of the lexicographically largest term; zero for the zero polynomial.
  Rational leading_coefficient() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly scaled(const Rational& factor) const;
  MultiPoly pow(unsigned exponent) const;

  /// Quotient when `divisor` divides this polynomial exactly, nullopt otherwise.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Replaces variable `var` by `value`.
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  /// x_var -> x_var + offset.
  MultiPoly shift(std::size_t var, const Rational& offset) const;
  MultiPoly specialize(std::size_t var, const Rational& value) const;
  /// Full evaluation; every occurring variable must have a coordinate in `point`.
  Rational evaluate(std::span<const Rational> point) const;

  /// Scales so the leading coefficient is 1 (zero stays zero).
  MultiPoly monic() const;

  /// Canonical text: terms by descending total degree, ties broken
  /// lexicographically in variable order; integer or p/q coefficients.
  std::string to_string(std::span<const std::string> names) const;

 private:
  void add_term(const Exponents& exponents, const Rational& coefficient);
  Terms terms_;
};

/// Monic greatest common divisor over Q (gcd(0, 0) = 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Content with respect to `var`: gcd of the coefficients of `p` viewed in Q[others][var].
MultiPoly content_in(const MultiPoly& p, std::size_t var);

/// Least common denominator of the coefficients and gcd of the numerators,
/// i.e. the rational c with p / c having coprime integer coefficients and
/// positive leading coefficient.
Rational rational_content(const MultiPoly& p);

}  // namespace catalan
