#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catalan/exact/rational_function.hpp"

namespace catalan {

/// c_0 + sum_i c_i x_i with integer coefficients over a term's symbol list.
struct LinearForm {
  Integer constant = 0;
  std::vector<Integer> coefficients;  // by symbol index; missing entries are zero

  Integer coefficient(std::size_t symbol) const;
  Integer evaluate(std::span<const Integer> point) const;
  MultiPoly to_poly() const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// One multiplicative factor of a hypergeometric term, raised to `exponent`.
struct Factor {
  enum class Kind {
    Polynomial,  // poly
    Factorial,   // arg!
    Binomial,    // binomial(arg, lower), falling-factorial convention
    Catalan,     // C_arg
    Power,       // base^arg
  };
  Kind kind = Kind::Polynomial;
  int exponent = 1;
  MultiPoly poly;
  LinearForm arg;
  LinearForm lower;
  Rational base = 1;
};

/// Leading behaviour of a value along a one-variable perturbation x -> x + eps:
/// coefficient * eps^order, or identically zero on the whole line.
struct Germ {
  long order = 0;
  Rational coefficient = 1;
  bool identically_zero = false;

  static Germ zero() { return Germ{0, 0, true}; }
  Germ& operator*=(const Germ& other);
  Germ pow(int exponent) const;  // nullopt-free: caller rejects 0^negative
  /// Value at eps = 0; nullopt for a pole.
  std::optional<Rational> value() const;
};

/// A hypergeometric term in product form: constant * prod factors. This is
/// the direct evaluator; unlike the shift ratio it is meaningful where
/// factors vanish.
class FactorProduct {
 public:
  FactorProduct() = default;
  FactorProduct(std::vector<std::string> symbols, Rational constant, std::vector<Factor> factors);

  const std::vector<std::string>& symbols() const { return symbols_; }
  const Rational& constant() const { return constant_; }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Exact value at an integer point (one coordinate per symbol); nullopt
  /// where a factor is undefined (factorial of a negative integer, division by zero).
  std::optional<Rational> evaluate(std::span<const Integer> point) const;

  /// Germ along symbol `var`; factorial poles are tracked as simple poles so
  /// that zeros and poles of neighbouring factors cancel without limits of
  /// the generalized binomial. nullopt where even the germ is undefined.
  std::optional<Germ> germ_along(std::span<const Integer> point, std::size_t var) const;

  /// t(.., x_shift + 1, ..) / t(..) as a rational function in the last symbol
  /// over the field of the preceding symbols.
  RationalFunction shift_ratio(std::size_t shift_symbol) const;

  /// Field of all symbols but the last.
  CoefficientField field() const;

 private:
  std::vector<std::string> symbols_;
  Rational constant_ = 1;
  std::vector<Factor> factors_;
};

/// Converts a MultiPoly over (field params..., var) to a Polynomial in var.
Polynomial to_polynomial(const MultiPoly& p, const std::string& variable, const CoefficientField& field);
/// Inverse of to_polynomial for the given variable index.
MultiPoly to_multi_poly(const Polynomial& p, std::size_t var_index);
/// Collapses a rational function in k over Q(params) into one MultiPoly
/// fraction over (params..., k), cleared of rational denominators.
std::pair<MultiPoly, MultiPoly> to_fraction(const RationalFunction& r);

/// Univariate hypergeometric term t(k) over Q(params).
struct HyperTerm {
  std::string variable;
  CoefficientField field;
  RationalFunction ratio;  // t(k+1)/t(k)
  FactorProduct product;   // symbols: field params..., variable

  /// Builds the ratio from the product; the product's last symbol is the variable.
  static HyperTerm from_product(FactorProduct product);
  std::optional<Rational> evaluate(const Integer& k, std::span<const Integer> params) const;
};

/// F(n, k): summation variable k, recurrence variable n, over Q(params).
struct BivariateHyperTerm {
  std::string sum_variable;
  std::string rec_variable;
  CoefficientField field;     // params..., rec_variable
  RationalFunction ratio_k;   // F(n, k+1)/F(n, k), rational in k
  RationalFunction ratio_n;   // F(n+1, k)/F(n, k), rational in k
  FactorProduct product;      // symbols: params..., rec_variable, sum_variable

  static BivariateHyperTerm from_product(FactorProduct product);
  std::size_t rec_index() const { return field.size() - 1; }
  std::size_t param_count() const { return field.size() - 1; }
  std::optional<Rational> evaluate(const Integer& n, const Integer& k, std::span<const Integer> params) const;
  /// ratio_n(n, k+1) ratio_k(n, k) == ratio_k(n+1, k) ratio_n(n, k).
  bool compatible() const;
};

/// Shifts the field parameter `index` by `offset` in every coefficient.
RationalFunction shift_parameter(const RationalFunction& r, std::size_t index, long offset);

/// R(point) * F(point), resolving poles of R against zeros of F along the
/// last symbol. `r` is rational in the last symbol over the preceding ones.
std::optional<Rational> evaluate_certificate_product(const RationalFunction& r, const FactorProduct& product,
                                                     std::span<const Integer> point);

}  // namespace catalan
