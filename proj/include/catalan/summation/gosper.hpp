#pragma once

#include <optional>
#include <string>
#include <variant>

#include "catalan/summation/hyper_term.hpp"

namespace catalan {

struct GosperCertificate {
  RationalFunction r;  // z(k) = r(k) t(k) is an antidifference of t
};

struct NotGosperSummable {
  std::string stage;
  long degree_bound = -1;
};

/// r = (a/b) * c(k+1)/c(k) with gcd(a(k), b(k+j)) = 1 for every j >= 0.
struct GosperForm {
  Polynomial a;
  Polynomial b;
  Polynomial c;
};

GosperForm gosper_normal_form(const RationalFunction& ratio);

/// Largest admissible degree of a polynomial x with p(k) x(k+1) - q(k) x(k)
/// of degree `rhs_degree` (kMinusInfinity for a homogeneous equation); -1
/// when no candidate is nonnegative.
long key_equation_degree_bound(const Polynomial& p, const Polynomial& q, int rhs_degree);

std::variant<GosperCertificate, NotGosperSummable> gosper(const HyperTerm& term);

bool verify_gosper(const HyperTerm& term, const GosperCertificate& cert);

struct TelescopedValue {
  Rational value;
  Rational direct;
  bool endpoint_singular = false;
  bool agrees() const { return value == direct; }
};

/// sum_{k=lower}^{upper} t(k) where `upper` is one of the term's parameters.
class DefiniteSum {
 public:
  DefiniteSum(HyperTerm term, GosperCertificate cert, long lower, std::size_t upper_parameter);

  /// DomainError if a summand inside the range is undefined.
  TelescopedValue evaluate(std::span<const Integer> params) const;

  const HyperTerm& term() const { return term_; }
  const GosperCertificate& certificate() const { return cert_; }

 private:
  HyperTerm term_;
  GosperCertificate cert_;
  long lower_;
  std::size_t upper_;
};

DefiniteSum telescope_definite(const HyperTerm& term, const GosperCertificate& cert, long lower,
                               const std::string& upper_parameter);

}  // namespace catalan
