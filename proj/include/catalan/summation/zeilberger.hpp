#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catalan/summation/hyper_term.hpp"

namespace catalan {

/// sum_j a_j(n) F(n+j, k) = G(n, k+1) - G(n, k) with G = certificate * F.
struct TelescopedRecurrence {
  std::vector<Polynomial> coefficients;  // a_0 .. a_J in n over Q(params)
  RationalFunction certificate;          // in k over Q(params, n)
  std::optional<Polynomial> inhomogeneous;

  long order() const { return static_cast<long>(coefficients.size()) - 1; }
};

struct NoRecurrenceFound {
  long max_order = 0;
  std::vector<std::string> attempts;
};

std::variant<TelescopedRecurrence, NoRecurrenceFound> zeilberger(const BivariateHyperTerm& term, long max_order);

/// Sample grid for numeric replay: parameter tuples and a range of n.
struct ReplayPlan {
  std::vector<std::vector<long>> parameter_points;
  long n_lo = 0;
  long n_hi = 8;
};

ReplayPlan default_replay_plan(std::size_t parameter_count);

struct ZeilbergerCheck {
  bool algebraic = false;
  bool numeric = false;
  std::size_t samples = 0;
  std::string detail;
  bool ok() const { return algebraic && numeric; }
};

/// f(n) = sum_{k=0}^{n} F(n, k) by direct evaluation; nullopt if a summand is undefined.
std::optional<Rational> natural_sum(const BivariateHyperTerm& term, long n, std::span<const Integer> params);

/// Right side of the summed recurrence at (n, params) from the certificate
/// boundary terms; nullopt where a term is undefined.
std::optional<Rational> boundary_value(const BivariateHyperTerm& term, const TelescopedRecurrence& rec, long n,
                                       std::span<const Integer> params);

/// a_j(n) at concrete parameters; nullopt at a pole of a coefficient.
std::optional<Rational> evaluate_coefficient(const Polynomial& a, long n, std::span<const Integer> params);

ZeilbergerCheck check_zeilberger(const BivariateHyperTerm& term, const TelescopedRecurrence& rec,
                                 const ReplayPlan& plan);
bool verify_zeilberger(const BivariateHyperTerm& term, const TelescopedRecurrence& rec);

}  // namespace catalan
