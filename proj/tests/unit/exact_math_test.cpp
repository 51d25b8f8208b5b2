#include <random>

#include "catalan/errors.hpp"
#include "catalan/exact/linear_algebra.hpp"
#include "catalan/exact/rational_function.hpp"
#include "doctest.h"

using namespace catalan;

namespace {

// Polynomial in k over Q from integer coefficients, lowest degree first.
Polynomial qpoly(std::initializer_list<long> coeffs) {
  std::vector<FieldElement> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial("k", CoefficientField(), c);
}

const CoefficientField kFieldS({"s"});

Polynomial spoly(std::vector<FieldElement> coeffs) { return Polynomial("k", kFieldS, std::move(coeffs)); }

FieldElement s_param() { return FieldElement::parameter(0); }

Polynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<FieldElement> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = FieldElement(coef(rng));
  return Polynomial("k", CoefficientField(), c);
}

}  // namespace

TEST_CASE("multivariate gcd and exact division") {
  const MultiPoly x = MultiPoly::variable(0);
  const MultiPoly y = MultiPoly::variable(1);
  const MultiPoly g = gcd((x + y) * (x - y), (x + y) * (x + y));
  CHECK(g == x + y);
  CHECK(gcd(x * y + MultiPoly(2), MultiPoly(3)) == MultiPoly(1));
  CHECK(((x + y).pow(3)).divide_exact(x + y)->divide_exact((x + y).pow(2)) == MultiPoly(1));
  CHECK_FALSE((x * x + MultiPoly(1)).divide_exact(x + MultiPoly(1)).has_value());
  const std::vector<std::string> names{"l", "m"};
  CHECK((MultiPoly(-1) - x * x.scaled(Rational(3, 2)) + y).to_string(names) == "-3/2*l^2 + m - 1");
}

TEST_CASE("field elements are reduced and canonical") {
  const FieldElement s = s_param();
  const FieldElement a = (s * s - FieldElement(1)) / (s - FieldElement(1));
  CHECK(a == s + FieldElement(1));
  CHECK(a.den() == MultiPoly(1));
  CHECK((s / (FieldElement(2) * s)).rational_value() == Rational(1, 2));
  CHECK_THROWS_AS(FieldElement(0).inverse(), DomainError);
  const FieldElement b = FieldElement(1) / (s * (s + FieldElement(1)));
  CHECK_FALSE(b.evaluate(std::vector<Rational>{0}).has_value());
  CHECK(*b.evaluate(std::vector<Rational>{2}) == Rational(1, 6));
  CHECK(b.shift_parameter(0, 1) == FieldElement(1) / ((s + FieldElement(1)) * (s + FieldElement(2))));
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(qpoly({-1, 0, 1}), qpoly({1, -2, 1})) == qpoly({-1, 1}));
  CHECK(poly_gcd(qpoly({2, 4}), qpoly({})) ==
        Polynomial("k", CoefficientField(), {FieldElement(Rational(1, 2)), FieldElement(1)}));
  CHECK(poly_gcd(qpoly({1, 0, 1}), qpoly({3, 1})) == qpoly({1}));
  CHECK(poly_gcd(qpoly({}), qpoly({})).is_zero());
  CHECK_THROWS_AS(poly_gcd(qpoly({1, 1}), Polynomial("n", CoefficientField(), {FieldElement(1)})), UsageError);
}

TEST_CASE("poly_gcd over Q(s)") {
  const FieldElement s = s_param();
  const Polynomial k_plus_s = spoly({s, 1});
  const Polynomial p = k_plus_s * spoly({-1, 1});
  const Polynomial q = k_plus_s * spoly({2, 1});
  CHECK(poly_gcd(p, q) == k_plus_s);
  CHECK(poly_gcd(spoly({s, 1}), spoly({s + FieldElement(1), 1})).degree() == 0);
}

TEST_CASE("poly_shift examples") {
  CHECK(poly_shift(qpoly({0, 0, 1}), 1) == qpoly({1, 2, 1}));
  const Polynomial p = qpoly({3, -1, 4, 1});
  CHECK(poly_shift(p, 0) == p);
  CHECK(poly_shift(qpoly({0, 1, 1}), 1) == qpoly({2, 3, 1}));
  CHECK(qpoly({}).degree() == kMinusInfinity);
}

TEST_CASE("resultant") {
  CHECK(resultant(qpoly({-1, 1}), qpoly({-3, 1})) == FieldElement(-2));
  CHECK(resultant(qpoly({-1, 0, 1}), qpoly({-1, 1})).is_zero());
  // Res(k^2 + 1, k + 3) = (-3)^2 + 1
  CHECK(resultant(qpoly({1, 0, 1}), qpoly({3, 1})) == FieldElement(10));
}

TEST_CASE("dispersion_set examples") {
  CHECK(dispersion_set(qpoly({0, 1}), qpoly({-3, 1})) == std::vector<long>{3});
  CHECK(dispersion_set(qpoly({0, 1}), qpoly({1, 1})).empty());
  CHECK(dispersion_set(qpoly({0, 1}), qpoly({0, 1})) == std::vector<long>{0});
  CHECK_THROWS_AS(dispersion_set(qpoly({}), qpoly({0, 1})), UsageError);
  // (k+1)(k+5) against k: roots -1, -5 of p; q(k+j) = k+j has root -j.
  CHECK(dispersion_set(qpoly({5, 6, 1}), qpoly({0, 1})) == std::vector<long>{1, 5});
}

TEST_CASE("dispersion_set over Q(s) only reports parameter-free shifts") {
  const FieldElement s = s_param();
  CHECK(dispersion_set(spoly({s, 1}), spoly({s - FieldElement(2), 1})) == std::vector<long>{2});
  CHECK(dispersion_set(spoly({0, 1}), spoly({s, 1})).empty());
  const Polynomial p = spoly({FieldElement(1), FieldElement(2)}) * spoly({-s, 1});
  const Polynomial q = spoly({FieldElement(3) - s, FieldElement(2)}) * spoly({FieldElement(2) - s, FieldElement(2)});
  CHECK(dispersion_set(p, q).empty());
}

TEST_CASE("solve_degree_bounded examples") {
  const auto x = solve_degree_bounded(qpoly({1}), qpoly({1}), qpoly({1}), 1);
  REQUIRE(x.has_value());
  CHECK(*x == qpoly({0, 1}));
  const auto zero = solve_degree_bounded(qpoly({1}), qpoly({1}), qpoly({}), 0);
  REQUIRE(zero.has_value());
  CHECK(zero->is_zero());
  CHECK_FALSE(solve_degree_bounded(qpoly({1, 1}), qpoly({0, 1}), qpoly({0, 1}), 0).has_value());
  CHECK_FALSE(solve_degree_bounded(qpoly({1}), qpoly({1}), qpoly({1}), -1).has_value());
}

TEST_CASE("linear algebra: nullspace and inconsistent systems") {
  const FieldMatrix a{{1, 2, 3}, {2, 4, 6}};
  const auto basis = nullspace(a, 3);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK((v[0] + FieldElement(2) * v[1] + FieldElement(3) * v[2]).is_zero());
  CHECK_FALSE(solve_linear(FieldMatrix{{1, 1}, {1, 1}}, {1, 2}, 2).has_value());
}

TEST_CASE("property: gcd divides both operands") {
  std::mt19937 rng(20201111);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial common = random_poly(rng, 2);
    const Polynomial p = random_poly(rng, 3) * common;
    const Polynomial q = random_poly(rng, 3) * common;
    const Polynomial g = poly_gcd(p, q);
    if (p.is_zero() && q.is_zero()) continue;
    CHECK(p.divmod(g).second.is_zero());
    CHECK(q.divmod(g).second.is_zero());
    if (!common.is_zero() && !p.is_zero() && !q.is_zero()) CHECK(g.divmod(common.monic()).second.is_zero());
  }
}

TEST_CASE("property: shift is a ring homomorphism and composes additively") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> shifts(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = random_poly(rng, 4);
    const Polynomial q = random_poly(rng, 4);
    const long a = shifts(rng);
    const long b = shifts(rng);
    CHECK(poly_shift(p * q, a) == poly_shift(p, a) * poly_shift(q, a));
    CHECK(poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b));
  }
}

TEST_CASE("property: rational function reduction is idempotent") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial den = random_poly(rng, 3);
    if (den.is_zero()) continue;
    const RationalFunction once(random_poly(rng, 3) * random_poly(rng, 1), den * random_poly(rng, 1) + qpoly({1}));
    const RationalFunction twice(once.num(), once.den());
    CHECK(once == twice);
    CHECK(poly_gcd(once.num(), once.den()).degree() <= 0);
  }
}

TEST_CASE("property: dispersion agrees with the direct gcd check") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> root(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial p = qpoly({root(rng), 1}) * qpoly({root(rng), 1}) * (trial % 3 == 0 ? qpoly({1, 0, 1}) : qpoly({1}));
    const Polynomial q = qpoly({root(rng), 1}) * qpoly({root(rng), 2});
    const auto set = dispersion_set(p, q);
    for (long j = 0; j <= 30; ++j) {
      const bool shares = poly_gcd(p, poly_shift(q, j)).degree() > 0;
      CHECK(shares == (std::find(set.begin(), set.end(), j) != set.end()));
    }
  }
}
