#pragma once

#include <initializer_list>

#include "catalan/summation/hyper_term.hpp"

namespace catalan::testing {

// lin({c0, c1, c2}) = c0 + c1*x0 + c2*x1
inline LinearForm lin(std::initializer_list<long> c) {
  LinearForm f;
  auto it = c.begin();
  f.constant = *it++;
  for (; it != c.end(); ++it) f.coefficients.emplace_back(*it);
  return f;
}

inline Factor factorial_of(LinearForm a, int e = 1) {
  Factor f;
  f.kind = Factor::Kind::Factorial;
  f.arg = std::move(a);
  f.exponent = e;
  return f;
}

inline Factor binomial_of(LinearForm a, LinearForm b, int e = 1) {
  Factor f;
  f.kind = Factor::Kind::Binomial;
  f.arg = std::move(a);
  f.lower = std::move(b);
  f.exponent = e;
  return f;
}

inline Factor catalan_of(LinearForm a, int e = 1) {
  Factor f;
  f.kind = Factor::Kind::Catalan;
  f.arg = std::move(a);
  f.exponent = e;
  return f;
}

inline Factor power_of(long base, LinearForm a) {
  Factor f;
  f.kind = Factor::Kind::Power;
  f.base = base;
  f.arg = std::move(a);
  return f;
}

inline Factor poly_of(MultiPoly p, int e = 1) {
  Factor f;
  f.kind = Factor::Kind::Polynomial;
  f.poly = std::move(p);
  f.exponent = e;
  return f;
}

inline MultiPoly x(std::size_t i) { return MultiPoly::variable(i); }

}  // namespace catalan::testing
