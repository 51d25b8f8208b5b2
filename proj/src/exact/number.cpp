#include "catalan/exact/number.hpp"

#include "catalan/errors.hpp"

namespace catalan {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace catalan
