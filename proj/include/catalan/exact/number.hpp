#pragma once

#include <gmpxx.h>

#include <string>

namespace catalan {

// Arbitrary precision scalars. mpq_class keeps values canonical (denominator
// positive, lowest terms) after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

inline std::string to_string(const Rational& value) { return value.get_str(); }

/// Builds num/den in lowest terms. Throws DomainError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace catalan
