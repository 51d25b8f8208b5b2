#include "catalan/identities.hpp"

#include <sstream>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

constexpr unsigned long kMaxLowerIndex = 1UL << 20;

Integer sign(long exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

}  // namespace

Integer catalan_number(long n) {
  if (n < 0) throw UsageError("catalan: n must be nonnegative, got " + std::to_string(n));
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 2UL * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n) + 1);
  return c;
}

Integer binomial_gen(const Integer& n, const Integer& k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  if (k > kMaxLowerIndex) throw SizeError("binomial_gen: lower index too large");
  // GMP evaluates negative n through binomial(-n, k) = (-1)^k binomial(n+k-1, k),
  // which is the falling-factorial convention.
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

Integer lhs_identity1(long s) {
  if (s < 0) throw UsageError("identity1: s must be nonnegative");
  Integer sum = 0;
  for (long i = 0; i <= s; ++i) sum += sign(i) * catalan_number(i) * binomial_gen(i + 1, s - i);
  return sum;
}

long Composition::total() const {
  long t = 0;
  for (long p : parts) t += p;
  return t;
}

Compositions::Compositions(long m) : m_(m) {
  if (m < 1) throw UsageError("compositions: m must be at least 1");
}

Compositions::iterator::iterator(long m) : done_(false) { current_.parts.assign(static_cast<std::size_t>(m), 1); }

Compositions::iterator& Compositions::iterator::operator++() {
  auto& p = current_.parts;
  if (p.size() <= 1) {
    done_ = true;
    return *this;
  }
  // Lexicographic successor: bump the second-to-last part, spread the rest of the last as ones.
  const long tail = p.back() - 1;
  p.pop_back();
  ++p.back();
  p.insert(p.end(), static_cast<std::size_t>(tail), 1);
  return *this;
}

Integer lhs_identity2prime(long l, long m) {
  if (m < 1 || m > l) throw UsageError("identity2prime requires 1 <= m <= l");
  // Factor tables indexed by part size; each cell is still summed composition by composition.
  std::vector<Integer> first(static_cast<std::size_t>(m) + 1);
  std::vector<Integer> later(static_cast<std::size_t>(m) + 1);
  for (long p = 1; p <= m; ++p) {
    first[static_cast<std::size_t>(p)] = binomial_gen(l - p, p - 1);
    later[static_cast<std::size_t>(p)] = binomial_gen(l - p, p);
  }
  Integer sum = 0;
  Integer term;
  for (const Composition& c : Compositions(m)) {
    term = first[static_cast<std::size_t>(c.parts.front())];
    for (std::size_t j = 1; j < c.parts.size() && term != 0; ++j) term *= later[static_cast<std::size_t>(c.parts[j])];
    if (c.parts.size() % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Integer rhs_identity2prime(long m) {
  if (m < 1) throw UsageError("identity2prime requires m >= 1");
  return sign(m) * catalan_number(m - 1);
}

Integer a_recurrence_eval(long l, long m, const std::map<long, Integer>& prior) {
  if (m < 1) throw UsageError("recurrenceA requires m >= 1");
  Integer value = -binomial_gen(l - m, m - 1);
  for (long k = 1; k <= m - 1; ++k) {
    const auto it = prior.find(m - k);
    if (it == prior.end()) throw UsageError("recurrenceA: missing prior value A(l, " + std::to_string(m - k) + ")");
    value -= binomial_gen(l - k, k) * it->second;
  }
  return value;
}

std::vector<Integer> a_recurrence_table(long l, long m_max) {
  std::vector<Integer> table(static_cast<std::size_t>(std::max(m_max, 0L)) + 1);
  std::map<long, Integer> prior;
  for (long m = 1; m <= m_max; ++m) {
    table[static_cast<std::size_t>(m)] = a_recurrence_eval(l, m, prior);
    prior.emplace(m, table[static_cast<std::size_t>(m)]);
  }
  return table;
}

Integer lhs_identity3(long l, long m) {
  if (m < 0 || m > l) throw UsageError("identity3 requires 0 <= m <= l");
  Integer sum = 0;
  for (long k = 0; k <= m; ++k) sum += sign(k) * binomial_gen(l - m + k, m - k) * catalan_number(k);
  return sum;
}

Integer rhs_identity3(long l, long m) { return binomial_gen(l - m - 1, m); }

Rational f_value(long l, long m) {
  const Integer rhs = rhs_identity3(l, m);
  if (rhs == 0)
    throw DomainError("f(m) undefined: binomial(l-m-1, m) = 0 at l=" + std::to_string(l) + ", m=" + std::to_string(m));
  return make_rational(lhs_identity3(l, m), rhs);
}

std::string IdentityReport::describe() const {
  std::ostringstream out;
  out << identity;
  for (const auto& [name, value] : parameters) out << ' ' << name << '=' << value;
  out << ": lhs=" << lhs.get_str() << " rhs=" << rhs.get_str();
  return out.str();
}

}  // namespace catalan
