#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catalan/exact/number.hpp"

namespace catalan {

/// C_n = binomial(2n, n) / (n + 1). UsageError for n < 0.
Integer catalan_number(long n);

/// Falling-factorial binomial: n (n-1) ... (n-k+1) / k! for k >= 0, zero for k < 0.
/// Defined for every integer n, so binomial_gen(-1, k) = (-1)^k.
Integer binomial_gen(const Integer& n, const Integer& k);
inline Integer binomial_gen(long n, long k) { return binomial_gen(Integer(n), Integer(k)); }

/// sum_{i=0..s} (-1)^i C_i binomial(i+1, s-i). Vanishes for s >= 1; equals 1 at s = 0.
Integer lhs_identity1(long s);

/// An ordered tuple of positive parts.
struct Composition {
  std::vector<long> parts;
  long total() const;
  std::size_t size() const { return parts.size(); }
  friend bool operator==(const Composition&, const Composition&) = default;
};

/// Lazily enumerates the 2^(m-1) compositions of m in lexicographic order of
/// their part lists: (1,...,1) first, (m) last. Holds one composition at a time.
class Compositions {
 public:
  explicit Compositions(long m);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class Compositions;
    explicit iterator(long m);
    Composition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(m_); }
  iterator end() const { return {}; }

 private:
  long m_;
};

/// sum over compositions (m_1..m_t) of m of
///   (-1)^t binomial(l-m_1, m_1-1) prod_{j>=2} binomial(l-m_j, m_j).
/// Requires 1 <= m <= l. Brute force over all 2^(m-1) compositions.
Integer lhs_identity2prime(long l, long m);

/// Closed form the composition sum is claimed to equal: (-1)^m C_{m-1}.
Integer rhs_identity2prime(long m);

/// A(l, m) = -binomial(l-m, m-1) - sum_{k=1..m-1} binomial(l-k, k) A(l, m-k),
/// with `prior` holding A(l, j) for j = 1..m-1 (keyed by j).
Integer a_recurrence_eval(long l, long m, const std::map<long, Integer>& prior);

/// A(l, 1..m_max) filled through the recurrence; index 0 is unused.
std::vector<Integer> a_recurrence_table(long l, long m_max);

/// sum_{k=0..m} (-1)^k binomial(l-m+k, m-k) C_k, for 0 <= m <= l.
Integer lhs_identity3(long l, long m);

/// binomial_gen(l-m-1, m); equals (-1)^m when l = m.
Integer rhs_identity3(long l, long m);

/// lhs_identity3 / rhs_identity3; DomainError where the right side vanishes.
Rational f_value(long l, long m);

/// Outcome of checking one identity at one parameter point.
struct IdentityReport {
  std::string identity;
  std::vector<std::pair<std::string, long>> parameters;
  Integer lhs;
  Integer rhs;
  bool documented_exception = false;  // e.g. identity1 at s = 0

  bool equal() const { return lhs == rhs; }
  std::string describe() const;
};

}  // namespace catalan
