#include "catalan/exact/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

int exponent_at(const MultiPoly::Exponents& e, std::size_t i) {
  return i < e.size() ? e[i] : 0;
}

void trim(MultiPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

MultiPoly::Exponents add_exponents(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  MultiPoly::Exponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponent_at(a, i) + exponent_at(b, i);
  trim(out);
  return out;
}

int total(const MultiPoly::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool MultiPoly::LexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = exponent_at(a, i);
    const int y = exponent_at(b, i);
    if (x != y) return x > y;
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{}, constant);
}

MultiPoly MultiPoly::variable(std::size_t index) {
  Exponents e(index + 1, 0);
  e[index] = 1;
  return monomial(std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(Exponents exponents, const Rational& coefficient) {
  MultiPoly p;
  trim(exponents);
  if (coefficient != 0) p.terms_.emplace(std::move(exponents), coefficient);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw UsageError("constant_value of a non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::size_t MultiPoly::variable_bound() const {
  std::size_t bound = 0;
  for (const auto& [e, c] : terms_) bound = std::max(bound, e.size());
  return bound;
}

bool MultiPoly::depends_on(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const auto& t) { return exponent_at(t.first, var) != 0; });
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exponent_at(e, var));
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::size_t var) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var), -1) + 1));
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    int d = 0;
    if (var < rest.size()) {
      d = rest[var];
      rest[var] = 0;
      trim(rest);
    }
    out[static_cast<std::size_t>(d)].add_term(rest, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coefficients(std::size_t var, std::span<const MultiPoly> coefficients) {
  MultiPoly out;
  for (std::size_t d = 0; d < coefficients.size(); ++d) {
    for (const auto& [e, c] : coefficients[d].terms_) {
      Exponents shifted = e;
      if (shifted.size() <= var) shifted.resize(var + 1, 0);
      shifted[var] += static_cast<int>(d);
      trim(shifted);
      out.add_term(shifted, c);
    }
  }
  return out;
}

MultiPoly MultiPoly::leading_coefficient_in(std::size_t var) const {
  if (terms_.empty()) return {};
  return coefficients_in(var).back();
}

Rational MultiPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.is_constant()) return a.scaled(b.constant_value());
  if (a.is_constant()) return b.scaled(a.constant_value());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly MultiPoly::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c *= factor;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (divisor.is_constant()) return scaled(1 / divisor.constant_value());
  MultiPoly remainder = *this;
  MultiPoly quotient;
  const auto& [lead_e, lead_c] = *divisor.terms_.begin();
  while (!remainder.is_zero()) {
    const auto& [re, rc] = *remainder.terms_.begin();
    Exponents q(std::max(re.size(), lead_e.size()), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = exponent_at(re, i) - exponent_at(lead_e, i);
      if (q[i] < 0) return std::nullopt;
    }
    trim(q);
    const Rational qc = rc / lead_c;
    quotient.add_term(q, qc);
    for (const auto& [de, dc] : divisor.terms_) remainder.add_term(add_exponents(q, de), -qc * dc);
  }
  return quotient;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  if (!depends_on(var)) return *this;
  const auto coeffs = coefficients_in(var);
  MultiPoly out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * value + *it;
  return out;
}

MultiPoly MultiPoly::shift(std::size_t var, const Rational& offset) const {
  if (offset == 0) return *this;
  return substitute(var, variable(var) + MultiPoly(offset));
}

MultiPoly MultiPoly::specialize(std::size_t var, const Rational& value) const {
  return substitute(var, MultiPoly(value));
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e.size() > point.size()) throw UsageError("evaluation point has too few coordinates");
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      power.canonicalize();
      term *= power;
    }
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading_coefficient());
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<const Exponents*, const Rational*>> order;
  order.reserve(terms_.size());
  for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
  // Map order is already lex-descending; a stable sort on total degree keeps it as tie-break.
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return total(*a.first) > total(*b.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : order) {
    Rational coefficient = *c;
    if (first) {
      if (coefficient < 0) out << '-';
    } else {
      out << (coefficient < 0 ? " - " : " + ");
    }
    coefficient = abs(coefficient);
    first = false;
    const bool unit = coefficient == 1;
    bool need_star = false;
    if (!unit || e->empty()) {
      out << coefficient.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e->size(); ++i) {
      if ((*e)[i] == 0) continue;
      if (need_star) out << '*';
      if (i < names.size())
        out << names[i];
      else
        out << 'x' << i;
      if ((*e)[i] != 1) out << '^' << (*e)[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

std::size_t lowest_variable(const MultiPoly& a, const MultiPoly& b) {
  const std::size_t bound = std::max(a.variable_bound(), b.variable_bound());
  for (std::size_t v = 0; v < bound; ++v)
    if (a.depends_on(v) || b.depends_on(v)) return v;
  return bound;
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return *std::move(q);
}

// Pseudo-remainder of a by b in `var`, up to a nonzero factor free of `var`.
MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const MultiPoly lb = b.leading_coefficient_in(var);
  const MultiPoly x = MultiPoly::variable(var);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int shift = a.degree_in(var) - db;
    const MultiPoly la = a.leading_coefficient_in(var);
    a = lb * a - la * x.pow(static_cast<unsigned>(shift)) * b;
  }
  return a;
}

MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return exact(p, content_in(p, var));
}

// Degree of gcd(f, g) after fixing every variable but `var` at a point where
// both leading coefficients survive. It bounds the true gcd degree from above.
std::optional<int> specialized_gcd_degree(const MultiPoly& f, const MultiPoly& g, std::size_t var) {
  const std::size_t bound = std::max(f.variable_bound(), g.variable_bound());
  bool others = false;
  for (std::size_t v = 0; v < bound; ++v) others = others || (v != var && (f.depends_on(v) || g.depends_on(v)));
  if (!others) return std::nullopt;
  for (long attempt = 0; attempt < 4; ++attempt) {
    MultiPoly a = f;
    MultiPoly b = g;
    for (std::size_t v = 0; v < bound; ++v) {
      if (v == var) continue;
      const Rational value(static_cast<long>(17 + 29 * attempt + 13 * static_cast<long>(v) * (attempt + 1)));
      a = a.specialize(v, value);
      b = b.specialize(v, value);
    }
    if (a.degree_in(var) != f.degree_in(var) || b.degree_in(var) != g.degree_in(var)) continue;
    return gcd(a, b).degree_in(var);
  }
  return std::nullopt;
}

}  // namespace

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g;
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MultiPoly(Rational(1));
  if (a == b) return a.monic();
  const std::size_t var = lowest_variable(a, b);
  if (!a.depends_on(var)) return gcd(a, content_in(b, var));
  if (!b.depends_on(var)) return gcd(content_in(a, var), b);

  const MultiPoly ca = content_in(a, var);
  const MultiPoly cb = content_in(b, var);
  const MultiPoly content = gcd(ca, cb);
  MultiPoly f = exact(a, ca);
  MultiPoly g = exact(b, cb);
  if (f.degree_in(var) < g.degree_in(var)) std::swap(f, g);
  if (const auto bound = specialized_gcd_degree(f, g, var)) {
    if (*bound == 0) return content.monic();
    if (*bound == g.degree_in(var)) {
      if (f.divide_exact(g)) return (content * g).monic();
    }
  }
  while (!g.is_zero()) {
    MultiPoly r = pseudo_remainder(f, g, var);
    f = std::move(g);
    g = primitive_part_in(r, var);
    if (!g.is_zero()) g = g.scaled(Rational(1) / rational_content(g));
    if (!g.is_zero() && g.degree_in(var) == 0) {
      f = MultiPoly(Rational(1));
      break;
    }
  }
  return (content * primitive_part_in(f, var)).monic();
}

Rational rational_content(const MultiPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational content = make_rational(num_gcd, den_lcm);
  if (p.leading_coefficient() < 0) content = -content;
  return content;
}

}  // namespace catalan
