#include "catalan/sweeps.hpp"

#include "catalan/errors.hpp"

namespace catalan {

namespace {

std::size_t at(long i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<IdentityReport> sweep_identity1(Range s, Execution execution) {
  if (s.lo < 0) throw UsageError("identity1: s must be nonnegative");
  std::vector<IdentityReport> reports(at(s.size()));
  for_each_index(reports.size(), execution, [&](std::size_t i) {
    const long value = s.lo + static_cast<long>(i);
    auto& r = reports[i];
    r.identity = "identity1";
    r.parameters = {{"s", value}};
    r.lhs = lhs_identity1(value);
    r.rhs = 0;
    r.documented_exception = value == 0;
  });
  return reports;
}

std::vector<IdentityReport> sweep_identity2prime(Range l, Range m, Execution execution) {
  std::vector<std::pair<long, long>> cells;
  for (long lv = l.lo; lv <= l.hi; ++lv)
    for (long mv = std::max(m.lo, 1L); mv <= std::min(m.hi, lv); ++mv) cells.emplace_back(lv, mv);
  std::vector<IdentityReport> reports(cells.size());
  for_each_index(cells.size(), execution, [&](std::size_t i) {
    const auto [lv, mv] = cells[i];
    auto& r = reports[i];
    r.identity = "identity2prime";
    r.parameters = {{"l", lv}, {"m", mv}};
    r.lhs = lhs_identity2prime(lv, mv);
    r.rhs = rhs_identity2prime(mv);
  });
  return reports;
}

std::vector<IdentityReport> sweep_recurrence_a(Range l, Range m, Execution execution) {
  // One task per l: the recurrence fills A(l, .) sequentially in m.
  std::vector<std::vector<IdentityReport>> per_l(at(l.size()));
  for_each_index(per_l.size(), execution, [&](std::size_t i) {
    const long lv = l.lo + static_cast<long>(i);
    const long m_hi = std::min(m.hi, lv);
    if (m_hi < 1) return;
    const auto table = a_recurrence_table(lv, m_hi);
    for (long mv = std::max(m.lo, 1L); mv <= m_hi; ++mv) {
      IdentityReport r;
      r.identity = "recurrenceA";
      r.parameters = {{"l", lv}, {"m", mv}};
      r.lhs = table[at(mv)];
      r.rhs = lhs_identity2prime(lv, mv);
      per_l[i].push_back(std::move(r));
    }
  });
  std::vector<IdentityReport> reports;
  for (auto& chunk : per_l)
    for (auto& r : chunk) reports.push_back(std::move(r));
  return reports;
}

std::vector<IdentityReport> sweep_identity3(Range m, Range l_offset, Execution execution) {
  if (m.lo < 0 || l_offset.lo < 0) throw UsageError("identity3: m and l - m must be nonnegative");
  std::vector<std::pair<long, long>> cells;
  for (long mv = m.lo; mv <= m.hi; ++mv)
    for (long off = l_offset.lo; off <= l_offset.hi; ++off) cells.emplace_back(mv + off, mv);
  std::vector<IdentityReport> reports(cells.size());
  for_each_index(cells.size(), execution, [&](std::size_t i) {
    const auto [lv, mv] = cells[i];
    auto& r = reports[i];
    r.identity = "identity3";
    r.parameters = {{"l", lv}, {"m", mv}};
    r.lhs = lhs_identity3(lv, mv);
    r.rhs = rhs_identity3(lv, mv);
  });
  return reports;
}

SweepSummary summarize(const std::vector<IdentityReport>& reports) {
  SweepSummary summary;
  for (const auto& r : reports) {
    if (r.documented_exception) {
      summary.exceptions.push_back(r);
      continue;
    }
    ++summary.checked;
    if (r.equal())
      ++summary.passed;
    else if (!summary.first_counterexample)
      summary.first_counterexample = r;
  }
  return summary;
}

}  // namespace catalan
