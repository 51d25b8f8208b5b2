#pragma once

#include <optional>
#include <vector>

#include "catalan/identities.hpp"
#include "catalan/parallel.hpp"

namespace catalan {

/// Inclusive integer range lo..hi.
struct Range {
  long lo = 0;
  long hi = -1;
  bool empty() const { return hi < lo; }
  long size() const { return empty() ? 0 : hi - lo + 1; }
};

// Range sweeps. Each returns one report per cell, ordered by parameters
// (outer parameter first) independently of how the cells were scheduled.

std::vector<IdentityReport> sweep_identity1(Range s, Execution execution);
/// Cells (l, m) with l in `l`, m in `m`, 1 <= m <= l.
std::vector<IdentityReport> sweep_identity2prime(Range l, Range m, Execution execution);
/// Recurrence-filled A(l, m) against the brute-force composition sum.
std::vector<IdentityReport> sweep_recurrence_a(Range l, Range m, Execution execution);
/// Cells (l, m) with m in `m` and l = m + offset for offset in `l_offset`.
std::vector<IdentityReport> sweep_identity3(Range m, Range l_offset, Execution execution);

struct SweepSummary {
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::vector<IdentityReport> exceptions;
  std::optional<IdentityReport> first_counterexample;
};

SweepSummary summarize(const std::vector<IdentityReport>& reports);

}  // namespace catalan
