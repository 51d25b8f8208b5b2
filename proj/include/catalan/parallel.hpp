#pragma once

#include <cstddef>
#include <cstdint>

namespace catalan {

enum class Execution { Serial, Parallel };

/// Runs fn(i) for i in [0, n). Serial is the reference path; Parallel shards
/// indices across OpenMP threads. fn must only write to state owned by index i.
template <class Fn>
void for_each_index(std::size_t n, Execution execution, Fn&& fn) {
  if (execution == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

}  // namespace catalan
