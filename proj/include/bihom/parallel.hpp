#ifndef BIHOM_PARALLEL_HPP
#define BIHOM_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bihom {

/// Execution mode for the enumeration kernels.  Serial is the reference
/// implementation; Parallel uses OpenMP when compiled in and must produce
/// bit-identical results (first-witness selection is by minimum index).
enum class ExecMode { Serial, Parallel };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
  if (std::getenv("BIHOM_SERIAL") != nullptr) return ExecMode::Serial;
  return ExecMode::Parallel;
#else
  return ExecMode::Serial;
#endif
}

constexpr std::size_t kNoViolation = static_cast<std::size_t>(-1);

/// Index of the lexicographically first item with violates(i) == true, or
/// kNoViolation.  The predicate must be pure.
template <typename Violates>
std::size_t first_violation(std::size_t count, ExecMode mode, Violates&& violates) {
  if (mode == ExecMode::Serial) {
    for (std::size_t i = 0; i < count; ++i)
      if (violates(i)) return i;
    return kNoViolation;
  }
#ifdef _OPENMP
  // Scan in blocks so a hit near the front stops the sweep early; within a
  // block the reduction keeps the minimum index, which makes the result
  // independent of the schedule.
  const long long n = static_cast<long long>(count);
  const long long block = 4096;
  long long best = n;
  for (long long lo = 0; lo < n && best == n; lo += block) {
    const long long hi = lo + block < n ? lo + block : n;
    long long local_best = n;
#pragma omp parallel for schedule(static) reduction(min : local_best)
    for (long long i = lo; i < hi; ++i) {
      if (i < local_best && violates(static_cast<std::size_t>(i)))
        local_best = i;
    }
    if (local_best < best) best = local_best;
  }
  return best == n ? kNoViolation : static_cast<std::size_t>(best);
#else
  for (std::size_t i = 0; i < count; ++i)
    if (violates(i)) return i;
  return kNoViolation;
#endif
}

/// Runs fill(i) for every i in [0, count); fill must write to disjoint
/// locations.  Used for linear-system assembly.
template <typename Fill>
void indexed_fill(std::size_t count, ExecMode mode, Fill&& fill) {
  if (mode == ExecMode::Serial) {
    for (std::size_t i = 0; i < count; ++i) fill(i);
    return;
  }
#ifdef _OPENMP
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) fill(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < count; ++i) fill(i);
#endif
}

}  // namespace bihom

#endif
