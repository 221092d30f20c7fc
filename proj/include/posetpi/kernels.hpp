#pragma once

// Data-parallel inner loops of the elimination code. Every kernel exists as a
// plain serial loop (the reference the tests compare against) and as an
// OpenMP loop over independent rows or columns. Both perform the same integer
// operations per entry, so their results are bit-identical.

#include "posetpi/int_matrix.hpp"

#include <cstddef>
#include <span>

namespace posetpi {

enum class Exec : std::uint8_t { Serial, Parallel };

namespace kernels {

/// Below this many touched entries the parallel variants run serially.
inline constexpr std::size_t parallel_threshold = 4096;

/// row(target) -= factor · row(source), restricted to columns ≥ first.
struct Update {
  std::size_t target = 0;
  Integer factor;
};

namespace serial {
void subtract_row_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first);
void subtract_col_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
}  // namespace serial

namespace parallel {
void subtract_row_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first);
void subtract_col_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
}  // namespace parallel

inline void subtract_row_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates,
                                   std::size_t first, Exec exec) {
  if (exec == Exec::Parallel)
    parallel::subtract_row_multiples(m, source, updates, first);
  else
    serial::subtract_row_multiples(m, source, updates, first);
}

inline void subtract_col_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates,
                                   std::size_t first, Exec exec) {
  if (exec == Exec::Parallel)
    parallel::subtract_col_multiples(m, source, updates, first);
  else
    serial::subtract_col_multiples(m, source, updates, first);
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, Exec exec) {
  return exec == Exec::Parallel ? parallel::multiply(a, b) : serial::multiply(a, b);
}

/// Number of threads the parallel kernels would use (1 without OpenMP).
int max_threads() noexcept;

}  // namespace kernels
}  // namespace posetpi
