#include "posetpi/kernels.hpp"

#include "posetpi/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posetpi::kernels {

namespace {

void check_product(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimensionMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                                  std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

void row_update(IntMatrix& m, std::size_t source, const Update& u, std::size_t first) {
  auto dst = m.row(u.target);
  const auto src = m.row(source);
  for (std::size_t c = first; c < m.cols(); ++c)
    if (src[c] != 0) dst[c] -= u.factor * src[c];
}

void col_update(IntMatrix& m, std::size_t source, const Update& u, std::size_t first) {
  for (std::size_t r = first; r < m.rows(); ++r) {
    const Integer& s = m(r, source);
    if (s != 0) m(r, u.target) -= u.factor * s;
  }
}

void product_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& out, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Integer& x = a(i, k);
    if (x == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(k, j) != 0) out(i, j) += x * b(k, j);
  }
}

}  // namespace

namespace serial {

void subtract_row_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first) {
  for (const auto& u : updates) row_update(m, source, u, first);
}

void subtract_col_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first) {
  for (const auto& u : updates) col_update(m, source, u, first);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  check_product(a, b);
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) product_row(a, b, out, i);
  return out;
}

}  // namespace serial

namespace parallel {

// Each update touches a distinct target row (or column) and only reads the
// source, so iterations are independent.
void subtract_row_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first) {
  const auto n = static_cast<std::ptrdiff_t>(updates.size());
  [[maybe_unused]] const bool big = updates.size() * (m.cols() - first) >= parallel_threshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::ptrdiff_t k = 0; k < n; ++k) row_update(m, source, updates[static_cast<std::size_t>(k)], first);
}

void subtract_col_multiples(IntMatrix& m, std::size_t source, std::span<const Update> updates, std::size_t first) {
  const auto n = static_cast<std::ptrdiff_t>(updates.size());
  [[maybe_unused]] const bool big = updates.size() * (m.rows() - first) >= parallel_threshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::ptrdiff_t k = 0; k < n; ++k) col_update(m, source, updates[static_cast<std::size_t>(k)], first);
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  check_product(a, b);
  IntMatrix out(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  [[maybe_unused]] const bool big = a.rows() * a.cols() * b.cols() >= parallel_threshold;
#pragma omp parallel for schedule(dynamic, 4) if (big)
  for (std::ptrdiff_t i = 0; i < n; ++i) product_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

}  // namespace parallel

int max_threads() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace posetpi::kernels
