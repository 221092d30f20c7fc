// Serial vs OpenMP kernels: integer products, Smith forms, and the full RP² cover pipeline.
#include "posetpi/incidence.hpp"
#include "posetpi/poset.hpp"
#include "posetpi/kernels.hpp"
#include "posetpi/pi2.hpp"
#include "posetpi/smith.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace posetpi;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply(a, b, exec_of(state)));
}

void BM_smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = random_matrix(n, n + n / 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, exec_of(state)));
}

// suspension of an n-gon
void BM_pi2_sphere(benchmark::State& state) {
  std::vector<std::vector<std::string>> faces;
  const auto n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    const std::string a = "v" + std::to_string(i), b = "v" + std::to_string((i + 1) % n);
    faces.push_back({"N", a, b});
    faces.push_back({"S", a, b});
  }
  const Poset p = face_poset({faces});
  const IncidenceAssignment inc = assign_incidence(p);
  Pi2Options opt;
  opt.exec = exec_of(state);
  opt.cross_check = false;
  for (auto _ : state) benchmark::DoNotOptimize(pi2_of_2complex(p, inc, opt));
}

}  // namespace

BENCHMARK(BM_multiply)->ArgsProduct({{32, 96, 192}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_smith)->ArgsProduct({{24, 48, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pi2_sphere)->ArgsProduct({{8, 32}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
