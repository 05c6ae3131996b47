#include <random>

#include <benchmark/benchmark.h>

#include "omega/kernels.hpp"

namespace {

using omega::Field;
using omega::Mat;

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> value(-9, 9);
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(value(rng));
  return m;
}

Field field_for(int64_t which) { return which == 0 ? Field::rationals() : Field::prime(10007); }

template <Mat (*Multiply)(const Mat&, const Mat&)>
void bm_multiply(benchmark::State& state) {
  const Field f = field_for(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat a = random_matrix(f, n, n, 1);
  Mat b = random_matrix(f, n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
}

template <std::vector<std::size_t> (*Rref)(Mat&)>
void bm_rref(benchmark::State& state) {
  const Field f = field_for(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat a = random_matrix(f, n, 2 * n, 3);
  for (auto _ : state) {
    Mat m = a;
    benchmark::DoNotOptimize(Rref(m));
  }
}

// second argument: 0 = Q, 1 = GF(10007)
void sizes(benchmark::internal::Benchmark* b) {
  for (int64_t n : {24, 48, 96})
    for (int64_t f : {0, 1}) b->Args({n, f});
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_TEMPLATE(bm_multiply, omega::serial::multiply)->Apply(sizes);
BENCHMARK_TEMPLATE(bm_multiply, omega::kernels::multiply)->Apply(sizes);
BENCHMARK_TEMPLATE(bm_rref, omega::serial::rref_inplace)->Apply(sizes);
BENCHMARK_TEMPLATE(bm_rref, omega::kernels::rref_inplace)->Apply(sizes);

BENCHMARK_MAIN();
