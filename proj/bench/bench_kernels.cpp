#include <benchmark/benchmark.h>

#include <cstdint>

#include "purespin/connection.hpp"
#include "purespin/matrix.hpp"
#include "purespin/pure.hpp"
#include "purespin/rng.hpp"

using purespin::Matrix;
using purespin::Rng;
using purespin::Scalar;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.small_scalar();
  return m;
}

Matrix sparse_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.chance(1, 4)) m.at(r, c) = rng.small_scalar();
  return m;
}

void BM_mul_serial(benchmark::State& state) {
  const auto d = std::size_t(state.range(0));
  const Matrix a = random_matrix(d, d, 1);
  const Matrix b = random_matrix(d, d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(purespin::mul_serial(a, b));
}

void BM_mul_parallel(benchmark::State& state) {
  const auto d = std::size_t(state.range(0));
  const Matrix a = random_matrix(d, d, 1);
  const Matrix b = random_matrix(d, d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(purespin::mul(a, b));
}

void BM_rref_serial(benchmark::State& state) {
  const auto d = std::size_t(state.range(0));
  const Matrix m = sparse_matrix(d, d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(purespin::rref_serial(m));
}

void BM_rref_parallel(benchmark::State& state) {
  const auto d = std::size_t(state.range(0));
  const Matrix m = sparse_matrix(d, d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(purespin::rref(m));
}

void BM_pure_subspace(benchmark::State& state) {
  const auto I = purespin::random_isotropic(5, 2, 77);
  for (auto _ : state) benchmark::DoNotOptimize(purespin::pure_subspace(I));
}

void BM_twistor_components(benchmark::State& state) {
  Rng rng(99);
  const auto c = purespin::random_connection(3, rng);
  const auto j =
      purespin::SpinorJet::constant(purespin::Spinor::unit(3));
  for (auto _ : state)
    for (int a = 1; a <= 6; ++a)
      benchmark::DoNotOptimize(purespin::twistor_component(c, j, a));
}

}  // namespace

BENCHMARK(BM_mul_serial)->Arg(32)->Arg(96)->Arg(192);
BENCHMARK(BM_mul_parallel)->Arg(32)->Arg(96)->Arg(192);
BENCHMARK(BM_rref_serial)->Arg(64)->Arg(160);
BENCHMARK(BM_rref_parallel)->Arg(64)->Arg(160);
BENCHMARK(BM_pure_subspace);
BENCHMARK(BM_twistor_components);

BENCHMARK_MAIN();
