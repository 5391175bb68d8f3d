#include <benchmark/benchmark.h>

#include <random>

#include "gesbell/bell.hpp"
#include "gesbell/constructions.hpp"
#include "gesbell/gme.hpp"
#include "gesbell/stabilizer.hpp"

namespace {

void BM_Gf2RankWide(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  ges::GF2Matrix m(n);
  for (std::size_t r = 0; r < n / 2; ++r) {
    ges::BitVec row(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (rng() & 1) row.set(q);
    }
    m.append_row(std::move(row));
  }
  for (auto _ : state) benchmark::DoNotOptimize(ges::gf2_rank(m));
}
BENCHMARK(BM_Gf2RankWide)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PauliMultiply(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  ges::PauliOp a = ges::PauliOp::identity(n), b = ges::PauliOp::identity(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() & 1) a.x.set(q);
    if (rng() & 1) a.z.set(q);
    if (rng() & 1) b.x.set(q);
    if (rng() & 1) b.z.set(q);
  }
  for (auto _ : state) benchmark::DoNotOptimize(ges::multiply(a, b));
}
BENCHMARK(BM_PauliMultiply)->Arg(64)->Arg(1024)->Arg(16384);

void BM_MaxConstructionValidate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    ges::StabilizerSet set = ges::blockwise_generators(n);
    benchmark::DoNotOptimize(ges::validate(set));
    benchmark::DoNotOptimize(ges::is_gme_rank(set));
  }
}
BENCHMARK(BM_MaxConstructionValidate)->Arg(50)->Arg(200)->Arg(1000);

void BM_GmeOracle(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ges::StabilizerSet set = ges::max_generators(n);
  ges::OracleOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(ges::is_gme_oracle(set, opts));
}
BENCHMARK(BM_GmeOracle)->Arg(12)->Arg(16)->Arg(20);

void BM_ClassicalBound(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  ges::BellOptions opts;
  opts.verify_classical = false;
  ges::BellExpression expr = ges::synth_max_inequality(n, opts);
  for (auto _ : state) benchmark::DoNotOptimize(ges::classical_bound(expr, opts));
}
BENCHMARK(BM_ClassicalBound)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
