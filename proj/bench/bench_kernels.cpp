// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hurwitz/endomorphism.hpp"
#include "hurwitz/kernels.hpp"

using namespace hurwitz;

namespace {

RingPtr ring_for(int which) {
  switch (which) {
    case 0: return FiniteRing::create(RingSpec::monomial(3, 2));
    case 1: return FiniteRing::create(RingSpec::matrix(2, 2));
    default: return FiniteRing::create(RingSpec::galois(2, 3));
  }
}

std::vector<Elem> every_element(const FiniteRing& r) {
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < r.size(); ++i) out.emplace_back(i);
  return out;
}

template <bool Parallel>
void BM_RingLaws(benchmark::State& state) {
  const RingPtr r = ring_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto v = Parallel ? kernels::parallel::ring_law_violations(*r) : kernels::serial::ring_law_violations(*r);
    benchmark::DoNotOptimize(v);
  }
  state.SetLabel(r->name());
}

template <bool Parallel>
void BM_AnnihilatorScan(benchmark::State& state) {
  const RingPtr r = FiniteRing::create(RingSpec::monomial(4, 2).with_endo(EndoKind::Identity));
  const std::vector<Elem> all = every_element(*r);
  const std::vector<Elem> fs{r->monomial_generator(0), r->monomial_generator(3)};
  for (auto _ : state) {
    auto out = Parallel ? kernels::parallel::annihilator_scan(*r, all, fs, Side::Left)
                        : kernels::serial::annihilator_scan(*r, all, fs, Side::Left);
    benchmark::DoNotOptimize(out);
  }
}

template <bool Parallel>
void BM_ClosedMasks(benchmark::State& state) {
  const RingPtr r = ring_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = Parallel ? kernels::parallel::closed_masks(*r, true, false, nullptr)
                        : kernels::serial::closed_masks(*r, true, false, nullptr);
    benchmark::DoNotOptimize(out);
  }
  state.SetLabel(r->name());
}

}  // namespace

BENCHMARK(BM_RingLaws<false>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RingLaws<true>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnnihilatorScan<false>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AnnihilatorScan<true>)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ClosedMasks<false>)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedMasks<true>)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
