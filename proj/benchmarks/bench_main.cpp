#include <benchmark/benchmark.h>

#include "modzeta/eichler.hpp"
#include "modzeta/modular.hpp"
#include "modzeta/quad.hpp"
#include "modzeta/series.hpp"
#include "modzeta/verify.hpp"

using namespace modzeta;

static void BM_RateSeries(benchmark::State& state)
{
    PrecisionCtx ctx(static_cast<int>(state.range(0)));
    PrecisionScope scope(ctx);
    Complex x(Real(1) / 4096);
    for (auto _ : state)
        benchmark::DoNotOptimize(binom3_series(x, LinearFactor::of(42, 5), WeightSpec::one(), ctx));
}
BENCHMARK(BM_RateSeries)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_BoundarySeries(benchmark::State& state)
{
    PrecisionCtx ctx(static_cast<int>(state.range(0)));
    PrecisionScope scope(ctx);
    Complex x(Real(-1) / 64);
    WeightSpec w{{Rational(1), Basis::H2_2K}, {Rational(-1, 4), Basis::H2_K}};
    for (auto _ : state)
        benchmark::DoNotOptimize(binom3_series(x, LinearFactor::of(4, 1), w, ctx, true));
}
BENCHMARK(BM_BoundarySeries)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Eichler6(benchmark::State& state)
{
    PrecisionCtx ctx(static_cast<int>(state.range(0)));
    PrecisionScope scope(ctx);
    UhpPoint z(Real("0.5"), Real("0.75"));
    for (auto _ : state)
        benchmark::DoNotOptimize(eichler6(z, 3, ctx));
}
BENCHMARK(BM_Eichler6)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_TheoremRatios(benchmark::State& state)
{
    PrecisionCtx ctx(static_cast<int>(state.range(0)));
    PrecisionScope scope(ctx);
    UhpPoint z(Real(0), Real("1.3"));
    for (auto _ : state)
        benchmark::DoNotOptimize(h3_linear(z, ctx));
}
BENCHMARK(BM_TheoremRatios)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Zeta5Integral(benchmark::State& state)
{
    PrecisionCtx ctx(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta5_integral(ctx));
}
BENCHMARK(BM_Zeta5Integral)->Arg(35)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
