#include <krchar/graded.hpp>

#include <benchmark/benchmark.h>

using namespace krchar;

namespace {

const RootSystem& d5()
{
    static const RootSystem rs = build_root_system(LieType::parse("D5"));
    return rs;
}

} // namespace

// Cold: every memo table is dropped before each iteration.
void BM_GchN_2omega3(benchmark::State& state)
{
    const int ell = static_cast<int>(state.range(0));
    for (auto _ : state) {
        state.PauseTiming();
        memo::clear();
        state.ResumeTiming();
        benchmark::DoNotOptimize(gch_N(d5(), Weight{0, 0, 2, 0, 0}, ell));
    }
}
BENCHMARK(BM_GchN_2omega3)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_GchN_m_omega2(benchmark::State& state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        state.PauseTiming();
        memo::clear();
        state.ResumeTiming();
        benchmark::DoNotOptimize(gch_N(d5(), Weight{0, m, 0, 0, 0}, 3));
    }
}
BENCHMARK(BM_GchN_m_omega2)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TensorDecompose(benchmark::State& state)
{
    const Weight a{0, 1, 0, 0, 0};
    const Weight b{0, static_cast<int>(state.range(0)), 0, 1, 1};
    for (auto _ : state) {
        state.PauseTiming();
        memo::clear();
        state.ResumeTiming();
        benchmark::DoNotOptimize(tensor_decompose(d5(), a, b));
    }
}
BENCHMARK(BM_TensorDecompose)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_Freudenthal(benchmark::State& state)
{
    const Weight l{1, static_cast<int>(state.range(0)), 1, 0, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(freudenthal(d5(), l));
}
BENCHMARK(BM_Freudenthal)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_MatrixIdentity(benchmark::State& state)
{
    const int ell = static_cast<int>(state.range(0));
    const auto ms = ModuleSpec::adjoint(d5(), ell);
    const auto gamma = kr_gamma(d5(), Weight{0, 0, 2, 0, 0}, ell);
    for (auto _ : state) {
        state.PauseTiming();
        memo::clear();
        state.ResumeTiming();
        benchmark::DoNotOptimize(verify_AE_identity(d5(), ms, gamma));
    }
}
BENCHMARK(BM_MatrixIdentity)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
