// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "helson/kernels.hpp"
#include "helson/meromorph.hpp"
#include "helson/primes.hpp"

namespace {

helson::AssembledG reference_model() {
    helson::SpectrumSpec spec;
    spec.alphabet = helson::Alphabet::cubic();
    spec.zeros = {{0.75, 5.0, 1}};
    spec.poles = {{0.85, 2.0, 1}, {0.6, -3.0, 1}};
    spec.sieve_limit = 10'000'000;
    return helson::assemble_from_spec(spec);
}

const std::vector<std::uint32_t>& base() {
    static const auto b = helson::kernels::base_primes(100'000);
    return b;
}

void BM_SieveSerial(benchmark::State& st) {
    const auto hi = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(helson::kernels::sieve_range_serial(2, hi, base(), helson::kSegmentSize));
}

void BM_SieveParallel(benchmark::State& st) {
    const auto hi = static_cast<std::uint64_t>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(helson::kernels::sieve_range_parallel(2, hi, base(), helson::kSegmentSize));
}

void BM_TraceSerial(benchmark::State& st) {
    const auto model = reference_model();
    std::vector<helson::cplx> out(static_cast<std::size_t>(st.range(0)));
    const double dt = 8192.0 / static_cast<double>(out.size());
    for (auto _ : st) {
        helson::kernels::sample_trace_serial(model, -4096.0, dt, out);
        benchmark::ClobberMemory();
    }
}

void BM_TraceParallel(benchmark::State& st) {
    const auto model = reference_model();
    std::vector<helson::cplx> out(static_cast<std::size_t>(st.range(0)));
    const double dt = 8192.0 / static_cast<double>(out.size());
    for (auto _ : st) {
        helson::kernels::sample_trace_parallel(model, -4096.0, dt, out);
        benchmark::ClobberMemory();
    }
}

void BM_EnvelopeSerial(benchmark::State& st) {
    const auto model = reference_model();
    const helson::kernels::EnvelopeGrid grid{1.0, 6.0, 11, -1000.0, 1000.0, 2001};
    for (auto _ : st) benchmark::DoNotOptimize(helson::kernels::envelope_sup_serial(model, grid));
}

void BM_EnvelopeParallel(benchmark::State& st) {
    const auto model = reference_model();
    const helson::kernels::EnvelopeGrid grid{1.0, 6.0, 11, -1000.0, 1000.0, 2001};
    for (auto _ : st) benchmark::DoNotOptimize(helson::kernels::envelope_sup_parallel(model, grid));
}

std::vector<helson::cplx> decaying_samples(std::size_t n) {
    std::vector<helson::cplx> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = std::polar(std::exp(-1e-4 * k), 1e-3 * k);
    return p;
}

void BM_LaplaceSerial(benchmark::State& st) {
    const auto p = decaying_samples(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(helson::kernels::laplace_trapezoid_serial(p, 0.0, 7.7e-4, {1.5, 2.0}));
}

void BM_LaplaceParallel(benchmark::State& st) {
    const auto p = decaying_samples(static_cast<std::size_t>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(helson::kernels::laplace_trapezoid_parallel(p, 0.0, 7.7e-4, {1.5, 2.0}));
}

}  // namespace

BENCHMARK(BM_SieveSerial)->Arg(1 << 22)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveParallel)->Arg(1 << 22)->Arg(1 << 24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceSerial)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceParallel)->Arg(1 << 18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnvelopeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnvelopeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplaceSerial)->Arg(1 << 19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LaplaceParallel)->Arg(1 << 19)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
