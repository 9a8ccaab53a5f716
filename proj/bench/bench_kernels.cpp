// Serial reference vs OpenMP kernels on the enumeration-heavy paths.

#include "wobbly/bundles.hpp"
#include "wobbly/cohom_ring.hpp"
#include "wobbly/strata.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace wobbly;

namespace {

std::vector<PicPoint> points(int count) {
    std::vector<PicPoint> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back(PicPoint{1, PicOffset(Frac(i, 4 * count + 1), Frac(0))});
    return pts;
}

void fiber_count_serial(benchmark::State& state) {
    int h = int(state.range(0));
    auto pts = points(int(state.range(1)));
    for (auto _ : state) {
        long long count = fiber_count_oracle_serial(h, pts);
        benchmark::DoNotOptimize(count);
    }
}

void fiber_count_omp(benchmark::State& state) {
    int h = int(state.range(0));
    auto pts = points(int(state.range(1)));
    for (auto _ : state) {
        long long count = fiber_count_oracle(h, pts);
        benchmark::DoNotOptimize(count);
    }
}

void containment_oracle_serial(benchmark::State& state) {
    int h = int(state.range(0));
    for (auto _ : state) {
        auto table = containment_table_oracle_serial(h);
        benchmark::DoNotOptimize(table);
    }
}

void containment_oracle_omp(benchmark::State& state) {
    int h = int(state.range(0));
    for (auto _ : state) {
        auto table = containment_table_oracle(h);
        benchmark::DoNotOptimize(table);
    }
}

std::vector<EllipticBundle> classification_grid() {
    std::vector<EllipticBundle> bundles;
    for (long long r = 1; r <= 6; ++r)
        for (long long d = -6; d <= 6; ++d)
            for (long long q = 1; q <= 6; ++q)
                bundles.push_back(
                    EllipticBundle(Indecomposable(r, d, PicOffset(Frac(1, q), Frac(0)))));
    return bundles;
}

std::vector<PicPoint> classification_twists() {
    std::vector<PicPoint> twists;
    for (long long d = -3; d <= 3; ++d)
        for (long long q = 1; q <= 4; ++q)
            twists.push_back(PicPoint{d, PicOffset(Frac(1, q), Frac(0))});
    return twists;
}

void classification_sweep_serial(benchmark::State& state) {
    auto bundles = classification_grid();
    auto twists = classification_twists();
    for (auto _ : state) {
        long long wobbly_count = 0;
        for (size_t i = 0; i < bundles.size(); ++i)
            for (const auto& l : twists)
                wobbly_count +=
                    classify_elliptic(bundles[i], l).outcome == Outcome::Wobbly;
        benchmark::DoNotOptimize(wobbly_count);
    }
}

void classification_sweep_omp(benchmark::State& state) {
    auto bundles = classification_grid();
    auto twists = classification_twists();
    for (auto _ : state) {
        long long wobbly_count = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : wobbly_count)
        for (long long i = 0; i < (long long)bundles.size(); ++i)
            for (const auto& l : twists)
                wobbly_count +=
                    classify_elliptic(bundles[size_t(i)], l).outcome == Outcome::Wobbly;
        benchmark::DoNotOptimize(wobbly_count);
    }
}

void ring_triple_products_serial(benchmark::State& state) {
    int n = int(state.range(0));
    auto basis = basis_monomials(n);
    std::vector<RingElement> elems;
    for (const auto& m : basis) elems.push_back(RingElement(n, {{m, Int(1)}}));
    for (auto _ : state) {
        size_t nonzero = 0;
        for (size_t i = 0; i < elems.size(); ++i)
            for (size_t j = 0; j < elems.size(); ++j)
                for (size_t k = 0; k < elems.size(); ++k)
                    nonzero += !((elems[i] * elems[j]) * elems[k]).is_zero();
        benchmark::DoNotOptimize(nonzero);
    }
}

void ring_triple_products_omp(benchmark::State& state) {
    int n = int(state.range(0));
    auto basis = basis_monomials(n);
    std::vector<RingElement> elems;
    for (const auto& m : basis) elems.push_back(RingElement(n, {{m, Int(1)}}));
    for (auto _ : state) {
        long long nonzero = 0;
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : nonzero)
        for (long long i = 0; i < (long long)elems.size(); ++i)
            for (long long j = 0; j < (long long)elems.size(); ++j)
                for (size_t k = 0; k < elems.size(); ++k)
                    nonzero += !((elems[size_t(i)] * elems[size_t(j)]) * elems[k]).is_zero();
        benchmark::DoNotOptimize(nonzero);
    }
}

} // namespace

BENCHMARK(fiber_count_serial)->Args({8, 7})->Args({8, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(fiber_count_omp)->Args({8, 7})->Args({8, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(containment_oracle_serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(containment_oracle_omp)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(classification_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(classification_sweep_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(ring_triple_products_serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(ring_triple_products_omp)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
