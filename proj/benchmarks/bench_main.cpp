#include <benchmark/benchmark.h>

#include <numeric>

#include "elliptic/diagram.hpp"
#include "elliptic/dual_complex.hpp"
#include "elliptic/fixtures.hpp"
#include "elliptic/pi1.hpp"
#include "elliptic/quaternion_groups.hpp"
#include "elliptic/torus_curves.hpp"

namespace {

void construct_pi1(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(elliptic::construct_pi1(m, n).size());
}
BENCHMARK(construct_pi1)->Args({6, 6})->Args({12, 7})->Args({25, 24});

void free_action(benchmark::State& state) {
    auto g = elliptic::construct_pi1(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(elliptic::verify_free_action(g).free);
}
BENCHMARK(free_action)->Args({6, 5})->Args({25, 24});

void pi1_associativity(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(elliptic::pi1_is_associative(m, m + 1));
}
BENCHMARK(pi1_associativity)->Arg(3)->Arg(5);

void bilongitude_sweep(benchmark::State& state) {
    long max = state.range(0);
    for (auto _ : state) {
        long found = 0;
        for (long m = 3; m <= max; ++m)
            for (long q = 1; 2 * q < m; ++q)
                if (std::gcd(m, q) == 1) found += static_cast<long>(elliptic::bilongitude_classes(m, q).size());
        benchmark::DoNotOptimize(found);
    }
}
BENCHMARK(bilongitude_sweep)->Arg(100)->Arg(500);

void diagram_map(benchmark::State& state) {
    auto g = elliptic::builtin_graphic(state.range(0) == 0 ? "morse" : "collapsed");
    for (auto _ : state) {
        auto k = elliptic::build_dual(g);
        benchmark::DoNotOptimize(elliptic::diagram_map(k, g).boundary_degree);
    }
}
BENCHMARK(diagram_map)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
