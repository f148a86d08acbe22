#include <cstdint>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"

#include "accfn/acceptance.hpp"
#include "accfn/conditioning.hpp"
#include "accfn/measures.hpp"
#include "accfn/set_function.hpp"

namespace {

accfn::Universe universe(unsigned n) {
    std::vector<std::string> atoms;
    for (unsigned i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    return accfn::Universe(atoms);
}

void BM_moebius(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    accfn::Universe u = universe(n);
    accfn::SetFunction f = accfn::random_confidence(u, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accfn::moebius(f));
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_moebius)->DenseRange(4, 12, 2)->Complexity();

void BM_is_acceptance(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    accfn::Universe u = universe(n);
    accfn::SetFunction f = accfn::random_confidence(u, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accfn::is_acceptance(f));
    }
}
BENCHMARK(BM_is_acceptance)->DenseRange(4, 10, 2);

void BM_is_acceptance_bruteforce(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    accfn::Universe u = universe(n);
    accfn::SetFunction f = accfn::random_confidence(u, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accfn::is_acceptance_bruteforce(f));
    }
}
BENCHMARK(BM_is_acceptance_bruteforce)->DenseRange(4, 10, 2);

void BM_property_B(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    accfn::Universe u = universe(n);
    accfn::SetFunction f = accfn::random_confidence(u, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(accfn::check_property_B(f));
    }
}
BENCHMARK(BM_property_B)->DenseRange(3, 6, 1);

}  // namespace

BENCHMARK_MAIN();
