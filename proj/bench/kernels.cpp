#include <benchmark/benchmark.h>

#include <vector>

#include "ontic/interferometer.hpp"
#include "ontic/nogo.hpp"
#include "ontic/oracle.hpp"
#include "ontic/scenario.hpp"

using namespace ontic;

namespace {

std::vector<Phase> phases(long n) {
    std::vector<Phase> out;
    for (long k = 0; k < n; ++k) out.push_back(k % 3 ? Phase::pi_fraction(k, 12) : Phase::radians(0.01 * k));
    return out;
}

void sweep_serial(benchmark::State& st) {
    CircuitConfig cfg = CircuitConfig::make(Rational(1, 3));
    auto chis = phases(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(sweep_m0_m2_serial(cfg, chis));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void sweep_parallel(benchmark::State& st) {
    CircuitConfig cfg = CircuitConfig::make(Rational(1, 3));
    auto chis = phases(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(sweep_m0_m2(cfg, chis));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

// Tie filtering over the raw assignment space of the blocked scenario; the
// range argument selects how many ties are active.
std::vector<Tie> ties_prefix(const Scenario& sc, long k) {
    return {sc.ties.begin(), sc.ties.begin() + std::min<long>(k, static_cast<long>(sc.ties.size()))};
}

void assignments_serial(benchmark::State& st) {
    Scenario sc = hroi2_scenario(Rational(1, 3));
    auto ties = ties_prefix(sc, st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(admissible_assignments_serial(sc.contexts, ties));
}

void assignments_parallel(benchmark::State& st) {
    Scenario sc = hroi2_scenario(Rational(1, 3));
    auto ties = ties_prefix(sc, st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(admissible_assignments(sc.contexts, ties));
}

ConstraintSystem relaxed_program() { return compile(hroi2_scenario(Rational(1, 3)), relax({"roi"})).system; }

void oracle_serial(benchmark::State& st) {
    ConstraintSystem cs = relaxed_program();
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_oracle_serial(cs));
}

void oracle_parallel(benchmark::State& st) {
    ConstraintSystem cs = relaxed_program();
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_oracle(cs));
}

void simplex(benchmark::State& st) {
    ConstraintSystem cs = relaxed_program();
    for (auto _ : st) benchmark::DoNotOptimize(solve(cs));
}

}  // namespace

BENCHMARK(sweep_serial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_parallel)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(assignments_serial)->Arg(0)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(assignments_parallel)->Arg(0)->Arg(100)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(oracle_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(simplex)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
