#include <benchmark/benchmark.h>

#include <random>

#include "qsat/chaos.hpp"
#include "qsat/circuit.hpp"
#include "qsat/dynamics.hpp"
#include "qsat/stochastic.hpp"

using namespace qsat;

namespace {

cnf::CnfFormula random_3sat(std::uint32_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> var(1, n);
    std::vector<cnf::Clause> cs;
    for (std::size_t j = 0; j < m; ++j) {
        cnf::Clause c;
        for (int k = 0; k < 3; ++k) c.insert(cnf::Literal{var(rng), rng() % 2 == 0});
        cs.push_back(c);
    }
    return cnf::CnfFormula(n, std::move(cs));
}

void BM_Hadamard(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    qc::StateVector s(n);
    std::uint32_t q = 0;
    for (auto _ : state) {
        qc::apply_gate(s, qc::HGate{q});
        q = (q + 1) % n;
        benchmark::DoNotOptimize(s[0]);
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(s.dim() * sizeof(qc::Amplitude)));
}
BENCHMARK(BM_Hadamard)->DenseRange(12, 22, 5);

void BM_Toffoli(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    auto s = qc::prepare_uniform(n, 0);
    for (auto _ : state) {
        qc::apply_gate(s, qc::ToffoliGate{0, n / 2, n - 1});
        benchmark::DoNotOptimize(s[0]);
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(s.dim() * sizeof(qc::Amplitude)));
}
BENCHMARK(BM_Toffoli)->DenseRange(12, 22, 5);

void BM_CountSatisfying(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto f = random_3sat(n, 4 * n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(cnf::count_satisfying(f));
}
BENCHMARK(BM_CountSatisfying)->DenseRange(10, 20, 5);

void BM_SatCircuitSuccessProbability(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto f = random_3sat(n, 3, 2);
    const auto sat = qc::build_sat_circuit(f);
    for (auto _ : state) {
        const auto vf = qc::run(sat.circuit, qc::prepare_uniform(n, sat.layout.mu));
        benchmark::DoNotOptimize(qc::success_probability(vf, sat.layout));
    }
}
BENCHMARK(BM_SatCircuitSuccessProbability)->DenseRange(6, 14, 4);

void BM_Expm(benchmark::State& state) {
    const auto L = stochastic::damping_generator(stochastic::Susceptibility({1.0, 0.5})).schrodinger;
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(dyn::expm_superop(L, t).matrix());
        t += 1e-6;
    }
}
BENCHMARK(BM_Expm);

void BM_Classify(benchmark::State& state) {
    const stochastic::Susceptibility g(1.0);
    const auto dyn =
        stochastic::adapt(stochastic::InputAmplitudes(0.6, 0.8), stochastic::TwoLevelHamiltonian{}, g);
    const auto cfg = stochastic::ClassifierConfig::for_susceptibility(g);
    for (auto _ : state) benchmark::DoNotOptimize(stochastic::classify(dyn, cfg).damped);
}
BENCHMARK(BM_Classify);

void BM_ChaosDetect(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(chaos::detect(1.0 / 1048576, 20).satisfiable);
}
BENCHMARK(BM_ChaosDetect);

}  // namespace
BENCHMARK_MAIN();
