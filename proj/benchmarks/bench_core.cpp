#include <benchmark/benchmark.h>

#include "crn/mass_action.hpp"
#include "crn/network.hpp"
#include "crn/obstruction.hpp"
#include "crn/oracle.hpp"
#include "crn/stoich.hpp"
#include "crn/sym_matrix.hpp"

namespace {

const char* kFourSpecies = R"(
species A, B, C, D
1: A + B -> 2 A
2: 2 A -> 2 B
3: B -> B + C
4: C -> A + C
5: B + C + D -> 0
F_D: 0 -> D
)";

const char* kSixSpecies = R"(
species A, B, C, D, E, F
1: A + C -> 2 B
2: A -> C
3: B -> A
4: B + D -> 0
F_D: 0 -> D
5: C -> C + E
6: E -> B + E
7: E + F -> 0
F_F: 0 -> F
)";

void bm_parse(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::parse_network(kFourSpecies));
    }
}
BENCHMARK(bm_parse);

void bm_det_via_selections(benchmark::State& state) {
    crn::Network net = crn::parse_network(kSixSpecies);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::det_via_child_selections(net));
    }
}
BENCHMARK(bm_det_via_selections);

void bm_det_cofactor(benchmark::State& state) {
    crn::Network net = crn::parse_network(kSixSpecies);
    crn::SymMatrix g = crn::sym_jacobian(net);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::det_direct(g));
    }
}
BENCHMARK(bm_det_cofactor);

void bm_adjugate_symbolic(benchmark::State& state) {
    crn::Network net = crn::parse_network(kFourSpecies);
    crn::SymMatrix g = crn::sym_jacobian(net);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::adjugate_symbolic(g));
    }
}
BENCHMARK(bm_adjugate_symbolic);

void bm_char_poly_symbolic(benchmark::State& state) {
    crn::Network net = crn::parse_network(kFourSpecies);
    crn::SymMatrix g = crn::sym_jacobian(net);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::char_poly_symbolic(g));
    }
}
BENCHMARK(bm_char_poly_symbolic);

void bm_positive_kernel(benchmark::State& state) {
    crn::Network net = crn::parse_network(kSixSpecies);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::positive_kernel_vector(net));
    }
}
BENCHMARK(bm_positive_kernel);

void bm_spectral_report(benchmark::State& state) {
    crn::Network net = crn::parse_network(kFourSpecies);
    crn::RateInstance ones(crn::rate_variables(net).size(), crn::Rat(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::spectral_report(net, ones));
    }
}
BENCHMARK(bm_spectral_report);

void bm_obstruction_verdict(benchmark::State& state) {
    crn::Network net = crn::parse_network(kFourSpecies);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::obstruction_verdict(net, 7, 64));
    }
}
BENCHMARK(bm_obstruction_verdict);

void bm_singular_probe(benchmark::State& state) {
    crn::Network net = crn::parse_network(kSixSpecies);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crn::probe_singular_equilibrium(net, 7, 8));
    }
}
BENCHMARK(bm_singular_probe);

}  // namespace

BENCHMARK_MAIN();
