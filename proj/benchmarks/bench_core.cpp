#include <benchmark/benchmark.h>

#include "toricbv/bv.hpp"
#include "toricbv/corpus.hpp"
#include "toricbv/oracles.hpp"
#include "toricbv/prng.hpp"

using namespace toricbv;

namespace {

RatMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    SplitMix64 rng(seed);
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = Rat(rng.range(-20, 20), 1 + rng.range(1, 9));
    return m;
}

}  // namespace

static void BM_rref(benchmark::State& state) {
    const auto m = random_matrix(state.range(0), state.range(0) + 4, 11);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(8)->Arg(24)->Arg(48);

static void BM_lattice_points(benchmark::State& state) {
    const auto polytope = build_polytope(corpus::find("blowup16")->fan);
    for (auto _ : state) benchmark::DoNotOptimize(lattice_points(polytope));
}
BENCHMARK(BM_lattice_points);

static void BM_analyze_p3(benchmark::State& state) {
    const Fan fan = corpus::find("p3")->fan;
    for (auto _ : state) benchmark::DoNotOptimize(Variety::analyze(fan));
}
BENCHMARK(BM_analyze_p3);

static void BM_schouten_pairs_p2(benchmark::State& state) {
    const Variety v = Variety::analyze(corpus::find("p2")->fan);
    std::vector<WeightedPolyvector> basis;
    for (int k = 0; k <= 2; ++k)
        for (const auto& e : v.basis.entries(k))
            basis.push_back(WeightedPolyvector::monomial(Variant::field, e.point,
                                                         e.multivector));
    for (auto _ : state) {
        for (const auto& a : basis)
            for (const auto& b : basis) benchmark::DoNotOptimize(schouten(a, b));
    }
}
BENCHMARK(BM_schouten_pairs_p2);

static void BM_build_tables_p2(benchmark::State& state) {
    const Variety v = Variety::analyze(corpus::find("p2")->fan);
    for (auto _ : state) benchmark::DoNotOptimize(build_tables(v));
}
BENCHMARK(BM_build_tables_p2);

static void BM_verify_operator(benchmark::State& state) {
    const Variety v = Variety::analyze(corpus::find("blowup16")->fan);
    const BVOperator op = build_operator({Rat(1), Rat(1)}, v);
    for (auto _ : state) benchmark::DoNotOptimize(verify_operator(op, v));
}
BENCHMARK(BM_verify_operator);

static void BM_chart_bracket(benchmark::State& state) {
    const Fan fan = corpus::find("p2")->fan;
    const auto a = WeightedPolyvector::monomial(Variant::field, {Int(0), Int(0)},
                                                Multivector::basis({0, 1}));
    const auto b = WeightedPolyvector::monomial(Variant::field, {Int(-1), Int(0)},
                                                Multivector::basis({0}));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_chart_bracket(fan, a, b));
}
BENCHMARK(BM_chart_bracket);

BENCHMARK_MAIN();
