#include <benchmark/benchmark.h>

#include <vector>

#include "qcs/cns.hpp"
#include "qcs/ideal.hpp"
#include "qcs/intersection.hpp"
#include "qcs/membership.hpp"
#include "qcs/order.hpp"

using namespace qcs;

namespace {

const Field& gauss() {
    static const Field f = Field::make(-1);
    return f;
}

IfsSpec wall() {
    return IfsSpec::make(QuadInt(gauss(), 3, 0), {QuadInt(gauss(), 0, 0), QuadInt(gauss(), 2, 0)});
}

void BM_Multiply(benchmark::State& state) {
    const QuadInt a(gauss(), 123456789, -987654321), b(gauss(), -31415926, 27182818);
    for (auto _ : state) benchmark::DoNotOptimize(norm(a * b));
}
BENCHMARK(BM_Multiply);

void BM_FactorElement(benchmark::State& state) {
    const QuadInt z(gauss(), 1234567, 7654321);
    for (auto _ : state) benchmark::DoNotOptimize(factor_element(z));
}
BENCHMARK(BM_FactorElement);

void BM_OrderModPrimePower(benchmark::State& state) {
    const PrimeIdeal p = prime_above(gauss(), 5, 2);
    const QuadInt beta(gauss(), 3, 0);
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ord_prime_power(beta, p, n));
}
BENCHMARK(BM_OrderModPrimePower)->Arg(4)->Arg(16)->Arg(64);

void BM_StateGraph(benchmark::State& state) {
    const IfsSpec spec = wall();
    const Integer u = Integer(1) << static_cast<unsigned long>(state.range(0));
    const QuadInt v(gauss(), Integer(u / 4), 0);
    for (auto _ : state) benchmark::DoNotOptimize(build_state_graph(v, u, spec));
}
BENCHMARK(BM_StateGraph)->Arg(4)->Arg(12)->Arg(20);

void BM_EnumerateLevel(benchmark::State& state) {
    const IfsSpec spec = wall();
    const QuadInt alpha(gauss(), 10, 0);
    const auto level = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_level(level, alpha, spec));
}
BENCHMARK(BM_EnumerateLevel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CnsExpand(benchmark::State& state) {
    const CnsBasis basis = CnsBasis::make(gauss(), 3);
    const QuadInt g(gauss(), 987654321, 123456789);
    for (auto _ : state) benchmark::DoNotOptimize(cns_expand(g, basis));
}
BENCHMARK(BM_CnsExpand);

}  // namespace

BENCHMARK_MAIN();
