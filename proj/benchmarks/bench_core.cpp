#include "donsw/coeff_table.hpp"
#include "donsw/invariants.hpp"
#include "donsw/manifold.hpp"
#include "donsw/polynomial.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace donsw;

HClass fixed_h(std::size_t rank) {
    HClass h = HClass::zero(rank);
    for (std::size_t i = 0; i < rank; ++i)
        h.c[i] = Rat(Int(static_cast<long>(i % 5) - 2), Int(1 + static_cast<long>(i % 3)));
    return h;
}

void bm_signature(benchmark::State& state) {
    const ExampleManifold ex = example_xq(static_cast<int>(state.range(0)));
    const auto& gram = ex.x.lattice().gram();
    for (auto _ : state) {
        auto sig = signature_of(gram);
        benchmark::DoNotOptimize(sig);
    }
}
BENCHMARK(bm_signature)->Arg(2)->Arg(3)->Arg(5);

void bm_witten(benchmark::State& state) {
    const ExampleManifold ex = example_xqn(2, static_cast<int>(state.range(0)));
    Class w = ex.names.at("K");
    for (int u = 1; u <= state.range(0); ++u)
        w += ex.names.at("e" + std::to_string(u));
    const InvariantQuery q{w, 9, 0, fixed_h(ex.x.lattice().rank())};
    for (auto _ : state) {
        Rat v = witten_invariant(ex.x, q);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_witten)->Arg(2)->Arg(3);

void bm_cobordism_blown(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ExampleManifold ex = example_xqn(2, n);
    Class w = ex.names.at("K");
    for (int u = 1; u <= n; ++u)
        w += ex.names.at("e" + std::to_string(u));
    Class lam = ex.names.at("f1") + ex.names.at("f2");
    lam = Int(2) * lam;
    const auto cn = ex.x.char_numbers();
    const unsigned delta = n == 2 ? 9u : 10u;
    const CoeffTable table(cn.chi_h, cn.c1sq - 1, ex.x.lattice().pair(lam, lam), 0, 42);
    const InvariantQuery q{w, delta, 0, fixed_h(ex.x.lattice().rank())};
    for (auto _ : state) {
        Rat v = cobordism_invariant_blown(ex.x, q, lam, table);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_cobordism_blown)->Arg(2)->Arg(3);

void bm_is_scst(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ExampleManifold ex = example_xqn(2, n);
    Class w = ex.names.at("K");
    for (int u = 1; u <= n; ++u)
        w += ex.names.at("e" + std::to_string(u));
    for (auto _ : state) {
        bool v = ex.x.is_scst(w);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_is_scst)->Arg(2)->Arg(3);

void bm_poly_mul(benchmark::State& state) {
    const ExampleManifold ex = example_xq(2);
    const Poly lin = linear_form(ex.x.lattice(), ex.names.at("K"));
    const Poly quad = quad_form(ex.x.lattice());
    for (auto _ : state) {
        Poly p = lin * lin * quad;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(bm_poly_mul);

void bm_coeff_table_eval(benchmark::State& state) {
    const CoeffTable table(2, -4, 20, 0, 42);
    for (auto _ : state) {
        Rat v = table.evaluate(1, 1, 1, Int(8));
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(bm_coeff_table_eval);

}  // namespace

BENCHMARK_MAIN();
