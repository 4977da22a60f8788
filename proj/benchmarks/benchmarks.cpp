// Microbenchmarks for the hot paths: expansion assembly, restriction
// verification, the polynomial multiplication kernels, and the closed
// coefficient formula against the table recursion.

#include <benchmark/benchmark.h>

#include <supschur/schur.hpp>
#include <supschur/thom_a3.hpp>

#include <random>

using namespace supschur;

namespace {

Polynomial random_polynomial(std::mt19937& g, const std::vector<Variable>& vars, unsigned terms,
                             unsigned max_exp) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    Polynomial p;
    for (unsigned t = 0; t < terms; ++t) {
        Monomial m;
        for (Variable v : vars) m = m * Monomial::of(v, exp(g));
        p += Polynomial::term(m, Int(coeff(g)));
    }
    return p;
}

void bm_thom_build(benchmark::State& state) {
    unsigned r = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(thom_a3(r));
}
BENCHMARK(bm_thom_build)->Arg(4)->Arg(6)->Arg(8);

void bm_verify_all_checks(benchmark::State& state) {
    unsigned r = static_cast<unsigned>(state.range(0));
    SchurExpansion t = thom_a3(r);
    for (auto _ : state) benchmark::DoNotOptimize(verify_restriction(t, r).all_pass());
}
BENCHMARK(bm_verify_all_checks)->Arg(3)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_eval_quadratic_locus(benchmark::State& state) {
    unsigned r = static_cast<unsigned>(state.range(0));
    SchurExpansion t = thom_a3(r);
    AlphabetDifference locus = x2_alphabet() - (d_alphabet() + b_alphabet(r - 2));
    for (auto _ : state) benchmark::DoNotOptimize(eval_expansion(t, locus));
}
BENCHMARK(bm_eval_quadratic_locus)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void bm_multiply_packed(benchmark::State& state) {
    std::mt19937 g(7);
    auto vars = Variable::sequence("bp", 3);
    Polynomial a = random_polynomial(g, vars, 40, 6);
    Polynomial b = random_polynomial(g, vars, 40, 6);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_multiply_packed);

void bm_multiply_generic(benchmark::State& state) {
    std::mt19937 g(8);
    auto vars = Variable::sequence("bg", 10);  // beyond the packed-kernel limit
    Polynomial a = random_polynomial(g, vars, 40, 3);
    Polynomial b = random_polynomial(g, vars, 40, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_multiply_generic);

void bm_etable_recursive(benchmark::State& state) {
    unsigned rows = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ETable(rows).at(rows, 0));
}
BENCHMARK(bm_etable_recursive)->Arg(20)->Arg(40);

void bm_e_closed(benchmark::State& state) {
    unsigned i = static_cast<unsigned>(state.range(0));
    unsigned j = ETable::support_width(i);
    for (auto _ : state) benchmark::DoNotOptimize(e_closed(i, j));
}
BENCHMARK(bm_e_closed)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
