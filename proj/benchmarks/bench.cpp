#include <benchmark/benchmark.h>

#include <random>

#include "daekit/governing.hpp"
#include "daekit/roots.hpp"
#include "daekit/solver.hpp"

using namespace daekit;

namespace {

const OpVar Dt{"D", "t"};

OperatorPoly rand_entry(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    OperatorPoly p;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k)
        p += OperatorPoly::d(
            Dt, k, RatFunc::constant(GaussRat(mpq_class(num(rng), den(rng)))));
    return p;
}

DaeSystem rand_system(std::mt19937& rng, size_t n, int max_deg) {
    for (;;) {
        std::vector<std::vector<MatrixEntry>> m(n,
                                                std::vector<MatrixEntry>(n));
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) m[r][c] = rand_entry(rng, max_deg);
        std::vector<std::string> dv;
        for (size_t i = 0; i < n; ++i) dv.push_back("x" + std::to_string(i + 1));
        std::vector<Forcing> f(n);
        for (size_t i = 0; i < n; ++i) f[i].symbol = "f" + std::to_string(i + 1);
        DaeSystem s({"t"}, dv, std::move(m), std::move(f));
        try {
            validate_system(s);
            return s;
        } catch (...) {
        }
    }
}

ParamPoly rand_param_poly(std::mt19937& rng, int terms, int deg) {
    std::vector<std::string> syms{"a", "b", "c"};
    std::uniform_int_distribution<int> d(0, deg);
    std::uniform_int_distribution<size_t> pick(0, syms.size() - 1);
    std::uniform_int_distribution<int> coef(-9, 9);
    ParamPoly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int dd = d(rng);
        for (int k = 0; k < dd; ++k) m[syms[pick(rng)]] += 1;
        p.add_term(m, GaussRat(coef(rng)));
    }
    return p;
}

void GoverningElimination(benchmark::State& state) {
    std::mt19937 rng(42);
    size_t n = static_cast<size_t>(state.range(0));
    DaeSystem s = rand_system(rng, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(eliminate_governing(s, s.dvars().back()));
}
BENCHMARK(GoverningElimination)->Arg(2)->Arg(3)->Arg(4);

void GoverningDeterminant(benchmark::State& state) {
    std::mt19937 rng(42);
    size_t n = static_cast<size_t>(state.range(0));
    DaeSystem s = rand_system(rng, n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            governing_via_determinant(s, s.dvars().back()));
}
BENCHMARK(GoverningDeterminant)->Arg(2)->Arg(3)->Arg(4);

void ParamPolyMultiply(benchmark::State& state) {
    std::mt19937 rng(7);
    int terms = static_cast<int>(state.range(0));
    ParamPoly p = rand_param_poly(rng, terms, 4);
    ParamPoly q = rand_param_poly(rng, terms, 4);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(ParamPolyMultiply)->Arg(8)->Arg(32)->Arg(128);

void RootFinding(benchmark::State& state) {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> cd(-10.0, 10.0);
    int deg = static_cast<int>(state.range(0));
    std::vector<CNum> coeffs;
    for (int k = 0; k < deg; ++k) coeffs.push_back(CNum(cd(rng)));
    coeffs.push_back(CNum(1l));
    for (auto _ : state) benchmark::DoNotOptimize(poly_roots(coeffs));
}
BENCHMARK(RootFinding)->Arg(4)->Arg(8)->Arg(16);

void FullSolve(benchmark::State& state) {
    // The four-root mass-spring instance with constant forcing.
    std::vector<std::vector<MatrixEntry>> m(2, std::vector<MatrixEntry>(2));
    m[0][0] = OperatorPoly::d(Dt, 2) + OperatorPoly::constant(1);
    m[0][1] = OperatorPoly::constant(-1);
    m[1][0] = OperatorPoly::constant(-1);
    m[1][1] = OperatorPoly::d(Dt, 2) + OperatorPoly::constant(2);
    std::vector<Forcing> f(2);
    f[0].value = ExpPoly(CNum(GaussRat(1)));
    DaeSystem s({"t"}, {"x1", "x2"}, std::move(m), std::move(f));
    for (auto _ : state) benchmark::DoNotOptimize(solve_full(s));
}
BENCHMARK(FullSolve);

} // namespace

BENCHMARK_MAIN();
