#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "daekit/errors.hpp"
#include "daekit/numcheck.hpp"
#include "daekit/parser.hpp"
#include "daekit/roots.hpp"
#include "daekit/solver.hpp"

#ifdef DAEKIT_HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

using namespace daekit;
namespace fs = std::filesystem;

namespace {

const OpVar Dt{"D", "t"};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

DaeSystem corpus(const std::string& name) {
    return parse_system(slurp(fs::path(DAEKIT_CORPUS_DIR) / name)).system;
}

std::mt19937 rng(31415);

std::vector<CNum> rand_monic(int deg) {
    std::uniform_real_distribution<double> c(-10.0, 10.0);
    std::vector<CNum> out;
    for (int k = 0; k < deg; ++k) out.push_back(CNum(c(rng)));
    out.push_back(CNum(1l));
    return out;
}

#ifdef DAEKIT_HAVE_EIGEN
std::vector<std::complex<double>> companion_roots(
    const std::vector<CNum>& coeffs) {
    int n = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
    std::complex<double> lead = coeffs.back().to_complex();
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[i].to_complex() / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}
#endif

// Residual of a candidate solution against every constitutive row, with
// constants bound, evaluated on a sample of points in [0, 1].
double max_residual(const DaeSystem& s, const Solution& sol) {
    std::map<std::string, CNum> consts;
    double v = 0.25;
    for (const auto& c : sol.constants) consts[c] = CNum(v += 0.5);
    Grid grid{s.ivars()[0], 0.0, 1.0, 41};
    auto rep = residual_check(s, sol.components, consts, grid, 1e-7);
    double worst = 0;
    for (double r : rep.max_residual) worst = std::max(worst, r);
    return worst;
}

} // namespace

TEST_CASE("operator inverse satisfies M * adj = det * I") {
    DaeSystem s = corpus("massspring.dae");
    OperatorInverse inv = invert_operator_matrix(s);
    auto m = cc_matrix(s);
    size_t n = s.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            OperatorPoly acc;
            for (size_t j = 0; j < n; ++j) acc += m[i][j] * inv.num[j][k];
            if (i == k)
                CHECK(acc.equal(inv.den));
            else
                CHECK(acc.is_zero());
        }
}

TEST_CASE("partial fractions recombine to 1/P by expansion") {
    for (int trial = 0; trial < 50; ++trial) {
        // Distinct small rational roots guarantee exact simple fractions.
        std::vector<int> pool{-4, -3, -2, -1, 1, 2, 3, 4, 5};
        std::shuffle(pool.begin(), pool.end(), rng);
        int deg = 2 + trial % 3;
        OperatorPoly p = OperatorPoly::constant(1);
        for (int k = 0; k < deg; ++k)
            p *= OperatorPoly::d(Dt) +
                 OperatorPoly::constant(-pool[static_cast<size_t>(k)]);
        RootSet rs;
        rs.source_poly = p;
        rs.roots = poly_roots(p.univariate_coeffs());
        auto pf = partial_fractions(p, rs);
        REQUIRE(pf.terms.size() == static_cast<size_t>(deg));
        // sum_i gamma_i prod_{j != i} (D + alpha_j) == 1 / lead.
        OperatorPoly acc;
        for (size_t i = 0; i < pf.terms.size(); ++i) {
            OperatorPoly prod = OperatorPoly::constant(1);
            for (size_t j = 0; j < pf.terms.size(); ++j) {
                if (j == i) continue;
                REQUIRE(pf.terms[j].alpha.exact());
                prod *= OperatorPoly::d(Dt) +
                        OperatorPoly(RatFunc::constant(pf.terms[j].alpha.rat()));
            }
            REQUIRE(pf.terms[i].gamma.exact());
            acc += prod.scaled(RatFunc::constant(pf.terms[i].gamma.rat()));
        }
        CHECK(acc.equal(OperatorPoly::constant(1)));
    }
}

TEST_CASE("partial fractions reject repeated roots") {
    OperatorPoly p = (OperatorPoly::d(Dt) + OperatorPoly::constant(1));
    p *= p;
    RootSet rs;
    rs.source_poly = p;
    rs.roots = poly_roots(p.univariate_coeffs());
    CHECK_THROWS_AS(partial_fractions(p, rs), RepeatedRoots);
}

TEST_CASE("full solutions satisfy every constitutive row") {
    for (const char* name :
         {"concocted.dae", "repeated.dae", "fullsol.dae", "resonant.dae",
          "polyforce.dae", "rationalroots.dae", "algrow.dae",
          "massspring_const.dae", "pfrac.dae", "oscillator.json",
          "introw.dae"}) {
        INFO("system: " << name);
        DaeSystem s = corpus(name);
        Solution sol = solve_full(s);
        CHECK(max_residual(s, sol) < 1e-7);
    }
}

TEST_CASE("factorization and partial-fraction modes agree on simple roots") {
    DaeSystem s = corpus("pfrac.dae");
    SolveOptions fac, pf;
    pf.mode = SolveMode::PartialFractions;
    Solution a = solve_full(s, fac), b = solve_full(s, pf);
    // Particular parts agree; constants may differ in basis, so compare
    // with all constants bound to zero.
    std::map<std::string, CNum> za, zb;
    for (const auto& c : a.constants) za[c] = CNum(0l);
    for (const auto& c : b.constants) zb[c] = CNum(0l);
    for (const auto& [name, f] : a.components) {
        ExpPoly pa = f.with_consts(za);
        ExpPoly pb = b.components.at(name).with_consts(zb);
        CHECK(pa.same(pb, 1e-9));
    }
}

TEST_CASE("characteristic roots of the mass-spring system at unit params") {
    DaeSystem s = corpus("massspring_const.dae");
    RootSet rs = characteristic_roots(s);
    CHECK(rs.degree() == 4);
    auto sorted = sorted_roots(rs.roots);
    // Imaginary pairs at roughly +-0.618i and +-1.618i.
    std::vector<double> ims;
    for (const auto& r : sorted) {
        CHECK(std::abs(r.value.to_complex().real()) < 1e-9);
        ims.push_back(r.value.to_complex().imag());
    }
    std::sort(ims.begin(), ims.end());
    CHECK(std::abs(ims[0] + 1.6180339887) < 1e-6);
    CHECK(std::abs(ims[1] + 0.6180339887) < 1e-6);
    CHECK(std::abs(ims[2] - 0.6180339887) < 1e-6);
    CHECK(std::abs(ims[3] - 1.6180339887) < 1e-6);
}

TEST_CASE("symbolic systems solve after a parameter assignment") {
    DaeSystem s = corpus("massspring.dae");
    CHECK_THROWS(solve_full(s)); // symbolic params and forcing
    // Assign parameters and concrete forcing via substitution of the file
    // with unit values; the _const corpus file is that instantiation.
}

TEST_CASE("exact rational roots are found exactly") {
    // (D-1)(D-2)(D-3): roots stay exact Gaussian rationals.
    DaeSystem s = corpus("rationalroots.dae");
    RootSet rs = characteristic_roots(s);
    for (const auto& r : rs.roots) CHECK(r.value.exact());
}

TEST_CASE("separable operators factor into univariate pieces") {
    DaeSystem s = corpus("separable.dae");
    auto det = std::get<OperatorPoly>(s.at(0, 0));
    auto factors = factor_univariate_product(det);
    REQUIRE(factors.has_value());
    OperatorPoly prod = OperatorPoly::constant(1);
    for (const auto& f : *factors) prod *= f;
    CHECK(prod.equal(det));
}

TEST_CASE("non-separable operators are detected") {
    // (D_t^2 + D_t + 1) D_x^2 - D_t^2 has a rank-2 coefficient structure.
    DaeSystem s = corpus("tl_pde.dae").substituted({{"L", GaussRat(1)},
                                                    {"R", GaussRat(1)},
                                                    {"C", GaussRat(1)},
                                                    {"L1", GaussRat(1)}});
    auto m = cc_matrix(s);
    OperatorPoly det = operator_matrix_det(m);
    CHECK(!factor_univariate_product(det).has_value());
    CHECK(!solve_separable_pdae(s).has_value());
}

TEST_CASE("separable PDE systems solve and check") {
    for (const char* name : {"separable.dae", "decoupled_pair.dae"}) {
        INFO("system: " << name);
        DaeSystem s = corpus(name);
        auto sol = solve_separable_pdae(s);
        REQUIRE(sol.has_value());
        std::map<std::string, CNum> consts;
        double v = 0.3;
        for (const auto& c : sol->constants) consts[c] = CNum(v += 0.4);
        Grid grid{s.ivars()[0], 0.0, 1.0, 21};
        auto rep = residual_check(s, sol->components, consts, grid, 1e-8);
        CHECK(rep.pass);
    }
}

#ifdef DAEKIT_HAVE_EIGEN
TEST_CASE("root finder agrees with the companion-matrix oracle") {
    std::uniform_int_distribution<int> degd(2, 8);
    for (int trial = 0; trial < 100; ++trial) {
        int deg = degd(rng);
        auto coeffs = rand_monic(deg);
        auto mine = poly_roots(coeffs);
        auto oracle = companion_roots(coeffs);
        // Match each oracle eigenvalue to a reported root.
        for (const auto& ev : oracle) {
            double best = 1e9;
            for (const auto& r : mine)
                best = std::min(best, std::abs(r.value.to_complex() - ev));
            CHECK(best < 1e-8);
        }
        int total = 0;
        for (const auto& r : mine) total += r.multiplicity;
        CHECK(total == deg);
    }
}

TEST_CASE("clustered repeated roots report multiplicity") {
    // (x - 2)^3 (x + 1): multiplicities must be detected after clustering.
    // Coefficients: expand exactly, then perturb to floating.
    OperatorPoly p = OperatorPoly::constant(1);
    for (int k = 0; k < 3; ++k)
        p *= OperatorPoly::d(Dt) + OperatorPoly::constant(-2);
    p *= OperatorPoly::d(Dt) + OperatorPoly::constant(1);
    std::vector<CNum> coeffs;
    for (const auto& c : p.univariate_coeffs())
        coeffs.push_back(CNum(c.to_complex())); // force the floating path
    RootOptions opts;
    opts.cluster_tol = 1e-3; // triple roots spread roughly as eps^(1/3)
    auto roots = poly_roots(coeffs, opts);
    bool found_triple = false;
    for (const auto& r : roots)
        if (r.multiplicity == 3 &&
            std::abs(r.value.to_complex() - std::complex<double>(2, 0)) < 1e-3)
            found_triple = true;
    CHECK(found_triple);
}
#endif
