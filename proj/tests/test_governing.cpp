#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daekit/errors.hpp"
#include "daekit/governing.hpp"

using namespace daekit;

namespace {

const OpVar Dt{"D", "t"};

// A fully generic operator entry sum_{k<=deg} p_{name,k} D^k with fresh
// parameter symbols per coefficient.
OperatorPoly generic_entry(const std::string& name, int deg,
                           std::vector<std::string>& params) {
    OperatorPoly p;
    for (int k = 0; k <= deg; ++k) {
        std::string sym = name + "_" + std::to_string(k);
        params.push_back(sym);
        p += OperatorPoly::d(Dt, k, RatFunc::symbol(sym));
    }
    return p;
}

DaeSystem generic_system(size_t n, int deg,
                         std::vector<std::vector<OperatorPoly>>& P) {
    std::vector<std::string> params;
    P.assign(n, std::vector<OperatorPoly>(n));
    std::vector<std::vector<MatrixEntry>> m(n, std::vector<MatrixEntry>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            P[r][c] = generic_entry(
                "p" + std::to_string(r + 1) + std::to_string(c + 1), deg,
                params);
            m[r][c] = P[r][c];
        }
    std::vector<std::string> dvars;
    for (size_t i = 0; i < n; ++i) dvars.push_back("x" + std::to_string(i + 1));
    std::vector<Forcing> forcing(n);
    for (size_t i = 0; i < n; ++i)
        forcing[i].symbol = "f" + std::to_string(i + 1);
    return DaeSystem({"t"}, dvars, std::move(m), std::move(forcing), params);
}

std::mt19937 rng(55112);

OperatorPoly rand_entry(int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    OperatorPoly p;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k)
        p += OperatorPoly::d(
            Dt, k,
            RatFunc::constant(GaussRat(mpq_class(num(rng), den(rng)))));
    return p;
}

DaeSystem rand_system(size_t n, int max_deg) {
    std::vector<std::vector<MatrixEntry>> m(n, std::vector<MatrixEntry>(n));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) m[r][c] = rand_entry(max_deg);
    std::vector<std::string> dvars;
    for (size_t i = 0; i < n; ++i) dvars.push_back("x" + std::to_string(i + 1));
    std::vector<Forcing> forcing(n);
    for (size_t i = 0; i < n; ++i)
        forcing[i].symbol = "f" + std::to_string(i + 1);
    return DaeSystem({"t"}, dvars, std::move(m), std::move(forcing));
}

} // namespace

TEST_CASE("2x2 elimination yields the closed form exactly") {
    std::vector<std::vector<OperatorPoly>> P;
    DaeSystem s = generic_system(2, 2, P);
    auto g = eliminate_governing(s, "x2");
    OperatorPoly lhs = P[0][0] * P[1][1] - P[1][0] * P[0][1];
    CHECK(g.lhs_poly().equal(lhs));
    REQUIRE(g.rhs.size() == 2);
    CHECK(g.rhs[0].second.symbol == "f1");
    CHECK(g.rhs[0].first.equal(-P[1][0]));
    CHECK(g.rhs[1].second.symbol == "f2");
    CHECK(g.rhs[1].first.equal(P[0][0]));
}

TEST_CASE("3x3 elimination yields the closed form exactly") {
    std::vector<std::vector<OperatorPoly>> P;
    DaeSystem s = generic_system(3, 1, P);
    auto g = eliminate_governing(s, "x3");
    OperatorPoly lhs = (P[0][0] * P[1][1] - P[0][1] * P[1][0]) * P[2][2] +
                       P[0][1] * P[1][2] * P[2][0] +
                       P[0][2] * (P[1][0] * P[2][1] - P[1][1] * P[2][0]) -
                       P[0][0] * P[1][2] * P[2][1];
    CHECK(g.lhs_poly().equal(lhs));
    REQUIRE(g.rhs.size() == 3);
    CHECK(g.rhs[0].first.equal(P[1][0] * P[2][1] - P[1][1] * P[2][0]));
    CHECK(g.rhs[1].first.equal(-(P[0][0] * P[2][1] - P[2][0] * P[0][1])));
    CHECK(g.rhs[2].first.equal(P[0][0] * P[1][1] - P[1][0] * P[0][1]));
}

TEST_CASE("determinant route agrees with elimination up to a scalar") {
    int done = 0;
    while (done < 200) {
        size_t n = 2 + static_cast<size_t>(done % 3); // 2..4
        DaeSystem s = rand_system(n, 2);
        GoverningEquation a, b;
        try {
            a = eliminate_governing(s, s.dvars().back());
            b = governing_via_determinant(s, s.dvars().back());
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Singular) continue; // resample
            throw;
        }
        // Both routes normalize numeric operators monic, so the scalar is 1.
        CHECK(a.lhs_poly().equal(b.lhs_poly()));
        REQUIRE(a.rhs.size() == b.rhs.size());
        for (size_t i = 0; i < a.rhs.size(); ++i) {
            CHECK(a.rhs[i].second.symbol == b.rhs[i].second.symbol);
            CHECK(a.rhs[i].first.equal(b.rhs[i].first));
        }
        ++done;
    }
}

TEST_CASE("structurally singular systems are reported") {
    // Two proportional rows.
    std::vector<std::vector<MatrixEntry>> m(2, std::vector<MatrixEntry>(2));
    OperatorPoly d = OperatorPoly::d(Dt);
    m[0][0] = d;
    m[0][1] = OperatorPoly::constant(1);
    m[1][0] = d * OperatorPoly::constant(2);
    m[1][1] = OperatorPoly::constant(2);
    DaeSystem s({"t"}, {"x1", "x2"}, std::move(m),
                std::vector<Forcing>(2));
    CHECK_THROWS_AS(eliminate_governing(s, "x2"), Error);
}

TEST_CASE("elimination trace records pivots and row operations") {
    std::vector<std::vector<OperatorPoly>> P;
    DaeSystem s = generic_system(3, 1, P);
    auto g = eliminate_governing(s, "x3");
    bool has_pivot = false, has_combine = false;
    for (const auto& step : g.trace) {
        if (step.kind == "pivot") has_pivot = true;
        if (step.kind == "combine") has_combine = true;
    }
    CHECK(has_pivot);
    CHECK(has_combine);
}

TEST_CASE("vc systems honoring the last-column condition eliminate") {
    OpVar Dx{"D", "x"};
    FuncSymbol y;
    y.name = "Y";
    y.args = {"x"};
    std::vector<std::vector<MatrixEntry>> m(2, std::vector<MatrixEntry>(2));
    m[0][0] = OperatorPoly(RatFunc::symbol("Z"));
    m[0][1] = OperatorPoly::d(Dx);
    m[1][0] = OperatorPoly::d(Dx);
    m[1][1] = VcOperator::term(Dx, FuncExpr::symbol(y), 0);
    std::vector<Forcing> f(2);
    f[0].symbol = "f1";
    f[1].symbol = "f2";
    DaeSystem s({"x"}, {"I", "V"}, std::move(m), std::move(f), {"Z"});

    auto g = eliminate_governing(s, "V", false);
    REQUIRE(g.lhs_is_vc());
    // D^2 - Z Y(x): order two, constant leading coefficient, Y in order 0.
    CHECK(g.lhs_vc().order() == 2);
    REQUIRE(g.rhs.size() == 2);
    CHECK(g.rhs[0].first.equal(OperatorPoly::d(Dx)));
    CHECK(g.rhs[1].first.equal(
        OperatorPoly(RatFunc::constant(-1) * RatFunc::symbol("Z"))));

    CHECK_THROWS_AS(eliminate_governing(s, "I", false), VcConditionViolated);
}
