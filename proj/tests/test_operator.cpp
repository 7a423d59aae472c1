#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daekit/exp_poly.hpp"
#include "daekit/operator_poly.hpp"

using namespace daekit;

namespace {

std::mt19937 rng(40897);
const OpVar Dt{"D", "t"};

GaussRat rand_gauss() {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return GaussRat(mpq_class(num(rng), den(rng)),
                    mpq_class(num(rng), den(rng)));
}

OperatorPoly rand_op(int max_deg = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    OperatorPoly p;
    int d = deg(rng);
    for (int k = 0; k <= d; ++k)
        p += OperatorPoly::d(Dt, k, RatFunc::constant(rand_gauss()));
    if (p.is_zero()) p = OperatorPoly::constant(1);
    return p;
}

// Random exponential-polynomial in t with exact coefficients.
ExpPoly rand_func(int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> pw(0, 3);
    ExpPoly f;
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        std::map<std::string, int> powers;
        int p = pw(rng);
        if (p > 0) powers["t"] = p;
        std::map<std::string, CNum> exps;
        GaussRat a = rand_gauss();
        if (!a.is_zero()) exps["t"] = CNum(a);
        f = f + ExpPoly::term(CoeffLC(CNum(rand_gauss())), powers, exps);
    }
    return f;
}

bool func_same(const ExpPoly& a, const ExpPoly& b, double tol = 1e-10) {
    return a.same(b, tol);
}

} // namespace

TEST_CASE("operator polynomials satisfy commutative ring axioms") {
    for (int k = 0; k < 1000; ++k) {
        OperatorPoly p = rand_op(), q = rand_op(), r = rand_op();
        CHECK((p + q).equal(q + p));
        CHECK((p * q).equal(q * p));
        CHECK(((p * q) * r).equal(p * (q * r)));
        CHECK((p * (q + r)).equal(p * q + p * r));
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("exact operator division inverts multiplication") {
    for (int k = 0; k < 300; ++k) {
        OperatorPoly p = rand_op(3), q = rand_op(3);
        auto d = (p * q).divide_exact(q);
        REQUIRE(d.has_value());
        CHECK(d->equal(p));
    }
}

TEST_CASE("exponential shift: P(D) applied to exp(a t) x") {
    // P(D)(e^{at} x) = e^{at} P(D+a) x, checked by exact application.
    for (int k = 0; k < 500; ++k) {
        OperatorPoly p = rand_op(3);
        GaussRat a = rand_gauss();
        ExpPoly x = rand_func(2);
        ExpPoly lhs = p.apply(x.exp_shifted("t", CNum(a)));
        OperatorPoly shifted =
            p.exp_shift({{"D", RatFunc::constant(a)}});
        ExpPoly rhs = shifted.apply(x).exp_shifted("t", CNum(a));
        CHECK(func_same(lhs, rhs));
    }
}

TEST_CASE("characteristic evaluation: P(D) exp(a t) = P(a) exp(a t)") {
    for (int k = 0; k < 500; ++k) {
        OperatorPoly p = rand_op(4);
        GaussRat a = rand_gauss();
        ExpPoly e = ExpPoly::exponential("t", CNum(a));
        ExpPoly lhs = p.apply(e);
        CNum pa = p.eval_at({{"D", CNum(a)}});
        ExpPoly rhs = e.scaled(pa);
        CHECK(func_same(lhs, rhs));
    }
}

TEST_CASE("operators commute when applied to smooth functions") {
    for (int k = 0; k < 500; ++k) {
        OperatorPoly p = rand_op(3), q = rand_op(3);
        ExpPoly f = rand_func();
        CHECK(func_same(p.apply(q.apply(f)), q.apply(p.apply(f))));
        CHECK(func_same((p * q).apply(f), p.apply(q.apply(f))));
    }
}

TEST_CASE("1/(D+a) is a right inverse of (D+a), constants retained") {
    for (int k = 0; k < 500; ++k) {
        GaussRat a = rand_gauss();
        ExpPoly f = rand_func(2);
        ConstGen gen;
        ExpPoly x = apply_inverse_first_order(CNum(a), f, "t", &gen);
        OperatorPoly op = OperatorPoly::d(Dt) +
                          OperatorPoly(RatFunc::constant(a));
        // (D + a) x reproduces f exactly; the integration constant dies.
        ExpPoly back = op.apply(x.with_consts({{"c_1", CNum(0l)}}));
        CHECK(func_same(back, f, 1e-9));
        CHECK(gen.count() == 1);
    }
}

TEST_CASE("degree bookkeeping under products") {
    for (int k = 0; k < 300; ++k) {
        OperatorPoly p = rand_op(3), q = rand_op(3);
        CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    }
}

TEST_CASE("substitution commutes with evaluation") {
    OperatorPoly p = OperatorPoly::d(Dt, 2, RatFunc::symbol("m")) +
                     OperatorPoly(RatFunc::symbol("k"));
    auto q = p.substitute({{"m", GaussRat(2)}, {"k", GaussRat(3)}});
    CHECK(q.is_numeric());
    CNum v = q.eval_at({{"D", CNum(GaussRat(5))}});
    CHECK(v.exact());
    CHECK(v.rat() == GaussRat(53));
}
