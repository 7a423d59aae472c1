#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daekit/gaussian_rational.hpp"
#include "daekit/cnum.hpp"
#include "daekit/param_poly.hpp"
#include "daekit/rat_func.hpp"

using namespace daekit;

namespace {

std::mt19937 rng(12021);

GaussRat rand_gauss() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    return GaussRat(mpq_class(num(rng), den(rng)),
                    mpq_class(num(rng), den(rng)));
}

ParamPoly rand_poly(const std::vector<std::string>& syms, int max_terms = 4,
                    int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<size_t> pick(0, syms.size() - 1);
    ParamPoly p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m;
        int d = deg(rng);
        for (int k = 0; k < d; ++k) m[syms[pick(rng)]] += 1;
        p.add_term(m, rand_gauss());
    }
    return p;
}

} // namespace

TEST_CASE("gaussian rationals satisfy field axioms on random values") {
    for (int k = 0; k < 1000; ++k) {
        GaussRat a = rand_gauss(), b = rand_gauss(), c = rand_gauss();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + GaussRat(0) == a);
        CHECK(a * GaussRat(1) == a);
        CHECK(a - a == GaussRat(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("gaussian rational conjugation and norm") {
    for (int k = 0; k < 200; ++k) {
        GaussRat a = rand_gauss();
        GaussRat n = a * a.conj();
        CHECK(n.im() == 0);
        CHECK(n.re() >= 0);
        if (!a.is_zero()) {
            GaussRat inv = GaussRat(1) / a;
            CHECK(a * inv == GaussRat(1));
        }
    }
}

TEST_CASE("i squares to -1 and complex parts track arithmetic") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    GaussRat z(mpq_class(3), mpq_class(4));
    CHECK((z * z.conj()).re() == mpq_class(25));
}

TEST_CASE("cnum keeps exactness through exact operations") {
    CNum a{GaussRat(mpq_class(1, 3))};
    CNum b{GaussRat(mpq_class(2, 3))};
    CHECK((a + b).exact());
    CHECK((a + b).is_one());
    CNum f(0.5);
    CHECK(!f.exact());
    CHECK(!(a + f).exact());
    CHECK(std::abs((a + f).to_complex().real() - (1.0 / 3 + 0.5)) < 1e-15);
}

TEST_CASE("parameter polynomials satisfy ring axioms on random values") {
    std::vector<std::string> syms{"a", "b", "c"};
    for (int k = 0; k < 1000; ++k) {
        ParamPoly p = rand_poly(syms), q = rand_poly(syms), r = rand_poly(syms);
        CHECK(p + q == q + p);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == ParamPoly());
        CHECK(p * ParamPoly(GaussRat(1)) == p);
        CHECK((p * ParamPoly()).is_zero());
    }
}

TEST_CASE("exact trial division inverts multiplication") {
    std::vector<std::string> syms{"a", "b"};
    int hits = 0;
    for (int k = 0; k < 400; ++k) {
        ParamPoly p = rand_poly(syms, 3, 2), q = rand_poly(syms, 3, 2);
        if (p.is_zero() || q.is_zero()) continue;
        auto d = (p * q).divide_exact(q);
        REQUIRE(d.has_value());
        CHECK(*d == p);
        ++hits;
    }
    CHECK(hits > 100);
}

TEST_CASE("grlex ordering gives a stable leading term") {
    ParamPoly p = ParamPoly::symbol("a", 2) + ParamPoly::symbol("b", 3);
    // b^3 has higher total degree than a^2.
    const auto& lead = p.terms().rbegin()->first;
    CHECK(lead.at("b") == 3);
}

TEST_CASE("rational functions form a field under expansion equality") {
    std::vector<std::string> syms{"a", "b"};
    int checked = 0;
    for (int k = 0; k < 500; ++k) {
        ParamPoly pn = rand_poly(syms, 3, 2), pd = rand_poly(syms, 2, 2);
        ParamPoly qn = rand_poly(syms, 3, 2), qd = rand_poly(syms, 2, 2);
        if (pd.is_zero() || qd.is_zero()) continue;
        RatFunc p(pn, pd), q(qn, qd);
        CHECK(poly_expand_equal(p + q, q + p));
        CHECK(poly_expand_equal(p * q, q * p));
        CHECK(poly_expand_equal(p - p, RatFunc()));
        if (!q.is_zero()) CHECK(poly_expand_equal((p / q) * q, p));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("rational functions cancel shared monomial content") {
    RatFunc r = RatFunc::symbol("Z") * RatFunc::symbol("b") /
                (RatFunc::symbol("Zf") * RatFunc::symbol("b"));
    CHECK(r.str() == "Z/Zf");
}

TEST_CASE("rational function printing parenthesizes product denominators") {
    RatFunc r = RatFunc::symbol("a") /
                (RatFunc::symbol("b") * RatFunc::symbol("c"));
    CHECK(r.str() == "a/(b*c)");
}

TEST_CASE("numeric evaluation matches exact evaluation") {
    std::vector<std::string> syms{"a", "b"};
    for (int k = 0; k < 200; ++k) {
        ParamPoly pn = rand_poly(syms, 3, 2);
        std::map<std::string, GaussRat> exact{{"a", rand_gauss()},
                                              {"b", rand_gauss()}};
        std::map<std::string, std::complex<double>> approx;
        for (auto& [s, v] : exact) approx[s] = v.to_complex();
        CHECK(std::abs(pn.eval(approx) - pn.eval_exact(exact).to_complex()) <
              1e-9);
    }
}
