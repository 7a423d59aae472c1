#ifndef DAEKIT_PARAM_POLY_HPP
#define DAEKIT_PARAM_POLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "daekit/cnum.hpp"
#include "daekit/gaussian_rational.hpp"

namespace daekit {

// Monomial in named parameter symbols: symbol -> positive exponent.
using Monomial = std::map<std::string, int>;

// Graded lexicographic order: first total degree, then lex by symbol name
// (a larger exponent on an earlier symbol wins).  Fixed for deterministic
// printing and canonical leading coefficients.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
// a / b, or nullopt when b does not divide a.
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b);

// Multivariate polynomial in parameter symbols over Q(i).  The zero
// polynomial is the empty term map; no zero coefficients are stored.
class ParamPoly {
public:
    ParamPoly() = default;
    explicit ParamPoly(const GaussRat& c);
    static ParamPoly symbol(const std::string& name, int exp = 1);
    static ParamPoly constant(long n) { return ParamPoly(GaussRat(n)); }

    const std::map<Monomial, GaussRat, GrlexLess>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (zero polynomial -> 0).
    GaussRat constant_value() const;

    void add_term(const Monomial& m, const GaussRat& c);

    ParamPoly operator-() const;
    ParamPoly operator+(const ParamPoly& o) const;
    ParamPoly operator-(const ParamPoly& o) const;
    ParamPoly operator*(const ParamPoly& o) const;
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const ParamPoly& o) const { return !(*this == o); }

    int total_degree() const;
    const Monomial& leading_monomial() const;
    const GaussRat& leading_coeff() const;

    // Positive rational c with integer-coprime coefficients in p/c.  Content
    // of the zero polynomial is 1.
    mpq_class content() const;

    // Exact multivariate trial division; nullopt when not divisible.
    std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

    std::set<std::string> symbols() const;

    std::complex<double> eval(
        const std::map<std::string, std::complex<double>>& assignment) const;
    // Exact substitution of Gaussian-rational parameter values.
    GaussRat eval_exact(const std::map<std::string, GaussRat>& assignment) const;
    // Partial substitution: symbols present in the assignment are replaced,
    // others are kept.
    ParamPoly substitute(const std::map<std::string, GaussRat>& assignment) const;

    std::string str() const;

private:
    std::map<Monomial, GaussRat, GrlexLess> terms_;
};

} // namespace daekit

#endif
