#ifndef DAEKIT_RAT_FUNC_HPP
#define DAEKIT_RAT_FUNC_HPP

#include "daekit/param_poly.hpp"

namespace daekit {

// Rational function num/den over ParamPoly.  Normalized so that the content
// of den is 1 and den's leading coefficient has positive real part (positive
// imaginary part when purely imaginary).  Equality is decided by
// cross-multiplied expansion, never by gcd canonicalization; the only
// simplification pass is content extraction plus trial division.
class RatFunc {
public:
    RatFunc() : num_(), den_(GaussRat(1)) {}
    RatFunc(const ParamPoly& num); // den = 1
    RatFunc(ParamPoly num, ParamPoly den);
    static RatFunc constant(const GaussRat& c) { return RatFunc(ParamPoly(c)); }
    static RatFunc constant(long n) { return constant(GaussRat(n)); }
    static RatFunc symbol(const std::string& name) {
        return RatFunc(ParamPoly::symbol(name));
    }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussRat constant_value() const {
        return num_.constant_value() / den_.constant_value();
    }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    std::complex<double> eval(
        const std::map<std::string, std::complex<double>>& assignment,
        double pole_tol = 1e-12) const;
    GaussRat eval_exact(const std::map<std::string, GaussRat>& assignment) const;
    RatFunc substitute(const std::map<std::string, GaussRat>& assignment) const;

    std::set<std::string> symbols() const;

    std::string str() const;

private:
    void normalize();
    ParamPoly num_;
    ParamPoly den_;
};

// true iff a and b agree as rational functions: a.num*b.den - b.num*a.den
// expands to zero.  Requires no multivariate gcd.
bool poly_expand_equal(const RatFunc& a, const RatFunc& b);

} // namespace daekit

#endif
