#ifndef DAEKIT_OPERATOR_POLY_HPP
#define DAEKIT_OPERATOR_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "daekit/exp_poly.hpp"
#include "daekit/rat_func.hpp"

namespace daekit {

// A differentiation symbol tied to the independent variable it acts on
// (D_t <-> t); declared at system construction.
struct OpVar {
    std::string name; // e.g. "D" or "D_t"
    std::string ivar; // e.g. "t"
    bool operator==(const OpVar& o) const {
        return name == o.name && ivar == o.ivar;
    }
    bool operator<(const OpVar& o) const { return name < o.name; }
};

// Graded lex on exponent vectors (a larger exponent on an earlier opvar
// wins within a degree class).
struct GrlexVecLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Polynomial in commuting differential-operator symbols with rational
// function coefficients.  Coefficients contain parameter symbols only,
// never independent variables, so the ring is commutative.
class OperatorPoly {
public:
    OperatorPoly() = default;
    explicit OperatorPoly(const RatFunc& c);
    static OperatorPoly constant(long n) {
        return OperatorPoly(RatFunc::constant(n));
    }
    static OperatorPoly d(const OpVar& v, int power = 1,
                          const RatFunc& coeff = RatFunc::constant(1));

    const std::vector<OpVar>& opvars() const { return vars_; }
    const std::map<std::vector<int>, RatFunc, GrlexVecLess>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const; // degree 0 in all opvars
    RatFunc constant_coeff() const;
    // true when every coefficient is a parameter-free constant
    bool is_numeric() const;

    OperatorPoly operator-() const;
    OperatorPoly operator+(const OperatorPoly& o) const;
    OperatorPoly operator-(const OperatorPoly& o) const;
    OperatorPoly operator*(const OperatorPoly& o) const;
    OperatorPoly& operator+=(const OperatorPoly& o) { return *this = *this + o; }
    OperatorPoly& operator-=(const OperatorPoly& o) { return *this = *this - o; }
    OperatorPoly& operator*=(const OperatorPoly& o) { return *this = *this * o; }
    OperatorPoly scaled(const RatFunc& c) const;

    bool equal(const OperatorPoly& o) const; // coefficient-wise poly_expand_equal

    int total_degree() const;
    int degree_in(const OpVar& v) const;
    // Exponent vector and coefficient of the grlex-leading term.
    std::pair<std::vector<int>, RatFunc> leading_term() const;

    // Exact trial division over the operator ring; nullopt if not divisible.
    std::optional<OperatorPoly> divide_exact(const OperatorPoly& divisor) const;

    // Formal derivative with respect to an operator symbol.
    OperatorPoly d_by_opvar(const OpVar& v) const;

    // Substitute parameter values into every coefficient.
    OperatorPoly substitute(const std::map<std::string, GaussRat>& assignment) const;

    // Evaluate P at numeric exponents (opvar name -> value); coefficients
    // must be parameter-free.
    CNum eval_at(const std::map<std::string, CNum>& point) const;

    // Apply to a function in the exponential-polynomial class by exact
    // term-by-term differentiation.  Coefficients must be parameter-free.
    ExpPoly apply(const ExpPoly& f) const;

    // P(D + a): substitute D_i -> D_i + a_i and expand.  Missing opvars
    // shift by zero.  Shift amounts may be symbolic rational functions.
    OperatorPoly exp_shift(const std::map<std::string, RatFunc>& shift) const;

    // Coefficients by ascending degree for a univariate operator polynomial;
    // requires parameter-free coefficients.
    std::vector<CNum> univariate_coeffs() const;

    std::set<std::string> param_symbols() const;

    std::string str() const;

private:
    void promote(const OperatorPoly& o, OperatorPoly& a, OperatorPoly& b) const;
    void add_term(const std::vector<int>& mono, const RatFunc& c);
    std::vector<OpVar> vars_;
    std::map<std::vector<int>, RatFunc, GrlexVecLess> terms_;
};

} // namespace daekit

#endif
