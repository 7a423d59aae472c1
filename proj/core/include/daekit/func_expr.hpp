#ifndef DAEKIT_FUNC_EXPR_HPP
#define DAEKIT_FUNC_EXPR_HPP

#include <map>
#include <string>
#include <vector>

#include "daekit/operator_poly.hpp"

namespace daekit {

// Formal function symbol with derivative tracking: a(t), a'(t), a''(t), ...
// Coefficient functions stay opaque; only the derivative index advances.
struct FuncSymbol {
    std::string name;
    int derivative_order = 0;
    std::vector<std::string> args;

    bool operator==(const FuncSymbol& o) const {
        return name == o.name && derivative_order == o.derivative_order &&
               args == o.args;
    }
    bool operator<(const FuncSymbol& o) const {
        if (name != o.name) return name < o.name;
        if (derivative_order != o.derivative_order)
            return derivative_order < o.derivative_order;
        return args < o.args;
    }
    std::string str() const;
};

// Sum of RatFunc-weighted products of function symbols.  The empty product
// is the parameter-only (constant-coefficient) part.
class FuncExpr {
public:
    using Product = std::vector<FuncSymbol>; // kept sorted

    FuncExpr() = default;
    explicit FuncExpr(const RatFunc& c);
    static FuncExpr symbol(const FuncSymbol& f);

    const std::map<Product, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // true when no function symbols appear
    bool is_param_only() const;
    RatFunc param_part() const;

    FuncExpr operator-() const;
    FuncExpr operator+(const FuncExpr& o) const;
    FuncExpr operator-(const FuncExpr& o) const;
    FuncExpr operator*(const FuncExpr& o) const;
    FuncExpr scaled(const RatFunc& c) const;

    // Formal derivative: Leibniz over products, incrementing each symbol's
    // derivative index; parameter coefficients differentiate to zero.
    FuncExpr derivative() const;

    bool operator==(const FuncExpr& o) const;

    std::string str() const;

private:
    void add_term(const Product& p, const RatFunc& c);
    std::map<Product, RatFunc> terms_;
};

// Variable-coefficient operator sum a_k(t) D^k in a single operator symbol.
class VcOperator {
public:
    VcOperator() = default;
    explicit VcOperator(const OpVar& v) : opvar_(v) {}
    static VcOperator term(const OpVar& v, const FuncExpr& coeff, int order);
    // Promote a constant-coefficient univariate operator polynomial.
    static VcOperator from_operator_poly(const OperatorPoly& p);

    const OpVar& opvar() const { return opvar_; }
    const std::map<int, FuncExpr>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant_coefficient() const;
    // Valid only when is_constant_coefficient().
    OperatorPoly to_operator_poly() const;
    int order() const;

    VcOperator operator-() const;
    VcOperator operator+(const VcOperator& o) const;
    VcOperator operator-(const VcOperator& o) const;

    bool operator==(const VcOperator& o) const;

    std::string str() const;

private:
    friend VcOperator compose_vc(const OperatorPoly& p, const VcOperator& h);
    void add_term(int order, const FuncExpr& c);
    OpVar opvar_;
    std::map<int, FuncExpr> terms_;
};

// p(D) composed with h(D, t), expanded with the Leibniz rule
// D^k (a(t) .) = sum_j C(k,j) a^(j)(t) D^(k-j).  The left factor must be a
// constant-coefficient univariate polynomial in h's operator symbol.
VcOperator compose_vc(const OperatorPoly& p, const VcOperator& h);

} // namespace daekit

#endif
