#ifndef DAEKIT_EXP_POLY_HPP
#define DAEKIT_EXP_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "daekit/cnum.hpp"

namespace daekit {

// Session-scoped generator of integration-constant symbols.  The counter is
// the only mutable state in the function class; keep one per solve session.
class ConstGen {
public:
    explicit ConstGen(std::string prefix = "c") : prefix_(std::move(prefix)) {}
    std::string fresh(const std::string& provenance = "") {
        std::string name = prefix_ + "_" + std::to_string(++count_);
        provenance_.emplace_back(name, provenance);
        return name;
    }
    int count() const { return count_; }
    const std::vector<std::pair<std::string, std::string>>& provenance() const {
        return provenance_;
    }

private:
    std::string prefix_;
    int count_ = 0;
    std::vector<std::pair<std::string, std::string>> provenance_;
};

// Coefficient of an ExpPoly term: a numeric part plus a linear combination
// of integration-constant symbols.
struct CoeffLC {
    CNum pure;
    std::map<std::string, CNum> consts;

    CoeffLC() = default;
    CoeffLC(CNum v) : pure(std::move(v)) {}
    static CoeffLC constant_symbol(const std::string& name) {
        CoeffLC c;
        c.consts[name] = CNum(GaussRat(1));
        return c;
    }

    bool is_zero() const;
    bool has_consts() const { return !consts.empty(); }
    CoeffLC operator+(const CoeffLC& o) const;
    CoeffLC operator-() const;
    CoeffLC scaled(const CNum& s) const;
    CNum eval(const std::map<std::string, CNum>& const_assignment) const;
    bool same(const CoeffLC& o, double tol = 1e-10) const;
    std::string str() const;
};

// Finite sum of coeff * prod_i t_i^k_i * exp(sum_i a_i t_i) terms over the
// declared independent variables.  Closed under differentiation, the
// modified indefinite integral, and exponential shifts.
class ExpPoly {
public:
    struct Term {
        CoeffLC coeff;
        std::map<std::string, int> powers;    // ivar -> positive exponent
        std::map<std::string, CNum> exponents; // ivar -> nonzero exponent
    };

    ExpPoly() = default;
    explicit ExpPoly(CNum constant);
    static ExpPoly term(CoeffLC c, std::map<std::string, int> powers,
                        std::map<std::string, CNum> exponents);
    static ExpPoly var_power(const std::string& ivar, int k);
    static ExpPoly exponential(const std::string& ivar, const CNum& a);
    static ExpPoly constant_symbol(const std::string& name);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_consts() const;

    ExpPoly operator+(const ExpPoly& o) const;
    ExpPoly operator-(const ExpPoly& o) const;
    ExpPoly operator-() const;
    // General product; at most one factor may carry constant symbols.
    ExpPoly operator*(const ExpPoly& o) const;
    ExpPoly scaled(const CNum& s) const;
    // Multiply by exp(a * ivar): shifts every term's exponent.
    ExpPoly exp_shifted(const std::string& ivar, const CNum& a) const;

    ExpPoly diff(const std::string& ivar) const;
    // Modified indefinite integral: antiderivative plus a fresh constant
    // symbol when gen is non-null (1/D 0 = c); pass nullptr for the classical
    // particular-only path.
    ExpPoly integrate(const std::string& ivar, ConstGen* gen) const;

    // Substitute numeric values for constant symbols.
    ExpPoly with_consts(const std::map<std::string, CNum>& assignment) const;
    // Numeric evaluation at a point (all constants must be bound).
    std::complex<double> eval(
        const std::map<std::string, std::complex<double>>& point,
        const std::map<std::string, CNum>& const_assignment = {}) const;

    bool same(const ExpPoly& o, double tol = 1e-10) const;

    std::string str() const;

private:
    void add_term(Term t);
    void sort_terms();
    std::vector<Term> terms_;
};

// Full solution of (D + a) x = f on ivar: exp(-a t) * integral(exp(a t) f).
// With gen non-null the integration constant is retained, making the result
// the full (complementary + particular) solution.
ExpPoly apply_inverse_first_order(const CNum& a, const ExpPoly& f,
                                  const std::string& ivar, ConstGen* gen);

} // namespace daekit

#endif
