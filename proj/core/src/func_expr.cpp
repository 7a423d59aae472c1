#include "daekit/func_expr.hpp"

#include <algorithm>
#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

std::string FuncSymbol::str() const {
    std::ostringstream os;
    os << name;
    if (derivative_order > 0 && derivative_order <= 3)
        os << std::string(derivative_order, '\'');
    else if (derivative_order > 3)
        os << "^(" << derivative_order << ")";
    if (!args.empty()) {
        os << "(";
        for (size_t i = 0; i < args.size(); ++i) {
            if (i) os << ",";
            os << args[i];
        }
        os << ")";
    }
    return os.str();
}

FuncExpr::FuncExpr(const RatFunc& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

FuncExpr FuncExpr::symbol(const FuncSymbol& f) {
    FuncExpr e;
    e.terms_[{f}] = RatFunc::constant(1);
    return e;
}

bool FuncExpr::is_param_only() const {
    for (auto& [p, c] : terms_)
        if (!p.empty()) return false;
    return true;
}

RatFunc FuncExpr::param_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? RatFunc() : it->second;
}

void FuncExpr::add_term(const Product& p, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_[p] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FuncExpr FuncExpr::operator-() const {
    FuncExpr r;
    for (auto& [p, c] : terms_) r.terms_[p] = -c;
    return r;
}

FuncExpr FuncExpr::operator+(const FuncExpr& o) const {
    FuncExpr r = *this;
    for (auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

FuncExpr FuncExpr::operator-(const FuncExpr& o) const { return *this + (-o); }

FuncExpr FuncExpr::operator*(const FuncExpr& o) const {
    FuncExpr r;
    for (auto& [pa, ca] : terms_) {
        for (auto& [pb, cb] : o.terms_) {
            Product p = pa;
            p.insert(p.end(), pb.begin(), pb.end());
            std::sort(p.begin(), p.end());
            r.add_term(p, ca * cb);
        }
    }
    return r;
}

FuncExpr FuncExpr::scaled(const RatFunc& c) const {
    FuncExpr r;
    if (c.is_zero()) return r;
    for (auto& [p, k] : terms_) r.add_term(p, k * c);
    return r;
}

FuncExpr FuncExpr::derivative() const {
    FuncExpr r;
    for (auto& [p, c] : terms_) {
        // Product rule across the symbol product; pure parameter terms
        // differentiate away.
        for (size_t i = 0; i < p.size(); ++i) {
            Product q = p;
            q[i].derivative_order += 1;
            std::sort(q.begin(), q.end());
            r.add_term(q, c);
        }
    }
    return r;
}

bool FuncExpr::operator==(const FuncExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto ia = terms_.begin();
    auto ib = o.terms_.begin();
    for (; ia != terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        if (!poly_expand_equal(ia->second, ib->second)) return false;
    }
    return true;
}

std::string FuncExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool one = (cs == "1") && !p.empty();
        if (!one) {
            if (cs.find(" + ") != std::string::npos ||
                cs.find(" - ") != std::string::npos)
                os << "(" << cs << ")";
            else
                os << cs;
            if (!p.empty()) os << "*";
        }
        for (size_t i = 0; i < p.size(); ++i) {
            if (i) os << "*";
            os << p[i].str();
        }
    }
    return os.str();
}

VcOperator VcOperator::term(const OpVar& v, const FuncExpr& coeff, int order) {
    VcOperator h(v);
    if (!coeff.is_zero()) h.terms_[order] = coeff;
    return h;
}

VcOperator VcOperator::from_operator_poly(const OperatorPoly& p) {
    OpVar v;
    bool have_var = false;
    for (auto& u : p.opvars()) {
        if (p.degree_in(u) > 0) {
            if (have_var)
                throw Error(ErrorKind::Unsupported,
                            "cannot promote multivariate operator to "
                            "variable-coefficient form");
            v = u;
            have_var = true;
        }
    }
    if (!have_var && !p.opvars().empty()) v = p.opvars().front();
    VcOperator h(v);
    for (auto& [m, c] : p.terms()) {
        int d = 0;
        for (int e : m) d += e;
        h.add_term(d, FuncExpr(c));
    }
    return h;
}

bool VcOperator::is_constant_coefficient() const {
    for (auto& [k, c] : terms_)
        if (!c.is_param_only()) return false;
    return true;
}

OperatorPoly VcOperator::to_operator_poly() const {
    OperatorPoly p;
    for (auto& [k, c] : terms_)
        p += OperatorPoly::d(opvar_, k, c.param_part());
    return p;
}

int VcOperator::order() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

void VcOperator::add_term(int order, const FuncExpr& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(order);
    if (it == terms_.end()) {
        terms_[order] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VcOperator VcOperator::operator-() const {
    VcOperator r(opvar_);
    for (auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

VcOperator VcOperator::operator+(const VcOperator& o) const {
    VcOperator r = *this;
    if (r.terms_.empty()) r.opvar_ = o.opvar_;
    else if (!o.terms_.empty() && !(o.opvar_.name == opvar_.name))
        throw Error(ErrorKind::Unsupported,
                    "variable-coefficient operators over different symbols");
    for (auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

VcOperator VcOperator::operator-(const VcOperator& o) const {
    return *this + (-o);
}

bool VcOperator::operator==(const VcOperator& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto ia = terms_.begin();
    auto ib = o.terms_.begin();
    for (; ia != terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

std::string VcOperator::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        std::string cs = it->second.str();
        bool one = cs == "1" && it->first > 0;
        if (!one) {
            if (it->second.terms().size() > 1)
                os << "(" << cs << ")";
            else
                os << cs;
            if (it->first > 0) os << "*";
        }
        if (it->first == 1)
            os << opvar_.name;
        else if (it->first > 1)
            os << opvar_.name << "^" << it->first;
    }
    return os.str();
}

VcOperator compose_vc(const OperatorPoly& p, const VcOperator& h) {
    // Left factor must be constant-coefficient and univariate in h's symbol.
    for (auto& v : p.opvars()) {
        if (p.degree_in(v) > 0 && !(v.name == h.opvar().name))
            throw NonConstantLeftFactor(
                "left factor uses operator " + v.name +
                " foreign to the variable-coefficient operand " +
                h.opvar().name);
    }
    auto coeffs_by_order = [&]() {
        std::map<int, RatFunc> m;
        for (auto& [mono, c] : p.terms()) {
            int d = 0;
            for (int e : mono) d += e;
            auto it = m.find(d);
            if (it == m.end()) m[d] = c;
            else it->second += c;
        }
        return m;
    }();

    VcOperator r(h.opvar());
    for (auto& [k, ck] : coeffs_by_order) {
        for (auto& [ord, a] : h.terms()) {
            // D^k (a(t) D^ord) = sum_j C(k,j) a^(j)(t) D^(k-j+ord)
            FuncExpr deriv = a;
            mpz_class binom = 1;
            for (int j = 0; j <= k; ++j) {
                if (j > 0) deriv = deriv.derivative();
                mpz_class bc;
                mpz_bin_uiui(bc.get_mpz_t(), (unsigned long)k, (unsigned long)j);
                FuncExpr contrib =
                    deriv.scaled(ck * RatFunc::constant(GaussRat(mpq_class(bc))));
                r.add_term(k - j + ord, contrib);
            }
            (void)binom;
        }
    }
    return r;
}

} // namespace daekit
