#include "daekit/operator_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

bool GrlexVecLess::operator()(const std::vector<int>& a,
                              const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

OperatorPoly::OperatorPoly(const RatFunc& c) {
    if (!c.is_zero()) terms_[{}] = c;
}

OperatorPoly OperatorPoly::d(const OpVar& v, int power, const RatFunc& coeff) {
    OperatorPoly p;
    if (coeff.is_zero()) return p;
    p.vars_ = {v};
    if (power == 0) {
        p.terms_[{0}] = coeff;
    } else {
        p.terms_[std::vector<int>{power}] = coeff;
    }
    return p;
}

bool OperatorPoly::is_constant() const {
    for (auto& [m, c] : terms_)
        for (int e : m)
            if (e != 0) return false;
    return true;
}

RatFunc OperatorPoly::constant_coeff() const {
    for (auto& [m, c] : terms_) {
        bool all0 = true;
        for (int e : m) all0 = all0 && e == 0;
        if (all0) return c;
    }
    return RatFunc();
}

bool OperatorPoly::is_numeric() const {
    for (auto& [m, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

void OperatorPoly::add_term(const std::vector<int>& mono, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_[mono] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

// Rewrites a and b over the union of their opvar universes.
void OperatorPoly::promote(const OperatorPoly& o, OperatorPoly& a,
                           OperatorPoly& b) const {
    std::vector<OpVar> merged = vars_;
    for (auto& v : o.vars_) {
        bool found = false;
        for (auto& u : merged)
            if (u.name == v.name) {
                found = true;
                break;
            }
        if (!found) merged.push_back(v);
    }
    std::sort(merged.begin(), merged.end());
    auto remap = [&](const OperatorPoly& src, OperatorPoly& dst) {
        dst.vars_ = merged;
        dst.terms_.clear();
        std::vector<int> idx(src.vars_.size());
        for (size_t i = 0; i < src.vars_.size(); ++i) {
            for (size_t j = 0; j < merged.size(); ++j)
                if (merged[j].name == src.vars_[i].name) idx[i] = (int)j;
        }
        for (auto& [m, c] : src.terms_) {
            std::vector<int> mono(merged.size(), 0);
            for (size_t i = 0; i < m.size(); ++i) mono[idx[i]] = m[i];
            dst.terms_[mono] = c;
        }
    };
    remap(*this, a);
    remap(o, b);
}

OperatorPoly OperatorPoly::operator-() const {
    OperatorPoly r;
    r.vars_ = vars_;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

OperatorPoly OperatorPoly::operator+(const OperatorPoly& o) const {
    OperatorPoly a, b;
    promote(o, a, b);
    for (auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
}

OperatorPoly OperatorPoly::operator-(const OperatorPoly& o) const {
    return *this + (-o);
}

OperatorPoly OperatorPoly::operator*(const OperatorPoly& o) const {
    OperatorPoly a, b;
    promote(o, a, b);
    OperatorPoly r;
    r.vars_ = a.vars_;
    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            std::vector<int> m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

OperatorPoly OperatorPoly::scaled(const RatFunc& c) const {
    OperatorPoly r;
    if (c.is_zero()) return r;
    r.vars_ = vars_;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

bool OperatorPoly::equal(const OperatorPoly& o) const {
    OperatorPoly a, b;
    promote(o, a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (!poly_expand_equal(ia->second, ib->second)) return false;
    }
    return true;
}

int OperatorPoly::total_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

int OperatorPoly::degree_in(const OpVar& v) const {
    int idx = -1;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == v.name) idx = (int)i;
    if (idx < 0) return is_zero() ? -1 : 0;
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m[idx]);
    return d;
}

std::pair<std::vector<int>, RatFunc> OperatorPoly::leading_term() const {
    if (terms_.empty()) return {{}, RatFunc()};
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

std::optional<OperatorPoly> OperatorPoly::divide_exact(
    const OperatorPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("operator division by zero");
    OperatorPoly a, b;
    promote(divisor, a, b);
    OperatorPoly quot;
    quot.vars_ = a.vars_;
    auto [lb, cb] = b.leading_term();
    while (!a.terms_.empty()) {
        auto [la, ca] = a.leading_term();
        std::vector<int> m(la.size());
        for (size_t i = 0; i < m.size(); ++i) {
            if (la[i] < lb[i]) return std::nullopt;
            m[i] = la[i] - lb[i];
        }
        RatFunc c = ca / cb;
        OperatorPoly t;
        t.vars_ = a.vars_;
        t.terms_[m] = c;
        quot += t;
        a -= t * b;
    }
    return quot;
}

OperatorPoly OperatorPoly::d_by_opvar(const OpVar& v) const {
    int idx = -1;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == v.name) idx = (int)i;
    OperatorPoly r;
    if (idx < 0) return r;
    r.vars_ = vars_;
    for (auto& [m, c] : terms_) {
        if (m[idx] == 0) continue;
        std::vector<int> u = m;
        u[idx] -= 1;
        r.add_term(u, c * RatFunc::constant(GaussRat((long)m[idx])));
    }
    return r;
}

OperatorPoly OperatorPoly::substitute(
    const std::map<std::string, GaussRat>& assignment) const {
    OperatorPoly r;
    r.vars_ = vars_;
    for (auto& [m, c] : terms_) r.add_term(m, c.substitute(assignment));
    return r;
}

CNum OperatorPoly::eval_at(const std::map<std::string, CNum>& point) const {
    CNum acc;
    for (auto& [m, c] : terms_) {
        if (!c.is_constant())
            throw SymbolicCoefficientsRemain(
                "operator polynomial has symbolic coefficients: " + c.str());
        CNum t(c.constant_value());
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = point.find(vars_[i].name);
            if (it == point.end()) throw UnboundSymbol(vars_[i].name);
            for (int k = 0; k < m[i]; ++k) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

ExpPoly OperatorPoly::apply(const ExpPoly& f) const {
    ExpPoly acc;
    for (auto& [m, c] : terms_) {
        if (!c.is_constant())
            throw SymbolicCoefficientUnsupported(
                "cannot apply operator with symbolic coefficient " + c.str());
        ExpPoly g = f;
        for (size_t i = 0; i < m.size(); ++i)
            for (int k = 0; k < m[i]; ++k) g = g.diff(vars_[i].ivar);
        acc = acc + g.scaled(CNum(c.constant_value()));
    }
    return acc;
}

OperatorPoly OperatorPoly::exp_shift(
    const std::map<std::string, RatFunc>& shift) const {
    OperatorPoly r;
    r.vars_ = vars_;
    for (auto& [m, c] : terms_) {
        OperatorPoly term(c);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = shift.find(vars_[i].name);
            OperatorPoly base = OperatorPoly::d(vars_[i]);
            if (it != shift.end() && !it->second.is_zero())
                base += OperatorPoly(it->second);
            for (int k = 0; k < m[i]; ++k) term *= base;
        }
        r += term;
    }
    return r;
}

std::vector<CNum> OperatorPoly::univariate_coeffs() const {
    int nvars = 0;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (degree_in(vars_[i]) > 0) ++nvars;
    if (vars_.size() > 1 && nvars > 1)
        throw Error(ErrorKind::Unsupported,
                    "operator polynomial is not univariate");
    std::vector<CNum> coeffs(std::max(total_degree(), 0) + 1, CNum());
    for (auto& [m, c] : terms_) {
        if (!c.is_constant())
            throw SymbolicCoefficientsRemain(
                "operator polynomial has symbolic coefficients: " + c.str());
        int d = std::accumulate(m.begin(), m.end(), 0);
        coeffs[d] += CNum(c.constant_value());
    }
    return coeffs;
}

std::set<std::string> OperatorPoly::param_symbols() const {
    std::set<std::string> r;
    for (auto& [m, c] : terms_) {
        auto s = c.symbols();
        r.insert(s.begin(), s.end());
    }
    return r;
}

std::string OperatorPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> ops;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            ops.push_back(m[i] == 1
                              ? vars_[i].name
                              : vars_[i].name + "^" + std::to_string(m[i]));
        }
        std::string cs = c.str();
        bool one = cs == "1" && !ops.empty();
        if (!one) {
            bool needs_paren =
                (c.num().terms().size() > 1 && !ops.empty()) ||
                (cs.find(" + ") != std::string::npos ||
                 cs.find(" - ") != std::string::npos);
            if (needs_paren && !ops.empty())
                os << "(" << cs << ")";
            else
                os << cs;
            if (!ops.empty()) os << "*";
        }
        for (size_t i = 0; i < ops.size(); ++i) {
            if (i) os << " ";
            os << ops[i];
        }
    }
    return os.str();
}

} // namespace daekit
