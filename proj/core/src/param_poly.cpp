#include "daekit/param_poly.hpp"

#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto& [s, e] : m) d += e;
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    // Lex comparison over the union of symbols in name order; absent
    // symbols count as exponent 0.
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The monomial owning the earlier symbol has a positive exponent
            // there, so it is lex-greater.
            return ia->first > ib->first;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    if (ia != a.end()) return false; // a has an extra (later) symbol -> greater
    if (ib != b.end()) return true;
    return false;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (auto& [s, e] : b) {
        int v = (r[s] += e);
        if (v == 0) r.erase(s);
    }
    return r;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (auto& [s, e] : b) {
        auto it = r.find(s);
        if (it == r.end() || it->second < e) return std::nullopt;
        it->second -= e;
        if (it->second == 0) r.erase(it);
    }
    return r;
}

ParamPoly::ParamPoly(const GaussRat& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
}

ParamPoly ParamPoly::symbol(const std::string& name, int exp) {
    ParamPoly p;
    if (exp == 0) return ParamPoly(GaussRat(1));
    p.terms_[Monomial{{name, exp}}] = GaussRat(1);
    return p;
}

bool ParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

GaussRat ParamPoly::constant_value() const {
    if (terms_.empty()) return GaussRat();
    return terms_.begin()->second;
}

void ParamPoly::add_term(const Monomial& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    ParamPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

int ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.rbegin()->first);
}

const Monomial& ParamPoly::leading_monomial() const {
    return terms_.rbegin()->first;
}

const GaussRat& ParamPoly::leading_coeff() const {
    return terms_.rbegin()->second;
}

mpq_class ParamPoly::content() const {
    if (terms_.empty()) return 1;
    // gcd of numerators over lcm of denominators, across re and im parts.
    mpz_class num_gcd = 0, den_lcm = 1;
    auto fold = [&](const mpq_class& q) {
        if (q == 0) return;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                q.get_den().get_mpz_t());
    };
    for (auto& [m, c] : terms_) {
        fold(c.re());
        fold(c.im());
    }
    if (num_gcd == 0) return 1;
    mpq_class r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    ParamPoly rem = *this;
    ParamPoly quot;
    while (!rem.is_zero()) {
        auto m = monomial_div(rem.leading_monomial(), divisor.leading_monomial());
        if (!m) return std::nullopt;
        GaussRat c = rem.leading_coeff() / divisor.leading_coeff();
        ParamPoly t;
        t.add_term(*m, c);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

std::set<std::string> ParamPoly::symbols() const {
    std::set<std::string> r;
    for (auto& [m, c] : terms_)
        for (auto& [s, e] : m) r.insert(s);
    return r;
}

std::complex<double> ParamPoly::eval(
    const std::map<std::string, std::complex<double>>& assignment) const {
    std::complex<double> acc(0, 0);
    for (auto& [m, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (auto& [s, e] : m) {
            auto it = assignment.find(s);
            if (it == assignment.end()) throw UnboundSymbol(s);
            std::complex<double> p(1, 0);
            for (int k = 0; k < e; ++k) p *= it->second;
            t *= p;
        }
        acc += t;
    }
    return acc;
}

GaussRat ParamPoly::eval_exact(
    const std::map<std::string, GaussRat>& assignment) const {
    GaussRat acc;
    for (auto& [m, c] : terms_) {
        GaussRat t = c;
        for (auto& [s, e] : m) {
            auto it = assignment.find(s);
            if (it == assignment.end()) throw UnboundSymbol(s);
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        acc += t;
    }
    return acc;
}

ParamPoly ParamPoly::substitute(
    const std::map<std::string, GaussRat>& assignment) const {
    ParamPoly acc;
    for (auto& [m, c] : terms_) {
        GaussRat coeff = c;
        Monomial rest;
        for (auto& [s, e] : m) {
            auto it = assignment.find(s);
            if (it == assignment.end()) {
                rest[s] = e;
            } else {
                for (int k = 0; k < e; ++k) coeff *= it->second;
            }
        }
        acc.add_term(rest, coeff);
    }
    return acc;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest monomial first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        bool has_sym = !m.empty();
        bool trivial_coeff = (cs == "1");
        bool neg_trivial = (cs == "-1");
        if (!has_sym) {
            os << cs;
        } else {
            if (neg_trivial) {
                os << "-";
            } else if (!trivial_coeff) {
                // Parenthesize complex sums.
                if (cs.find('+') != std::string::npos ||
                    cs.find('-') != std::string::npos)
                    os << "(" << cs << ")*";
                else
                    os << cs << "*";
            }
            bool fs = true;
            for (auto& [s, e] : m) {
                if (!fs) os << "*";
                fs = false;
                os << s;
                if (e != 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

} // namespace daekit
