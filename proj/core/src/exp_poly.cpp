#include "daekit/exp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

bool CoeffLC::is_zero() const {
    if (!pure.is_zero()) return false;
    for (auto& [n, c] : consts)
        if (!c.is_zero()) return false;
    return true;
}

CoeffLC CoeffLC::operator+(const CoeffLC& o) const {
    CoeffLC r = *this;
    r.pure = r.pure + o.pure;
    for (auto& [n, c] : o.consts) {
        auto it = r.consts.find(n);
        if (it == r.consts.end()) {
            r.consts[n] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.consts.erase(it);
        }
    }
    return r;
}

CoeffLC CoeffLC::operator-() const { return scaled(CNum(GaussRat(-1))); }

CoeffLC CoeffLC::scaled(const CNum& s) const {
    CoeffLC r;
    r.pure = pure * s;
    for (auto& [n, c] : consts) {
        CNum v = c * s;
        if (!v.is_zero()) r.consts[n] = v;
    }
    return r;
}

CNum CoeffLC::eval(const std::map<std::string, CNum>& const_assignment) const {
    CNum acc = pure;
    for (auto& [n, c] : consts) {
        auto it = const_assignment.find(n);
        if (it == const_assignment.end()) throw UnboundConstant(n);
        acc += c * it->second;
    }
    return acc;
}

bool CoeffLC::same(const CoeffLC& o, double tol) const {
    if (!pure.same(o.pure, tol)) return false;
    if (consts.size() != o.consts.size()) return false;
    for (auto& [n, c] : consts) {
        auto it = o.consts.find(n);
        if (it == o.consts.end() || !c.same(it->second, tol)) return false;
    }
    return true;
}

std::string CoeffLC::str() const {
    std::ostringstream os;
    bool first = true;
    if (!pure.is_zero() || consts.empty()) {
        os << pure.str();
        first = false;
    }
    for (auto& [n, c] : consts) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one())
            os << n;
        else
            os << c.str() << "*" << n;
    }
    return os.str();
}

ExpPoly::ExpPoly(CNum constant) {
    if (!constant.is_zero())
        terms_.push_back(Term{CoeffLC(std::move(constant)), {}, {}});
}

ExpPoly ExpPoly::term(CoeffLC c, std::map<std::string, int> powers,
                      std::map<std::string, CNum> exponents) {
    ExpPoly p;
    for (auto it = powers.begin(); it != powers.end();)
        it = it->second == 0 ? powers.erase(it) : std::next(it);
    for (auto it = exponents.begin(); it != exponents.end();)
        it = it->second.is_zero() ? exponents.erase(it) : std::next(it);
    if (!c.is_zero())
        p.terms_.push_back(Term{std::move(c), std::move(powers), std::move(exponents)});
    return p;
}

ExpPoly ExpPoly::var_power(const std::string& ivar, int k) {
    return term(CoeffLC(CNum(GaussRat(1))), {{ivar, k}}, {});
}

ExpPoly ExpPoly::exponential(const std::string& ivar, const CNum& a) {
    return term(CoeffLC(CNum(GaussRat(1))), {}, {{ivar, a}});
}

ExpPoly ExpPoly::constant_symbol(const std::string& name) {
    return term(CoeffLC::constant_symbol(name), {}, {});
}

bool ExpPoly::has_consts() const {
    for (auto& t : terms_)
        if (t.coeff.has_consts()) return true;
    return false;
}

namespace {

bool exponents_match(const std::map<std::string, CNum>& a,
                     const std::map<std::string, CNum>& b, double tol = 1e-10) {
    if (a.size() != b.size()) return false;
    for (auto& [iv, e] : a) {
        auto it = b.find(iv);
        if (it == b.end()) return false;
        const CNum& f = it->second;
        if (e.exact() && f.exact()) {
            if (!(e.rat() == f.rat())) return false;
        } else {
            // Exact and floating exponents merge only when very close.
            if (std::abs(e.to_complex() - f.to_complex()) > tol) return false;
        }
    }
    return true;
}

} // namespace

void ExpPoly::add_term(Term t) {
    if (t.coeff.is_zero()) return;
    for (auto& u : terms_) {
        if (u.powers == t.powers && exponents_match(u.exponents, t.exponents)) {
            u.coeff = u.coeff + t.coeff;
            if (u.coeff.is_zero()) {
                u = terms_.back();
                terms_.pop_back();
                sort_terms();
            }
            return;
        }
    }
    terms_.push_back(std::move(t));
    sort_terms();
}

void ExpPoly::sort_terms() {
    auto key = [](const Term& t) {
        std::ostringstream os;
        for (auto& [iv, e] : t.exponents) {
            auto z = e.to_complex();
            char buf[80];
            std::snprintf(buf, sizeof buf, "%s:%+.12e%+.12e;", iv.c_str(),
                          z.real(), z.imag());
            os << buf;
        }
        os << "|";
        for (auto& [iv, k] : t.powers) os << iv << "^" << k << ";";
        return os.str();
    };
    std::stable_sort(terms_.begin(), terms_.end(),
                     [&](const Term& a, const Term& b) { return key(a) < key(b); });
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly r = *this;
    for (auto& t : o.terms_) r.add_term(t);
    return r;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r;
    for (auto& t : terms_) r.terms_.push_back(Term{-t.coeff, t.powers, t.exponents});
    return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const { return *this + (-o); }

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
    if (has_consts() && o.has_consts())
        throw Error(ErrorKind::Logic,
                    "product of two constant-bearing function expressions");
    ExpPoly r;
    for (auto& a : terms_) {
        for (auto& b : o.terms_) {
            Term t;
            if (a.coeff.has_consts())
                t.coeff = a.coeff.scaled(b.coeff.pure);
            else
                t.coeff = b.coeff.scaled(a.coeff.pure);
            t.powers = a.powers;
            for (auto& [iv, k] : b.powers) {
                t.powers[iv] += k;
                if (t.powers[iv] == 0) t.powers.erase(iv);
            }
            t.exponents = a.exponents;
            for (auto& [iv, e] : b.exponents) {
                auto it = t.exponents.find(iv);
                if (it == t.exponents.end()) {
                    t.exponents[iv] = e;
                } else {
                    it->second += e;
                    if (it->second.is_zero()) t.exponents.erase(it);
                }
            }
            r.add_term(std::move(t));
        }
    }
    return r;
}

ExpPoly ExpPoly::scaled(const CNum& s) const {
    if (s.is_zero()) return ExpPoly();
    ExpPoly r;
    for (auto& t : terms_)
        r.terms_.push_back(Term{t.coeff.scaled(s), t.powers, t.exponents});
    return r;
}

ExpPoly ExpPoly::exp_shifted(const std::string& ivar, const CNum& a) const {
    if (a.is_zero()) return *this;
    ExpPoly r;
    for (auto& t : terms_) {
        Term u = t;
        auto it = u.exponents.find(ivar);
        if (it == u.exponents.end()) {
            u.exponents[ivar] = a;
        } else {
            it->second += a;
            if (it->second.is_zero()) u.exponents.erase(it);
        }
        r.add_term(std::move(u));
    }
    return r;
}

ExpPoly ExpPoly::diff(const std::string& ivar) const {
    ExpPoly r;
    for (auto& t : terms_) {
        auto pit = t.powers.find(ivar);
        if (pit != t.powers.end()) {
            Term u = t;
            int k = pit->second;
            u.coeff = u.coeff.scaled(CNum(GaussRat(k)));
            if (k == 1)
                u.powers.erase(ivar);
            else
                u.powers[ivar] = k - 1;
            r.add_term(std::move(u));
        }
        auto eit = t.exponents.find(ivar);
        if (eit != t.exponents.end()) {
            Term u = t;
            u.coeff = u.coeff.scaled(eit->second);
            r.add_term(std::move(u));
        }
    }
    return r;
}

ExpPoly ExpPoly::integrate(const std::string& ivar, ConstGen* gen) const {
    ExpPoly r;
    for (auto& t : terms_) {
        int k = 0;
        if (auto pit = t.powers.find(ivar); pit != t.powers.end())
            k = pit->second;
        auto eit = t.exponents.find(ivar);
        if (eit == t.exponents.end()) {
            // integral of t^k -> t^(k+1)/(k+1)
            Term u = t;
            u.powers[ivar] = k + 1;
            u.coeff = u.coeff.scaled(CNum(GaussRat(1)) / CNum(GaussRat(k + 1)));
            r.add_term(std::move(u));
        } else {
            // integral of t^k exp(a t) =
            //   exp(a t) * sum_{j=0..k} (-1)^j k!/(k-j)! t^(k-j) / a^(j+1)
            const CNum a = eit->second;
            CNum fall(GaussRat(1)); // k!/(k-j)!
            CNum apow = a;          // a^(j+1)
            CNum sign(GaussRat(1));
            for (int j = 0; j <= k; ++j) {
                Term u = t;
                int p = k - j;
                if (p == 0)
                    u.powers.erase(ivar);
                else
                    u.powers[ivar] = p;
                u.coeff = u.coeff.scaled(sign * fall / apow);
                r.add_term(std::move(u));
                fall *= CNum(GaussRat(k - j));
                apow *= a;
                sign = -sign;
            }
        }
    }
    if (gen) r = r + ExpPoly::constant_symbol(gen->fresh("integrate " + ivar));
    return r;
}

ExpPoly ExpPoly::with_consts(const std::map<std::string, CNum>& assignment) const {
    ExpPoly r;
    for (auto& t : terms_) {
        Term u;
        u.coeff = CoeffLC(t.coeff.eval(assignment));
        u.powers = t.powers;
        u.exponents = t.exponents;
        r.add_term(std::move(u));
    }
    return r;
}

std::complex<double> ExpPoly::eval(
    const std::map<std::string, std::complex<double>>& point,
    const std::map<std::string, CNum>& const_assignment) const {
    std::complex<double> acc(0, 0);
    for (auto& t : terms_) {
        std::complex<double> v = t.coeff.eval(const_assignment).to_complex();
        for (auto& [iv, k] : t.powers) {
            auto it = point.find(iv);
            if (it == point.end()) throw UnboundSymbol(iv);
            for (int j = 0; j < k; ++j) v *= it->second;
        }
        std::complex<double> e(0, 0);
        for (auto& [iv, a] : t.exponents) {
            auto it = point.find(iv);
            if (it == point.end()) throw UnboundSymbol(iv);
            e += a.to_complex() * it->second;
        }
        acc += v * std::exp(e);
    }
    return acc;
}

bool ExpPoly::same(const ExpPoly& o, double tol) const {
    ExpPoly d = *this - o;
    for (auto& t : d.terms_) {
        if (t.coeff.has_consts()) return false;
        if (t.coeff.pure.abs() > tol) return false;
    }
    return true;
}

std::string ExpPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> factors;
        std::string cs = t.coeff.str();
        bool coeff_one = (cs == "1") && t.coeff.consts.empty() &&
                         !(t.powers.empty() && t.exponents.empty());
        if (!coeff_one) {
            if (t.coeff.consts.size() + (t.coeff.pure.is_zero() ? 0 : 1) > 1)
                factors.push_back("(" + cs + ")");
            else
                factors.push_back(cs);
        }
        for (auto& [iv, k] : t.powers)
            factors.push_back(k == 1 ? iv : iv + "^" + std::to_string(k));
        if (!t.exponents.empty()) {
            std::ostringstream es;
            es << "exp(";
            bool ef = true;
            for (auto& [iv, a] : t.exponents) {
                if (!ef) es << " + ";
                ef = false;
                if (a.is_one())
                    es << iv;
                else {
                    std::string as = a.str();
                    if (as.find('+') != std::string::npos ||
                        (as.find('-') != std::string::npos && as.rfind('-') > 0))
                        es << "(" << as << ")*" << iv;
                    else
                        es << as << "*" << iv;
                }
            }
            es << ")";
            factors.push_back(es.str());
        }
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

ExpPoly apply_inverse_first_order(const CNum& a, const ExpPoly& f,
                                  const std::string& ivar, ConstGen* gen) {
    ExpPoly shifted = f.exp_shifted(ivar, a);
    ExpPoly integ = shifted.integrate(ivar, gen);
    return integ.exp_shifted(ivar, -a);
}

} // namespace daekit
