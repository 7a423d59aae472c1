#include "daekit/rat_func.hpp"

#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

RatFunc::RatFunc(const ParamPoly& num) : num_(num), den_(GaussRat(1)) {}

RatFunc::RatFunc(ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(GaussRat(1));
        return;
    }
    // Cancel the common monomial content of num and den.
    auto min_monomial = [](const ParamPoly& p) {
        Monomial m = p.terms().begin()->first;
        for (auto& [mon, c] : p.terms()) {
            for (auto it = m.begin(); it != m.end();) {
                auto f = mon.find(it->first);
                if (f == mon.end()) {
                    it = m.erase(it);
                    continue;
                }
                it->second = std::min(it->second, f->second);
                ++it;
            }
        }
        return m;
    };
    Monomial shared = min_monomial(num_);
    {
        Monomial dm = min_monomial(den_);
        for (auto it = shared.begin(); it != shared.end();) {
            auto f = dm.find(it->first);
            if (f == dm.end()) {
                it = shared.erase(it);
                continue;
            }
            it->second = std::min(it->second, f->second);
            ++it;
        }
    }
    if (!shared.empty()) {
        ParamPoly g;
        g.add_term(shared, GaussRat(1));
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
    }
    // Trial division: if den divides num (or num divides den) exactly, cancel.
    if (auto q = num_.divide_exact(den_)) {
        num_ = *q;
        den_ = ParamPoly(GaussRat(1));
    } else if (auto q2 = den_.divide_exact(num_)) {
        den_ = *q2;
        num_ = ParamPoly(GaussRat(1));
    }
    // Content normalization: make den have integer-coprime coefficients.
    mpq_class c = den_.content();
    if (c != 1) {
        ParamPoly scale(GaussRat(mpq_class(1) / c));
        num_ *= scale;
        den_ *= scale;
    }
    // Sign canonicalization on den's leading coefficient.
    const GaussRat& lc = den_.leading_coeff();
    bool flip = lc.re() < 0 || (lc.re() == 0 && lc.im() < 0);
    if (flip) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    if (is_zero()) return RatFunc();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool poly_expand_equal(const RatFunc& a, const RatFunc& b) {
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

std::complex<double> RatFunc::eval(
    const std::map<std::string, std::complex<double>>& assignment,
    double pole_tol) const {
    std::complex<double> d = den_.eval(assignment);
    // Relative pole check against the magnitude of the den's evaluated terms.
    double scale = 0;
    for (auto& [m, c] : den_.terms()) {
        ParamPoly t;
        t.add_term(m, c);
        scale += std::abs(t.eval(assignment));
    }
    if (std::abs(d) <= pole_tol * std::max(scale, 1.0)) throw NumericPole();
    return num_.eval(assignment) / d;
}

GaussRat RatFunc::eval_exact(
    const std::map<std::string, GaussRat>& assignment) const {
    GaussRat d = den_.eval_exact(assignment);
    if (d.is_zero()) throw NumericPole("denominator evaluates to exact zero");
    return num_.eval_exact(assignment) / d;
}

RatFunc RatFunc::substitute(
    const std::map<std::string, GaussRat>& assignment) const {
    return RatFunc(num_.substitute(assignment), den_.substitute(assignment));
}

std::set<std::string> RatFunc::symbols() const {
    auto r = num_.symbols();
    auto d = den_.symbols();
    r.insert(d.begin(), d.end());
    return r;
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    std::ostringstream os;
    std::string n = num_.str();
    if (num_.terms().size() > 1)
        os << "(" << n << ")";
    else
        os << n;
    os << "/";
    std::string d = den_.str();
    // A multi-factor denominator needs parens so `a/b*c` is not misread.
    if (den_.terms().size() > 1 ||
        d.find_first_of("*+", 1) != std::string::npos ||
        d.find('-', 1) != std::string::npos)
        os << "(" << d << ")";
    else
        os << d;
    return os.str();
}

} // namespace daekit
