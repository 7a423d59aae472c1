#ifndef DAEKIT_CNUM_HPP
#define DAEKIT_CNUM_HPP

#include <complex>
#include <string>

#include "daekit/gaussian_rational.hpp"

namespace daekit {

// Complex scalar that is exact (Gaussian rational) where possible and
// degrades to floating point once a floating value enters a computation
// (numeric roots).  Exact and floating values are kept distinct; they are
// only considered equal within a small absolute tolerance.
class CNum {
public:
    CNum() : exact_(true) {}
    CNum(long n) : exact_(true), q_(n) {}
    CNum(GaussRat q) : exact_(true), q_(std::move(q)) {}
    CNum(std::complex<double> z) : exact_(false), z_(z) {}
    CNum(double x) : exact_(false), z_(x, 0.0) {}

    bool exact() const { return exact_; }
    const GaussRat& rat() const { return q_; }
    std::complex<double> to_complex() const {
        return exact_ ? q_.to_complex() : z_;
    }

    bool is_zero() const {
        return exact_ ? q_.is_zero() : (z_ == std::complex<double>(0, 0));
    }
    bool is_one() const {
        return exact_ ? q_.is_one() : (z_ == std::complex<double>(1, 0));
    }

    CNum operator-() const { return exact_ ? CNum(-q_) : CNum(-z_); }
    CNum operator+(const CNum& o) const {
        if (exact_ && o.exact_) return CNum(q_ + o.q_);
        return CNum(to_complex() + o.to_complex());
    }
    CNum operator-(const CNum& o) const {
        if (exact_ && o.exact_) return CNum(q_ - o.q_);
        return CNum(to_complex() - o.to_complex());
    }
    CNum operator*(const CNum& o) const {
        if (exact_ && o.exact_) return CNum(q_ * o.q_);
        return CNum(to_complex() * o.to_complex());
    }
    CNum operator/(const CNum& o) const {
        if (exact_ && o.exact_) return CNum(q_ / o.q_);
        auto d = o.to_complex();
        if (d == std::complex<double>(0, 0)) throw DivisionByZero();
        return CNum(to_complex() / d);
    }
    CNum& operator+=(const CNum& o) { return *this = *this + o; }
    CNum& operator-=(const CNum& o) { return *this = *this - o; }
    CNum& operator*=(const CNum& o) { return *this = *this * o; }

    // Structural equality: exact==exact compares exactly, anything involving
    // a floating value compares within `tol` absolute distance.
    bool same(const CNum& o, double tol = 1e-10) const {
        if (exact_ && o.exact_) return q_ == o.q_;
        return std::abs(to_complex() - o.to_complex()) <= tol;
    }

    double abs() const { return std::abs(to_complex()); }

    std::string str() const;

private:
    bool exact_;
    GaussRat q_;
    std::complex<double> z_{0.0, 0.0};
};

} // namespace daekit

#endif
