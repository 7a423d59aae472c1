#ifndef DAEKIT_GAUSSIAN_RATIONAL_HPP
#define DAEKIT_GAUSSIAN_RATIONAL_HPP

#include <complex>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "daekit/errors.hpp"

namespace daekit {

// Exact element of Q(i).  Backed by GMP rationals so coefficient growth
// during elimination never overflows.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    static GaussRat i() { return GaussRat(0, 1); }
    GaussRat(long n, long d_im) : re_(n), im_(d_im) {}

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat operator+(const GaussRat& o) const {
        return GaussRat(re_ + o.re_, im_ + o.im_);
    }
    GaussRat operator-(const GaussRat& o) const {
        return GaussRat(re_ - o.re_, im_ - o.im_);
    }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussRat operator/(const GaussRat& o) const {
        if (o.is_zero()) throw DivisionByZero();
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        return GaussRat((re_ * o.re_ + im_ * o.im_) / n,
                        (im_ * o.re_ - re_ * o.im_) / n);
    }
    GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
    GaussRat& operator-=(const GaussRat& o) { return *this = *this - o; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    bool operator==(const GaussRat& o) const {
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }
    // Total order for use as a map key; not a numeric order.
    bool operator<(const GaussRat& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    // Exact square root in Q(i), if one exists.
    std::optional<GaussRat> sqrt_exact() const;

    std::string str() const;

private:
    mpq_class re_;
    mpq_class im_;
};

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

std::string rational_str(const mpq_class& q);

} // namespace daekit

#endif
