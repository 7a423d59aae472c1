#include "daekit/gaussian_rational.hpp"

#include <sstream>

namespace daekit {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn, rd);
}

std::optional<GaussRat> GaussRat::sqrt_exact() const {
    if (is_zero()) return GaussRat();
    if (im_ == 0) {
        if (re_ > 0) {
            auto r = rational_sqrt(re_);
            if (r) return GaussRat(*r, 0);
            return std::nullopt;
        }
        auto r = rational_sqrt(mpq_class(-re_));
        if (r) return GaussRat(mpq_class(0), *r);
        return std::nullopt;
    }
    // sqrt(a+bi) = x+yi with x^2 = (a+|z|)/2, y = b/(2x); needs |z| rational.
    auto n = rational_sqrt(norm());
    if (!n) return std::nullopt;
    auto x2 = mpq_class((re_ + *n) / 2);
    auto x = rational_sqrt(x2);
    if (!x || *x == 0) return std::nullopt;
    mpq_class y = im_ / (2 * (*x));
    GaussRat cand(*x, y);
    if (cand * cand == *this) return cand;
    return std::nullopt;
}

std::string rational_str(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

std::string GaussRat::str() const {
    if (im_ == 0) return rational_str(re_);
    std::ostringstream os;
    if (re_ != 0) {
        os << rational_str(re_);
        os << (im_ > 0 ? "+" : "-");
        mpq_class a = abs(im_);
        if (a != 1) os << rational_str(a) << "*";
        os << "im";
    } else {
        if (im_ == 1) {
            os << "im";
        } else if (im_ == -1) {
            os << "-im";
        } else {
            os << rational_str(im_) << "*im";
        }
    }
    return os.str();
}

} // namespace daekit
