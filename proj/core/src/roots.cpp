#include "daekit/roots.hpp"

#include <algorithm>
#include <cmath>

#include "daekit/errors.hpp"

namespace daekit {

namespace {

using Coeffs = std::vector<CNum>;

bool all_exact(const Coeffs& c) {
    return std::all_of(c.begin(), c.end(),
                       [](const CNum& x) { return x.exact(); });
}

CNum eval_poly(const Coeffs& c, const CNum& x) {
    CNum acc(0L);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Synthetic division by (x - r); remainder discarded (caller checked r is a
// root, exactly or to within the deflation tolerance).
Coeffs deflate(const Coeffs& c, const CNum& r) {
    Coeffs out(c.size() - 1);
    CNum carry = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        out[i] = carry;
        carry = c[i] + carry * r;
    }
    return out;
}

void trim(Coeffs& c) {
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
}

// Rational root candidates p/q for an integer-coefficient polynomial:
// p | constant term, q | leading term.
std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    if (a == 0) return out;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
        if (out.size() > 400) break; // give up on huge divisor sets
    }
    return out;
}

// Try to peel exact roots off an all-exact coefficient vector.  Appends any
// found roots (merging multiplicities by exact equality) and returns the
// deflated remainder.
Coeffs exact_sieve(Coeffs c, std::vector<Root>& roots) {
    auto record = [&](const GaussRat& r) {
        for (auto& e : roots)
            if (e.value.exact() && e.value.rat() == r) {
                ++e.multiplicity;
                return;
            }
        roots.push_back({CNum(r), 1});
    };

    // Zero roots.
    while (c.size() > 1 && c.front().is_zero()) {
        record(GaussRat(0));
        c.erase(c.begin());
    }

    for (;;) {
        trim(c);
        if (c.size() == 2) { // linear: a0 + a1 x
            record(-(c[0].rat() / c[1].rat()));
            return Coeffs{CNum(1L)};
        }
        if (c.size() == 3) { // quadratic with exact discriminant sqrt
            GaussRat a = c[2].rat(), b = c[1].rat(), d = c[0].rat();
            GaussRat disc = b * b - GaussRat(4) * a * d;
            if (auto s = disc.sqrt_exact()) {
                GaussRat two_a = GaussRat(2) * a;
                record((-b + *s) / two_a);
                record((-b - *s) / two_a);
                return Coeffs{CNum(1L)};
            }
            return c;
        }
        if (c.size() < 2) return c;

        // Rational candidate sieve; real rational coefficients only.
        bool real = std::all_of(c.begin(), c.end(), [](const CNum& x) {
            return x.rat().is_real();
        });
        if (!real) return c;
        mpz_class den_lcm = 1;
        for (const auto& x : c)
            den_lcm = lcm(den_lcm, x.rat().re().get_den());
        std::vector<mpz_class> ic(c.size());
        for (size_t i = 0; i < c.size(); ++i)
            ic[i] = mpz_class(c[i].rat().re() * den_lcm);
        auto ps = divisors(ic.front());
        auto qs = divisors(ic.back());
        bool found = false;
        for (const auto& p : ps) {
            for (const auto& q : qs) {
                for (int sign : {1, -1}) {
                    GaussRat cand(mpq_class(sign * p, q));
                    if (eval_poly(c, CNum(cand)).is_zero()) {
                        record(cand);
                        c = deflate(c, CNum(cand));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return c;
    }
}

// Weierstrass/Durand-Kerner simultaneous iteration on the monic reduction.
std::vector<std::complex<double>> durand_kerner(const Coeffs& c,
                                                const RootOptions& opts) {
    const size_t n = c.size() - 1;
    std::vector<std::complex<double>> a(c.size());
    std::complex<double> lead = c.back().to_complex();
    for (size_t i = 0; i < c.size(); ++i) a[i] = c[i].to_complex() / lead;

    double radius = 0.0;
    for (size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> x(n);
    for (size_t k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * double(k) / double(n) + 0.4;
        x[k] = radius * std::complex<double>(std::cos(th), std::sin(th));
    }

    auto p_at = [&](std::complex<double> z) {
        std::complex<double> acc = 0.0;
        for (size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
        return acc;
    };

    for (int it = 0; it < opts.max_iters; ++it) {
        double worst = 0.0;
        for (size_t k = 0; k < n; ++k) {
            std::complex<double> num = p_at(x[k]);
            std::complex<double> den = 1.0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) den *= (x[k] - x[j]);
            if (den == std::complex<double>(0, 0))
                den = std::complex<double>(1e-30, 0);
            std::complex<double> step = num / den;
            x[k] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < opts.residual_tol) return x;
    }
    // Accept if residuals are small even when steps did not reach tol.
    double worst_res = 0.0;
    for (auto z : x) worst_res = std::max(worst_res, std::abs(p_at(z)));
    if (worst_res < 1e-8) return x;
    throw NonConvergence("root iteration failed to converge (residual " +
                         std::to_string(worst_res) + ")");
}

void cluster(std::vector<std::complex<double>>& xs, double tol,
             std::vector<Root>& roots) {
    std::vector<bool> used(xs.size(), false);
    for (size_t i = 0; i < xs.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::complex<double>> members{xs[i]};
        // Chain merge: a candidate joins if it is within tol of any member,
        // so a cluster spread slightly wider than tol still coalesces.
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t j = i + 1; j < xs.size(); ++j) {
                if (used[j]) continue;
                for (const auto& m : members) {
                    if (std::abs(xs[j] - m) <= tol) {
                        used[j] = true;
                        members.push_back(xs[j]);
                        grew = true;
                        break;
                    }
                }
            }
        }
        std::complex<double> sum = 0;
        for (const auto& m : members) sum += m;
        int m = static_cast<int>(members.size());
        std::complex<double> z = sum / double(m);
        // Snap components dominated by roundoff so real roots print real.
        double mag = std::max(1.0, std::abs(z));
        if (std::abs(z.imag()) <= 1e-12 * mag) z = {z.real(), 0.0};
        if (std::abs(z.real()) <= 1e-12 * mag) z = {0.0, z.imag()};
        roots.push_back({CNum(z), m});
    }
}

} // namespace

std::vector<Root> poly_roots(const std::vector<CNum>& coeffs,
                             const RootOptions& opts) {
    Coeffs c = coeffs;
    trim(c);
    if (c.size() <= 1) {
        if (c.empty() || c[0].is_zero())
            throw Error(ErrorKind::Logic, "zero polynomial has no root set");
        return {};
    }

    std::vector<Root> roots;
    if (all_exact(c)) {
        c = exact_sieve(std::move(c), roots);
        trim(c);
        if (c.size() <= 1) return sorted_roots(std::move(roots));
    } else {
        // Floating input may still carry exact-zero low coefficients.
        int zeros = 0;
        while (c.size() > 1 && c.front().is_zero()) {
            ++zeros;
            c.erase(c.begin());
        }
        if (zeros > 0) roots.push_back({CNum(GaussRat(0)), zeros});
        if (c.size() <= 1) return sorted_roots(std::move(roots));
    }

    if (c.size() == 2) {
        roots.push_back({-(c[0] / c[1]), 1});
        return sorted_roots(std::move(roots));
    }

    auto xs = durand_kerner(c, opts);
    cluster(xs, opts.cluster_tol, roots);
    return sorted_roots(std::move(roots));
}

std::vector<Root> sorted_roots(std::vector<Root> roots) {
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        auto za = a.value.to_complex(), zb = b.value.to_complex();
        if (za.real() != zb.real()) return za.real() < zb.real();
        return za.imag() < zb.imag();
    });
    return roots;
}

} // namespace daekit
