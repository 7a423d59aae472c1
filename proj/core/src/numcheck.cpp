#include "daekit/numcheck.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

namespace {

using Cplx = std::complex<double>;

std::vector<ExpPoly> concrete_forcing(const DaeSystem& s) {
    if (!s.all_forcing_concrete())
        throw Error(ErrorKind::Unsupported,
                    "numeric checks require concrete forcing");
    std::vector<ExpPoly> fe;
    for (const auto& f : s.forcing()) fe.push_back(f.premult.apply(f.value));
    return fe;
}

// In-place Gauss-Jordan inverse; false when numerically singular.
bool invert_cplx(std::vector<std::vector<Cplx>>& a) {
    const size_t n = a.size();
    std::vector<std::vector<Cplx>> inv(n, std::vector<Cplx>(n, 0.0));
    double scale = 0.0;
    for (const auto& row : a)
        for (auto x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return false;
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
    for (size_t col = 0; col < n; ++col) {
        size_t best = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
        if (std::abs(a[best][col]) <= 1e-12 * scale) return false;
        std::swap(a[col], a[best]);
        std::swap(inv[col], inv[best]);
        Cplx d = a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            Cplx m = a[r][col];
            if (m == Cplx(0.0)) continue;
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= m * a[col][c];
                inv[r][c] -= m * inv[col][c];
            }
        }
    }
    a = std::move(inv);
    return true;
}

} // namespace

std::string ResidualReport::str() const {
    std::ostringstream os;
    os << (pass ? "pass" : "FAIL") << " (tol " << tol << "):";
    for (size_t i = 0; i < max_residual.size(); ++i)
        os << " row" << i + 1 << "=" << max_residual[i];
    return os.str();
}

ResidualReport residual_check(const DaeSystem& s,
                              const std::map<std::string, ExpPoly>& solution,
                              const std::map<std::string, CNum>& const_assignment,
                              const Grid& grid, double tol) {
    auto mat = cc_matrix(s);
    auto fe = concrete_forcing(s);
    const size_t n = s.size();

    ResidualReport rep;
    rep.grid = grid;
    rep.tol = tol;
    rep.pass = true;

    for (size_t r = 0; r < n; ++r) {
        ExpPoly lhs;
        for (size_t j = 0; j < n; ++j) {
            auto it = solution.find(s.dvars()[j]);
            if (it == solution.end())
                throw UnknownVariable(s.dvars()[j]);
            if (!mat[r][j].is_zero() && !it->second.is_zero())
                lhs = lhs + mat[r][j].apply(it->second);
        }
        ExpPoly residual = lhs - fe[r];
        double worst = 0.0;
        for (int k = 0; k < grid.points; ++k) {
            double t = grid.start + (grid.stop - grid.start) * double(k) /
                                        double(grid.points - 1);
            std::map<std::string, Cplx> point;
            for (const auto& iv : s.ivars()) point[iv] = Cplx(t, 0.0);
            worst = std::max(worst,
                             std::abs(residual.eval(point, const_assignment)));
        }
        rep.max_residual.push_back(worst);
        if (worst > tol) rep.pass = false;
    }
    return rep;
}

double rk4_oracle(const DaeSystem& s,
                  const std::map<std::string, ExpPoly>& analytic,
                  const std::map<std::string, CNum>& const_assignment,
                  const Grid& grid) {
    if (s.ivars().size() != 1)
        throw NotReducible("only single-variable systems integrate");
    auto mat = cc_matrix(s);
    auto fe = concrete_forcing(s);
    const size_t n = s.size();
    const std::string& ivar = s.ivars()[0];
    const OpVar v = s.opvar_for_ivar(ivar);

    std::vector<ExpPoly> sols(n);
    for (size_t j = 0; j < n; ++j) {
        auto it = analytic.find(s.dvars()[j]);
        if (it == analytic.end()) throw UnknownVariable(s.dvars()[j]);
        sols[j] = it->second.with_consts(const_assignment);
    }

    // Column orders decide which variables carry state; order-0 variables
    // are algebraic and get substituted from the analytic solution.
    std::vector<int> order(n, 0);
    for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < n; ++r)
            order[j] = std::max(order[j], mat[r][j].degree_in(v));
    std::vector<size_t> dvars_diff, rows_diff;
    for (size_t j = 0; j < n; ++j)
        if (order[j] > 0) dvars_diff.push_back(j);
    for (size_t r = 0; r < n; ++r) {
        bool differential = false;
        for (size_t j : dvars_diff)
            if (mat[r][j].degree_in(v) == order[j]) differential = true;
        if (differential) rows_diff.push_back(r);
    }
    if (rows_diff.size() != dvars_diff.size() || dvars_diff.empty())
        throw NotReducible("cannot select one differential row per state "
                           "variable");

    // Leading-coefficient matrix for the highest derivatives.
    std::vector<std::vector<std::vector<Cplx>>> coeffs(
        rows_diff.size(), std::vector<std::vector<Cplx>>(n));
    for (size_t a = 0; a < rows_diff.size(); ++a)
        for (size_t j = 0; j < n; ++j) {
            auto c = mat[rows_diff[a]][j].is_zero()
                         ? std::vector<CNum>{}
                         : mat[rows_diff[a]][j].univariate_coeffs();
            for (const auto& x : c) coeffs[a][j].push_back(x.to_complex());
        }
    std::vector<std::vector<Cplx>> lead(
        rows_diff.size(), std::vector<Cplx>(dvars_diff.size(), 0.0));
    for (size_t a = 0; a < rows_diff.size(); ++a)
        for (size_t b = 0; b < dvars_diff.size(); ++b) {
            size_t j = dvars_diff[b];
            if (coeffs[a][j].size() > static_cast<size_t>(order[j]))
                lead[a][b] = coeffs[a][j][static_cast<size_t>(order[j])];
        }
    if (!invert_cplx(lead))
        throw NotReducible("leading-coefficient matrix is singular");

    // Pre-substituted contributions of algebraic variables per row.
    std::vector<ExpPoly> alg_part(rows_diff.size());
    for (size_t a = 0; a < rows_diff.size(); ++a)
        for (size_t j = 0; j < n; ++j) {
            if (order[j] > 0) continue;
            if (!mat[rows_diff[a]][j].is_zero() && !sols[j].is_zero())
                alg_part[a] = alg_part[a] + mat[rows_diff[a]][j].apply(sols[j]);
        }

    // State layout: [x_j, x_j', ..., x_j^(o_j - 1)] per differential var.
    std::vector<size_t> offset(dvars_diff.size());
    size_t dim = 0;
    for (size_t b = 0; b < dvars_diff.size(); ++b) {
        offset[b] = dim;
        dim += static_cast<size_t>(order[dvars_diff[b]]);
    }

    auto deriv = [&](double t, const std::vector<Cplx>& y) {
        std::vector<Cplx> dy(dim, 0.0);
        std::map<std::string, Cplx> point{{ivar, Cplx(t, 0.0)}};
        std::vector<Cplx> b(rows_diff.size(), 0.0);
        for (size_t a = 0; a < rows_diff.size(); ++a) {
            b[a] = fe[rows_diff[a]].eval(point) - alg_part[a].eval(point);
            for (size_t c = 0; c < dvars_diff.size(); ++c) {
                size_t j = dvars_diff[c];
                const auto& cc = coeffs[a][j];
                for (size_t k = 0; k < cc.size() &&
                                   k < static_cast<size_t>(order[j]);
                     ++k)
                    b[a] -= cc[k] * y[offset[c] + k];
            }
        }
        for (size_t c = 0; c < dvars_diff.size(); ++c) {
            int oj = order[dvars_diff[c]];
            for (int k = 0; k + 1 < oj; ++k)
                dy[offset[c] + static_cast<size_t>(k)] =
                    y[offset[c] + static_cast<size_t>(k) + 1];
            Cplx top = 0.0;
            for (size_t a = 0; a < rows_diff.size(); ++a)
                top += lead[c][a] * b[a];
            dy[offset[c] + static_cast<size_t>(oj) - 1] = top;
        }
        return dy;
    };

    // Initial state from the analytic solution's derivatives at grid.start.
    std::vector<Cplx> y(dim, 0.0);
    {
        std::map<std::string, Cplx> p0{{ivar, Cplx(grid.start, 0.0)}};
        for (size_t c = 0; c < dvars_diff.size(); ++c) {
            ExpPoly d = sols[dvars_diff[c]];
            for (int k = 0; k < order[dvars_diff[c]]; ++k) {
                y[offset[c] + static_cast<size_t>(k)] = d.eval(p0);
                d = d.diff(ivar);
            }
        }
    }

    const double h = (grid.stop - grid.start) / double(grid.points - 1);
    double worst = 0.0;
    double t = grid.start;
    auto record = [&](double tt, const std::vector<Cplx>& yy) {
        std::map<std::string, Cplx> pt{{ivar, Cplx(tt, 0.0)}};
        for (size_t c = 0; c < dvars_diff.size(); ++c)
            worst = std::max(worst,
                             std::abs(yy[offset[c]] -
                                      sols[dvars_diff[c]].eval(pt)));
    };
    record(t, y);
    for (int step = 0; step + 1 < grid.points; ++step) {
        auto k1 = deriv(t, y);
        std::vector<Cplx> tmp(dim);
        for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        auto k2 = deriv(t + 0.5 * h, tmp);
        for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        auto k3 = deriv(t + 0.5 * h, tmp);
        for (size_t i = 0; i < dim; ++i) tmp[i] = y[i] + h * k3[i];
        auto k4 = deriv(t + h, tmp);
        for (size_t i = 0; i < dim; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        t += h;
        record(t, y);
    }
    return worst;
}

double finite_diff_check(const OperatorPoly& p, const ExpPoly& f, double at,
                         double h) {
    std::vector<CNum> c = p.is_zero() ? std::vector<CNum>{CNum(GaussRat(0))}
                                      : p.univariate_coeffs();
    if (c.size() > 5)
        throw Error(ErrorKind::Unsupported,
                    "finite differences cover degree <= 4 only");

    std::string ivar = "t";
    for (const auto& v : p.opvars())
        if (p.degree_in(v) > 0) ivar = v.ivar;
    for (const auto& t : f.terms()) {
        if (!t.powers.empty()) ivar = t.powers.begin()->first;
        if (!t.exponents.empty()) ivar = t.exponents.begin()->first;
    }

    auto fx = [&](double x) {
        std::map<std::string, Cplx> pt{{ivar, Cplx(x, 0.0)}};
        return f.eval(pt);
    };
    Cplx fm2 = fx(at - 2 * h), fm1 = fx(at - h), f0 = fx(at),
         fp1 = fx(at + h), fp2 = fx(at + 2 * h);
    std::vector<Cplx> stencil = {
        f0,
        (fp1 - fm1) / (2 * h),
        (fp1 - 2.0 * f0 + fm1) / (h * h),
        (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2 * h * h * h),
        (fp2 - 4.0 * fp1 + 6.0 * f0 - 4.0 * fm1 + fm2) / (h * h * h * h)};

    Cplx approx = 0.0;
    for (size_t k = 0; k < c.size(); ++k)
        approx += c[k].to_complex() * stencil[k];

    std::map<std::string, Cplx> pt{{ivar, Cplx(at, 0.0)}};
    Cplx exact = p.apply(f).eval(pt);
    return std::abs(exact - approx);
}

} // namespace daekit
