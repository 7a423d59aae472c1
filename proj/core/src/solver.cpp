#include "daekit/solver.hpp"

#include <algorithm>
#include <random>

#include "daekit/errors.hpp"

namespace daekit {

namespace {

// ---- dense linear algebra over CNum (exact where inputs are exact) ----

double matrix_scale(const std::vector<std::vector<CNum>>& a) {
    double s = 1.0;
    for (const auto& row : a)
        for (const auto& x : row) s = std::max(s, x.abs());
    return s;
}

bool is_negligible(const CNum& x, double scale) {
    if (x.exact()) return x.is_zero();
    return x.abs() <= 1e-9 * scale;
}

// Reduced row echelon form in place; returns the pivot column per row used.
std::vector<int> rref(std::vector<std::vector<CNum>>& a, size_t ncols,
                      double scale) {
    std::vector<int> pivot_cols;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < a.size(); ++col) {
        size_t best = row;
        double best_abs = a[row][col].abs();
        for (size_t r = row + 1; r < a.size(); ++r)
            if (a[r][col].abs() > best_abs) {
                best = r;
                best_abs = a[r][col].abs();
            }
        if (is_negligible(a[best][col], scale)) continue;
        std::swap(a[row], a[best]);
        CNum inv = CNum(GaussRat(1)) / a[row][col];
        for (auto& x : a[row]) x = x * inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || is_negligible(a[r][col], scale)) continue;
            CNum m = a[r][col];
            for (size_t c = 0; c < a[r].size(); ++c)
                a[r][c] = a[r][c] - m * a[row][c];
        }
        pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    return pivot_cols;
}

std::vector<std::vector<CNum>> cnum_nullspace(std::vector<std::vector<CNum>> a,
                                              size_t ncols) {
    double scale = matrix_scale(a);
    auto pivots = rref(a, ncols, scale);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<CNum>> basis;
    for (size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<CNum> v(ncols, CNum(GaussRat(0)));
        v[free] = CNum(GaussRat(1));
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of a x = b (free variables zero); nullopt if inconsistent.
std::optional<std::vector<CNum>> cnum_solve(std::vector<std::vector<CNum>> a,
                                            const std::vector<CNum>& b) {
    const size_t ncols = a.empty() ? 0 : a[0].size();
    for (size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    double scale = std::max(matrix_scale(a), 1.0);
    auto pivots = rref(a, ncols, scale);
    for (size_t r = pivots.size(); r < a.size(); ++r)
        if (!is_negligible(a[r][ncols], scale)) return std::nullopt;
    std::vector<CNum> x(ncols, CNum(GaussRat(0)));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = a[r][ncols];
    return x;
}

// ---- helpers on operator polynomials ----

// The unique operator symbol of positive degree, if any.
std::optional<OpVar> single_opvar(const OperatorPoly& p) {
    std::optional<OpVar> found;
    for (const auto& v : p.opvars()) {
        if (p.degree_in(v) == 0) continue;
        if (found) return std::nullopt;
        found = v;
    }
    return found;
}

// Taylor coefficients of p(x + alpha) from ascending coefficients of p:
// out[k] = sum_{m>=k} C(m,k) c_m alpha^(m-k).
std::vector<CNum> shifted_coeffs(const std::vector<CNum>& c, const CNum& alpha) {
    const size_t n = c.size();
    std::vector<CNum> out(n, CNum(GaussRat(0)));
    for (size_t k = 0; k < n; ++k) {
        CNum pow(GaussRat(1));
        for (size_t m = k; m < n; ++m) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                         static_cast<unsigned long>(k));
            out[k] += c[m] * CNum(GaussRat(mpq_class(binom))) * pow;
            pow = pow * alpha;
        }
    }
    return out;
}

// Ascending univariate coefficients of a matrix entry in the given opvar.
std::vector<CNum> entry_coeffs(const OperatorPoly& p, const OpVar& v, int upto) {
    std::vector<CNum> c(static_cast<size_t>(upto) + 1, CNum(GaussRat(0)));
    if (p.is_zero()) return c;
    // Entries are univariate (single independent variable) or constant.
    std::vector<CNum> raw = p.univariate_coeffs();
    for (size_t i = 0; i < raw.size() && i < c.size(); ++i) c[i] = raw[i];
    return c;
}

CNum poly_eval(const std::vector<CNum>& c, const CNum& x) {
    CNum acc(GaussRat(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpq_class falling(int p, int s) { // p! / s!  for p >= s
    mpq_class r = 1;
    for (int k = s + 1; k <= p; ++k) r *= k;
    return r;
}

// Polynomial-coefficient linear map for q(t) e^{alpha t} solutions: rows of
// M(D + alpha) q indexed by (row, t^s), columns by (dvar, t^p).
struct BlockSystem {
    std::vector<std::vector<CNum>> a;
    size_t n; // dvars
    int dmax; // highest t power
};

BlockSystem build_block(const std::vector<std::vector<OperatorPoly>>& mat,
                        const OpVar& v, const CNum& alpha, int dmax) {
    const size_t n = mat.size();
    int maxdeg = 0;
    for (const auto& row : mat)
        for (const auto& e : row) maxdeg = std::max(maxdeg, e.total_degree());
    // nk[r][j][k] = k-th Taylor coefficient of M_{r,j}(x + alpha)
    std::vector<std::vector<std::vector<CNum>>> nk(n);
    for (size_t r = 0; r < n; ++r) {
        nk[r].resize(n);
        for (size_t j = 0; j < n; ++j)
            nk[r][j] = shifted_coeffs(entry_coeffs(mat[r][j], v, maxdeg), alpha);
    }
    BlockSystem bs;
    bs.n = n;
    bs.dmax = dmax;
    const size_t cols = n * static_cast<size_t>(dmax + 1);
    bs.a.assign(cols, std::vector<CNum>(cols, CNum(GaussRat(0))));
    for (size_t r = 0; r < n; ++r)
        for (int s = 0; s <= dmax; ++s)
            for (size_t j = 0; j < n; ++j)
                for (int p = s; p <= dmax; ++p) {
                    int k = p - s;
                    if (k >= static_cast<int>(nk[r][j].size())) continue;
                    size_t row_i = r * static_cast<size_t>(dmax + 1) +
                                   static_cast<size_t>(s);
                    size_t col_i = j * static_cast<size_t>(dmax + 1) +
                                   static_cast<size_t>(p);
                    bs.a[row_i][col_i] +=
                        nk[r][j][static_cast<size_t>(k)] *
                        CNum(GaussRat(falling(p, s)));
                }
    return bs;
}

ExpPoly poly_exp_term(const std::string& ivar, const CNum& alpha, int power,
                      const CoeffLC& c) {
    std::map<std::string, int> powers;
    if (power > 0) powers[ivar] = power;
    std::map<std::string, CNum> exps;
    if (!alpha.is_zero()) exps[ivar] = alpha;
    return ExpPoly::term(c, std::move(powers), std::move(exps));
}

void check_numeric(const DaeSystem& s) {
    for (const auto& row : s.matrix())
        for (const auto& e : row)
            if (std::holds_alternative<OperatorPoly>(e) &&
                !std::get<OperatorPoly>(e).is_numeric())
                throw SymbolicCoefficientsRemain(
                    "assign numeric values to parameters before solving");
}

std::vector<ExpPoly> effective_forcing(const DaeSystem& s) {
    if (!s.all_forcing_concrete())
        throw Error(ErrorKind::Unsupported,
                    "solving requires concrete forcing functions");
    std::vector<ExpPoly> fe;
    fe.reserve(s.size());
    for (const auto& f : s.forcing()) fe.push_back(f.premult.apply(f.value));
    return fe;
}

} // namespace

int RootSet::degree() const {
    int d = 0;
    for (const auto& r : roots) d += r.multiplicity;
    return d;
}

RootSet characteristic_roots(const DaeSystem& s,
                             const std::map<std::string, GaussRat>& assignment,
                             const RootOptions& opts) {
    DaeSystem sys = assignment.empty() ? s : s.substituted(assignment);
    OperatorPoly det = operator_matrix_det(cc_matrix(sys));
    if (!det.is_numeric())
        throw SymbolicCoefficientsRemain(
            "characteristic polynomial has symbolic coefficients");
    RootSet rs;
    rs.source_poly = det;
    rs.roots = poly_roots(det.univariate_coeffs(), opts);
    return rs;
}

OperatorInverse invert_operator_matrix(const DaeSystem& s) {
    auto mat = cc_matrix(s);
    const size_t n = mat.size();
    OperatorInverse inv;
    inv.den = operator_matrix_det(mat);
    if (inv.den.is_zero())
        throw SingularSystem("operator matrix has zero determinant");
    inv.num.assign(n, std::vector<OperatorPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // adj(M)_{j,i} = (-1)^(i+j) minor(i, j)
            std::vector<std::vector<OperatorPoly>> minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<OperatorPoly> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(mat[r][c]);
                minor.push_back(std::move(row));
            }
            OperatorPoly cof = minor.empty() ? OperatorPoly::constant(1)
                                             : operator_matrix_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.num[j][i] = cof;
        }
    return inv;
}

PartialFractionDecomposition partial_fractions(const OperatorPoly& p,
                                               const RootSet& roots) {
    for (const auto& r : roots.roots)
        if (r.multiplicity > 1)
            throw RepeatedRoots("partial fractions require simple roots; use "
                                "the factorization path");
    std::vector<CNum> c = p.univariate_coeffs();
    PartialFractionDecomposition d;
    d.lead = c.back();
    std::vector<CNum> monic(c.size());
    for (size_t i = 0; i < c.size(); ++i) monic[i] = c[i] / d.lead;
    std::vector<CNum> dmonic(monic.size() > 1 ? monic.size() - 1 : 0);
    for (size_t i = 1; i < monic.size(); ++i)
        dmonic[i - 1] = monic[i] * CNum(GaussRat(static_cast<long>(i)));
    for (const auto& r : roots.roots) {
        CNum gamma = CNum(GaussRat(1)) / poly_eval(dmonic, r.value);
        d.terms.push_back({gamma, -r.value});
    }
    return d;
}

ExpPoly apply_inverse_chain(const OperatorPoly& p, const ExpPoly& f,
                            SolveMode mode, ConstGen* gen,
                            const RootOptions& opts) {
    std::vector<CNum> c = p.univariate_coeffs();
    if (c.empty()) throw DivisionByZero("inverse of the zero operator");
    auto v = single_opvar(p);
    if (!v) {
        if (p.is_constant()) return f.scaled(CNum(GaussRat(1)) / c[0]);
        throw Error(ErrorKind::Logic,
                    "inverse chain requires a univariate operator");
    }
    const std::string& ivar = v->ivar;
    CNum lead = c.back();
    auto roots = sorted_roots(poly_roots(c, opts));

    if (mode == SolveMode::PartialFractions) {
        RootSet rs;
        rs.roots = roots;
        rs.source_poly = p;
        auto d = partial_fractions(p, rs);
        ExpPoly acc;
        for (const auto& term : d.terms)
            acc = acc +
                  apply_inverse_first_order(term.alpha, f, ivar, gen)
                      .scaled(term.gamma);
        return acc.scaled(CNum(GaussRat(1)) / d.lead);
    }

    ExpPoly acc = f;
    for (const auto& r : roots)
        for (int m = 0; m < r.multiplicity; ++m)
            acc = apply_inverse_first_order(-r.value, acc, ivar, gen);
    return acc.scaled(CNum(GaussRat(1)) / lead);
}

Solution solve_full(const DaeSystem& s, const SolveOptions& opts) {
    DaeSystem sys =
        opts.assignment.empty() ? s : s.substituted(opts.assignment);
    SystemKind kind = validate_system(sys);
    if (kind.tag == SystemTag::VcOdae || kind.tag == SystemTag::VcPdae)
        throw VcUnsupportedHere("variable-coefficient systems are not solvable"
                                " here; derive a governing equation instead");
    if (kind.tag == SystemTag::CcPdae)
        throw Error(ErrorKind::Unsupported,
                    "partial systems go through the separable path");
    check_numeric(sys);

    const size_t n = sys.size();
    const std::string& ivar = sys.ivars()[0];
    const OpVar v = sys.opvar_for_ivar(ivar);
    auto mat = cc_matrix(sys);
    auto fe = effective_forcing(sys);
    OperatorInverse inv = invert_operator_matrix(sys);

    // Particular parts: x_j = (1/det) sum_i adj_{j,i} f_i via the factor
    // chain of the determinant, constants dropped.
    std::vector<ExpPoly> part(n);
    for (size_t j = 0; j < n; ++j) {
        ExpPoly g;
        for (size_t i = 0; i < n; ++i)
            if (!inv.num[j][i].is_zero() && !fe[i].is_zero())
                g = g + inv.num[j][i].apply(fe[i]);
        if (!g.is_zero())
            part[j] = apply_inverse_chain(inv.den, g, opts.mode, nullptr,
                                          opts.roots);
    }

    auto det_roots = sorted_roots(poly_roots(inv.den.univariate_coeffs(),
                                             opts.roots));
    auto mult_of = [&](const CNum& alpha) {
        for (const auto& r : det_roots)
            if (r.value.same(alpha, 1e-8)) return r.multiplicity;
        return 0;
    };

    // Component-wise inversion can leave a complementary-shaped defect in
    // resonant systems; remove it exactly with an undetermined-coefficient
    // correction per exponent.
    {
        std::vector<ExpPoly> res(n);
        bool any = false;
        for (size_t r = 0; r < n; ++r) {
            ExpPoly acc;
            for (size_t j = 0; j < n; ++j)
                if (!part[j].is_zero()) acc = acc + mat[r][j].apply(part[j]);
            res[r] = acc - fe[r];
            if (!res[r].is_zero()) any = true;
        }
        while (any) {
            // take the first exponent present in any residual row
            CNum alpha(GaussRat(0));
            bool found = false;
            int maxpow = 0;
            for (const auto& rr : res)
                for (const auto& t : rr.terms()) {
                    CNum a = t.exponents.count(ivar)
                                 ? t.exponents.at(ivar)
                                 : CNum(GaussRat(0));
                    if (!found) {
                        alpha = a;
                        found = true;
                    }
                    if (a.same(alpha, 1e-8)) {
                        auto it = t.powers.find(ivar);
                        maxpow = std::max(maxpow,
                                          it == t.powers.end() ? 0 : it->second);
                    }
                }
            if (!found) break;
            int dmax = maxpow + mult_of(alpha);
            BlockSystem bs = build_block(mat, v, alpha, dmax);
            std::vector<CNum> b(bs.a.size(), CNum(GaussRat(0)));
            for (size_t r = 0; r < n; ++r)
                for (const auto& t : res[r].terms()) {
                    CNum a = t.exponents.count(ivar)
                                 ? t.exponents.at(ivar)
                                 : CNum(GaussRat(0));
                    if (!a.same(alpha, 1e-8)) continue;
                    auto it = t.powers.find(ivar);
                    int pw = it == t.powers.end() ? 0 : it->second;
                    b[r * static_cast<size_t>(dmax + 1) +
                      static_cast<size_t>(pw)] += t.coeff.pure;
                }
            auto q = cnum_solve(bs.a, b);
            if (!q)
                throw Error(ErrorKind::Logic,
                            "residual correction system is inconsistent");
            for (size_t j = 0; j < n; ++j)
                for (int p = 0; p <= dmax; ++p) {
                    CNum coef = (*q)[j * static_cast<size_t>(dmax + 1) +
                                     static_cast<size_t>(p)];
                    if (coef.is_zero()) continue;
                    part[j] = part[j] -
                              poly_exp_term(ivar, alpha, p, CoeffLC(coef));
                }
            any = false;
            for (size_t r = 0; r < n; ++r) {
                ExpPoly acc;
                for (size_t j = 0; j < n; ++j)
                    if (!part[j].is_zero())
                        acc = acc + mat[r][j].apply(part[j]);
                res[r] = acc - fe[r];
                if (!res[r].is_zero()) any = true;
            }
        }
    }

    Solution sol;
    ConstGen gen;
    std::vector<ExpPoly> comp(n);
    if (!opts.particular_only) {
        // Complementary family: for each characteristic root alpha of
        // multiplicity m, the polynomial-vector solutions q(t) e^{alpha t}
        // with deg q < m; constants are shared across components so the
        // family solves the coupled system jointly.
        for (const auto& r : det_roots) {
            int dmax = r.multiplicity - 1;
            BlockSystem bs = build_block(mat, v, r.value, dmax);
            auto basis = cnum_nullspace(bs.a, bs.a.empty() ? 0 : bs.a[0].size());
            for (const auto& vec : basis) {
                std::string cname = gen.fresh("root " + r.value.str());
                for (size_t j = 0; j < n; ++j)
                    for (int p = 0; p <= dmax; ++p) {
                        CNum coef = vec[j * static_cast<size_t>(dmax + 1) +
                                        static_cast<size_t>(p)];
                        if (coef.is_zero()) continue;
                        CoeffLC c;
                        c.consts[cname] = coef;
                        comp[j] = comp[j] + poly_exp_term(ivar, r.value, p, c);
                    }
            }
        }
    }

    for (size_t j = 0; j < n; ++j)
        sol.components[sys.dvars()[j]] = part[j] + comp[j];
    for (const auto& [name, why] : gen.provenance()) {
        (void)why;
        sol.constants.push_back(name);
    }
    return sol;
}

std::optional<std::vector<OperatorPoly>> factor_univariate_product(
    const OperatorPoly& p) {
    if (p.is_zero() || !p.is_numeric()) return std::nullopt;
    std::vector<OpVar> active;
    for (const auto& v : p.opvars())
        if (p.degree_in(v) > 0) active.push_back(v);
    if (active.size() <= 1) return std::vector<OperatorPoly>{p};

    // Leading coefficient of the would-be product: coefficient of the
    // monomial with full degree in every symbol.
    std::vector<int> top;
    for (const auto& v : p.opvars()) top.push_back(p.degree_in(v));
    auto it = p.terms().find(top);
    if (it == p.terms().end()) return std::nullopt;
    GaussRat c_lead = it->second.constant_value();

    std::mt19937 rng(0x5eedu);
    auto rand_rat = [&]() {
        std::uniform_int_distribution<int> num(2, 19), den(1, 7);
        return GaussRat(mpq_class(num(rng), den(rng)));
    };

    // Univariate restriction p(..., D_v, ...) at random values for the
    // other symbols, computed term by term.
    auto restrict_to = [&](const OpVar& keep,
                           const std::map<std::string, GaussRat>& vals) {
        OperatorPoly q;
        const auto& uni = p.opvars();
        for (const auto& [mono, coeff] : p.terms()) {
            GaussRat c = coeff.constant_value();
            int kexp = 0;
            for (size_t k = 0; k < uni.size(); ++k) {
                if (uni[k].name == keep.name) {
                    kexp = k < mono.size() ? mono[k] : 0;
                    continue;
                }
                int e = k < mono.size() ? mono[k] : 0;
                const GaussRat& val = vals.at(uni[k].name);
                for (int t = 0; t < e; ++t) c *= val;
            }
            q += OperatorPoly::d(keep, kexp, RatFunc::constant(c));
        }
        return q;
    };

    std::vector<OperatorPoly> factors;
    for (const auto& v : active) {
        std::optional<OperatorPoly> agreed;
        for (int trial = 0; trial < 3; ++trial) {
            std::map<std::string, GaussRat> vals;
            for (const auto& w : active)
                if (!(w.name == v.name)) vals[w.name] = rand_rat();
            OperatorPoly q = restrict_to(v, vals);
            if (q.degree_in(v) != p.degree_in(v)) return std::nullopt;
            RatFunc lc = q.leading_term().second;
            q = q.scaled(RatFunc::constant(1) / lc);
            if (!agreed)
                agreed = q;
            else if (!agreed->equal(q))
                return std::nullopt;
        }
        factors.push_back(*agreed);
    }

    OperatorPoly expect(RatFunc::constant(c_lead));
    for (const auto& f : factors) expect *= f;
    if (!expect.equal(p)) return std::nullopt;
    factors[0] = factors[0].scaled(RatFunc::constant(c_lead));
    return factors;
}

std::optional<Solution> solve_separable_pdae(const DaeSystem& s,
                                             const SolveOptions& opts) {
    DaeSystem sys =
        opts.assignment.empty() ? s : s.substituted(opts.assignment);
    SystemKind kind = validate_system(sys);
    if (kind.tag == SystemTag::VcOdae || kind.tag == SystemTag::VcPdae)
        throw VcUnsupportedHere("variable-coefficient systems are not "
                                "supported by the separable path");
    check_numeric(sys);

    OperatorInverse inv = invert_operator_matrix(sys);
    auto factors = factor_univariate_product(inv.den);
    if (!factors) return std::nullopt;

    const size_t n = sys.size();
    auto fe = effective_forcing(sys);

    Solution sol;
    ConstGen gen;
    for (size_t j = 0; j < n; ++j) {
        ExpPoly x;
        std::vector<bool> comp_factors(factors->size(), false);
        for (size_t i = 0; i < n; ++i) {
            if (inv.num[j][i].is_zero()) continue;
            // Cancel determinant factors that divide this numerator so the
            // remaining chain is the reduced denominator Q_{j;i}.
            OperatorPoly num = inv.num[j][i];
            std::vector<size_t> remaining;
            for (size_t k = 0; k < factors->size(); ++k) {
                if (auto q = num.divide_exact((*factors)[k]))
                    num = *q;
                else
                    remaining.push_back(k);
            }
            for (size_t k : remaining) comp_factors[k] = true;
            if (fe[i].is_zero()) continue;
            ExpPoly g = num.apply(fe[i]);
            for (size_t k : remaining)
                g = apply_inverse_chain((*factors)[k], g, opts.mode, nullptr,
                                        opts.roots);
            x = x + g;
        }
        if (!opts.particular_only) {
            // Complementary part: the constant-retaining chain applied to
            // zero over the reduced denominator factors for this variable.
            ExpPoly zero;
            ExpPoly comp = zero;
            bool first = true;
            for (size_t k = 0; k < factors->size(); ++k) {
                if (!comp_factors[k]) continue;
                comp = apply_inverse_chain((*factors)[k],
                                           first ? zero : comp,
                                           SolveMode::Factorization, &gen,
                                           opts.roots);
                first = false;
            }
            x = x + comp;
        }
        sol.components[sys.dvars()[j]] = x;
    }
    for (const auto& [name, why] : gen.provenance()) {
        (void)why;
        sol.constants.push_back(name);
    }
    return sol;
}

} // namespace daekit
