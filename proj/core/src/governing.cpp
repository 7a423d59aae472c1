#include "daekit/governing.hpp"

#include <algorithm>
#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

namespace {

// Sign of the leading scalar in an operator polynomial's grlex-leading
// coefficient; used to present results with a positive leading sign.
bool leading_sign_negative(const OperatorPoly& p) {
    if (p.is_zero()) return false;
    const GaussRat& c = p.leading_term().second.num().leading_coeff();
    if (c.re() != 0) return c.re() < 0;
    return c.im() < 0;
}

bool leading_sign_negative(const VcOperator& h) {
    if (h.is_zero()) return false;
    const FuncExpr& top = h.terms().rbegin()->second;
    const GaussRat& c = top.terms().begin()->second.num().leading_coeff();
    if (c.re() != 0) return c.re() < 0;
    return c.im() < 0;
}

// One elimination row: the matrix entries plus the accumulated operators
// applied to each forcing symbol.
struct Row {
    std::vector<OperatorPoly> m;
    std::vector<OperatorPoly> g;
};

Row combine_rows(const Row& piv, const Row& tgt, const OperatorPoly& p,
                 const OperatorPoly& t, const OperatorPoly& prev) {
    // Bareiss step: (p * tgt - t * piv) / prev, exact in every column.
    Row out;
    auto step = [&](const OperatorPoly& a, const OperatorPoly& b) {
        OperatorPoly v = p * a - t * b;
        if (prev.is_constant() && prev.constant_coeff().is_constant() &&
            prev.constant_coeff().constant_value().is_one())
            return v;
        auto q = v.divide_exact(prev);
        if (!q)
            throw Error(ErrorKind::Logic,
                        "fraction-free elimination division failed");
        return *q;
    };
    out.m.reserve(tgt.m.size());
    out.g.reserve(tgt.g.size());
    for (size_t j = 0; j < tgt.m.size(); ++j) out.m.push_back(step(tgt.m[j], piv.m[j]));
    for (size_t j = 0; j < tgt.g.size(); ++j) out.g.push_back(step(tgt.g[j], piv.g[j]));
    return out;
}

// Pick the nonzero entry of lowest total operator degree in column `col`
// among rows [col, n); earliest row wins ties.
int pick_pivot(const std::vector<Row>& rows, size_t col) {
    int best = -1;
    int best_deg = 0;
    for (size_t r = col; r < rows.size(); ++r) {
        if (rows[r].m[col].is_zero()) continue;
        int d = rows[r].m[col].total_degree();
        if (best < 0 || d < best_deg) {
            best = static_cast<int>(r);
            best_deg = d;
        }
    }
    return best;
}

void finalize_cc(GoverningEquation& eq, const DaeSystem& reordered,
                 OperatorPoly lhs, std::vector<OperatorPoly> g, bool monic) {
    if (lhs.is_zero())
        throw StructurallySingular("governing operator vanished for target '" +
                                   eq.target + "'");
    if (leading_sign_negative(lhs)) {
        lhs = -lhs;
        for (auto& q : g) q = -q;
        eq.trace.push_back({"normalize", -1, -1, "negated row (leading sign)"});
    }
    // Parameter-free left sides are always presented monic; with symbolic
    // coefficients only on request.
    if (monic || lhs.is_numeric()) {
        RatFunc lc = lhs.leading_term().second;
        if (!(lc.is_constant() && lc.constant_value().is_one())) {
            RatFunc inv = RatFunc::constant(1) / lc;
            lhs = lhs.scaled(inv);
            for (auto& q : g) q = q.scaled(inv);
            eq.trace.push_back({"normalize", -1, -1,
                                "scaled by 1/(" + lc.str() + ")"});
        }
    }
    eq.lhs = lhs;
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i].is_zero() || reordered.forcing()[i].is_zero()) continue;
        eq.rhs.emplace_back(g[i], reordered.forcing()[i]);
    }
}

} // namespace

std::string GoverningEquation::str() const {
    std::ostringstream os;
    os << (lhs_is_vc() ? lhs_vc().str() : lhs_poly().str()) << " [" << target
       << "] = ";
    if (rhs.empty()) {
        os << "0";
    } else {
        for (size_t i = 0; i < rhs.size(); ++i) {
            if (i) os << " + ";
            os << "(" << rhs[i].first.str() << ")[" << rhs[i].second.str()
               << "]";
        }
    }
    return os.str();
}

GoverningEquation eliminate_governing(const DaeSystem& s,
                                      const std::string& target, bool monic) {
    SystemKind kind = validate_system(s);
    if (kind.tag == SystemTag::VcOdae || kind.tag == SystemTag::VcPdae)
        return vc_governing(s, target);

    DaeSystem rs = reorder_target_last(s, target);
    auto mat = cc_matrix(rs);
    const size_t n = rs.size();

    GoverningEquation eq;
    eq.target = target;
    eq.system_size = static_cast<int>(n);

    std::vector<Row> rows(n);
    for (size_t r = 0; r < n; ++r) {
        rows[r].m = mat[r];
        rows[r].g.assign(n, OperatorPoly());
        // The operator applied to forcing i starts as that row's recorded
        // pre-multiplication (identity elsewhere).
        rows[r].g[r] = rs.forcing()[r].premult;
    }

    OperatorPoly prev = OperatorPoly::constant(1);
    for (size_t col = 0; col + 1 < n; ++col) {
        int p = pick_pivot(rows, col);
        if (p < 0)
            throw StructurallySingular(
                "no pivot in column for variable '" + rs.dvars()[col] + "'");
        if (static_cast<size_t>(p) != col) {
            std::swap(rows[col], rows[static_cast<size_t>(p)]);
            eq.trace.push_back({"swap", static_cast<int>(col), p, ""});
        }
        const OperatorPoly pivot = rows[col].m[col];
        eq.trace.push_back({"pivot", static_cast<int>(col), -1, pivot.str()});
        for (size_t r = col + 1; r < n; ++r) {
            // Every lower row takes the fraction-free step, even with a zero
            // multiplier, so later divisions by the previous pivot stay exact.
            OperatorPoly t = rows[r].m[col];
            rows[r] = combine_rows(rows[col], rows[r], pivot, t, prev);
            eq.trace.push_back({"combine", static_cast<int>(r),
                                static_cast<int>(col),
                                "multiplier " + t.str()});
        }
        prev = pivot;
    }

    finalize_cc(eq, rs, rows[n - 1].m[n - 1], rows[n - 1].g, monic);
    return eq;
}

GoverningEquation governing_via_determinant(const DaeSystem& s,
                                            const std::string& target,
                                            bool monic) {
    validate_system(s); // also rejects det == 0
    DaeSystem rs = reorder_target_last(s, target);
    auto mat = cc_matrix(rs);
    const size_t n = rs.size();

    GoverningEquation eq;
    eq.target = target;
    eq.system_size = static_cast<int>(n);

    OperatorPoly det = operator_matrix_det(mat);
    if (det.is_zero())
        throw StructurallySingular("operator matrix has zero determinant");

    // Cofactors of the target (last) column: Q_i = (-1)^(i+n) M_(i,n).
    std::vector<OperatorPoly> g(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::vector<OperatorPoly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<OperatorPoly> row;
            row.reserve(n - 1);
            for (size_t c = 0; c + 1 < n; ++c) row.push_back(mat[r][c]);
            minor.push_back(std::move(row));
        }
        OperatorPoly cof =
            minor.empty() ? OperatorPoly::constant(1) : operator_matrix_det(minor);
        if ((i + n) % 2 == 0) cof = -cof; // (-1)^(i+1 + n), i zero-based
        g[i] = cof * rs.forcing()[i].premult;
        eq.trace.push_back({"pivot", static_cast<int>(i), -1,
                            "cofactor " + cof.str()});
    }

    finalize_cc(eq, rs, det, g, monic);
    return eq;
}

GoverningEquation vc_governing(const DaeSystem& s, const std::string& target) {
    validate_system(s);
    DaeSystem rs = reorder_target_last(s, target);
    const size_t n = rs.size();

    // Every variable-coefficient entry must sit in the target column after
    // reordering; constant-coefficient multipliers then suffice.
    std::vector<std::string> offenders;
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c + 1 < n; ++c)
            if (entry_is_vc(rs.at(r, c)))
                offenders.push_back("(" + std::to_string(r + 1) + "," +
                                    rs.dvars()[c] + ")");
    if (!offenders.empty()) {
        std::string msg =
            "variable coefficients outside the target column at ";
        for (size_t i = 0; i < offenders.size(); ++i)
            msg += (i ? ", " : "") + offenders[i];
        throw VcConditionViolated(msg + "; choose a different target");
    }

    GoverningEquation eq;
    eq.target = target;
    eq.system_size = static_cast<int>(n);

    struct VcRow {
        std::vector<OperatorPoly> m; // columns 0..n-2
        VcOperator last;
        std::vector<OperatorPoly> g;
    };
    auto as_vc = [&](const MatrixEntry& e) {
        if (std::holds_alternative<VcOperator>(e))
            return std::get<VcOperator>(e);
        return VcOperator::from_operator_poly(std::get<OperatorPoly>(e));
    };
    std::vector<VcRow> rows(n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c + 1 < n; ++c)
            rows[r].m.push_back(std::get<OperatorPoly>(rs.at(r, c)));
        rows[r].last = as_vc(rs.at(r, n - 1));
        rows[r].g.assign(n, OperatorPoly());
        rows[r].g[r] = rs.forcing()[r].premult;
    }

    for (size_t col = 0; col + 1 < n; ++col) {
        int best = -1;
        int best_deg = 0;
        for (size_t r = col; r < n; ++r) {
            if (rows[r].m[col].is_zero()) continue;
            int d = rows[r].m[col].total_degree();
            if (best < 0 || d < best_deg) {
                best = static_cast<int>(r);
                best_deg = d;
            }
        }
        if (best < 0)
            throw StructurallySingular(
                "no pivot in column for variable '" + rs.dvars()[col] + "'");
        if (static_cast<size_t>(best) != col) {
            std::swap(rows[col], rows[static_cast<size_t>(best)]);
            eq.trace.push_back({"swap", static_cast<int>(col), best, ""});
        }
        const VcRow& piv = rows[col];
        const OperatorPoly p = piv.m[col];
        eq.trace.push_back({"pivot", static_cast<int>(col), -1, p.str()});
        for (size_t r = col + 1; r < n; ++r) {
            if (rows[r].m[col].is_zero()) continue;
            OperatorPoly t = rows[r].m[col];
            VcRow next;
            for (size_t j = 0; j < piv.m.size(); ++j)
                next.m.push_back(p * rows[r].m[j] - t * piv.m[j]);
            next.last = compose_vc(p, rows[r].last) - compose_vc(t, piv.last);
            for (size_t j = 0; j < n; ++j)
                next.g.push_back(p * rows[r].g[j] - t * piv.g[j]);
            rows[r] = std::move(next);
            eq.trace.push_back({"combine", static_cast<int>(r),
                                static_cast<int>(col),
                                "multiplier " + t.str()});
        }
    }

    VcOperator lhs = rows[n - 1].last;
    std::vector<OperatorPoly> g = rows[n - 1].g;
    if (lhs.is_zero())
        throw StructurallySingular("governing operator vanished for target '" +
                                   target + "'");
    if (leading_sign_negative(lhs)) {
        lhs = -lhs;
        for (auto& q : g) q = -q;
        eq.trace.push_back({"normalize", -1, -1, "negated row (leading sign)"});
    }
    eq.lhs = lhs;
    for (size_t i = 0; i < n; ++i) {
        if (g[i].is_zero() || rs.forcing()[i].is_zero()) continue;
        eq.rhs.emplace_back(g[i], rs.forcing()[i]);
    }
    return eq;
}

} // namespace daekit
