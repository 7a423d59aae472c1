#include "daekit/dae_system.hpp"

#include <algorithm>
#include <sstream>

#include "daekit/errors.hpp"

namespace daekit {

bool entry_is_zero(const MatrixEntry& e) {
    if (auto* p = std::get_if<OperatorPoly>(&e)) return p->is_zero();
    return std::get<VcOperator>(e).is_zero();
}

bool entry_is_vc(const MatrixEntry& e) {
    if (auto* h = std::get_if<VcOperator>(&e))
        return !h->is_constant_coefficient();
    return false;
}

std::string entry_str(const MatrixEntry& e) {
    if (auto* p = std::get_if<OperatorPoly>(&e)) return p->str();
    return std::get<VcOperator>(e).str();
}

std::string Forcing::str() const {
    if (is_symbolic()) return symbol;
    return value.str();
}

std::string tag_str(SystemTag t) {
    switch (t) {
        case SystemTag::CcOdae: return "cc-ODAE";
        case SystemTag::CcPdae: return "cc-PDAE";
        case SystemTag::VcOdae: return "vc-ODAE";
        case SystemTag::VcPdae: return "vc-PDAE";
    }
    return "?";
}

DaeSystem::DaeSystem(std::vector<std::string> ivars,
                     std::vector<std::string> dvars,
                     std::vector<std::vector<MatrixEntry>> matrix,
                     std::vector<Forcing> forcing,
                     std::vector<std::string> params)
    : ivars_(std::move(ivars)), dvars_(std::move(dvars)),
      params_(std::move(params)), matrix_(std::move(matrix)),
      forcing_(std::move(forcing)) {
    if (matrix_.size() != dvars_.size())
        throw NonSquare("matrix has " + std::to_string(matrix_.size()) +
                        " rows for " + std::to_string(dvars_.size()) +
                        " dependent variables");
    for (auto& row : matrix_)
        if (row.size() != dvars_.size())
            throw NonSquare("matrix row has " + std::to_string(row.size()) +
                            " entries, expected " +
                            std::to_string(dvars_.size()));
    if (forcing_.size() != dvars_.size())
        throw NonSquare("forcing vector length mismatch");
}

int DaeSystem::dvar_index(const std::string& name) const {
    for (size_t i = 0; i < dvars_.size(); ++i)
        if (dvars_[i] == name) return (int)i;
    return -1;
}

OpVar DaeSystem::opvar_for_ivar(const std::string& ivar) const {
    if (ivars_.size() == 1) return OpVar{"D", ivar};
    return OpVar{"D_" + ivar, ivar};
}

bool DaeSystem::has_vc() const {
    for (auto& row : matrix_)
        for (auto& e : row)
            if (entry_is_vc(e)) return true;
    return false;
}

bool DaeSystem::all_forcing_concrete() const {
    for (auto& f : forcing_)
        if (f.is_symbolic()) return false;
    return true;
}

DaeSystem DaeSystem::substituted(
    const std::map<std::string, GaussRat>& assignment) const {
    std::vector<std::vector<MatrixEntry>> m;
    for (auto& row : matrix_) {
        std::vector<MatrixEntry> r;
        for (auto& e : row) {
            if (auto* p = std::get_if<OperatorPoly>(&e))
                r.push_back(p->substitute(assignment));
            else
                r.push_back(e);
        }
        m.push_back(std::move(r));
    }
    std::vector<std::string> remaining;
    for (auto& p : params_)
        if (!assignment.count(p)) remaining.push_back(p);
    return DaeSystem(ivars_, dvars_, std::move(m), forcing_, remaining);
}

std::string DaeSystem::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < matrix_.size(); ++i) {
        os << "[ ";
        for (size_t j = 0; j < matrix_[i].size(); ++j) {
            if (j) os << " | ";
            os << entry_str(matrix_[i][j]);
        }
        os << " ] = " << forcing_[i].str() << "\n";
    }
    return os.str();
}

OperatorPoly operator_matrix_det(
    const std::vector<std::vector<OperatorPoly>>& m) {
    size_t n = m.size();
    if (n == 0) return OperatorPoly::constant(1);
    if (n == 1) return m[0][0];
    OperatorPoly det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<OperatorPoly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<OperatorPoly> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        OperatorPoly t = m[0][j] * operator_matrix_det(minor);
        det += (j % 2 == 0) ? t : -t;
    }
    return det;
}

std::vector<std::vector<OperatorPoly>> cc_matrix(const DaeSystem& s) {
    std::vector<std::vector<OperatorPoly>> m;
    for (auto& row : s.matrix()) {
        std::vector<OperatorPoly> r;
        for (auto& e : row) {
            if (auto* p = std::get_if<OperatorPoly>(&e)) {
                r.push_back(*p);
            } else {
                const auto& h = std::get<VcOperator>(e);
                if (!h.is_constant_coefficient())
                    throw VcUnsupportedHere(
                        "variable-coefficient entry where a constant-"
                        "coefficient operator is required: " + h.str());
                r.push_back(h.to_operator_poly());
            }
        }
        m.push_back(std::move(r));
    }
    return m;
}

SystemKind validate_system(const DaeSystem& s) {
    size_t n = s.size();
    for (size_t i = 0; i < n; ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < n; ++j) nonzero = nonzero || !entry_is_zero(s.at(i, j));
        if (!nonzero)
            throw SingularSystem("row " + std::to_string(i + 1) + " is zero");
    }
    // All operator symbols must belong to declared independent variables.
    std::set<std::string> declared(s.ivars().begin(), s.ivars().end());
    for (auto& row : s.matrix()) {
        for (auto& e : row) {
            if (auto* p = std::get_if<OperatorPoly>(&e)) {
                for (auto& v : p->opvars())
                    if (p->degree_in(v) > 0 && !declared.count(v.ivar))
                        throw UndeclaredOperator("operator " + v.name +
                                                 " acts on undeclared variable " +
                                                 v.ivar);
            } else {
                const auto& h = std::get<VcOperator>(e);
                if (!h.is_zero() && h.order() > 0 &&
                    !declared.count(h.opvar().ivar))
                    throw UndeclaredOperator("operator " + h.opvar().name +
                                             " acts on undeclared variable " +
                                             h.opvar().ivar);
            }
        }
    }
    SystemKind kind;
    kind.tag = SystemTag::CcOdae;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (entry_is_vc(s.at(i, j))) kind.vc_columns.insert((int)j);
    bool vc = !kind.vc_columns.empty();
    bool pde = s.ivars().size() > 1;
    kind.tag = vc ? (pde ? SystemTag::VcPdae : SystemTag::VcOdae)
                  : (pde ? SystemTag::CcPdae : SystemTag::CcOdae);
    if (!vc) {
        OperatorPoly det = operator_matrix_det(cc_matrix(s));
        if (det.is_zero())
            throw SingularSystem("det M(D) expands to zero");
    }
    return kind;
}

DaeSystem reorder_target_last(const DaeSystem& s, const std::string& target) {
    int idx = s.dvar_index(target);
    if (idx < 0) throw UnknownVariable(target);
    size_t n = s.size();
    std::vector<size_t> perm;
    for (size_t j = 0; j < n; ++j)
        if ((int)j != idx) perm.push_back(j);
    perm.push_back((size_t)idx);

    std::vector<std::string> dvars;
    for (size_t j : perm) dvars.push_back(s.dvars()[j]);
    std::vector<std::vector<MatrixEntry>> m;
    for (size_t i = 0; i < n; ++i) {
        std::vector<MatrixEntry> row;
        for (size_t j : perm) row.push_back(s.at(i, j));
        m.push_back(std::move(row));
    }
    return DaeSystem(s.ivars(), dvars, std::move(m), s.forcing(), s.params());
}

} // namespace daekit
