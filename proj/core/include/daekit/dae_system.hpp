#ifndef DAEKIT_DAE_SYSTEM_HPP
#define DAEKIT_DAE_SYSTEM_HPP

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "daekit/func_expr.hpp"

namespace daekit {

using MatrixEntry = std::variant<OperatorPoly, VcOperator>;

bool entry_is_zero(const MatrixEntry& e);
bool entry_is_vc(const MatrixEntry& e); // vc with genuinely nonconstant coeffs
std::string entry_str(const MatrixEntry& e);

// Right-hand side of one constitutive row: either an opaque named forcing
// symbol or a concrete exponential-polynomial.  `premult` records any D^k
// pre-multiplication applied to the row (integro-differential rows).
struct Forcing {
    std::string symbol;     // empty when concrete
    ExpPoly value;          // used when symbol is empty
    OperatorPoly premult = OperatorPoly::constant(1);

    bool is_symbolic() const { return !symbol.empty(); }
    bool is_zero() const { return symbol.empty() && value.is_zero(); }
    std::string str() const;
};

enum class SystemTag { CcOdae, CcPdae, VcOdae, VcPdae };
std::string tag_str(SystemTag t);

struct SystemKind {
    SystemTag tag;
    std::set<int> vc_columns;
};

// The direct formulation M(D) x = f: a square operator matrix over named
// dependent variables with a forcing vector.
class DaeSystem {
public:
    DaeSystem() = default;
    DaeSystem(std::vector<std::string> ivars, std::vector<std::string> dvars,
              std::vector<std::vector<MatrixEntry>> matrix,
              std::vector<Forcing> forcing,
              std::vector<std::string> params = {});

    const std::vector<std::string>& ivars() const { return ivars_; }
    const std::vector<std::string>& dvars() const { return dvars_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::vector<MatrixEntry>>& matrix() const {
        return matrix_;
    }
    const std::vector<Forcing>& forcing() const { return forcing_; }
    size_t size() const { return dvars_.size(); }
    const MatrixEntry& at(size_t r, size_t c) const { return matrix_[r][c]; }

    int dvar_index(const std::string& name) const;
    OpVar opvar_for_ivar(const std::string& ivar) const;

    bool has_vc() const;
    bool all_forcing_concrete() const;

    // Substitute parameter values throughout the matrix (cc entries only).
    DaeSystem substituted(const std::map<std::string, GaussRat>& assignment) const;

    std::string str() const;

private:
    std::vector<std::string> ivars_;
    std::vector<std::string> dvars_;
    std::vector<std::string> params_;
    std::vector<std::vector<MatrixEntry>> matrix_;
    std::vector<Forcing> forcing_;
};

// Determinant of a cc operator matrix by cofactor expansion.
OperatorPoly operator_matrix_det(const std::vector<std::vector<OperatorPoly>>& m);

// Extract the cc matrix; throws VcUnsupportedHere if any entry is vc.
std::vector<std::vector<OperatorPoly>> cc_matrix(const DaeSystem& s);

// Classify the system; for cc systems verifies det M != 0 symbolically.
SystemKind validate_system(const DaeSystem& s);

// Permute columns (and the dvar list) so `target` is last; rows unchanged.
DaeSystem reorder_target_last(const DaeSystem& s, const std::string& target);

} // namespace daekit

#endif
