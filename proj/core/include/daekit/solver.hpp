#ifndef DAEKIT_SOLVER_HPP
#define DAEKIT_SOLVER_HPP

#include <optional>

#include "daekit/dae_system.hpp"
#include "daekit/roots.hpp"

namespace daekit {

struct RootSet {
    std::vector<Root> roots;
    OperatorPoly source_poly;
    int degree() const;
};

// Roots of the characteristic polynomial det M(a) = 0; coefficients must be
// numeric after the optional parameter assignment.
RootSet characteristic_roots(const DaeSystem& s,
                             const std::map<std::string, GaussRat>& assignment = {},
                             const RootOptions& opts = {});

// Rational operator inverse in adjugate/determinant form:
// h_{j;i} = num[j][i] / den, so that x_j = (1/den) sum_i num[j][i] f_i.
struct OperatorInverse {
    std::vector<std::vector<OperatorPoly>> num;
    OperatorPoly den;
};
OperatorInverse invert_operator_matrix(const DaeSystem& s);

// 1/P(D) = sum_i gamma_i / (D + alpha_i) for a monic P with simple roots;
// gamma_i = 1/P'(-alpha_i).  `lead` is the leading coefficient divided out.
struct PartialFractionTerm {
    CNum gamma;
    CNum alpha;
};
struct PartialFractionDecomposition {
    std::vector<PartialFractionTerm> terms;
    CNum lead;
};
PartialFractionDecomposition partial_fractions(const OperatorPoly& p,
                                               const RootSet& roots);

enum class SolveMode { Factorization, PartialFractions };

struct SolveOptions {
    SolveMode mode = SolveMode::Factorization;
    bool particular_only = false;
    std::map<std::string, GaussRat> assignment;
    RootOptions roots;
};

struct Solution {
    std::map<std::string, ExpPoly> components;
    std::vector<std::string> constants; // free constants, in creation order
};

// Full analytic solution of a cc-ODAE with concrete forcing: particular
// parts from sequential first-order inversion of the determinant's factor
// chain (or partial fractions), complementary parts spanned per
// characteristic root with shared constants across components.
Solution solve_full(const DaeSystem& s, const SolveOptions& opts = {});

// Apply 1/p(D) to f, p univariate with numeric coefficients.  With gen
// non-null each integration retains its constant (full solution).
ExpPoly apply_inverse_chain(const OperatorPoly& p, const ExpPoly& f,
                            SolveMode mode, ConstGen* gen,
                            const RootOptions& opts = {});

// p = c * prod_k P_k(D_k) with each factor univariate, or nullopt when the
// polynomial is not separable.  Detection by random substitution for
// all-but-one symbol (fixed seeds), confirmed by exact expansion.
std::optional<std::vector<OperatorPoly>> factor_univariate_product(
    const OperatorPoly& p);

// Separable cc-PDAE path: invert, factor each denominator into univariate
// pieces, apply per-symbol inverse chains.  nullopt when the determinant is
// not separable.
std::optional<Solution> solve_separable_pdae(const DaeSystem& s,
                                             const SolveOptions& opts = {});

} // namespace daekit

#endif
