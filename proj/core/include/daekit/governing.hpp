#ifndef DAEKIT_GOVERNING_HPP
#define DAEKIT_GOVERNING_HPP

#include "daekit/dae_system.hpp"

namespace daekit {

struct TraceStep {
    std::string kind; // "swap" | "pivot" | "combine" | "divide" | "normalize"
    int row_a = -1;
    int row_b = -1;
    std::string detail;
};

// P(D) x_target = sum_i Q_i(D) f_i for the chosen dependent variable.
struct GoverningEquation {
    std::string target;
    std::variant<OperatorPoly, VcOperator> lhs;
    std::vector<std::pair<OperatorPoly, Forcing>> rhs; // (Q_i, f_i), f_i != 0
    std::vector<TraceStep> trace;
    int system_size = 0;

    bool lhs_is_vc() const {
        return std::holds_alternative<VcOperator>(lhs);
    }
    const OperatorPoly& lhs_poly() const { return std::get<OperatorPoly>(lhs); }
    const VcOperator& lhs_vc() const { return std::get<VcOperator>(lhs); }
    std::string str() const;
};

// Governing equation by fraction-free (Bareiss) Gaussian elimination with
// exact divisions; pivots are the lowest-degree nonzero entries.  cc systems
// only; vc systems are routed to vc_governing.
GoverningEquation eliminate_governing(const DaeSystem& s,
                                      const std::string& target,
                                      bool monic = false);

// Governing equation via P = det M and signed cofactors of the target
// column; agrees with elimination up to a nonzero scalar factor.
GoverningEquation governing_via_determinant(const DaeSystem& s,
                                            const std::string& target,
                                            bool monic = false);

// Governing equation for a variable-coefficient system satisfying the
// last-column condition: after moving the target last, every vc entry must
// lie in the final column; elimination multipliers are constant-coefficient.
GoverningEquation vc_governing(const DaeSystem& s, const std::string& target);

} // namespace daekit

#endif
