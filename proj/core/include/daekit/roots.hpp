#ifndef DAEKIT_ROOTS_HPP
#define DAEKIT_ROOTS_HPP

#include <vector>

#include "daekit/cnum.hpp"

namespace daekit {

struct Root {
    CNum value;
    int multiplicity = 1;
};

struct RootOptions {
    double residual_tol = 1e-12; // Durand-Kerner convergence
    int max_iters = 10000;
    double cluster_tol = 1e-8; // floating roots closer than this merge
};

// All roots (with multiplicity) of a univariate polynomial given by
// ascending coefficients.  Exact roots are found first (linear, rational
// candidates, quadratics with Gaussian-rational discriminant square roots);
// whatever remains goes to a Durand-Kerner iteration with cluster merging.
// Throws NonConvergence if the iteration stalls.
std::vector<Root> poly_roots(const std::vector<CNum>& coeffs,
                             const RootOptions& opts = {});

// Deterministically ordered (by real part, then imaginary part) copy.
std::vector<Root> sorted_roots(std::vector<Root> roots);

} // namespace daekit

#endif
