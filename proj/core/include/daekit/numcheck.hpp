#ifndef DAEKIT_NUMCHECK_HPP
#define DAEKIT_NUMCHECK_HPP

#include "daekit/dae_system.hpp"

namespace daekit {

struct Grid {
    std::string ivar;
    double start = 0.0;
    double stop = 1.0;
    int points = 101;
};

struct ResidualReport {
    std::vector<double> max_residual; // per constitutive row
    Grid grid;
    double tol = 0.0;
    bool pass = false;
    std::string str() const;
};

// Substitute the candidate solution into every row (exact differentiation,
// numeric evaluation on the grid) and compare against the forcing.
ResidualReport residual_check(const DaeSystem& s,
                              const std::map<std::string, ExpPoly>& solution,
                              const std::map<std::string, CNum>& const_assignment,
                              const Grid& grid, double tol);

// Classical fixed-step 4th-order Runge-Kutta oracle: integrate the system
// from initial values read off the analytic solution and return the max
// deviation over the grid.  Pure differential rows only; algebraic
// variables are substituted from the analytic solution.
double rk4_oracle(const DaeSystem& s,
                  const std::map<std::string, ExpPoly>& analytic,
                  const std::map<std::string, CNum>& const_assignment,
                  const Grid& grid);

// |apply_operator(p, f)(at) - central finite differences| for univariate
// numeric p with deg <= 4.
double finite_diff_check(const OperatorPoly& p, const ExpPoly& f, double at,
                         double h);

} // namespace daekit

#endif
