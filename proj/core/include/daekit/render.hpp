#ifndef DAEKIT_RENDER_HPP
#define DAEKIT_RENDER_HPP

#include "daekit/governing.hpp"
#include "daekit/numcheck.hpp"
#include "daekit/solver.hpp"

namespace daekit {

enum class Format { Text, Latex, Json };

// Text output of a system is valid DSL input (round-trip); JSON output
// follows the versioned schema and is likewise re-parseable.
std::string render_system(const DaeSystem& s, Format fmt);
std::string render_governing(const GoverningEquation& g, Format fmt);
std::string render_solution(const Solution& sol, Format fmt);
std::string render_charpoly(const OperatorPoly& det,
                            const std::vector<Root>& roots, Format fmt);
std::string render_report(const ResidualReport& r, Format fmt);

// Exponential-polynomial literal accepted by parse_exppoly; requires exact
// coefficients and no constant symbols.
std::string exppoly_literal(const ExpPoly& f);

// Matrix-entry expression accepted by parse_entry.
std::string entry_expression(const OperatorPoly& p);

std::string latex_operator(const OperatorPoly& p);
std::string latex_exppoly(const ExpPoly& f);

} // namespace daekit

#endif
