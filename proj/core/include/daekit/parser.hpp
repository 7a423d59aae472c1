#ifndef DAEKIT_PARSER_HPP
#define DAEKIT_PARSER_HPP

#include "daekit/dae_system.hpp"

namespace daekit {

struct SourceSystem {
    std::string raw;
    DaeSystem system;
    std::vector<std::pair<int, int>> equation_spans; // (line, col) per eq
};

// Parse the equation DSL:
//   ivars: t;  vars: x1, x2;  params: m1, k1;  funcs: Y(x, w);
//   eq: m1*D^2 x1 + k1*x1 - k1*x2 = f1(t);
// Rows containing int(..., t) terms are pre-multiplied by D_t.  Input
// starting with '{' is treated as the JSON schema form instead.
SourceSystem parse_system(const std::string& text);

// Parse a single matrix-entry expression (terms without dependent
// variables), as stored in the JSON schema's matrix field.
MatrixEntry parse_entry(const std::string& text, const DaeSystem& context);

// Parse an exponential-polynomial literal, e.g. "2*t^2*exp(-t) + 3*im".
ExpPoly parse_exppoly(const std::string& text,
                      const std::vector<std::string>& ivars);

} // namespace daekit

#endif
