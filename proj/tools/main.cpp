// daekit: derive governing equations and analytic solutions for linear
// differential-algebraic systems given in the .dae DSL or the JSON schema.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "daekit/errors.hpp"
#include "daekit/governing.hpp"
#include "daekit/numcheck.hpp"
#include "daekit/parser.hpp"
#include "daekit/render.hpp"
#include "daekit/solver.hpp"

namespace {

int exit_code_for(daekit::ErrorKind k) {
    switch (k) {
        case daekit::ErrorKind::Parse: return 2;
        case daekit::ErrorKind::Singular: return 3;
        case daekit::ErrorKind::Unsupported: return 4;
        case daekit::ErrorKind::Numeric: return 5;
        case daekit::ErrorKind::Logic: return 1;
    }
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw daekit::ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

daekit::Format parse_format(const std::string& s) {
    if (s == "text") return daekit::Format::Text;
    if (s == "latex") return daekit::Format::Latex;
    if (s == "json") return daekit::Format::Json;
    throw daekit::ParseError(0, 0, "unknown format '" + s + "'");
}

std::map<std::string, daekit::GaussRat> parse_assignment(
    const std::string& s) {
    std::map<std::string, daekit::GaussRat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw daekit::ParseError(0, 0,
                                     "bad assignment '" + item +
                                         "' (expected name=value)");
        std::string name = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        try {
            auto slash = val.find('/');
            mpq_class q;
            if (slash == std::string::npos)
                q = mpq_class(val);
            else
                q = mpq_class(val.substr(0, slash)) /
                    mpq_class(val.substr(slash + 1));
            q.canonicalize();
            out[name] = daekit::GaussRat(q);
        } catch (const std::exception&) {
            throw daekit::ParseError(0, 0, "bad numeric value '" + val + "'");
        }
    }
    return out;
}

void write_out(const std::string& text, const std::string& outfile) {
    if (outfile.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(outfile);
    out << text;
}

unsigned seed_from_env() {
    if (const char* s = std::getenv("DAEKIT_SEED")) {
        try {
            return static_cast<unsigned>(std::stoul(s));
        } catch (const std::exception&) {
        }
    }
    return 0x5eedu;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic toolkit for linear differential-algebraic systems"};
    app.require_subcommand(1);

    std::string file, var, assign, mode = "factor", format = "text", outfile;
    bool particular_only = false, monic = false;

    auto add_common = [&](CLI::App* cmd, bool needs_var) {
        if (needs_var)
            cmd->add_option("--var", var, "target dependent variable");
        cmd->add_option("--assign", assign,
                        "parameter values, e.g. m1=1,k1=1/2");
        cmd->add_option("--format", format, "text | latex | json")
            ->check(CLI::IsMember({"text", "latex", "json"}));
        cmd->add_option("-o", outfile, "write output to FILE");
        cmd->add_option("file", file, "system file (.dae or .json)")
            ->required();
    };

    auto* govern = app.add_subcommand("govern", "derive a governing equation");
    govern->add_flag("--monic", monic, "normalize the leading coefficient");
    add_common(govern, true);

    auto* solve = app.add_subcommand("solve", "full analytic solution");
    solve->add_option("--mode", mode, "factor | pfrac")
        ->check(CLI::IsMember({"factor", "pfrac"}));
    solve->add_flag("--particular-only", particular_only,
                    "drop integration constants");
    add_common(solve, false);

    auto* charpoly =
        app.add_subcommand("charpoly", "characteristic polynomial and roots");
    add_common(charpoly, false);

    auto* check = app.add_subcommand("check",
                                     "solve, then verify residuals on a grid");
    check->add_option("--mode", mode, "factor | pfrac")
        ->check(CLI::IsMember({"factor", "pfrac"}));
    add_common(check, false);

    CLI11_PARSE(app, argc, argv);

    try {
        daekit::SourceSystem src = daekit::parse_system(read_file(file));
        daekit::DaeSystem sys = src.system;
        auto assignment = parse_assignment(assign);
        if (!assignment.empty()) sys = sys.substituted(assignment);
        daekit::Format fmt = parse_format(format);

        if (govern->parsed()) {
            std::string target = var.empty() ? sys.dvars().back() : var;
            auto g = daekit::eliminate_governing(sys, target, monic);
            write_out(daekit::render_governing(g, fmt), outfile);
            return 0;
        }

        daekit::SolveOptions opts;
        opts.mode = mode == "pfrac" ? daekit::SolveMode::PartialFractions
                                    : daekit::SolveMode::Factorization;
        opts.particular_only = particular_only;

        if (solve->parsed()) {
            daekit::SystemKind kind = daekit::validate_system(sys);
            daekit::Solution sol;
            if (kind.tag == daekit::SystemTag::CcPdae) {
                auto r = daekit::solve_separable_pdae(sys, opts);
                if (!r)
                    throw daekit::Error(
                        daekit::ErrorKind::Unsupported,
                        "system is not separable; no analytic path applies");
                sol = *r;
            } else {
                sol = daekit::solve_full(sys, opts);
            }
            write_out(daekit::render_solution(sol, fmt), outfile);
            return 0;
        }

        if (charpoly->parsed()) {
            auto rs = daekit::characteristic_roots(sys);
            write_out(daekit::render_charpoly(rs.source_poly, rs.roots, fmt),
                      outfile);
            return 0;
        }

        if (check->parsed()) {
            daekit::SystemKind kind = daekit::validate_system(sys);
            daekit::Solution sol;
            if (kind.tag == daekit::SystemTag::CcPdae) {
                auto r = daekit::solve_separable_pdae(sys, opts);
                if (!r)
                    throw daekit::Error(
                        daekit::ErrorKind::Unsupported,
                        "system is not separable; no analytic path applies");
                sol = *r;
            } else {
                sol = daekit::solve_full(sys, opts);
            }
            std::mt19937 rng(seed_from_env());
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            std::map<std::string, daekit::CNum> consts;
            for (const auto& c : sol.constants)
                consts[c] = daekit::CNum(dist(rng));
            daekit::Grid grid{sys.ivars()[0], 0.0, 1.0, 101};
            bool exact_roots = true;
            for (const auto& [name, f] : sol.components)
                for (const auto& t : f.terms())
                    for (const auto& [iv, a] : t.exponents)
                        exact_roots = exact_roots && a.exact();
            double tol = exact_roots ? 1e-8 : 1e-6;
            auto rep = daekit::residual_check(sys, sol.components, consts,
                                              grid, tol);
            write_out(daekit::render_report(rep, fmt), outfile);
            return rep.pass ? 0 : 1;
        }
    } catch (const daekit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
