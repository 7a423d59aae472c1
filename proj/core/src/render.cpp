#include "daekit/render.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "daekit/errors.hpp"

namespace daekit {

namespace {

using nlohmann::json;

std::string q_str(const mpq_class& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

// Parseable sum form of a Gaussian rational, e.g. "3/2 - 2*im".
std::string gauss_sum(const GaussRat& g) {
    std::ostringstream os;
    bool wrote = false;
    if (g.re() != 0) {
        os << q_str(g.re());
        wrote = true;
    }
    if (g.im() != 0) {
        mpq_class im = g.im();
        if (wrote) os << (im < 0 ? " - " : " + ");
        else if (im < 0) os << "-";
        mpq_class mag = abs(im);
        if (mag != 1) os << q_str(mag) << "*";
        os << "im";
        wrote = true;
    }
    if (!wrote) os << "0";
    return os.str();
}

// Gaussian rational as a single product factor (parenthesized if needed).
std::string gauss_factor(const GaussRat& g) {
    if (g.is_real() && g.re() > 0) return q_str(g.re());
    return "(" + gauss_sum(g) + ")";
}

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : m) {
        if (!first) os << "*";
        os << name;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string param_poly_sum(const ParamPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        std::string cs = gauss_factor(c);
        if (!first) os << " + ";
        if (mono.empty()) {
            os << cs;
        } else if (c.is_one()) {
            os << monomial_str(mono);
        } else {
            os << cs << "*" << monomial_str(mono);
        }
        first = false;
    }
    return os.str();
}

// A RatFunc as a single product factor.
std::string ratfunc_factor(const RatFunc& r) {
    std::string num;
    if (r.num().is_constant())
        num = gauss_factor(r.num().constant_value());
    else if (r.num().terms().size() == 1 &&
             r.num().leading_coeff().is_one())
        num = monomial_str(r.num().leading_monomial());
    else
        num = "(" + param_poly_sum(r.num()) + ")";
    if (r.den().is_constant() && r.den().constant_value().is_one())
        return num;
    std::string den = r.den().is_constant()
                          ? gauss_factor(r.den().constant_value())
                          : "(" + param_poly_sum(r.den()) + ")";
    return num + "/" + den;
}

bool ratfunc_is_one(const RatFunc& r) {
    return r.is_constant() && r.constant_value().is_one();
}

struct SignedStr {
    int sign = 1;
    std::string s;
};

std::string join_signed(const std::vector<SignedStr>& parts) {
    if (parts.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i == 0) {
            if (parts[i].sign < 0) os << "-";
        } else {
            os << (parts[i].sign < 0 ? " - " : " + ");
        }
        os << parts[i].s;
    }
    return os.str();
}

// Pull a leading sign out of a coefficient when it is a plain constant.
SignedStr coeff_signed(const RatFunc& r) {
    if (r.is_constant()) {
        GaussRat c = r.constant_value();
        if (c.is_real() && c.re() < 0) return {-1, gauss_factor(-c)};
        return {1, gauss_factor(c)};
    }
    return {1, ratfunc_factor(r)};
}

std::string ops_str(const OperatorPoly& p, const std::vector<int>& mono) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < p.opvars().size(); ++k) {
        int e = k < mono.size() ? mono[k] : 0;
        if (e == 0) continue;
        if (!first) os << "*";
        os << p.opvars()[k].name;
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

// Terms of an operator polynomial, optionally applied to a variable.
std::vector<SignedStr> op_terms(const OperatorPoly& p, const std::string& var) {
    std::vector<SignedStr> out;
    for (const auto& [mono, coeff] : p.terms()) {
        SignedStr c = coeff_signed(coeff);
        std::string ops = ops_str(p, mono);
        std::ostringstream os;
        bool coeff_one = c.s == "1";
        if (!coeff_one || (ops.empty() && var.empty())) os << c.s;
        if (!ops.empty()) {
            if (!coeff_one) os << "*";
            os << ops;
        }
        if (!var.empty()) {
            if (!ops.empty())
                os << " " << var;
            else if (!coeff_one)
                os << "*" << var;
            else
                os << var;
        }
        out.push_back({c.sign, os.str()});
    }
    return out;
}

std::string func_symbol_str(const FuncSymbol& f) {
    std::ostringstream os;
    os << f.name;
    for (int k = 0; k < f.derivative_order; ++k) os << "'";
    os << "(";
    for (size_t i = 0; i < f.args.size(); ++i)
        os << (i ? "," : "") << f.args[i];
    os << ")";
    return os.str();
}

std::vector<SignedStr> vc_terms(const VcOperator& h, const std::string& var) {
    std::vector<SignedStr> out;
    for (const auto& [order, fe] : h.terms()) {
        for (const auto& [prod, coeff] : fe.terms()) {
            SignedStr c = coeff_signed(coeff);
            std::ostringstream os;
            bool coeff_one = c.s == "1";
            bool wrote = false;
            if (!coeff_one || (prod.empty() && order == 0 && var.empty())) {
                os << c.s;
                wrote = true;
            }
            for (const auto& f : prod) {
                if (wrote) os << "*";
                os << func_symbol_str(f);
                wrote = true;
            }
            if (order > 0) {
                if (wrote) os << "*";
                os << h.opvar().name;
                if (order > 1) os << "^" << order;
                wrote = true;
            }
            if (!var.empty()) {
                if (order > 0)
                    os << " " << var;
                else if (wrote)
                    os << "*" << var;
                else
                    os << var;
            }
            out.push_back({c.sign, os.str()});
        }
    }
    return out;
}

std::vector<SignedStr> entry_terms(const MatrixEntry& e, const std::string& var) {
    if (std::holds_alternative<OperatorPoly>(e))
        return op_terms(std::get<OperatorPoly>(e), var);
    return vc_terms(std::get<VcOperator>(e), var);
}

// ---- LaTeX helpers ----

std::string latex_gauss(const GaussRat& g) {
    auto latex_q = [](const mpq_class& q) {
        if (q.get_den() == 1) return q.get_num().get_str();
        mpz_class n = abs(q.get_num());
        std::string s = "\\frac{" + n.get_str() + "}{" +
                        q.get_den().get_str() + "}";
        return q < 0 ? "-" + s : s;
    };
    if (g.is_real()) return latex_q(g.re());
    if (g.re() == 0) {
        if (g.im() == 1) return "i";
        if (g.im() == -1) return "-i";
        return latex_q(g.im()) + " i";
    }
    std::string s = latex_q(g.re());
    s += g.im() < 0 ? " - " : " + ";
    mpq_class mag = abs(g.im());
    if (mag != 1) s += latex_q(mag) + " ";
    return "\\left(" + s + "i\\right)";
}

std::string latex_ratfunc(const RatFunc& r) {
    if (r.is_constant()) return latex_gauss(r.constant_value());
    std::string num = param_poly_sum(r.num());
    if (r.den().is_constant() && r.den().constant_value().is_one())
        return r.num().terms().size() > 1 ? "\\left(" + num + "\\right)" : num;
    return "\\frac{" + num + "}{" + param_poly_sum(r.den()) + "}";
}

std::string latex_cnum(const CNum& c) {
    if (c.exact()) return latex_gauss(c.rat());
    std::ostringstream os;
    auto z = c.to_complex();
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << "\\left(" << z.real() << (z.imag() < 0 ? " - " : " + ")
           << std::abs(z.imag()) << " i\\right)";
    }
    return os.str();
}

std::string latex_opvar(const OpVar& v) {
    if (v.name.rfind("D_", 0) == 0) return "D_{" + v.name.substr(2) + "}";
    return "D";
}

} // namespace

std::string latex_operator(const OperatorPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mono, coeff] = *it;
        if (!first) os << " + ";
        bool has_op = false;
        for (int e : mono) has_op = has_op || e > 0;
        if (!has_op || !ratfunc_is_one(coeff)) os << latex_ratfunc(coeff);
        for (size_t k = 0; k < p.opvars().size(); ++k) {
            int e = k < mono.size() ? mono[k] : 0;
            if (e == 0) continue;
            os << " " << latex_opvar(p.opvars()[k]);
            if (e > 1) os << "^{" << e << "}";
        }
        first = false;
    }
    return os.str();
}

std::string latex_exppoly(const ExpPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        CNum c = t.coeff.pure;
        // Fold a negative real coefficient into the joining sign.
        bool neg = !t.coeff.has_consts() &&
                   ((c.exact() && c.rat().is_real() && c.rat().re() < 0) ||
                    (!c.exact() && c.to_complex().imag() == 0 &&
                     c.to_complex().real() < 0));
        if (neg) c = -c;
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        bool bare = t.powers.empty() && t.exponents.empty();
        std::string cs = t.coeff.str();
        os << (t.coeff.has_consts() ? "\\left(" + cs + "\\right)"
                                    : bare || !c.is_one() ? latex_cnum(c) : "");
        for (const auto& [iv, k] : t.powers) {
            os << " " << iv;
            if (k > 1) os << "^{" << k << "}";
        }
        if (!t.exponents.empty()) {
            os << " e^{";
            bool efirst = true;
            for (const auto& [iv, a] : t.exponents) {
                if (!efirst) os << " + ";
                // Unit rates print as e^{t}, e^{-t}.
                if (a.exact() && a.rat() == GaussRat(1))
                    os << iv;
                else if (a.exact() && a.rat() == GaussRat(-1))
                    os << "-" << iv;
                else
                    os << latex_cnum(a) << " " << iv;
                efirst = false;
            }
            os << "}";
        }
        first = false;
    }
    return os.str();
}

std::string exppoly_literal(const ExpPoly& f) {
    if (f.is_zero()) return "0";
    std::vector<SignedStr> parts;
    for (const auto& t : f.terms()) {
        if (t.coeff.has_consts())
            throw Error(ErrorKind::Logic,
                        "cannot serialize constant symbols as a literal");
        if (!t.coeff.pure.exact())
            throw Error(ErrorKind::Logic,
                        "cannot serialize floating values as a literal");
        GaussRat c = t.coeff.pure.rat();

        std::string tail;
        {
            std::ostringstream os;
            for (const auto& [iv, k] : t.powers) {
                os << "*" << iv;
                if (k > 1) os << "^" << k;
            }
            if (!t.exponents.empty()) {
                os << "*exp(";
                bool efirst = true;
                for (const auto& [iv, a] : t.exponents) {
                    if (!a.exact())
                        throw Error(ErrorKind::Logic,
                                    "cannot serialize floating exponents");
                    GaussRat g = a.rat();
                    // re part and im part as separate addends
                    if (g.re() != 0) {
                        mpq_class re = g.re();
                        if (!efirst)
                            os << (re < 0 ? " - " : " + ");
                        else if (re < 0)
                            os << "-";
                        mpq_class mag = abs(re);
                        if (mag != 1) os << q_str(mag) << "*";
                        os << iv;
                        efirst = false;
                    }
                    if (g.im() != 0) {
                        mpq_class im = g.im();
                        if (!efirst)
                            os << (im < 0 ? " - " : " + ");
                        else if (im < 0)
                            os << "-";
                        mpq_class mag = abs(im);
                        if (mag != 1) os << q_str(mag) << "*";
                        os << "im*" << iv;
                        efirst = false;
                    }
                }
                os << ")";
            }
            tail = os.str();
        }

        // split a complex coefficient into real and imaginary literals
        auto emit = [&](const mpq_class& mag, bool imag, int sign) {
            std::ostringstream os;
            if (mag != 1 || (tail.empty() && !imag))
                os << q_str(mag);
            if (imag) {
                if (mag != 1) os << "*";
                os << "im";
            }
            std::string head = os.str();
            std::string body = head.empty() ? tail.substr(1)
                               : tail.empty() ? head
                                              : head + tail;
            parts.push_back({sign, body});
        };
        if (c.re() != 0) emit(abs(c.re()), false, c.re() < 0 ? -1 : 1);
        if (c.im() != 0) emit(abs(c.im()), true, c.im() < 0 ? -1 : 1);
    }
    return join_signed(parts);
}

std::string entry_expression(const OperatorPoly& p) {
    if (p.is_zero()) return "0";
    return join_signed(op_terms(p, ""));
}

namespace {

std::string entry_expression_any(const MatrixEntry& e) {
    if (entry_is_zero(e)) return "0";
    return join_signed(entry_terms(e, ""));
}

std::map<std::string, std::vector<std::string>> collect_funcs(
    const DaeSystem& s) {
    std::map<std::string, std::vector<std::string>> funcs;
    for (const auto& row : s.matrix())
        for (const auto& e : row) {
            if (!std::holds_alternative<VcOperator>(e)) continue;
            for (const auto& [order, fe] : std::get<VcOperator>(e).terms()) {
                (void)order;
                for (const auto& [prod, c] : fe.terms()) {
                    (void)c;
                    for (const auto& f : prod) funcs[f.name] = f.args;
                }
            }
        }
    return funcs;
}

std::string render_system_text(const DaeSystem& s) {
    std::ostringstream os;
    auto list = [&](const char* label, const std::vector<std::string>& xs) {
        os << label << ": ";
        for (size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
        os << ";\n";
    };
    list("ivars", s.ivars());
    list("vars", s.dvars());
    if (!s.params().empty()) list("params", s.params());
    auto funcs = collect_funcs(s);
    if (!funcs.empty()) {
        os << "funcs: ";
        bool first = true;
        for (const auto& [name, args] : funcs) {
            if (!first) os << ", ";
            os << name << "(";
            for (size_t i = 0; i < args.size(); ++i)
                os << (i ? "," : "") << args[i];
            os << ")";
            first = false;
        }
        os << ";\n";
    }

    for (size_t r = 0; r < s.size(); ++r) {
        // integral pre-multiplication recorded on the forcing
        std::map<std::string, int> premult;
        const OperatorPoly& pm = s.forcing()[r].premult;
        for (const auto& v : pm.opvars()) {
            int k = pm.degree_in(v);
            if (k > 0) premult[v.ivar] = k;
        }
        std::vector<SignedStr> parts;
        for (size_t c = 0; c < s.size(); ++c) {
            if (entry_is_zero(s.at(r, c))) continue;
            for (auto t : entry_terms(s.at(r, c), s.dvars()[c])) {
                for (const auto& [iv, k] : premult)
                    for (int w = 0; w < k; ++w)
                        t.s = "int(" + t.s + ", " + iv + ")";
                parts.push_back(t);
            }
        }
        os << "eq: " << join_signed(parts) << " = ";
        const Forcing& f = s.forcing()[r];
        if (f.is_symbolic()) {
            os << f.symbol << "(";
            for (size_t i = 0; i < s.ivars().size(); ++i)
                os << (i ? "," : "") << s.ivars()[i];
            os << ")";
        } else if (f.value.is_zero()) {
            os << "0";
        } else {
            os << exppoly_literal(f.value);
        }
        os << ";\n";
    }
    return os.str();
}

json exppoly_json(const ExpPoly& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        json jt;
        jt["coeff"] = t.coeff.pure.str();
        if (t.coeff.has_consts()) {
            json cs;
            for (const auto& [name, v] : t.coeff.consts) cs[name] = v.str();
            jt["constants"] = cs;
        }
        json pw = json::object();
        for (const auto& [iv, k] : t.powers) pw[iv] = k;
        jt["powers"] = pw;
        json ex = json::object();
        for (const auto& [iv, a] : t.exponents) ex[iv] = a.str();
        jt["exponents"] = ex;
        terms.push_back(jt);
    }
    return terms;
}

std::string render_system_json(const DaeSystem& s) {
    json j;
    j["daekit_schema"] = 1;
    j["ivars"] = s.ivars();
    j["vars"] = s.dvars();
    if (!s.params().empty()) j["params"] = s.params();
    auto funcs = collect_funcs(s);
    if (!funcs.empty()) {
        json jf = json::array();
        for (const auto& [name, args] : funcs)
            jf.push_back({{"name", name}, {"args", args}});
        j["funcs"] = jf;
    }
    json m = json::array();
    for (size_t r = 0; r < s.size(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < s.size(); ++c)
            row.push_back(entry_expression_any(s.at(r, c)));
        m.push_back(row);
    }
    j["matrix"] = m;
    json fo = json::array();
    for (const auto& f : s.forcing()) {
        if (f.is_zero() && f.premult.is_constant()) {
            fo.push_back(nullptr);
            continue;
        }
        json e;
        if (f.is_symbolic())
            e["symbol"] = f.symbol;
        else if (!f.value.is_zero())
            e["expr"] = exppoly_literal(f.value);
        else
            e["expr"] = "0";
        if (!f.premult.is_constant())
            e["premult"] = entry_expression(f.premult);
        fo.push_back(e);
    }
    j["forcing"] = fo;
    return j.dump(2);
}

std::string forcing_name(const Forcing& f, size_t idx) {
    if (f.is_symbolic()) return f.symbol;
    return "f" + std::to_string(idx + 1);
}

} // namespace

std::string render_system(const DaeSystem& s, Format fmt) {
    switch (fmt) {
        case Format::Text: return render_system_text(s);
        case Format::Json: return render_system_json(s);
        case Format::Latex: {
            std::ostringstream os;
            os << "\\begin{aligned}\n";
            for (size_t r = 0; r < s.size(); ++r) {
                bool first = true;
                for (size_t c = 0; c < s.size(); ++c) {
                    if (entry_is_zero(s.at(r, c))) continue;
                    if (!first) os << " + ";
                    std::string e =
                        std::holds_alternative<OperatorPoly>(s.at(r, c))
                            ? latex_operator(std::get<OperatorPoly>(s.at(r, c)))
                            : std::get<VcOperator>(s.at(r, c)).str();
                    os << "\\left(" << e << "\\right) " << s.dvars()[c];
                    first = false;
                }
                os << " &= ";
                const Forcing& f = s.forcing()[r];
                if (f.is_symbolic())
                    os << f.symbol;
                else
                    os << latex_exppoly(f.value);
                os << " \\\\\n";
            }
            os << "\\end{aligned}\n";
            return os.str();
        }
    }
    return {};
}

std::string render_governing(const GoverningEquation& g, Format fmt) {
    switch (fmt) {
        case Format::Text: {
            std::ostringstream os;
            os << "governing equation for " << g.target << ":\n";
            os << "  P: "
               << (g.lhs_is_vc() ? g.lhs_vc().str() : g.lhs_poly().str())
               << "\n";
            if (g.rhs.empty()) {
                os << "  rhs: 0\n";
            } else {
                os << "  rhs:";
                for (size_t i = 0; i < g.rhs.size(); ++i) {
                    os << (i ? " + " : " ") << "(" << g.rhs[i].first.str()
                       << ")[" << forcing_name(g.rhs[i].second, i) << "]";
                }
                os << "\n";
            }
            return os.str();
        }
        case Format::Latex: {
            std::ostringstream os;
            if (g.system_size == 2 && !g.lhs_is_vc())
                os << "% \\mathcal{P}(D) = P_{11}(D) P_{22}(D) - "
                      "P_{21}(D) P_{12}(D), \\quad \\mathcal{Q}: "
                      "-P_{21}(D) f_1 + P_{11}(D) f_2\n";
            os << "\\left(";
            os << (g.lhs_is_vc() ? g.lhs_vc().str()
                                 : latex_operator(g.lhs_poly()));
            os << "\\right) " << g.target << " = ";
            if (g.rhs.empty()) {
                os << "0";
            } else {
                for (size_t i = 0; i < g.rhs.size(); ++i) {
                    if (i) os << " + ";
                    os << "\\left(" << latex_operator(g.rhs[i].first)
                       << "\\right) " << forcing_name(g.rhs[i].second, i);
                }
            }
            os << "\n";
            return os.str();
        }
        case Format::Json: {
            json j;
            j["daekit_schema"] = 1;
            j["target"] = g.target;
            j["vc"] = g.lhs_is_vc();
            j["P"] = g.lhs_is_vc() ? g.lhs_vc().str()
                                   : entry_expression(g.lhs_poly());
            json rhs = json::array();
            for (size_t i = 0; i < g.rhs.size(); ++i) {
                json e;
                e["op"] = entry_expression(g.rhs[i].first);
                e["forcing"] = forcing_name(g.rhs[i].second, i);
                if (!g.rhs[i].second.is_symbolic() &&
                    !g.rhs[i].second.value.is_zero())
                    e["expr"] = exppoly_literal(g.rhs[i].second.value);
                rhs.push_back(e);
            }
            j["rhs"] = rhs;
            return j.dump(2);
        }
    }
    return {};
}

std::string render_solution(const Solution& sol, Format fmt) {
    switch (fmt) {
        case Format::Text: {
            std::ostringstream os;
            for (const auto& [name, f] : sol.components)
                os << name << " = " << f.str() << "\n";
            if (!sol.constants.empty()) {
                os << "free constants:";
                for (const auto& c : sol.constants) os << " " << c;
                os << "\n";
            }
            return os.str();
        }
        case Format::Latex: {
            std::ostringstream os;
            os << "\\begin{aligned}\n";
            for (const auto& [name, f] : sol.components)
                os << name << " &= " << latex_exppoly(f) << " \\\\\n";
            os << "\\end{aligned}\n";
            return os.str();
        }
        case Format::Json: {
            json j;
            j["daekit_schema"] = 1;
            json comps;
            for (const auto& [name, f] : sol.components)
                comps[name] = exppoly_json(f);
            j["solutions"] = comps;
            j["constants"] = sol.constants;
            return j.dump(2);
        }
    }
    return {};
}

std::string render_charpoly(const OperatorPoly& det,
                            const std::vector<Root>& roots, Format fmt) {
    switch (fmt) {
        case Format::Text: {
            std::ostringstream os;
            os << "characteristic polynomial: " << det.str() << "\n";
            os << "roots:\n";
            for (const auto& r : roots) {
                os << "  " << r.value.str();
                if (r.multiplicity > 1)
                    os << " (multiplicity " << r.multiplicity << ")";
                os << "\n";
            }
            return os.str();
        }
        case Format::Latex: {
            std::ostringstream os;
            os << latex_operator(det) << " = 0, \\quad a \\in \\{";
            for (size_t i = 0; i < roots.size(); ++i) {
                if (i) os << ", ";
                os << latex_cnum(roots[i].value);
                if (roots[i].multiplicity > 1)
                    os << "^{(" << roots[i].multiplicity << ")}";
            }
            os << "\\}\n";
            return os.str();
        }
        case Format::Json: {
            json j;
            j["daekit_schema"] = 1;
            j["charpoly"] = entry_expression(det);
            json rs = json::array();
            for (const auto& r : roots)
                rs.push_back({{"value", r.value.str()},
                              {"multiplicity", r.multiplicity}});
            j["roots"] = rs;
            return j.dump(2);
        }
    }
    return {};
}

std::string render_report(const ResidualReport& r, Format fmt) {
    switch (fmt) {
        case Format::Text:
        case Format::Latex:
            return r.str() + "\n";
        case Format::Json: {
            json j;
            j["daekit_schema"] = 1;
            j["pass"] = r.pass;
            j["tol"] = r.tol;
            j["max_residual"] = r.max_residual;
            j["grid"] = {{"ivar", r.grid.ivar},
                         {"start", r.grid.start},
                         {"stop", r.grid.stop},
                         {"points", r.grid.points}};
            return j.dump(2);
        }
    }
    return {};
}

} // namespace daekit
