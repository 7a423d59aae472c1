#include "daekit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "daekit/errors.hpp"

namespace daekit {

namespace {

struct Tok {
    enum Kind { Ident, Int, Punct, End } kind = End;
    std::string s;
    int line = 1;
    int col = 1;
};

std::vector<Tok> lex(const std::string& text) {
    std::vector<Tok> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance(text[i]);
                ++i;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        Tok t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) ||
                    text[j] == '_'))
                ++j;
            t.kind = Tok::Ident;
            t.s = text.substr(i, j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            t.kind = Tok::Int;
            t.s = text.substr(i, j - i);
        } else if (std::string("+-*/^(),;:=").find(c) != std::string::npos) {
            t.kind = Tok::Punct;
            t.s = std::string(1, c);
        } else {
            throw ParseError(line, col,
                             std::string("unexpected character '") + c + "'");
        }
        for (char ch : t.s) advance(ch);
        i += t.s.size();
        out.push_back(std::move(t));
    }
    Tok end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// One additive term of an equation's left side.
struct TermAcc {
    RatFunc coeff = RatFunc::constant(1);
    std::optional<FuncSymbol> func;
    std::map<std::string, int> ops;  // operator symbol -> power
    std::string dvar;
    std::map<std::string, int> ints; // ivar -> integral nesting depth
};

struct Decls {
    std::vector<std::string> ivars;
    std::vector<std::string> dvars;
    std::vector<std::string> params;
    std::map<std::string, std::vector<std::string>> funcs;
    bool implicit_funcs = false; // JSON entry expressions

    bool is_ivar(const std::string& n) const {
        return std::find(ivars.begin(), ivars.end(), n) != ivars.end();
    }
    bool is_dvar(const std::string& n) const {
        return std::find(dvars.begin(), dvars.end(), n) != dvars.end();
    }
    bool is_param(const std::string& n) const {
        return std::find(params.begin(), params.end(), n) != params.end();
    }
    std::string opvar_ivar(const std::string& op) const {
        if (op == "D") return ivars.size() == 1 ? ivars[0] : std::string();
        if (op.rfind("D_", 0) == 0) {
            std::string iv = op.substr(2);
            if (is_ivar(iv)) return iv;
        }
        return std::string();
    }
};

class Parser {
public:
    Parser(std::vector<Tok> toks, Decls decls)
        : toks_(std::move(toks)), decls_(std::move(decls)) {}

    const Tok& peek(size_t ahead = 0) const {
        size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    Tok next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool accept(const std::string& punct) {
        if (peek().kind == Tok::Punct && peek().s == punct) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& punct) {
        if (!accept(punct))
            throw ParseError(peek().line, peek().col,
                             "expected '" + punct + "', found '" + peek().s +
                                 "'");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(peek().line, peek().col, msg);
    }
    bool at_end() const { return peek().kind == Tok::End; }

    Decls& decls() { return decls_; }

    std::string expect_ident() {
        if (peek().kind != Tok::Ident) fail("expected an identifier");
        return next().s;
    }

    long expect_int() {
        if (peek().kind != Tok::Int) fail("expected an integer");
        return std::stol(next().s);
    }

    // ---- numeric / parameter coefficient expressions ----

    GaussRat parse_rational() {
        long n = expect_int();
        // Only claim the '/' for an integer denominator; other divisors
        // (parameters, parenthesized sums) belong to the caller.
        if (peek().kind == Tok::Punct && peek().s == "/" &&
            peek(1).kind == Tok::Int) {
            next();
            return GaussRat(mpq_class(n, expect_int()));
        }
        return GaussRat(n);
    }

    // Product of ints, `im`, parameters and parenthesized sums; no
    // operators or variables.
    RatFunc parse_coeff_product() {
        RatFunc acc = RatFunc::constant(1);
        bool first = true;
        for (;;) {
            if (peek().kind == Tok::Int) {
                acc *= RatFunc::constant(GaussRat(expect_int()));
            } else if (peek().kind == Tok::Ident && peek().s == "im") {
                next();
                acc *= RatFunc::constant(GaussRat::i());
            } else if (peek().kind == Tok::Ident &&
                       decls_.is_param(peek().s)) {
                std::string name = next().s;
                int pw = 1;
                if (accept("^")) pw = static_cast<int>(expect_int());
                for (int k = 0; k < pw; ++k) acc *= RatFunc::symbol(name);
            } else if (peek().kind == Tok::Punct && peek().s == "(") {
                next();
                acc *= parse_coeff_sum();
                expect(")");
            } else if (first) {
                fail("expected a coefficient");
            } else {
                break;
            }
            first = false;
            if (accept("*")) continue;
            if (accept("/")) {
                acc = acc / parse_coeff_divisor();
                if (accept("*")) continue;
            }
            break;
        }
        return acc;
    }

    RatFunc parse_coeff_divisor() {
        if (peek().kind == Tok::Int)
            return RatFunc::constant(GaussRat(expect_int()));
        if (peek().kind == Tok::Ident && decls_.is_param(peek().s)) {
            std::string name = next().s;
            int pw = 1;
            if (accept("^")) pw = static_cast<int>(expect_int());
            RatFunc r = RatFunc::constant(1);
            for (int k = 0; k < pw; ++k) r *= RatFunc::symbol(name);
            return r;
        }
        if (peek().kind == Tok::Punct && peek().s == "(") {
            next();
            RatFunc r = parse_coeff_sum();
            expect(")");
            return r;
        }
        fail("expected a divisor");
    }

    RatFunc parse_coeff_sum() {
        RatFunc acc;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept("-"))
                sign = -1;
            else if (accept("+"))
                sign = 1;
            else if (!first)
                break;
            RatFunc p = parse_coeff_product();
            acc += sign < 0 ? -p : p;
            first = false;
            if (peek().kind == Tok::Punct &&
                (peek().s == "+" || peek().s == "-"))
                continue;
            break;
        }
        return acc;
    }

    // ---- equation terms ----

    bool ident_is_op(const std::string& n) const {
        return n == "D" || n.rfind("D_", 0) == 0;
    }

    void parse_term_into(TermAcc& acc, bool allow_dvar) {
        bool any = false;
        for (;;) {
            const Tok& t = peek();
            if (t.kind == Tok::Int) {
                acc.coeff *= RatFunc::constant(parse_rational());
            } else if (t.kind == Tok::Punct && t.s == "(") {
                next();
                acc.coeff *= parse_coeff_sum();
                expect(")");
            } else if (t.kind == Tok::Ident) {
                std::string name = t.s;
                if (name == "im") {
                    next();
                    acc.coeff *= RatFunc::constant(GaussRat::i());
                } else if (name == "int") {
                    next();
                    expect("(");
                    parse_term_into(acc, allow_dvar);
                    expect(",");
                    std::string iv = expect_ident();
                    if (!decls_.is_ivar(iv))
                        fail("unknown integration variable '" + iv + "'");
                    expect(")");
                    acc.ints[iv] += 1;
                } else if (ident_is_op(name)) {
                    std::string iv = decls_.opvar_ivar(name);
                    if (iv.empty())
                        throw UndeclaredOperator(
                            "operator '" + name +
                            "' does not match a declared independent variable");
                    next();
                    int pw = 1;
                    if (accept("^")) pw = static_cast<int>(expect_int());
                    acc.ops[name] += pw;
                } else if (decls_.is_dvar(name)) {
                    if (!allow_dvar)
                        fail("dependent variable '" + name +
                             "' not allowed here");
                    if (!acc.dvar.empty())
                        fail("two dependent variables in one term");
                    next();
                    acc.dvar = name;
                } else if (decls_.is_param(name)) {
                    next();
                    int pw = 1;
                    if (accept("^")) pw = static_cast<int>(expect_int());
                    for (int k = 0; k < pw; ++k)
                        acc.coeff *= RatFunc::symbol(name);
                } else if (decls_.funcs.count(name) ||
                           (decls_.implicit_funcs && peek(1).kind == Tok::Punct &&
                            peek(1).s == "(")) {
                    next();
                    FuncSymbol f;
                    f.name = name;
                    expect("(");
                    if (!accept(")")) {
                        f.args.push_back(expect_ident());
                        while (accept(",")) f.args.push_back(expect_ident());
                        expect(")");
                    }
                    if (acc.func)
                        fail("two coefficient functions in one term");
                    acc.func = f;
                } else {
                    throw UndeclaredSymbol(t.line, t.col, name);
                }
            } else {
                if (!any) fail("expected a term");
                break;
            }
            any = true;
            while (accept("/"))
                acc.coeff = acc.coeff / parse_coeff_divisor();
            if (accept("*")) continue;
            // juxtaposition: `m1*D^2 x1`
            if (peek().kind == Tok::Ident &&
                (decls_.is_dvar(peek().s) || ident_is_op(peek().s) ||
                 peek().s == "im" || decls_.is_param(peek().s) ||
                 decls_.funcs.count(peek().s)))
                continue;
            break;
        }
    }

    std::vector<TermAcc> parse_term_sum(bool allow_dvar) {
        std::vector<TermAcc> terms;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept("-"))
                sign = -1;
            else if (accept("+"))
                sign = 1;
            else if (!first)
                break;
            TermAcc acc;
            parse_term_into(acc, allow_dvar);
            if (sign < 0) acc.coeff = -acc.coeff;
            terms.push_back(std::move(acc));
            first = false;
            if (peek().kind == Tok::Punct &&
                (peek().s == "+" || peek().s == "-"))
                continue;
            break;
        }
        return terms;
    }

    // ---- exponential-polynomial literals ----

    GaussRat parse_scalar_product(std::string* ivar_out) {
        GaussRat c(1);
        bool any = false;
        for (;;) {
            if (peek().kind == Tok::Int) {
                c *= parse_rational();
            } else if (peek().kind == Tok::Ident && peek().s == "im") {
                next();
                c *= GaussRat::i();
            } else if (peek().kind == Tok::Ident && ivar_out &&
                       decls_.is_ivar(peek().s)) {
                if (!ivar_out->empty())
                    fail("two variables in one exponent term");
                *ivar_out = next().s;
            } else {
                if (!any) fail("expected a scalar factor");
                break;
            }
            any = true;
            if (accept("*")) continue;
            if (accept("/")) {
                if (peek().kind != Tok::Int) fail("expected an integer divisor");
                c = c / GaussRat(expect_int());
                if (accept("*")) continue;
            }
            break;
        }
        return c;
    }

    ExpPoly parse_exppoly_sum() {
        ExpPoly acc;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept("-"))
                sign = -1;
            else if (accept("+"))
                sign = 1;
            else if (!first)
                break;

            GaussRat c(sign);
            std::map<std::string, int> pows;
            std::map<std::string, CNum> exps;
            bool any = false;
            for (;;) {
                if (peek().kind == Tok::Int) {
                    c *= parse_rational();
                } else if (peek().kind == Tok::Ident && peek().s == "im") {
                    next();
                    c *= GaussRat::i();
                } else if (peek().kind == Tok::Ident && peek().s == "exp") {
                    next();
                    expect("(");
                    bool efirst = true;
                    for (;;) {
                        int es = 1;
                        if (accept("-"))
                            es = -1;
                        else if (accept("+"))
                            es = 1;
                        else if (!efirst)
                            break;
                        std::string iv;
                        GaussRat ec = parse_scalar_product(&iv);
                        if (iv.empty())
                            fail("exponent term needs an independent variable");
                        if (es < 0) ec = -ec;
                        CNum prev = exps.count(iv) ? exps[iv] : CNum(GaussRat(0));
                        exps[iv] = prev + CNum(ec);
                        efirst = false;
                        if (peek().kind == Tok::Punct &&
                            (peek().s == "+" || peek().s == "-"))
                            continue;
                        break;
                    }
                    expect(")");
                } else if (peek().kind == Tok::Ident &&
                           decls_.is_ivar(peek().s)) {
                    std::string iv = next().s;
                    int pw = 1;
                    if (accept("^")) pw = static_cast<int>(expect_int());
                    pows[iv] += pw;
                } else {
                    if (!any) fail("expected a function term");
                    break;
                }
                any = true;
                if (accept("*")) continue;
                if (accept("/")) {
                    if (peek().kind != Tok::Int)
                        fail("expected an integer divisor");
                    c = c / GaussRat(expect_int());
                    if (accept("*")) continue;
                }
                break;
            }
            for (auto it = exps.begin(); it != exps.end();)
                it = it->second.is_zero() ? exps.erase(it) : std::next(it);
            for (auto it = pows.begin(); it != pows.end();)
                it = it->second == 0 ? pows.erase(it) : std::next(it);
            acc = acc + ExpPoly::term(CoeffLC(CNum(c)), pows, exps);
            first = false;
            if (peek().kind == Tok::Punct &&
                (peek().s == "+" || peek().s == "-"))
                continue;
            break;
        }
        return acc;
    }

private:
    std::vector<Tok> toks_;
    Decls decls_;
    size_t pos_ = 0;
};

// Turn a finished term into a matrix-entry contribution after the row's
// integral pre-multiplication has been decided.
MatrixEntry term_to_entry(const TermAcc& t, const Decls& decls,
                          const std::map<std::string, int>& premult,
                          int line, int col) {
    std::map<std::string, int> ops = t.ops;
    for (const auto& [iv, k] : premult) {
        std::string opname = decls.ivars.size() == 1 ? "D" : "D_" + iv;
        int mine = t.ints.count(iv) ? t.ints.at(iv) : 0;
        if (mine > k)
            throw ParseError(line, col, "integral nesting mismatch");
        ops[opname] += k - mine;
    }
    auto opvar_of = [&](const std::string& name) {
        return OpVar{name, decls.ivars.size() == 1 && name == "D"
                               ? decls.ivars[0]
                               : name.substr(2)};
    };

    if (t.func) {
        std::string opname;
        int order = 0;
        for (const auto& [name, pw] : ops) {
            if (pw == 0) continue;
            if (!opname.empty())
                throw ParseError(line, col,
                                 "coefficient functions allow a single "
                                 "operator symbol per term");
            opname = name;
            order = pw;
        }
        OpVar v = opname.empty()
                      ? OpVar{decls.ivars.size() == 1 ? "D"
                                                      : "D_" + decls.ivars[0],
                              decls.ivars[0]}
                      : opvar_of(opname);
        FuncExpr fc = FuncExpr::symbol(*t.func).scaled(t.coeff);
        return VcOperator::term(v, fc, order);
    }

    OperatorPoly p(t.coeff);
    for (const auto& [name, pw] : ops)
        if (pw > 0) p *= OperatorPoly::d(opvar_of(name), pw);
    return p;
}

void add_entry(MatrixEntry& slot, const MatrixEntry& add, int line, int col) {
    if (std::holds_alternative<OperatorPoly>(slot) &&
        std::holds_alternative<OperatorPoly>(add)) {
        slot = std::get<OperatorPoly>(slot) + std::get<OperatorPoly>(add);
        return;
    }
    auto to_vc = [&](const MatrixEntry& e, const OpVar& v) {
        if (std::holds_alternative<VcOperator>(e))
            return std::get<VcOperator>(e);
        const auto& p = std::get<OperatorPoly>(e);
        if (p.is_zero()) return VcOperator(v);
        return VcOperator::from_operator_poly(p);
    };
    OpVar v = std::holds_alternative<VcOperator>(add)
                  ? std::get<VcOperator>(add).opvar()
                  : std::get<VcOperator>(slot).opvar();
    VcOperator a = to_vc(slot, v), b = to_vc(add, v);
    if (!(a.opvar() == b.opvar()))
        throw ParseError(line, col,
                         "mixed operator symbols in a variable-coefficient "
                         "entry");
    slot = a + b;
}

SourceSystem parse_dsl(const std::string& text) {
    Parser p(lex(text), Decls{});

    SourceSystem src;
    src.raw = text;

    // headers
    bool saw_ivars = false, saw_vars = false;
    while (p.peek().kind == Tok::Ident &&
           (p.peek().s == "ivars" || p.peek().s == "vars" ||
            p.peek().s == "params" || p.peek().s == "funcs")) {
        std::string kind = p.next().s;
        p.expect(":");
        if (kind == "funcs") {
            for (;;) {
                std::string name = p.expect_ident();
                std::vector<std::string> args;
                p.expect("(");
                if (!p.accept(")")) {
                    args.push_back(p.expect_ident());
                    while (p.accept(",")) args.push_back(p.expect_ident());
                    p.expect(")");
                }
                p.decls().funcs[name] = args;
                if (!p.accept(",")) break;
            }
        } else {
            std::vector<std::string>* list = kind == "ivars"
                                                 ? &p.decls().ivars
                                                 : kind == "vars"
                                                       ? &p.decls().dvars
                                                       : &p.decls().params;
            for (;;) {
                list->push_back(p.expect_ident());
                if (!p.accept(",")) break;
            }
            if (kind == "ivars") saw_ivars = true;
            if (kind == "vars") saw_vars = true;
        }
        p.expect(";");
    }
    if (!saw_ivars || !saw_vars)
        p.fail("expected 'ivars:' and 'vars:' headers");

    const Decls& d = p.decls();
    const size_t n = d.dvars.size();
    std::vector<std::vector<MatrixEntry>> matrix(
        n, std::vector<MatrixEntry>(n, OperatorPoly()));
    std::vector<Forcing> forcing;
    size_t row = 0;

    while (!p.at_end()) {
        int eline = p.peek().line, ecol = p.peek().col;
        if (!(p.peek().kind == Tok::Ident && p.peek().s == "eq"))
            p.fail("expected 'eq:'");
        p.next();
        p.expect(":");
        if (row >= n)
            throw ArityError("more equations than dependent variables");
        src.equation_spans.emplace_back(eline, ecol);

        auto terms = p.parse_term_sum(true);
        p.expect("=");

        std::map<std::string, int> premult;
        for (const auto& t : terms)
            for (const auto& [iv, k] : t.ints)
                premult[iv] = std::max(premult[iv], k);

        for (const auto& t : terms) {
            if (t.dvar.empty())
                throw ParseError(eline, ecol,
                                 "every left-side term needs a dependent "
                                 "variable");
            size_t col = 0;
            while (d.dvars[col] != t.dvar) ++col;
            MatrixEntry e = term_to_entry(t, d, premult, eline, ecol);
            add_entry(matrix[row][col], e, eline, ecol);
        }

        // right-hand side
        Forcing f;
        for (const auto& [iv, k] : premult) {
            OpVar v{d.ivars.size() == 1 ? "D" : "D_" + iv, iv};
            f.premult *= OperatorPoly::d(v, k);
        }
        if (p.peek().kind == Tok::Int && p.peek().s == "0" &&
            p.peek(1).kind == Tok::Punct && p.peek(1).s == ";") {
            p.next();
        } else if (p.peek().kind == Tok::Ident && p.peek().s != "exp" &&
                   p.peek().s != "im" && !d.is_ivar(p.peek().s) &&
                   p.peek(1).kind == Tok::Punct && p.peek(1).s == "(") {
            f.symbol = p.next().s;
            p.expect("(");
            if (!p.accept(")")) {
                std::string arg = p.expect_ident();
                if (!d.is_ivar(arg))
                    p.fail("forcing arguments must be independent variables");
                while (p.accept(",")) {
                    arg = p.expect_ident();
                    if (!d.is_ivar(arg))
                        p.fail("forcing arguments must be independent "
                               "variables");
                }
                p.expect(")");
            }
        } else {
            f.value = p.parse_exppoly_sum();
        }
        forcing.push_back(std::move(f));
        p.expect(";");
        ++row;
    }

    if (row == 0 || row != n)
        throw ArityError("system has " + std::to_string(row) +
                         " equations for " + std::to_string(n) +
                         " dependent variables");

    src.system = DaeSystem(d.ivars, d.dvars, std::move(matrix),
                           std::move(forcing), d.params);
    return src;
}

Decls decls_from(const DaeSystem& s) {
    Decls d;
    d.ivars = s.ivars();
    d.dvars = s.dvars();
    d.params = s.params();
    d.implicit_funcs = true;
    return d;
}

SourceSystem parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, 0, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.contains("daekit_schema") || j["daekit_schema"].get<int>() != 1)
            throw ParseError(0, 0, "unsupported or missing daekit_schema");
        std::vector<std::string> ivars = j.at("ivars");
        std::vector<std::string> dvars = j.at("vars");
        std::vector<std::string> params =
            j.contains("params") ? j["params"].get<std::vector<std::string>>()
                                 : std::vector<std::string>{};
        size_t n = dvars.size();

        DaeSystem context(ivars, dvars,
                          std::vector<std::vector<MatrixEntry>>(
                              n, std::vector<MatrixEntry>(n, OperatorPoly())),
                          std::vector<Forcing>(n), params);

        std::vector<std::vector<MatrixEntry>> matrix(
            n, std::vector<MatrixEntry>(n, OperatorPoly()));
        const auto& jm = j.at("matrix");
        if (jm.size() != n) throw ArityError("matrix row count mismatch");
        for (size_t r = 0; r < n; ++r) {
            if (jm[r].size() != n)
                throw ArityError("matrix column count mismatch");
            for (size_t c = 0; c < n; ++c) {
                std::string cell = jm[r][c].get<std::string>();
                if (cell != "0")
                    matrix[r][c] = parse_entry(cell, context);
            }
        }

        std::vector<Forcing> forcing(n);
        if (j.contains("forcing")) {
            const auto& jf = j["forcing"];
            if (jf.size() != n) throw ArityError("forcing length mismatch");
            for (size_t r = 0; r < n; ++r) {
                const auto& e = jf[r];
                if (e.is_null()) continue;
                if (e.contains("symbol"))
                    forcing[r].symbol = e["symbol"].get<std::string>();
                else if (e.contains("expr"))
                    forcing[r].value =
                        parse_exppoly(e["expr"].get<std::string>(), ivars);
                if (e.contains("premult")) {
                    MatrixEntry pm =
                        parse_entry(e["premult"].get<std::string>(), context);
                    forcing[r].premult = std::get<OperatorPoly>(pm);
                }
            }
        }

        SourceSystem src;
        src.raw = text;
        src.system = DaeSystem(ivars, dvars, std::move(matrix),
                               std::move(forcing), params);
        return src;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(0, 0, std::string("invalid system JSON: ") + e.what());
    }
}

} // namespace

SourceSystem parse_system(const std::string& text) {
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') return parse_json(text);
    return parse_dsl(text);
}

MatrixEntry parse_entry(const std::string& text, const DaeSystem& context) {
    Parser p(lex(text), decls_from(context));
    auto terms = p.parse_term_sum(false);
    if (!p.at_end()) p.fail("trailing input after entry expression");
    MatrixEntry e = OperatorPoly();
    for (const auto& t : terms) {
        MatrixEntry part = term_to_entry(t, decls_from(context), {}, 1, 1);
        add_entry(e, part, 1, 1);
    }
    return e;
}

ExpPoly parse_exppoly(const std::string& text,
                      const std::vector<std::string>& ivars) {
    Decls d;
    d.ivars = ivars;
    Parser p(lex(text), d);
    ExpPoly e = p.parse_exppoly_sum();
    if (!p.at_end()) p.fail("trailing input after expression");
    return e;
}

} // namespace daekit
