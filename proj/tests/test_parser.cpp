#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "daekit/errors.hpp"
#include "daekit/parser.hpp"
#include "daekit/render.hpp"

using namespace daekit;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<fs::path> corpus_files(const std::string& ext) {
    std::vector<fs::path> out;
    for (auto& e : fs::directory_iterator(DAEKIT_CORPUS_DIR))
        if (e.path().extension() == ext) out.push_back(e.path());
    std::sort(out.begin(), out.end());
    REQUIRE(!out.empty());
    return out;
}

bool entries_equal(const MatrixEntry& a, const MatrixEntry& b) {
    if (std::holds_alternative<OperatorPoly>(a) !=
        std::holds_alternative<OperatorPoly>(b))
        return false;
    if (std::holds_alternative<OperatorPoly>(a))
        return std::get<OperatorPoly>(a).equal(std::get<OperatorPoly>(b));
    return std::get<VcOperator>(a) == std::get<VcOperator>(b);
}

bool systems_equal(const DaeSystem& a, const DaeSystem& b) {
    if (a.ivars() != b.ivars() || a.dvars() != b.dvars()) return false;
    if (a.size() != b.size()) return false;
    for (size_t r = 0; r < a.size(); ++r) {
        for (size_t c = 0; c < a.size(); ++c)
            if (!entries_equal(a.at(r, c), b.at(r, c))) return false;
        const Forcing& fa = a.forcing()[r];
        const Forcing& fb = b.forcing()[r];
        if (fa.symbol != fb.symbol) return false;
        if (!fa.value.same(fb.value)) return false;
        if (!fa.premult.equal(fb.premult)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("a simple declaration parses to the expected matrix") {
    auto src = parse_system("ivars: t;\nvars: x;\neq: D^2 x - 3*D x + 2*x = exp(3*im*t);\n");
    REQUIRE(src.system.size() == 1);
    const auto& p = std::get<OperatorPoly>(src.system.at(0, 0));
    OpVar Dt{"D", "t"};
    OperatorPoly expect = OperatorPoly::d(Dt, 2) +
                          OperatorPoly::d(Dt, 1, RatFunc::constant(-3)) +
                          OperatorPoly::constant(2);
    CHECK(p.equal(expect));
    CHECK(src.system.forcing()[0].value.same(
        ExpPoly::exponential("t", CNum(GaussRat(0, 3)))));
}

TEST_CASE("integral rows are premultiplied by the operator at parse time") {
    auto src = parse_system(
        "ivars: t;\nvars: x;\neq: D x + 2*x + int(x, t) = 1;\n");
    const auto& p = std::get<OperatorPoly>(src.system.at(0, 0));
    OpVar Dt{"D", "t"};
    OperatorPoly expect = OperatorPoly::d(Dt, 2) +
                          OperatorPoly::d(Dt, 1, RatFunc::constant(2)) +
                          OperatorPoly::constant(1);
    CHECK(p.equal(expect));
    CHECK(src.system.forcing()[0].premult.equal(OperatorPoly::d(Dt)));
}

TEST_CASE("parse errors carry line and column positions") {
    try {
        parse_system("ivars: t;\nvars: x;\neq: D^2 y = 0;\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("undeclared operators are rejected") {
    CHECK_THROWS_AS(
        parse_system("ivars: t;\nvars: x;\neq: D_z x = 0;\n"),
        UndeclaredOperator);
    // Bare D is ambiguous with two independent variables.
    CHECK_THROWS_AS(
        parse_system("ivars: t, x;\nvars: u;\neq: D u = 0;\n"),
        UndeclaredOperator);
}

TEST_CASE("every corpus DSL file parses and round-trips through text") {
    for (const auto& path : corpus_files(".dae")) {
        INFO("file: " << path.string());
        auto src = parse_system(slurp(path));
        std::string text = render_system(src.system, Format::Text);
        auto again = parse_system(text);
        CHECK(systems_equal(src.system, again.system));
    }
}

TEST_CASE("every corpus file round-trips through the JSON schema") {
    for (const auto& path : corpus_files(".dae")) {
        INFO("file: " << path.string());
        auto src = parse_system(slurp(path));
        if (src.system.has_vc()) continue; // entries with opaque funcs stay DSL-only
        std::string js = render_system(src.system, Format::Json);
        auto again = parse_system(js);
        CHECK(systems_equal(src.system, again.system));
    }
}

TEST_CASE("the JSON corpus file parses") {
    for (const auto& path : corpus_files(".json")) {
        auto src = parse_system(slurp(path));
        CHECK(src.system.size() >= 1);
    }
}

TEST_CASE("mutated inputs either parse or raise ParseError, never crash") {
    std::mt19937 rng(90210);
    std::vector<std::string> seeds;
    for (const auto& path : corpus_files(".dae")) seeds.push_back(slurp(path));
    const std::string garbage = "()+-*/^;:=,DxY123 \n#";
    std::uniform_int_distribution<size_t> which(0, seeds.size() - 1);
    std::uniform_int_distribution<size_t> gpick(0, garbage.size() - 1);
    int parsed = 0, rejected = 0;
    for (int k = 0; k < 2000; ++k) {
        std::string s = seeds[which(rng)];
        int edits = 1 + static_cast<int>(k % 4);
        for (int e = 0; e < edits && !s.empty(); ++e) {
            std::uniform_int_distribution<size_t> pos(0, s.size() - 1);
            size_t p = pos(rng);
            switch (k % 3) {
            case 0: s[p] = garbage[gpick(rng)]; break;
            case 1: s.erase(p, 1); break;
            default: s.insert(p, 1, garbage[gpick(rng)]); break;
            }
        }
        try {
            parse_system(s);
            ++parsed;
        } catch (const Error&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 2000);
    CHECK(rejected > 100); // the mutations actually bite
}

TEST_CASE("entry expressions round-trip") {
    auto src = parse_system(slurp(fs::path(DAEKIT_CORPUS_DIR) / "massspring.dae"));
    for (size_t r = 0; r < src.system.size(); ++r)
        for (size_t c = 0; c < src.system.size(); ++c) {
            const auto& p = std::get<OperatorPoly>(src.system.at(r, c));
            if (p.is_zero()) continue;
            MatrixEntry back = parse_entry(entry_expression(p), src.system);
            CHECK(std::get<OperatorPoly>(back).equal(p));
        }
}

TEST_CASE("exponential-polynomial literals round-trip") {
    std::vector<std::string> ivars{"t"};
    std::vector<std::string> cases{
        "1", "t^2", "exp(3*im*t)", "2*t*exp(-t) + 1/2", "-3 + t^3*exp(2*t)"};
    for (const auto& s : cases) {
        ExpPoly f = parse_exppoly(s, ivars);
        ExpPoly back = parse_exppoly(exppoly_literal(f), ivars);
        CHECK(back.same(f));
    }
}
