#ifndef DAEKIT_ERRORS_HPP
#define DAEKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace daekit {

// Error categories map onto CLI exit codes: parse=2, singular=3,
// unsupported-class=4, numeric=5.
enum class ErrorKind {
    Parse,
    Singular,
    Unsupported,
    Numeric,
    Logic,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string what)
        : std::runtime_error(std::move(what)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by zero")
        : Error(ErrorKind::Numeric, w) {}
};

struct UnboundSymbol : Error {
    explicit UnboundSymbol(const std::string& sym)
        : Error(ErrorKind::Numeric, "unbound symbol: " + sym) {}
};

struct NumericPole : Error {
    explicit NumericPole(const std::string& w = "denominator evaluates to zero")
        : Error(ErrorKind::Numeric, w) {}
};

struct SymbolicCoefficientUnsupported : Error {
    explicit SymbolicCoefficientUnsupported(const std::string& w)
        : Error(ErrorKind::Unsupported, w) {}
};

struct SymbolicCoefficientsRemain : Error {
    explicit SymbolicCoefficientsRemain(const std::string& w)
        : Error(ErrorKind::Unsupported, w) {}
};

struct NonConstantLeftFactor : Error {
    explicit NonConstantLeftFactor(const std::string& w)
        : Error(ErrorKind::Unsupported, w) {}
};

struct NonSquare : Error {
    explicit NonSquare(const std::string& w) : Error(ErrorKind::Unsupported, w) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& w = "operator matrix is singular")
        : Error(ErrorKind::Singular, w) {}
};

struct StructurallySingular : Error {
    explicit StructurallySingular(const std::string& w)
        : Error(ErrorKind::Singular, w) {}
};

struct UndeclaredOperator : Error {
    explicit UndeclaredOperator(const std::string& w)
        : Error(ErrorKind::Parse, w) {}
};

struct UnknownVariable : Error {
    explicit UnknownVariable(const std::string& name)
        : Error(ErrorKind::Unsupported, "unknown dependent variable: " + name) {}
};

struct VcUnsupportedHere : Error {
    explicit VcUnsupportedHere(const std::string& w)
        : Error(ErrorKind::Unsupported, w) {}
};

struct VcConditionViolated : Error {
    explicit VcConditionViolated(const std::string& w)
        : Error(ErrorKind::Unsupported, w) {}
};

struct RepeatedRoots : Error {
    explicit RepeatedRoots(const std::string& w)
        : Error(ErrorKind::Numeric, w) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& w)
        : Error(ErrorKind::Numeric, w) {}
};

struct NotReducible : Error {
    explicit NotReducible(const std::string& w)
        : Error(ErrorKind::Unsupported, w) {}
};

struct UnboundConstant : Error {
    explicit UnboundConstant(const std::string& name)
        : Error(ErrorKind::Numeric, "no value assigned to constant " + name) {}
};

struct ParseError : Error {
    ParseError(int line, int col, const std::string& msg)
        : Error(ErrorKind::Parse,
                "parse error at " + std::to_string(line) + ":" +
                    std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

struct ArityError : Error {
    explicit ArityError(const std::string& w) : Error(ErrorKind::Parse, w) {}
};

struct UndeclaredSymbol : Error {
    explicit UndeclaredSymbol(int line, int col, const std::string& sym)
        : Error(ErrorKind::Parse,
                "undeclared symbol '" + sym + "' at " + std::to_string(line) +
                    ":" + std::to_string(col)) {}
};

} // namespace daekit

#endif
