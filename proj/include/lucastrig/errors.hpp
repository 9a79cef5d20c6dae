#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lucastrig {

// Half-open byte range into an input line.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, SourceSpan span)
        : Error(msg), span_(span) {}
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

class UnknownFunction : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownSequence : public ParseError {
public:
    using ParseError::ParseError;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(const std::string& var)
        : Error("unbound variable '" + var + "'"), var_(var) {}
    const std::string& variable() const { return var_; }

private:
    std::string var_;
};

// A leftover i, sqrt(Q) or sqrt(D) factor that cannot be cleared under the
// stated side conditions; the identity has no integer form under the rule.
class RadicalResidue : public Error {
public:
    RadicalResidue(const std::string& atom, const std::string& context)
        : Error("radical residue " + atom +
                (context.empty() ? "" : " in " + context)),
          atom_(atom) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

class ResidualImaginary : public Error {
public:
    explicit ResidualImaginary(const std::string& context)
        : Error("residual imaginary unit after collection" +
                (context.empty() ? "" : ": " + context)) {}
};

class UnsupportedFunction : public Error {
public:
    explicit UnsupportedFunction(const std::string& msg) : Error(msg) {}
};

class UnsupportedDenominator : public Error {
public:
    explicit UnsupportedDenominator(const std::string& msg) : Error(msg) {}
};

class VacuousGrid : public Error {
public:
    explicit VacuousGrid(const std::string& msg) : Error(msg) {}
};

class DegenerateParams : public Error {
public:
    explicit DegenerateParams(const std::string& msg) : Error(msg) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

}  // namespace lucastrig
