#pragma once

#include <stdexcept>
#include <string>

namespace rhoform {

enum class ErrorKind {
    DivisionByZero,
    IncompatibleRootOrder,
    GroupMismatch,
    PresentationMismatch,
    PhiMismatch,
    NonHomogeneous,
    ZeroElement,
    IllDefined,
    DegreeMismatch,
    DegreeUnderflow,
    InfiniteComponent,
    UnknownGenerator,
    SyntaxError,
    BadArgument,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. Carries a machine-readable kind so the CLI can
/// emit structured error JSON; syntax errors additionally carry a position.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Error(ErrorKind kind, std::string message, int line, int col)
        : std::runtime_error(std::move(message)), kind_(kind), line_(line), col_(col) {}

    ErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

private:
    ErrorKind kind_;
    int line_ = 0;
    int col_ = 0;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace rhoform
