#pragma once

#include <stdexcept>
#include <string>

namespace pmv {

/// Base class for all library errors (contract violations, unsupported
/// carriers, malformed input).  Absence of a value is never an error; it is
/// reported through std::optional.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col), message(msg) {}

    int line;
    int col;
    std::string message;
};

} // namespace pmv
