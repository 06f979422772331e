#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsat {

// Malformed DIMACS input. line() is 1-based; 0 when the problem is not tied
// to a particular line (e.g. empty input).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A request would exceed a configured size limit (enumeration or simulator cap).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical contract was violated (non-trace-preserving generator,
// negative eigenvalue beyond tolerance, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qsat
