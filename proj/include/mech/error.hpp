#ifndef MECH_ERROR_HPP
#define MECH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mech {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid construction or a violated precondition (unknown vertex,
// duplicate arc, endpoint mismatch, ...).
struct ValidationError : Error {
    using Error::Error;
};

// Syntax error in a text input, with a 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_number(line) {}
    int line_number;
};

// An enumeration or permutation search exceeded its configured budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

} // namespace mech

#endif
