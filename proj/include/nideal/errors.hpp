#pragma once

#include <stdexcept>
#include <string>

namespace nideal {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (files, grammars). Carries a 1-based line number
// when one is known; line 0 means "not tied to a specific line".
struct ParseError : Error {
    explicit ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no)
    {
    }
    int line;
};

// A configured resource bound was exceeded (enumeration or oracle size).
struct BoundError : Error {
    using Error::Error;
};

// Precondition or invariant violation on otherwise well-formed input.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace nideal
