#pragma once

#include <stdexcept>
#include <string>

namespace cref {

// Raised for malformed input files (CLI exit code 2).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an operation's precondition is violated (CLI exit code 3).
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace cref
