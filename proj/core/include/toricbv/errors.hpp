#pragma once

#include <stdexcept>
#include <string>

namespace toricbv {

// Raised for malformed input: bad dimensions, unparsable documents,
// out-of-range indices, inadmissible parameters. CLI maps it to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant is violated. Seeing this is a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace toricbv
