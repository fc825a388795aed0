#pragma once

#include <stdexcept>
#include <string>

namespace msot {

// Malformed or inconsistent input: unreadable files, size mismatches,
// parameter values outside their documented range.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical breakdown: non-finite intermediates, infeasible problems.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace msot
