#pragma once

#include <stdexcept>
#include <string>

namespace outcat {

// Base class for toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: broken category tables, bad JSON, shape mismatches.
struct ValidationError : Error {
    using Error::Error;
};

// A stated precondition of an operation does not hold (e.g. the two
// classes handed to the intertwining loop are not mutually inverse).
struct PreconditionError : Error {
    using Error::Error;
};

// A configured size cap would be exceeded. Nothing silently truncates.
struct CapError : Error {
    using Error::Error;
};

} // namespace outcat
