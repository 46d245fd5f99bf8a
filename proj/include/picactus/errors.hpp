#pragma once

#include <stdexcept>
#include <string>

namespace picactus {

// Error taxonomy shared by the whole library. The CLI maps all of these to
// exit code 1; verification failures and missing witnesses are reported by
// return values, not exceptions.

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments: out-of-range vertices, malformed documents, graphs that
// violate an operation's connectivity requirement.
class input_error : public error {
public:
    using error::error;
};

// Graph has the wrong structure for the operation (not a cactus, rewrite
// would break the cactus property, disconnected where blocks are needed).
class structural_error : public error {
public:
    using error::error;
};

// Request exceeds a size guard (enumeration order, certificate order, ...).
class resource_error : public error {
public:
    using error::error;
};

} // namespace picactus
