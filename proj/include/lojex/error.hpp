#pragma once

#include <stdexcept>
#include <string>

namespace lojex {

// Base of every error the engine throws. The CLI maps the subclasses onto
// exit codes: InvalidInput -> 2, Unsupported -> 3, anything else -> 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad JSON, empty generator set,
// non-m-primary ideal where one is required, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Well-formed input outside what the engine supports (hull in dimension > 4,
// mixed multiplicities in dimension > 3, ...).
class Unsupported : public Error {
public:
    using Error::Error;
};

// A self-check failed. Seeing one of these is a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace lojex
