#pragma once

#include <stdexcept>
#include <string>

namespace tasig {

// Base class for all tasig failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input data or configuration. The CLI maps this to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Filesystem or stream failure. The CLI maps this to exit code 2.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace tasig
