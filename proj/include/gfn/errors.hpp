#pragma once

#include <stdexcept>
#include <string>

namespace gfn {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: graph files, partition specs, numbers. CLI exit code 1.
class ParseError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked outside its contract (bad chart edge, wrong
/// weight signs, missing rotations, M != d/2, ...). CLI exit code 3.
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace gfn
