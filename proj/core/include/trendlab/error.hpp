#pragma once

#include <stdexcept>
#include <string>

namespace trendlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed files, out-of-domain arguments, violated preconditions.
/// The CLI maps this to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// A numeric procedure produced non-finite values or failed to converge.
/// The CLI maps this to exit code 3.
class NumericError : public Error {
public:
    using Error::Error;
};

[[noreturn]] void throw_input(const std::string& what);
[[noreturn]] void throw_numeric(const std::string& what);

}  // namespace trendlab
