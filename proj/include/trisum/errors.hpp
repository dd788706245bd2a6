#pragma once

#include <stdexcept>
#include <string>

namespace trisum {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An index or size parameter exceeds a configured range guard.
struct SizeError : Error {
    using Error::Error;
};

// A parameter lies outside an operation's validity domain
// (excluded r, zero weight, vanishing coefficient, ...).
struct DomainError : Error {
    using Error::Error;
};

// A closed form's denominator 1 - sum x^{c_m} f_m vanishes exactly.
struct SingularError : Error {
    using Error::Error;
};

// A rigorous rational bracket is too wide to decide a predicate.
struct IndeterminateError : Error {
    using Error::Error;
};

// Malformed input file or string (JSON, rational literal, ...).
struct ParseError : Error {
    using Error::Error;
};

} // namespace trisum
