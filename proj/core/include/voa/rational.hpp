#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace voa {

/// Arbitrary-precision integer. Ranks grow exponentially in genus and
/// insertion count, so fixed-width arithmetic is never used.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always stored in lowest terms with positive
/// denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Validation failure in user-supplied data (bad spec, bad query).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed input outside the mathematical domain of an operation
/// (unstable (g,n) under strict mode, wrong moduli space, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p/q" or "p" (decimal-free) into an exact rational.
Rat parse_rational(const std::string& text);

/// Formats a rational as "p/q" (denominator always printed, "0/1" for zero).
std::string format_rational(const Rat& value);

/// Integer ceiling of a rational.
Int ceil_rat(const Rat& value);

}  // namespace voa
