#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sbinv {

// Every quantity in this library is exact. Int is an arbitrary-precision
// integer and Rat an arbitrary-precision rational; no floating point is
// used anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact quotient a/b. Throws Error if b == 0 or b does not divide a.
Int div_exact(const Int& a, const Int& b);

/// base^exp for exp >= 0. Throws Error on negative exponents.
Int int_pow(const Int& base, const Int& exp);

/// Canonical text form of a rational: "p" when the denominator is 1,
/// otherwise "p/q" in lowest terms.
std::string rat_to_string(const Rat& r);

} // namespace sbinv
