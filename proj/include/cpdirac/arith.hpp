#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cpdirac {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad user-supplied parameters. The CLI reports these and exits 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A violated internal invariant (non-integral multiplicity, oracle mismatch,
// negative binomial top). The CLI reports these and exits 1.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// C(top, k). Zero for k < 0 or k > top. A negative top means a family
// constraint was violated upstream and is rejected.
BigInt binomial(Int top, Int k);

// p/q in lowest terms with positive denominator.
Rational rational_reduce(const BigInt& p, const BigInt& q);

bool is_integer(const Rational& value);

// Multiplicity products must reduce to a positive integer; anything else is
// an internal error reported with `what`.
BigInt require_positive_integer(const Rational& value, const std::string& what);

} // namespace cpdirac
