#include "cpdirac/arith.hpp"

namespace cpdirac {

BigInt binomial(Int top, Int k) {
    if (top < 0)
        throw ConsistencyError("binomial: negative top " + std::to_string(top) +
                               " (family constraint violated upstream)");
    if (k < 0 || k > top)
        return 0;
    if (top - k < k)
        k = top - k;
    BigInt result = 1;
    for (Int i = 1; i <= k; ++i) {
        result *= top - k + i;
        result /= i; // exact at every step
    }
    return result;
}

Rational rational_reduce(const BigInt& p, const BigInt& q) {
    if (q == 0)
        throw ValidationError("rational_reduce: zero denominator");
    // cpp_rational reduces but insists on a positive denominator input
    if (q < 0)
        return Rational(-p, -q);
    return Rational(p, q);
}

bool is_integer(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

BigInt require_positive_integer(const Rational& value, const std::string& what) {
    if (!is_integer(value))
        throw ConsistencyError(what + ": non-integral value " + value.str());
    BigInt n = boost::multiprecision::numerator(value);
    if (n <= 0)
        throw ConsistencyError(what + ": non-positive value " + value.str());
    return n;
}

} // namespace cpdirac
