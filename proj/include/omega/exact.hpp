#pragma once

// Arbitrary-precision integer and rational types used throughout.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace omega {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

// Canonical "p/q" form with q > 0 and gcd(p, q) = 1; integers print as "p/1".
inline std::string to_fraction(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

inline BigInt pow2(unsigned exponent) {
    BigInt result = 1;
    result <<= exponent;
    return result;
}

inline bool is_odd(const BigInt& value) { return boost::multiprecision::bit_test(abs(value), 0); }

} // namespace omega
