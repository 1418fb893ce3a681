#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace edgemetric {

using big_int = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the conventions used throughout:
// binom(0,0) = 1, binom(i,k) = 0 whenever k < 0, i < 0 or i < k.
inline big_int binom(std::int64_t top, std::int64_t k) {
    if (k < 0 || top < 0 || k > top) {
        return 0;
    }
    k = std::min(k, top - k);
    big_int result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= top - k + i;
        result /= i; // exact: result is binom(top-k+i, i) here
    }
    return result;
}

inline std::string to_fraction_string(const rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

/// Fixed-point rendering of an exact rational, rounding half to even at the
/// requested number of fractional digits.
inline std::string to_decimal_string(const rational& value, unsigned precision = 6) {
    big_int num = numerator(value);
    const big_int den = denominator(value);
    const bool negative = num < 0;
    if (negative) {
        num = -num;
    }
    big_int scale = 1;
    for (unsigned i = 0; i < precision; ++i) {
        scale *= 10;
    }
    big_int scaled = num * scale;
    big_int q = scaled / den;
    const big_int r = scaled % den;
    const big_int twice = 2 * r;
    if (twice > den || (twice == den && (q % 2) == 1)) {
        ++q;
    }
    std::string digits = q.str();
    if (precision > 0) {
        if (digits.size() <= precision) {
            digits.insert(0, precision + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - precision, ".");
    }
    if (negative && q != 0) {
        digits.insert(0, "-");
    }
    return digits;
}

} // namespace edgemetric
