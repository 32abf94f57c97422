#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curveinv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Raised when text input (polynomials, slopes, CLI arguments) cannot be read.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Floor division for possibly negative operands (C++ `/` truncates toward zero).
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    long long r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Non-negative remainder, matching floor_div.
inline long long floor_mod(long long a, long long b) {
    return a - b * floor_div(a, b);
}

inline long long llabs_checked(long long v) {
    if (v == INT64_MIN) throw std::overflow_error("magnitude out of range");
    return v < 0 ? -v : v;
}

}  // namespace curveinv
