#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace covercalc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace covercalc
