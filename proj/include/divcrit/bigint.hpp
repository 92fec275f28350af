#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace divcrit {

using BigInt = boost::multiprecision::cpp_int;

/// Remainder in [0, |m|) regardless of the sign of `a`.
inline BigInt floor_mod(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

inline bool divides(std::int64_t n, const BigInt& a)
{
    return a % n == 0;
}

inline std::string to_string(const BigInt& v)
{
    return v.str();
}

/// base^exponent, exact.
inline BigInt ipow(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

} // namespace divcrit
