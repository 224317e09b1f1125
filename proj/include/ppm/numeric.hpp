#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ppm {

// Exact scalars. BigRational is kept canonical by the backend:
// denominator > 0, gcd(|num|, den) = 1.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

// C(n, k); zero outside the triangle so shifted identities like
// C(2n-2, n-2) work for small n without special cases.
BigInt binomial(long n, long k);

BigInt factorial(long n);

// 1, 1, 2, 5, 14, 42, ...
BigInt catalan_number(long n);

// Central Delannoy numbers 1, 3, 13, 63, 321, ...
BigInt central_delannoy(long n);

BigInt pow_int(long base, long exp);

std::string to_string(const BigRational& q);

} // namespace ppm
