#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace starics {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt factorial(int n);

// n (n-1) ... (n-k+1); 1 when k == 0.
BigInt falling_factorial(int n, int k);

BigInt binomial(int n, int k);

// Exact quotient; throws std::logic_error when the division leaves a remainder.
BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, const char* context);

}  // namespace starics
