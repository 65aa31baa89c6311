#include "starics/big_int.hpp"

#include <algorithm>
#include <stdexcept>

namespace starics {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt falling_factorial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("falling_factorial: need 0 <= k <= n");
  BigInt result = 1;
  for (int i = 0; i < k; ++i) result *= (n - i);
  return result;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, const char* context) {
  if (denominator == 0) throw std::logic_error(std::string(context) + ": division by zero");
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error(std::string(context) + ": " + numerator.str() + " is not divisible by " +
                           denominator.str());
  }
  return quotient;
}

}  // namespace starics
