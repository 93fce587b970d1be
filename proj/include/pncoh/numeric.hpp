#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pncoh {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient; zero for k < 0 and for 0 <= n < k. Negative n uses
/// the generalized (upper-negation) definition.
BigInt binomial(long n, long k);

BigInt factorial(unsigned long n);

/// Converts to long, throwing InputError when the value does not fit.
long to_long(const BigInt& value, const char* what);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace pncoh
