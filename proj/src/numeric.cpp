#include "pncoh/numeric.hpp"

#include "pncoh/errors.hpp"

namespace pncoh {

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt result;
  BigInt top = n;
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

long to_long(const BigInt& value, const char* what) {
  if (!value.fits_slong_p()) {
    throw InputError(std::string(what) + " does not fit in a machine integer");
  }
  return value.get_si();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace pncoh
