#pragma once

#include <gmpxx.h>

#include <string>

namespace weylmod {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline BigInt power(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace weylmod
