#pragma once

#include <gmpxx.h>

#include <string>

namespace detmax {

// All determinant and bound arithmetic is exact; no floating point anywhere.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt pow2(unsigned long exp) { return big_pow(BigInt(2), exp); }

inline bool is_perfect_square(const BigInt& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

}  // namespace detmax
