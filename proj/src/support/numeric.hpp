#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latzeta {

using ZInt = mpz_class;
using QInt = mpq_class;
using i128 = __int128;

class MathError : public std::runtime_error {
public:
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// p^e, throwing when the result does not fit in int64.
int64_t checked_pow_i64(int64_t p, int e);

ZInt pow_z(int64_t base, int e);

// Largest e with p^e | x.  x must be nonzero.
long valuation_z(const ZInt& x, int64_t p);
long valuation_q(const QInt& x, int64_t p);

bool fits_i64(const ZInt& x);
int64_t to_i64(const ZInt& x);

std::string i128_to_string(i128 v);

// a mod m in [0, m) for m > 0.
int64_t mod_floor(int64_t a, int64_t m);

// Inverse of a modulo m (m > 1, gcd(a, m) = 1), in [0, m).
int64_t inv_mod(int64_t a, int64_t m);

// a*b mod m via 128-bit product; inputs reduced mod m first.
int64_t mul_mod(int64_t a, int64_t b, int64_t m);

// a^e mod m, e >= 0.
int64_t pow_mod(int64_t a, int64_t e, int64_t m);

// Valuation of a nonzero value modulo p^cap: min(v_p(a), cap).
int capped_valuation_i64(int64_t a, int64_t p, int cap);

}  // namespace latzeta
