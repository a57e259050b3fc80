#include "support/numeric.hpp"

namespace latzeta {

int64_t checked_pow_i64(int64_t p, int e) {
    if (p < 2 || e < 0) throw MathError("checked_pow_i64: bad arguments");
    int64_t r = 1;
    for (int k = 0; k < e; ++k) {
        if (r > INT64_MAX / p) throw MathError("power exceeds int64 range");
        r *= p;
    }
    return r;
}

ZInt pow_z(int64_t base, int e) {
    ZInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

long valuation_z(const ZInt& x, int64_t p) {
    if (x == 0) throw MathError("valuation of zero");
    ZInt tmp, pz(static_cast<long>(p));
    return static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long valuation_q(const QInt& x, int64_t p) {
    if (x == 0) throw MathError("valuation of zero");
    long vn = valuation_z(ZInt(x.get_num()), p);
    ZInt den(x.get_den());
    long vd = (den == 1) ? 0 : valuation_z(den, p);
    return vn - vd;
}

bool fits_i64(const ZInt& x) {
    return x >= ZInt("-9223372036854775808") && x <= ZInt("9223372036854775807");
}

int64_t to_i64(const ZInt& x) {
    if (!fits_i64(x)) throw MathError("value does not fit in int64");
    if (mpz_fits_slong_p(x.get_mpz_t())) return mpz_get_si(x.get_mpz_t());
    // long is 64-bit on every platform we target
    throw MathError("value does not fit in int64");
}

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

int64_t mod_floor(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int64_t inv_mod(int64_t a, int64_t m) {
    a = mod_floor(a, m);
    int64_t t = 0, new_t = 1, r = m, new_r = a;
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw MathError("inv_mod: not invertible");
    return mod_floor(t, m);
}

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    i128 prod = static_cast<i128>(mod_floor(a, m)) * mod_floor(b, m);
    return static_cast<int64_t>(prod % m);
}

int64_t pow_mod(int64_t a, int64_t e, int64_t m) {
    if (e < 0) throw MathError("pow_mod: negative exponent");
    int64_t base = mod_floor(a, m), r = 1 % m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

int capped_valuation_i64(int64_t a, int64_t p, int cap) {
    a = std::abs(a);
    int v = 0;
    while (v < cap && a != 0 && a % p == 0) {
        a /= p;
        ++v;
    }
    return (a == 0) ? cap : v;
}

}  // namespace latzeta
