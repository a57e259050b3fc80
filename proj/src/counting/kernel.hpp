#pragma once

#include "algebra/structure_algebra.hpp"
#include "lattice/hnf.hpp"

namespace latzeta::counting::kernel {

using latzeta::i128;

// Bounded-magnitude arithmetic used inside the enumeration pass.  Every
// intermediate fits in 128 bits once the per-pass guard below has accepted
// the (n, p, i, constants) combination; the generic mpz paths stay available
// for anything bigger.
inline bool pass_bound_ok(int n, int64_t p, int i, int64_t max_abs_c, size_t nterms) {
    double lg = 0;
    double lp = std::log2(static_cast<double>(p));
    lg += std::log2(static_cast<double>(nterms + 1)) +
          std::log2(static_cast<double>(max_abs_c + 1));
    lg += 3.0 * i * lp;                     // scaled product entries
    lg += n * (i * lp + 1.0) + 4;           // triangular-solve growth
    return lg < 118.0;
}

// z = x * y under the structure constants, coordinates in i128.
inline void product(const algebra::StructureAlgebra& a, const int64_t* x, const int64_t* y,
                    i128* z) {
    for (int k = 0; k < a.n; ++k) z[k] = 0;
    for (const auto& t : a.terms)
        z[t.k] += static_cast<i128>(t.v) * x[t.i] * y[t.j];
}

// z = e_k * y  (row k of the left-multiplication table applied to y).
inline void product_basis_left(const algebra::StructureAlgebra& a, int k, const int64_t* y,
                               i128* z) {
    for (int q = 0; q < a.n; ++q) z[q] = 0;
    for (const auto& t : a.terms)
        if (t.i == k) z[t.k] += static_cast<i128>(t.v) * y[t.j];
}

inline void product_basis_right(const algebra::StructureAlgebra& a, int k, const int64_t* y,
                                i128* z) {
    for (int q = 0; q < a.n; ++q) z[q] = 0;
    for (const auto& t : a.terms)
        if (t.j == k) z[t.k] += static_cast<i128>(t.v) * y[t.i];
}

// Membership of z in the lattice given by the lower-triangular matrix:
// exact triangular back-substitution, failing on the first non-divisible
// coefficient.
inline bool member(const int64_t* mat, int n, const i128* z, i128* scratch) {
    for (int j = 0; j < n; ++j) scratch[j] = z[j];
    for (int r = n - 1; r >= 0; --r) {
        i128 d = mat[static_cast<size_t>(r) * n + r];
        if (scratch[r] % d != 0) return false;
        i128 c = scratch[r] / d;
        if (c != 0)
            for (int j = 0; j < r; ++j) scratch[j] -= c * mat[static_cast<size_t>(r) * n + j];
    }
    return true;
}

// Least d >= 0 with p^d z in the lattice: solve p^{i0} z exactly and read
// the coefficient valuations (i0 = index exponent, so p^{i0} z is always a
// member).
inline int deficiency(const int64_t* mat, int n, int64_t p, int i0, int64_t p_i0,
                      const i128* z, i128* scratch) {
    for (int j = 0; j < n; ++j) scratch[j] = z[j] * p_i0;
    int def = 0;
    for (int r = n - 1; r >= 0; --r) {
        i128 d = mat[static_cast<size_t>(r) * n + r];
        i128 c = scratch[r] / d;
        if (c * d != scratch[r]) return -1;  // signals a caller bug
        if (c != 0) {
            int v = 0;
            i128 cc = c < 0 ? -c : c;
            while (v < i0 && cc % p == 0) {
                cc /= p;
                ++v;
            }
            if (i0 - v > def) def = i0 - v;
            for (int j = 0; j < r; ++j) scratch[j] -= c * mat[static_cast<size_t>(r) * n + j];
        }
    }
    return def;
}

}  // namespace latzeta::counting::kernel
