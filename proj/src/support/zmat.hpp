#pragma once

#include <optional>
#include <vector>

#include "support/numeric.hpp"

namespace latzeta {

// Dense matrix of arbitrary-precision integers, row-major.
struct ZMat {
    int rows = 0;
    int cols = 0;
    std::vector<ZInt> a;

    ZMat() = default;
    ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    ZInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const ZInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static ZMat identity(int n);
    bool is_zero() const;
};

struct SmithResult {
    ZMat s;        // diagonal, s = u * m * v
    ZMat u;        // unimodular rows x rows
    ZMat v;        // unimodular cols x cols
    int rank = 0;  // number of nonzero diagonal entries
};

// Smith normal form with transforms; divisibility chain d_1 | d_2 | ...
SmithResult smith_normal_form(const ZMat& m);

// Canonical integer row-span basis in column echelon form, pivots scanned
// from the rightmost column (matches the lower-triangular lattice
// convention).  Pivots positive; entries in pivot columns reduced into
// [0, pivot).  Zero rows dropped.
std::vector<std::vector<ZInt>> hnf_row_basis(const std::vector<std::vector<ZInt>>& gens, int cols);

// Saturated basis of { z : m z = 0 } as a sublattice of Z^cols.
std::vector<std::vector<ZInt>> integer_column_kernel(const ZMat& m);

// Saturated basis of { v : v m = 0 } as a sublattice of Z^rows.
std::vector<std::vector<ZInt>> integer_row_kernel(const ZMat& m);

// Exact solve of x = sum c_r rows[r] over Q.  Empty when inconsistent.
std::optional<std::vector<QInt>> solve_row_combination(
    const std::vector<std::vector<ZInt>>& rows, const std::vector<QInt>& x);

// Is x in the Z_p-span of the given integer rows?  (Coefficients exist over Q
// and all have non-negative p-valuation.)
bool zp_member(const std::vector<std::vector<ZInt>>& rows, const std::vector<ZInt>& x, int64_t p);

int rational_rank(const std::vector<std::vector<ZInt>>& rows, int cols);

// Exact inverse of a matrix with determinant +-1.
ZMat unimodular_inverse(const ZMat& m);

}  // namespace latzeta
