#pragma once

#include <optional>
#include <string>
#include <vector>

#include "support/numeric.hpp"
#include "support/zmat.hpp"

namespace latzeta::lattice {

// Finite-index sublattice of Z_p^n in canonical lower-triangular form:
// row j has p^{e_j} on the diagonal and, below the diagonal, column-c
// entries reduced into [0, p^{e_c}).  Two values represent the same
// sublattice iff their matrices are identical.
struct HNFLattice {
    int n = 0;
    int64_t p = 0;
    std::vector<int64_t> rows;  // n*n row-major
    std::vector<int> diag_exp;  // e_j

    int64_t at(int r, int c) const { return rows[static_cast<size_t>(r) * n + c]; }
    int64_t& at(int r, int c) { return rows[static_cast<size_t>(r) * n + c]; }

    int index_exponent() const;
    bool is_full() const { return index_exponent() == 0; }
    bool is_primitive() const;

    std::vector<ZInt> row_z(int r) const;

    bool operator==(const HNFLattice&) const = default;
    std::string to_text() const;
};

struct HNFLatticeHash {
    size_t operator()(const HNFLattice& l) const;
};

// Elementary-divisor data of a lattice: the exponent partition lambda and
// its jump description (I, r), homothety h = lambda_n.
struct DivisorType {
    std::vector<int> lambda;  // non-increasing

    static DivisorType from_lambda(std::vector<int> lambda);

    int n() const { return static_cast<int>(lambda.size()); }
    // jump positions iota (1-based, in [n-1]) with lambda_iota > lambda_{iota+1}
    std::vector<int> jump_set() const;
    // jump sizes r_iota = lambda_iota - lambda_{iota+1}; zero off the jump set
    int r(int iota) const;
    int homothety() const { return lambda.back(); }
    int R() const;
    bool primitive() const { return homothety() == 0; }
    int index_exponent() const;

    bool operator==(const DivisorType&) const = default;
    bool operator<(const DivisorType& o) const { return lambda < o.lambda; }
    std::string encode() const;  // "iota:r,..." plus ";h=..." for h > 0
};

HNFLattice full_lattice(int n, int64_t p);

// Canonical representative of the Z_p-span of integer generators; the
// span must have full rank over Q (the prime-to-p part of the index is a
// unit and is discarded).
HNFLattice canonicalize(const std::vector<std::vector<ZInt>>& gens, int n, int64_t p);

// Exact rational coordinates of x in the row basis (always solvable).
std::vector<QInt> coordinates(const HNFLattice& l, const std::vector<ZInt>& x);

bool contains(const HNFLattice& l, const std::vector<ZInt>& x);

DivisorType divisor_type(const HNFLattice& l);

// l = p^shift * l0 with l0 primitive.
std::pair<HNFLattice, int> primitive_part(const HNFLattice& l);

HNFLattice scale_by_p(const HNFLattice& l, int k);

HNFLattice lattice_sum(const HNFLattice& a, const HNFLattice& b);
HNFLattice lattice_intersect(const HNFLattice& a, const HNFLattice& b);

// All lattices h with l <= h <= Z_p^n and [h : l] = p.
std::vector<HNFLattice> superlattices_index_p(const HNFLattice& l);

}  // namespace latzeta::lattice
