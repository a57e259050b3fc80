#pragma once

#include <cstdint>
#include <vector>

#include "lattice/hnf.hpp"
#include "support/parallel.hpp"

namespace latzeta::lattice {

// All compositions (e_1, ..., e_n) of i into n non-negative parts, in
// lexicographic order.
std::vector<std::vector<int>> compositions(int i, int n);

// One unit of enumeration work: a fixed diagonal composition together with
// a range [lo, hi) of the mixed-radix odometer over the sub-diagonal
// entries.  Odometer digit order is row-major over positions (r, c), c < r,
// with the last position cycling fastest; digit (r, c) ranges over
// [0, p^{e_c}).
struct EnumerationChunk {
    std::vector<int> diag_exp;
    uint64_t lo = 0;
    uint64_t hi = 0;
};

// Number of sub-diagonal states of a composition; throws when it does not
// fit in uint64 (such a run would be infeasible anyway).
uint64_t composition_states(int n, int64_t p, const std::vector<int>& diag_exp);

// Work plan for all index-p^i sublattices of Z_p^n, split into chunks of,
// at most roughly target_chunk states (one chunk per composition when 0).
std::vector<EnumerationChunk> enumeration_chunks(int n, int64_t p, int i,
                                                 uint64_t target_chunk = 0);

// Incremental enumeration state for one chunk.  The visitor sees the
// row-major int64 matrix; it must not hold on to the pointer.
class ChunkWalker {
public:
    ChunkWalker(int n, int64_t p, const EnumerationChunk& chunk);

    const int64_t* matrix() const { return mat_.data(); }
    const std::vector<int>& diag_exp() const { return diag_; }
    int n() const { return n_; }
    bool done() const { return remaining_ == 0; }
    uint64_t remaining() const { return remaining_; }

    // Advances to the next matrix; returns false when the chunk is exhausted.
    bool advance();

    HNFLattice snapshot() const;

private:
    int n_;
    int64_t p_;
    std::vector<int> diag_;
    std::vector<int64_t> mat_;
    std::vector<size_t> digit_pos_;    // matrix offsets of sub-diagonal digits
    std::vector<int64_t> digit_mod_;   // p^{e_c} per digit
    uint64_t remaining_ = 0;
};

// Visits every index-p^i sublattice once, serially, in plan order.
template <class Fn>
void for_each_lattice(int n, int64_t p, int i, Fn&& fn) {
    for (const auto& chunk : enumeration_chunks(n, p, i)) {
        ChunkWalker w(n, p, chunk);
        if (w.done()) continue;
        for (;;) {
            fn(w);
            if (!w.advance()) break;
        }
    }
}

std::vector<HNFLattice> enumerate_all(int n, int64_t p, int i);

// Physically iterates the whole enumeration and counts, partitioned across
// workers; merged result is schedule-independent.
ZInt count_lattices(int n, int64_t p, int i, const Parallel& par);

}  // namespace latzeta::lattice
