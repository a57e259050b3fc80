#include "lattice/enumerate.hpp"

namespace latzeta::lattice {

std::vector<std::vector<int>> compositions(int i, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
    };
    if (n >= 1) rec(0, i);
    return out;
}

uint64_t composition_states(int n, int64_t p, const std::vector<int>& diag_exp) {
    uint64_t total = 1;
    for (int c = 0; c < n; ++c)
        for (int r = c + 1; r < n; ++r) {
            int64_t m = checked_pow_i64(p, diag_exp[static_cast<size_t>(c)]);
            if (total > UINT64_MAX / static_cast<uint64_t>(m))
                throw MathError("enumeration too large for the odometer");
            total *= static_cast<uint64_t>(m);
        }
    return total;
}

std::vector<EnumerationChunk> enumeration_chunks(int n, int64_t p, int i,
                                                 uint64_t target_chunk) {
    std::vector<EnumerationChunk> chunks;
    for (auto& comp : compositions(i, n)) {
        uint64_t total = composition_states(n, p, comp);
        if (target_chunk == 0 || total <= target_chunk) {
            chunks.push_back({comp, 0, total});
            continue;
        }
        uint64_t pieces = (total + target_chunk - 1) / target_chunk;
        uint64_t base = total / pieces, extra = total % pieces;
        uint64_t lo = 0;
        for (uint64_t k = 0; k < pieces; ++k) {
            uint64_t len = base + (k < extra ? 1 : 0);
            chunks.push_back({comp, lo, lo + len});
            lo += len;
        }
    }
    return chunks;
}

ChunkWalker::ChunkWalker(int n, int64_t p, const EnumerationChunk& chunk)
    : n_(n), p_(p), diag_(chunk.diag_exp), mat_(static_cast<size_t>(n) * n, 0) {
    for (int j = 0; j < n; ++j)
        mat_[static_cast<size_t>(j) * n + j] = checked_pow_i64(p, diag_[static_cast<size_t>(j)]);
    // digits in row-major order over sub-diagonal positions
    for (int r = 1; r < n; ++r)
        for (int c = 0; c < r; ++c) {
            digit_pos_.push_back(static_cast<size_t>(r) * n + c);
            digit_mod_.push_back(checked_pow_i64(p, diag_[static_cast<size_t>(c)]));
        }
    remaining_ = chunk.hi - chunk.lo;
    // decode the starting linear index into digits (last digit fastest)
    uint64_t idx = chunk.lo;
    for (size_t d = digit_pos_.size(); d-- > 0;) {
        uint64_t m = static_cast<uint64_t>(digit_mod_[d]);
        mat_[digit_pos_[d]] = static_cast<int64_t>(idx % m);
        idx /= m;
    }
    if (idx != 0) remaining_ = 0;  // lo beyond the composition's state count
}

bool ChunkWalker::advance() {
    if (remaining_ <= 1) {
        remaining_ = 0;
        return false;
    }
    --remaining_;
    for (size_t d = digit_pos_.size(); d-- > 0;) {
        int64_t v = mat_[digit_pos_[d]] + 1;
        if (v < digit_mod_[d]) {
            mat_[digit_pos_[d]] = v;
            return true;
        }
        mat_[digit_pos_[d]] = 0;
    }
    remaining_ = 0;  // full odometer wrap: chunk range was the whole space
    return false;
}

HNFLattice ChunkWalker::snapshot() const {
    HNFLattice l;
    l.n = n_;
    l.p = p_;
    l.rows = mat_;
    l.diag_exp = diag_;
    return l;
}

std::vector<HNFLattice> enumerate_all(int n, int64_t p, int i) {
    std::vector<HNFLattice> out;
    for_each_lattice(n, p, i, [&](const ChunkWalker& w) { out.push_back(w.snapshot()); });
    return out;
}

ZInt count_lattices(int n, int64_t p, int i, const Parallel& par) {
    auto chunks = enumeration_chunks(n, p, i, 1u << 22);
    std::vector<uint64_t> shard(chunks.size(), 0);
    par.for_each_chunk(chunks.size(), [&](size_t k) {
        ChunkWalker w(n, p, chunks[k]);
        if (w.done()) return;
        uint64_t cnt = 0;
        do {
            ++cnt;
        } while (w.advance());
        shard[k] = cnt;
    });
    ZInt total = 0;
    for (uint64_t s : shard) total += static_cast<long>(s);
    return total;
}

}  // namespace latzeta::lattice
