#include "bruhat/bruhat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "counting/count.hpp"

namespace latzeta::bruhat {

int sum_r(const lattice::DivisorType& t, int lo, int hi) {
    int s = 0;
    for (int iota = std::max(lo, 1); iota <= std::min(hi, t.n() - 1); ++iota) s += t.r(iota);
    return s;
}

int BruhatCell::residue_exponent(int r, int c) const {
    // paper indices: entry (r+1, c+1), moduli over c+1 <= iota <= r
    return sum_r(type, c + 1, r);
}

std::string BruhatCell::str() const {
    std::ostringstream os;
    os << "type=" << type.encode() << " sigma=";
    for (size_t i = 0; i < sigma.size(); ++i) {
        if (i) os << ',';
        os << sigma[i] + 1;
    }
    os << " beta=[";
    for (int r = 0; r < n; ++r) {
        if (r) os << "; ";
        for (int c = 0; c < n; ++c) {
            if (c) os << ' ';
            os << b(r, c);
        }
    }
    os << "]";
    return os.str();
}

std::vector<lattice::DivisorType> primitive_types(int n, int i_budget) {
    std::vector<lattice::DivisorType> out;
    std::vector<int> lambda(static_cast<size_t>(n), 0);
    // non-increasing lambda_1 >= ... >= lambda_{n-1} >= lambda_n = 0, with a
    // reversed reading the sorted order is automatic
    std::function<void(int, int, int)> gen = [&](int pos, int upper, int left) {
        if (pos == n - 1) {
            out.push_back(lattice::DivisorType::from_lambda(lambda));
            return;
        }
        for (int v = 0; v <= std::min(upper, left); ++v) {
            lambda[static_cast<size_t>(pos)] = v;
            gen(pos + 1, v, left - v);
        }
    };
    if (n >= 1) gen(0, i_budget, i_budget);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<BruhatCell> cells_for_type(int n, int64_t p, const lattice::DivisorType& type,
                                       const std::vector<int>& sigma, uint64_t budget) {
    if (!type.primitive()) throw MathError("cells_for_type: type must be primitive");
    if (type.n() != n) throw MathError("cells_for_type: dimension mismatch");
    BruhatCell base;
    base.n = n;
    base.p = p;
    base.type = type;
    base.sigma = sigma;
    base.beta.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) base.b(i, i) = 1;

    struct Digit {
        int r, c;
        int64_t mod;
    };
    std::vector<Digit> digits;
    unsigned __int128 total128 = 1;
    for (int r = 1; r < n; ++r)
        for (int c = 0; c < r; ++c) {
            int64_t mod = checked_pow_i64(p, base.residue_exponent(r, c));
            total128 *= static_cast<unsigned __int128>(mod);
            if (total128 > budget) throw MathError("cells_for_type: residue space exceeds budget");
            digits.push_back({r, c, mod});
        }
    uint64_t total = static_cast<uint64_t>(total128);

    std::vector<BruhatCell> out;
    out.reserve(total);
    BruhatCell cur = base;
    for (;;) {
        out.push_back(cur);
        size_t d = digits.size();
        while (d-- > 0) {
            int64_t v = cur.b(digits[d].r, digits[d].c) + 1;
            if (v < digits[d].mod) {
                cur.b(digits[d].r, digits[d].c) = v;
                break;
            }
            cur.b(digits[d].r, digits[d].c) = 0;
        }
        if (d == static_cast<size_t>(-1)) break;
    }
    return out;
}

lattice::HNFLattice cell_lattice(const BruhatCell& cell) {
    const int n = cell.n;
    std::vector<std::vector<ZInt>> rows(static_cast<size_t>(n),
                                        std::vector<ZInt>(static_cast<size_t>(n)));
    for (int r = 0; r < n; ++r) {
        ZInt scale = pow_z(cell.p, cell.type.lambda[static_cast<size_t>(r)]);
        for (int c = 0; c < n; ++c)
            rows[static_cast<size_t>(r)][static_cast<size_t>(cell.sigma[static_cast<size_t>(c)])] =
                scale * cell.b(r, c);
    }
    return lattice::canonicalize(rows, n, cell.p);
}

std::vector<ZInt> beta_inverse(const BruhatCell& cell) {
    const int n = cell.n;
    std::vector<ZInt> inv(static_cast<size_t>(n) * n, ZInt(0));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = 1;
    for (int r = 1; r < n; ++r)
        for (int c = r - 1; c >= 0; --c) {
            ZInt acc = 0;
            for (int k = c; k < r; ++k)
                acc += ZInt(cell.b(r, k)) * inv[static_cast<size_t>(k) * n + c];
            inv[static_cast<size_t>(r) * n + c] = -acc;
        }
    return inv;
}

namespace {
int sigma_index(const BruhatCell& cell, int i, IndexConvention conv) {
    if (conv == IndexConvention::Direct) return cell.sigma[static_cast<size_t>(i)];
    // inverse convention
    for (int t = 0; t < cell.n; ++t)
        if (cell.sigma[static_cast<size_t>(t)] == i) return t;
    throw MathError("sigma_index: bad permutation");
}
}  // namespace

ZInt f_klm(const BruhatCell& cell, const algebra::StructureAlgebra& a, int k, int l, int m,
           IndexConvention conv) {
    const int n = cell.n;
    auto inv = beta_inverse(cell);
    ZInt acc = 0;
    for (int i = 0; i < n; ++i) {
        if (cell.b(k, i) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (cell.b(l, j) == 0) continue;
            // l_{ij} evaluated at column m of beta^{-1}, constants through sigma
            ZInt lin = 0;
            for (int q = 0; q < n; ++q) {
                int64_t cv = a.c(sigma_index(cell, i, conv), sigma_index(cell, j, conv),
                                 sigma_index(cell, q, conv));
                if (cv != 0) lin += ZInt(cv) * inv[static_cast<size_t>(q) * n + m];
            }
            if (lin != 0) acc += ZInt(cell.b(k, i)) * ZInt(cell.b(l, j)) * lin;
        }
    }
    return acc;
}

bool subalgebra_condition(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                          int homothety_shift, IndexConvention conv) {
    const int n = cell.n;
    const int total = sum_r(cell.type, 1, n - 1);
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                int extra = homothety_shift + sum_r(cell.type, 1, m) +
                            sum_r(cell.type, k + 1, n - 1) + sum_r(cell.type, l + 1, n - 1);
                int needed = total - extra;
                if (needed <= 0) continue;
                ZInt f = f_klm(cell, a, k, l, m, conv);
                if (f == 0) continue;
                if (valuation_z(f, cell.p) < needed) return false;
            }
    return true;
}

bool homogeneity_check(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                       int64_t lambda_unit, int K) {
    if (!a.weights) throw MathError("homogeneity_check: algebra has no grading");
    if (mod_floor(lambda_unit, cell.p) == 0)
        throw MathError("homogeneity_check: lambda is not a p-unit");
    const int n = cell.n;
    const int64_t mod = checked_pow_i64(cell.p, K);
    const auto& w = *a.weights;
    auto wsig = [&](int i) { return w[static_cast<size_t>(cell.sigma[static_cast<size_t>(i)])]; };

    const int64_t lam = mod_floor(lambda_unit, mod);
    const int64_t lam_inv = inv_mod(lam, mod);
    auto lam_pow = [&](int e) {
        return e >= 0 ? pow_mod(lam, e, mod) : pow_mod(lam_inv, -e, mod);
    };

    // substituted cell: beta_rc -> lambda^{w_r - w_c} beta_rc (mod p^K)
    BruhatCell sub = cell;
    for (int r = 1; r < n; ++r)
        for (int c = 0; c < r; ++c)
            sub.b(r, c) = mul_mod(lam_pow(wsig(r) - wsig(c)), cell.b(r, c), mod);

    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                ZInt f0 = f_klm(cell, a, k, l, m);
                ZInt f1 = f_klm(sub, a, k, l, m);
                ZInt lhs = (ZInt(lam_pow(wsig(m))) * f1) % mod;
                ZInt rhs = (ZInt(lam_pow(wsig(k) + wsig(l))) * f0) % mod;
                if (((lhs - rhs) % mod) != 0) return false;
            }
    return true;
}

OrbitStats orbit_stats(const BruhatCell& cell, const algebra::StructureAlgebra& a) {
    if (!a.weights) throw MathError("orbit_stats: algebra has no grading");
    const int n = cell.n;
    const auto& w = *a.weights;
    auto wsig = [&](int i) { return w[static_cast<size_t>(cell.sigma[static_cast<size_t>(i)])]; };
    auto jumps = cell.type.jump_set();
    if (jumps.empty()) throw MathError("orbit_stats: trivial type has no jumps");

    OrbitStats st;
    const int R = cell.type.R();
    for (int iota : jumps)
        if (cell.type.r(iota) == R) {
            st.iota_star = iota;
            break;
        }

    // r*: row > iota* with minimal weight; c*: column <= iota* with maximal
    // weight (1-based positions iota*, rows r in (iota*, n], cols in [1, iota*])
    int best_r = -1, best_c = -1;
    for (int r = st.iota_star; r < n; ++r)  // 0-based rows iota*..n-1 are > iota* (1-based)
        if (best_r < 0 || wsig(r) < wsig(best_r)) best_r = r;
    for (int c = 0; c < st.iota_star; ++c)
        if (best_c < 0 || wsig(c) >= wsig(best_c)) best_c = c;
    st.r_star = best_r;
    st.c_star = best_c;

    // multiplicative stabilizer by exhaustion over units mod p^K
    const int K = sum_r(cell.type, 1, n - 1);
    const int64_t mod = checked_pow_i64(cell.p, K);
    auto inv = beta_inverse(cell);
    int64_t units = 0, stab = 0;
    for (int64_t lam = 1; lam < mod; ++lam) {
        if (lam % cell.p == 0) continue;
        ++units;
        bool ok = true;
        for (int r = 1; r < n && ok; ++r)
            for (int c = 0; c < r && ok; ++c) {
                int me = cell.residue_exponent(r, c);
                if (me == 0) continue;
                int64_t m_rc = checked_pow_i64(cell.p, me);
                ZInt acc = 0;
                for (int k = c; k <= r; ++k)
                    acc += ZInt(pow_mod(lam, wsig(k), m_rc)) * cell.b(r, k) *
                           inv[static_cast<size_t>(k) * n + c];
                if (acc % m_rc != 0) ok = false;
            }
        if (ok) ++stab;
    }
    if (stab == 0 || units % stab != 0) throw MathError("orbit_stats: stabilizer index defect");
    st.mult_orbit_valuation = capped_valuation_i64(units / stab, cell.p, K + 1);
    st.eps_plus = (st.mult_orbit_valuation + 1) * (n - 1);
    st.eps_minus = (st.mult_orbit_valuation - 1) * (n - 1);

    // additive stabilizer: smallest d with mu = p^d satisfying every congruence
    int delta = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int me = cell.residue_exponent(i, j);
            if (me == 0) continue;
            ZInt prod = ZInt(cell.b(i, st.r_star)) * inv[static_cast<size_t>(st.c_star) * n + j];
            int v = prod == 0 ? me : static_cast<int>(std::min<long>(valuation_z(prod, cell.p), me));
            if (me - v > delta) delta = me - v;
        }
    st.delta = delta;
    return st;
}

namespace {
int val_or_large(const ZInt& x, int64_t p, int large) {
    if (x == 0) return large;
    return static_cast<int>(std::min<long>(valuation_z(x, p), large));
}
}  // namespace

LemmaCheck check_orbit_lemmas(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                              const OrbitStats& st) {
    LemmaCheck out;
    const int n = cell.n;
    const auto& w = *a.weights;
    auto wsig = [&](int i) { return w[static_cast<size_t>(cell.sigma[static_cast<size_t>(i)])]; };
    auto inv = beta_inverse(cell);
    const int big = 1000;
    const int v_orb = st.mult_orbit_valuation;
    const int istar = st.iota_star;  // 1-based

    // additive lemmas
    for (int i = 0; i < n; ++i) {
        int lhs = val_or_large(ZInt(cell.b(i, st.r_star)), cell.p, big);
        int rhs = sum_r(cell.type, st.c_star + 1, i) - st.delta;
        if (lhs < rhs) out.beta_added = false;
    }
    for (int j = 0; j < n; ++j) {
        int lhs = val_or_large(inv[static_cast<size_t>(st.c_star) * n + j], cell.p, big);
        int rhs = sum_r(cell.type, j + 1, st.r_star) - st.delta;
        if (lhs < rhs) out.beta_inv_added = false;
    }

    // multiplicative lemmas: qualifying j (resp. q) may not exist for a
    // given sigma, in which case the inequality is vacuous
    int min_w_after = -1, max_w_before = -1;
    for (int r = istar; r < n; ++r)
        if (min_w_after < 0 || wsig(r) < min_w_after) min_w_after = wsig(r);
    for (int c = 0; c < istar; ++c)
        if (wsig(c) > max_w_before) max_w_before = wsig(c);

    for (int j = 0; j < istar; ++j) {
        if (wsig(j) >= min_w_after) continue;
        for (int l = istar; l < n; ++l) {
            int lhs = val_or_large(ZInt(cell.b(l, j)), cell.p, big);
            int base = sum_r(cell.type, istar, l);
            int steps = (l + 1) - istar;  // l is 0-based, the bound uses l - iota*
            if (lhs < base - (v_orb + 1) * steps) out.beta_influenced = false;
            if (lhs < base - (v_orb - 1) * steps) out.influenced_minus_variant = false;
        }
    }
    for (int q = istar; q < n; ++q) {
        if (wsig(q) <= max_w_before) continue;
        for (int m = 0; m < istar; ++m) {
            int lhs = val_or_large(inv[static_cast<size_t>(q) * n + m], cell.p, big);
            int base = sum_r(cell.type, m + 1, istar);
            int steps = istar - (m + 1);
            if (lhs < base - (v_orb + 1) * steps) out.beta_inv_influenced = false;
            if (lhs < base - (v_orb - 1) * steps) out.influenced_minus_variant = false;
        }
    }
    return out;
}

bool additive_weight_preservation(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                                  const ZInt& mu) {
    OrbitStats st = orbit_stats(cell, a);
    auto base_lattice = cell_lattice(cell);
    int w0 = counting::weight(base_lattice, a);
    const int R = cell.type.R();

    if (mu != 0) {
        long vmu = valuation_z(mu, cell.p);
        // 2 v(mu) >= 2 delta - (R + w)  and  v(mu) >= delta - (R + w - eps)
        bool ok = 2 * vmu >= 2 * st.delta - (R + w0) &&
                  vmu >= st.delta - (R + w0 - st.eps_plus);
        if (!ok) throw MathError("additive_weight_preservation: threshold not met");
    }

    BruhatCell moved = cell;
    for (int i = 0; i < cell.n; ++i) {
        ZInt updated = ZInt(cell.b(i, st.c_star)) + mu * cell.b(i, st.r_star);
        if (!fits_i64(updated)) throw MathError("additive_weight_preservation: entry overflow");
        moved.b(i, st.c_star) = to_i64(updated);
    }
    auto moved_lattice = cell_lattice(moved);
    return counting::weight(moved_lattice, a) == w0;
}

}  // namespace latzeta::bruhat
