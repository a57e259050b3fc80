#include "lattice/hnf.hpp"

#include <algorithm>
#include <sstream>

namespace latzeta::lattice {

int HNFLattice::index_exponent() const {
    int s = 0;
    for (int e : diag_exp) s += e;
    return s;
}

bool HNFLattice::is_primitive() const {
    for (int64_t x : rows)
        if (x % p != 0) return true;
    return false;
}

std::vector<ZInt> HNFLattice::row_z(int r) const {
    std::vector<ZInt> v(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) v[static_cast<size_t>(c)] = at(r, c);
    return v;
}

std::string HNFLattice::to_text() const {
    std::ostringstream os;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        if (r + 1 < n) os << '\n';
    }
    return os.str();
}

size_t HNFLatticeHash::operator()(const HNFLattice& l) const {
    size_t h = std::hash<int64_t>()(l.p) ^ (static_cast<size_t>(l.n) << 32);
    for (int64_t x : l.rows) h = h * 1000003u + std::hash<int64_t>()(x);
    return h;
}

DivisorType DivisorType::from_lambda(std::vector<int> lambda) {
    if (lambda.empty()) throw MathError("DivisorType: empty partition");
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1]) throw MathError("DivisorType: partition not sorted");
    if (lambda.back() < 0) throw MathError("DivisorType: negative exponent");
    DivisorType t;
    t.lambda = std::move(lambda);
    return t;
}

std::vector<int> DivisorType::jump_set() const {
    std::vector<int> jumps;
    for (int iota = 1; iota < n(); ++iota)
        if (lambda[static_cast<size_t>(iota - 1)] > lambda[static_cast<size_t>(iota)])
            jumps.push_back(iota);
    return jumps;
}

int DivisorType::r(int iota) const {
    if (iota < 1 || iota >= n()) return 0;
    return lambda[static_cast<size_t>(iota - 1)] - lambda[static_cast<size_t>(iota)];
}

int DivisorType::R() const {
    int m = 0;
    for (int iota = 1; iota < n(); ++iota) m = std::max(m, r(iota));
    return m;
}

int DivisorType::index_exponent() const {
    int s = 0;
    for (int x : lambda) s += x;
    return s;
}

std::string DivisorType::encode() const {
    std::ostringstream os;
    bool first = true;
    for (int iota : jump_set()) {
        if (!first) os << ',';
        os << iota << ':' << r(iota);
        first = false;
    }
    if (first) os << '-';
    if (homothety() > 0) os << ";h=" << homothety();
    return os.str();
}

HNFLattice full_lattice(int n, int64_t p) {
    HNFLattice l;
    l.n = n;
    l.p = p;
    l.rows.assign(static_cast<size_t>(n) * n, 0);
    l.diag_exp.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) l.at(i, i) = 1;
    return l;
}

HNFLattice canonicalize(const std::vector<std::vector<ZInt>>& gens, int n, int64_t p) {
    // integer HNF first; unimodular-over-Z row operations do not change the
    // Z_p-span
    auto basis = hnf_row_basis(gens, n);
    if (static_cast<int>(basis.size()) != n)
        throw MathError("canonicalize: generators are rank-deficient");

    // basis is in column echelon form with pivots right-to-left, i.e. row k
    // has its pivot in column k once sorted; diagonal entry d_k = p^{e_k} u_k
    int i0 = 0;
    std::vector<int> exps(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const ZInt& d = basis[static_cast<size_t>(k)][static_cast<size_t>(k)];
        if (d == 0) throw MathError("canonicalize: echelon defect");
        exps[static_cast<size_t>(k)] = static_cast<int>(valuation_z(d, p));
        i0 += exps[static_cast<size_t>(k)];
    }

    // entries only matter modulo p^{i0}: p^{i0} Z^n lies inside the lattice
    ZInt big_mod = pow_z(p, i0 + 1);
    std::vector<std::vector<ZInt>> rows(static_cast<size_t>(n),
                                        std::vector<ZInt>(static_cast<size_t>(n)));
    for (int k = 0; k < n; ++k) {
        ZInt pe = pow_z(p, exps[static_cast<size_t>(k)]);
        ZInt unit = basis[static_cast<size_t>(k)][static_cast<size_t>(k)] / pe;
        ZInt uinv;
        if (mpz_invert(uinv.get_mpz_t(), unit.get_mpz_t(), big_mod.get_mpz_t()) == 0)
            throw MathError("canonicalize: unit inversion failed");
        for (int c = 0; c <= k; ++c) {
            ZInt v = (basis[static_cast<size_t>(k)][static_cast<size_t>(c)] * uinv) % big_mod;
            if (v < 0) v += big_mod;
            rows[static_cast<size_t>(k)][static_cast<size_t>(c)] = v;
        }
        rows[static_cast<size_t>(k)][static_cast<size_t>(k)] = pe;
    }

    // reduce below-diagonal entries into canonical residues
    for (int r = 1; r < n; ++r)
        for (int c = r - 1; c >= 0; --c) {
            ZInt pe = pow_z(p, exps[static_cast<size_t>(c)]);
            ZInt q;
            mpz_fdiv_q(q.get_mpz_t(), rows[static_cast<size_t>(r)][static_cast<size_t>(c)].get_mpz_t(),
                       pe.get_mpz_t());
            if (q != 0)
                for (int j = 0; j <= c; ++j)
                    rows[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                        q * rows[static_cast<size_t>(c)][static_cast<size_t>(j)];
        }

    HNFLattice l;
    l.n = n;
    l.p = p;
    l.diag_exp = exps;
    l.rows.assign(static_cast<size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c) {
            const ZInt& v = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (!fits_i64(v)) throw MathError("canonicalize: entry exceeds int64 range");
            l.at(r, c) = to_i64(v);
        }
    return l;
}

std::vector<QInt> coordinates(const HNFLattice& l, const std::vector<ZInt>& x) {
    if (static_cast<int>(x.size()) != l.n) throw MathError("coordinates: vector length");
    std::vector<QInt> rem(static_cast<size_t>(l.n));
    for (int i = 0; i < l.n; ++i) rem[static_cast<size_t>(i)] = QInt(x[static_cast<size_t>(i)]);
    std::vector<QInt> coef(static_cast<size_t>(l.n));
    for (int r = l.n - 1; r >= 0; --r) {
        QInt c = rem[static_cast<size_t>(r)] / QInt(l.at(r, r));
        coef[static_cast<size_t>(r)] = c;
        if (c != 0)
            for (int j = 0; j <= r; ++j)
                rem[static_cast<size_t>(j)] -= c * QInt(l.at(r, j));
    }
    return coef;
}

bool contains(const HNFLattice& l, const std::vector<ZInt>& x) {
    auto coef = coordinates(l, x);
    for (const auto& c : coef) {
        if (c == 0) continue;
        if (c.get_den() != 1 && valuation_q(c, l.p) < 0) return false;
    }
    return true;
}

DivisorType divisor_type(const HNFLattice& l) {
    // v_p of the gcd of k x k minors, via the minimum minor valuation
    const int n = l.n;
    std::vector<long> dv(static_cast<size_t>(n) + 1, 0);
    ZMat m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = l.at(r, c);

    // enumerate k-subsets of rows/columns and take determinant valuations
    for (int k = 1; k <= n; ++k) {
        long best = -1;
        std::vector<int> rsel(static_cast<size_t>(k));
        std::vector<int> csel(static_cast<size_t>(k));
        std::function<void(int, int)> pick_cols;
        std::function<void(int, int)> pick_rows = [&](int pos, int start) {
            if (pos == k) {
                pick_cols(0, 0);
                return;
            }
            for (int r = start; r <= n - (k - pos); ++r) {
                rsel[static_cast<size_t>(pos)] = r;
                pick_rows(pos + 1, r + 1);
            }
        };
        pick_cols = [&](int pos, int start) {
            if (pos == k) {
                // determinant of the selected k x k submatrix
                ZMat sub(k, k);
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b)
                        sub.at(a, b) = m.at(rsel[static_cast<size_t>(a)], csel[static_cast<size_t>(b)]);
                // fraction-free expansion for k <= 4
                std::function<ZInt(std::vector<int>, std::vector<int>)> det =
                    [&](std::vector<int> rs, std::vector<int> cs) -> ZInt {
                    if (rs.size() == 1) return sub.at(rs[0], cs[0]);
                    ZInt acc = 0;
                    std::vector<int> rs2(rs.begin() + 1, rs.end());
                    for (size_t j = 0; j < cs.size(); ++j) {
                        if (sub.at(rs[0], cs[j]) == 0) continue;
                        std::vector<int> cs2;
                        for (size_t t = 0; t < cs.size(); ++t)
                            if (t != j) cs2.push_back(cs[t]);
                        ZInt minor = det(rs2, cs2);
                        if ((j % 2) == 0)
                            acc += sub.at(rs[0], cs[j]) * minor;
                        else
                            acc -= sub.at(rs[0], cs[j]) * minor;
                    }
                    return acc;
                };
                std::vector<int> ridx(static_cast<size_t>(k)), cidx(static_cast<size_t>(k));
                for (int t = 0; t < k; ++t) ridx[static_cast<size_t>(t)] = t, cidx[static_cast<size_t>(t)] = t;
                ZInt d = det(ridx, cidx);
                if (d != 0) {
                    long v = valuation_z(d, l.p);
                    if (best < 0 || v < best) best = v;
                }
                return;
            }
            for (int c = start; c <= n - (k - pos); ++c) {
                csel[static_cast<size_t>(pos)] = c;
                pick_cols(pos + 1, c + 1);
            }
        };
        pick_rows(0, 0);
        if (best < 0) throw MathError("divisor_type: singular matrix");
        dv[static_cast<size_t>(k)] = best;
    }

    std::vector<int> lambda(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
        lambda[static_cast<size_t>(n - k)] =
            static_cast<int>(dv[static_cast<size_t>(k)] - dv[static_cast<size_t>(k) - 1]);
    return DivisorType::from_lambda(std::move(lambda));
}

std::pair<HNFLattice, int> primitive_part(const HNFLattice& l) {
    int shift = -1;
    for (int64_t x : l.rows) {
        if (x == 0) continue;
        int v = 0;
        int64_t y = x;
        while (y % l.p == 0) {
            y /= l.p;
            ++v;
        }
        if (shift < 0 || v < shift) shift = v;
        if (shift == 0) break;
    }
    if (shift <= 0) return {l, 0};
    HNFLattice out = l;
    int64_t ps = checked_pow_i64(l.p, shift);
    for (auto& x : out.rows) x /= ps;
    for (auto& e : out.diag_exp) e -= shift;
    return {out, shift};
}

HNFLattice scale_by_p(const HNFLattice& l, int k) {
    if (k == 0) return l;
    if (k < 0) throw MathError("scale_by_p: negative power");
    HNFLattice out = l;
    int64_t ps = checked_pow_i64(l.p, k);
    for (auto& x : out.rows) {
        if (x != 0 && std::abs(x) > INT64_MAX / ps) throw MathError("scale_by_p: overflow");
        x *= ps;
    }
    for (auto& e : out.diag_exp) e += k;
    return out;
}

namespace {
std::vector<std::vector<ZInt>> lattice_rows_z(const HNFLattice& l) {
    std::vector<std::vector<ZInt>> rows;
    for (int r = 0; r < l.n; ++r) rows.push_back(l.row_z(r));
    return rows;
}
}  // namespace

HNFLattice lattice_sum(const HNFLattice& a, const HNFLattice& b) {
    if (a.n != b.n || a.p != b.p) throw MathError("lattice_sum: mismatched lattices");
    auto gens = lattice_rows_z(a);
    auto more = lattice_rows_z(b);
    gens.insert(gens.end(), more.begin(), more.end());
    return canonicalize(gens, a.n, a.p);
}

HNFLattice lattice_intersect(const HNFLattice& a, const HNFLattice& b) {
    if (a.n != b.n || a.p != b.p) throw MathError("lattice_intersect: mismatched lattices");
    const int n = a.n;
    // row kernel of [A; -B] gives pairs (u, v) with u A = v B
    ZMat stacked(2 * n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            stacked.at(r, c) = a.at(r, c);
            stacked.at(n + r, c) = -ZInt(b.at(r, c));
        }
    auto kernel = integer_row_kernel(stacked);
    std::vector<std::vector<ZInt>> gens;
    for (const auto& w : kernel) {
        std::vector<ZInt> x(static_cast<size_t>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) x[static_cast<size_t>(c)] += w[static_cast<size_t>(r)] * a.at(r, c);
        gens.push_back(std::move(x));
    }
    return canonicalize(gens, n, a.p);
}

std::vector<HNFLattice> superlattices_index_p(const HNFLattice& l) {
    const int n = l.n;
    const int64_t p = l.p;
    if (l.is_full()) return {};

    // K' = (1/p)(K intersect p Z^n); K'/K is elementary abelian
    HNFLattice pfull = scale_by_p(full_lattice(n, p), 1);
    HNFLattice meet = lattice_intersect(l, pfull);
    std::vector<std::vector<ZInt>> kprime_gens;
    for (int r = 0; r < n; ++r) {
        std::vector<ZInt> row = meet.row_z(r);
        for (auto& x : row) {
            if (x % p != 0) throw MathError("superlattices_index_p: internal");
            x /= p;
        }
        kprime_gens.push_back(std::move(row));
    }
    HNFLattice kprime = canonicalize(kprime_gens, n, p);

    // quotient K'/K representatives: basis vectors of K' modulo K
    std::vector<std::vector<ZInt>> quot_reps;
    for (int r = 0; r < n; ++r) {
        auto v = kprime.row_z(r);
        if (!contains(l, v)) quot_reps.push_back(v);
    }
    // rank of K'/K equals the number of independent reps mod K; enumerate
    // F_p lines in their span
    const int rho = static_cast<int>(quot_reps.size());
    std::vector<HNFLattice> out;
    if (rho == 0) return out;

    std::vector<int> alpha(static_cast<size_t>(rho), 0);
    // normalized representatives: first nonzero coefficient equal to 1
    for (int lead = 0; lead < rho; ++lead) {
        // alpha[lead] = 1, later coefficients range over F_p
        std::vector<int> idx(static_cast<size_t>(rho - lead - 1), 0);
        for (;;) {
            std::vector<ZInt> v(static_cast<size_t>(n));
            for (int c = 0; c < n; ++c) v[static_cast<size_t>(c)] = quot_reps[static_cast<size_t>(lead)][static_cast<size_t>(c)];
            for (int t = 0; t < rho - lead - 1; ++t)
                if (idx[static_cast<size_t>(t)] != 0)
                    for (int c = 0; c < n; ++c)
                        v[static_cast<size_t>(c)] += idx[static_cast<size_t>(t)] *
                                                     quot_reps[static_cast<size_t>(lead + 1 + t)][static_cast<size_t>(c)];
            auto gens = lattice_rows_z(l);
            gens.push_back(v);
            HNFLattice h = canonicalize(gens, n, p);
            if (h.index_exponent() == l.index_exponent() - 1) out.push_back(h);
            // advance the F_p odometer
            int t = rho - lead - 2;
            while (t >= 0) {
                if (++idx[static_cast<size_t>(t)] < p) break;
                idx[static_cast<size_t>(t)] = 0;
                --t;
            }
            if (t < 0) break;
        }
    }
    std::sort(out.begin(), out.end(), [](const HNFLattice& x, const HNFLattice& y) {
        return x.rows < y.rows;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace latzeta::lattice
