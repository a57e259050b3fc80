#include "counting/count.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "counting/kernel.hpp"
#include "exactmath/exactmath.hpp"

namespace latzeta::counting {

std::string to_string(Kind k) {
    switch (k) {
        case Kind::Lattice: return "lattice";
        case Kind::Subalgebra: return "subalgebra";
        default: return "ideal";
    }
}

std::optional<Kind> kind_from_string(const std::string& s) {
    if (s == "lattice") return Kind::Lattice;
    if (s == "subalgebra") return Kind::Subalgebra;
    if (s == "ideal") return Kind::Ideal;
    return std::nullopt;
}

bool is_subalgebra(const lattice::HNFLattice& l, const algebra::StructureAlgebra& a) {
    if (l.n != a.n || l.p != a.p) throw MathError("is_subalgebra: dimension or prime mismatch");
    for (int r = 0; r < l.n; ++r)
        for (int s = 0; s < l.n; ++s) {
            auto prod = algebra::multiply(a, l.row_z(r), l.row_z(s));
            if (!lattice::contains(l, prod)) return false;
        }
    return true;
}

bool is_ideal(const lattice::HNFLattice& l, const algebra::StructureAlgebra& a) {
    if (l.n != a.n || l.p != a.p) throw MathError("is_ideal: dimension or prime mismatch");
    std::vector<ZInt> e(static_cast<size_t>(a.n));
    for (int k = 0; k < a.n; ++k) {
        std::fill(e.begin(), e.end(), ZInt(0));
        e[static_cast<size_t>(k)] = 1;
        for (int s = 0; s < l.n; ++s) {
            auto y = l.row_z(s);
            if (!lattice::contains(l, algebra::multiply(a, e, y))) return false;
            if (!lattice::contains(l, algebra::multiply(a, y, e))) return false;
        }
    }
    return true;
}

int weight(const lattice::HNFLattice& l, const algebra::StructureAlgebra& a) {
    if (!l.is_primitive()) throw MathError("weight: lattice is not primitive");
    if (l.n != a.n || l.p != a.p) throw MathError("weight: dimension or prime mismatch");
    const int i0 = l.index_exponent();
    int w = 0;
    for (int r = 0; r < l.n; ++r)
        for (int s = 0; s < l.n; ++s) {
            auto prod = algebra::multiply(a, l.row_z(r), l.row_z(s));
            auto coords = lattice::coordinates(l, prod);
            for (const auto& c : coords) {
                if (c == 0) continue;
                long v = valuation_q(c, l.p);
                if (v < 0 && static_cast<int>(-v) > w) w = static_cast<int>(-v);
            }
        }
    if (w > i0) throw MathError("weight: exceeds index exponent");
    return w;
}

namespace {

// packed strata key: w in the low 6 bits, lambda_j in 6-bit fields above
uint64_t pack_key(const int* lambda, int n, int w) {
    uint64_t key = static_cast<uint64_t>(w);
    for (int j = 0; j < n; ++j)
        key |= static_cast<uint64_t>(lambda[j]) << (6 * (j + 1));
    return key;
}

void unpack_key(uint64_t key, int n, std::vector<int>& lambda, int& w) {
    w = static_cast<int>(key & 0x3f);
    lambda.assign(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j)
        lambda[static_cast<size_t>(j)] = static_cast<int>((key >> (6 * (j + 1))) & 0x3f);
}

int vp_i128(i128 x, int64_t p, int cap) {
    if (x < 0) x = -x;
    int v = 0;
    while (v < cap && x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// elementary-divisor exponents of the int64 matrix via minor valuations
void lambda_of(const int64_t* m, int n, int64_t p, int i0, int* lambda) {
    int dv[5] = {0, 0, 0, 0, 0};
    // k = 1
    int best = i0 + 1;
    for (int t = 0; t < n * n; ++t)
        if (m[t] != 0) best = std::min(best, vp_i128(m[t], p, i0 + 1));
    dv[1] = best;
    if (n >= 3) {
        // k = 2
        best = 2 * i0 + 1;
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = r1 + 1; r2 < n; ++r2)
                for (int c1 = 0; c1 < n; ++c1)
                    for (int c2 = c1 + 1; c2 < n; ++c2) {
                        i128 d = static_cast<i128>(m[r1 * n + c1]) * m[r2 * n + c2] -
                                 static_cast<i128>(m[r1 * n + c2]) * m[r2 * n + c1];
                        if (d != 0) best = std::min(best, vp_i128(d, p, 2 * i0 + 1));
                    }
        dv[2] = best;
    }
    if (n >= 4) {
        // k = 3
        best = 3 * i0 + 1;
        for (int rr = 0; rr < n; ++rr)
            for (int cc = 0; cc < n; ++cc) {
                int rs[3], cs[3], ri = 0, ci = 0;
                for (int t = 0; t < n; ++t) {
                    if (t != rr) rs[ri++] = t;
                    if (t != cc) cs[ci++] = t;
                }
                i128 d = 0;
                for (int j = 0; j < 3; ++j) {
                    int c0 = cs[j], c1 = cs[(j + 1) % 3], c2 = cs[(j + 2) % 3];
                    (void)c1;
                    (void)c2;
                    i128 minor = static_cast<i128>(m[rs[1] * n + cs[(j + 1) % 3]]) *
                                     m[rs[2] * n + cs[(j + 2) % 3]] -
                                 static_cast<i128>(m[rs[1] * n + cs[(j + 2) % 3]]) *
                                     m[rs[2] * n + cs[(j + 1) % 3]];
                    d += static_cast<i128>(m[rs[0] * n + c0]) * minor;
                }
                if (d != 0) best = std::min(best, vp_i128(d, p, 3 * i0 + 1));
            }
        dv[3] = best;
    }
    if (n == 2) dv[2] = i0;
    else if (n == 3) dv[3] = i0;
    else if (n == 4) dv[4] = i0;
    else if (n == 1) dv[1] = i0;
    for (int k = 1; k <= n; ++k) lambda[n - k] = dv[k] - dv[k - 1];
}

struct Shard {
    uint64_t lattices = 0, subalgebras = 0, ideals = 0, primitives = 0;
    std::unordered_map<uint64_t, uint64_t> strata;
};

}  // namespace

PassResult run_pass(const algebra::StructureAlgebra& a, int i, const PassOptions& opts,
                    const Parallel& par) {
    if (i < 0) throw MathError("run_pass: negative index exponent");
    if (i >= 60) throw MathError("run_pass: index exponent out of range");
    const int n = a.n;
    const int64_t p = a.p;
    const bool fast = kernel::pass_bound_ok(n, p, i, a.max_abs_constant(), a.terms.size());

    auto chunks = lattice::enumeration_chunks(n, p, i, 1u << 20);
    std::vector<Shard> shards(chunks.size());
    const int64_t p_i0 = fast ? checked_pow_i64(p, i) : 0;

    par.for_each_chunk(chunks.size(), [&](size_t ci) {
        Shard& sh = shards[ci];
        lattice::ChunkWalker w(n, p, chunks[ci]);
        if (w.done()) return;
        i128 z[4], scratch[4];
        int lambda[4];
        const bool preds = opts.subalgebras || opts.ideals || opts.strata;
        for (;;) {
            ++sh.lattices;
            if (preds) {
                const int64_t* m = w.matrix();
                bool primitive = false;
                for (int t = 0; t < n * n; ++t)
                    if (m[t] % p != 0) {
                        primitive = true;
                        break;
                    }
                if (primitive) ++sh.primitives;
                const bool want_weight = opts.strata && primitive;

                if (fast) {
                    bool sub = true;
                    int maxdef = 0;
                    if (opts.subalgebras || want_weight) {
                        for (int r = 0; r < n && (sub || want_weight); ++r)
                            for (int s = 0; s < n && (sub || want_weight); ++s) {
                                kernel::product(a, m + r * n, m + s * n, z);
                                if (want_weight) {
                                    int d = kernel::deficiency(m, n, p, i, p_i0, z, scratch);
                                    if (d < 0) throw MathError("run_pass: inexact solve");
                                    if (d > maxdef) maxdef = d;
                                    if (d > 0) sub = false;
                                } else if (!kernel::member(m, n, z, scratch)) {
                                    sub = false;
                                }
                            }
                        if (sub && opts.subalgebras) ++sh.subalgebras;
                    }
                    if (opts.ideals) {
                        bool ideal = true;
                        for (int k = 0; k < n && ideal; ++k)
                            for (int s = 0; s < n && ideal; ++s) {
                                kernel::product_basis_left(a, k, m + s * n, z);
                                if (!kernel::member(m, n, z, scratch)) ideal = false;
                                if (ideal) {
                                    kernel::product_basis_right(a, k, m + s * n, z);
                                    if (!kernel::member(m, n, z, scratch)) ideal = false;
                                }
                            }
                        if (ideal) ++sh.ideals;
                    }
                    if (want_weight) {
                        lambda_of(m, n, p, i, lambda);
                        ++sh.strata[pack_key(lambda, n, maxdef)];
                    }
                } else {
                    lattice::HNFLattice l = w.snapshot();
                    if (opts.subalgebras && is_subalgebra(l, a)) ++sh.subalgebras;
                    if (opts.ideals && is_ideal(l, a)) ++sh.ideals;
                    if (want_weight) {
                        int wt = weight(l, a);
                        auto type = lattice::divisor_type(l);
                        ++sh.strata[pack_key(type.lambda.data(), n, wt)];
                    }
                }
            }
            if (!w.advance()) break;
        }
    });

    PassResult res;
    res.lattices = 0;
    res.subalgebras = 0;
    res.ideals = 0;
    res.primitives = 0;
    for (const auto& sh : shards) {
        res.lattices += static_cast<unsigned long>(sh.lattices);
        res.subalgebras += static_cast<unsigned long>(sh.subalgebras);
        res.ideals += static_cast<unsigned long>(sh.ideals);
        res.primitives += static_cast<unsigned long>(sh.primitives);
        for (const auto& [key, cnt] : sh.strata) {
            std::vector<int> lambda;
            int wt;
            unpack_key(key, n, lambda, wt);
            res.by_weight[wt] += static_cast<unsigned long>(cnt);
            res.by_type[{lambda, wt}] += static_cast<unsigned long>(cnt);
        }
    }
    return res;
}

ZInt count(const algebra::StructureAlgebra& a, int i, Kind kind, const Parallel& par) {
    PassOptions opts;
    opts.subalgebras = kind == Kind::Subalgebra;
    opts.ideals = kind == Kind::Ideal;
    opts.strata = false;
    if (kind == Kind::Lattice) return lattice::count_lattices(a.n, a.p, i, par);
    PassResult r = run_pass(a, i, opts, par);
    return kind == Kind::Subalgebra ? r.subalgebras : r.ideals;
}

CountTable count_table(const algebra::StructureAlgebra& a, int i_max, int strata_i_max,
                       const Parallel& par) {
    CountTable t;
    t.algebra_name = a.name;
    t.n = a.n;
    t.p = a.p;
    t.strata_i_max = std::min(strata_i_max, i_max);
    for (int i = 0; i <= i_max; ++i) {
        PassOptions opts;
        opts.strata = i <= t.strata_i_max;
        PassResult r = run_pass(a, i, opts, par);
        t.lattices.push_back(r.lattices);
        t.subalgebras.push_back(r.subalgebras);
        t.ideals.push_back(r.ideals);
        t.primitives.push_back(r.primitives);
        if (opts.strata) {
            t.by_weight.push_back(r.by_weight);
            for (const auto& [key, cnt] : r.by_type) t.by_type[key] += cnt;
        } else {
            t.by_weight.emplace_back();
        }
    }
    return t;
}

std::string CountTable::to_records() const {
    std::ostringstream os;
    os << "table " << (algebra_name.empty() ? "-" : algebra_name) << " n=" << n << " p=" << p
       << "\n";
    for (int i = 0; i <= i_max(); ++i) {
        os << "count lattice " << i << " " << lattices[static_cast<size_t>(i)].get_str() << "\n";
        os << "count subalgebra " << i << " " << subalgebras[static_cast<size_t>(i)].get_str()
           << "\n";
        os << "count ideal " << i << " " << ideals[static_cast<size_t>(i)].get_str() << "\n";
        os << "count primitive " << i << " " << primitives[static_cast<size_t>(i)].get_str()
           << "\n";
    }
    for (int i = 0; i <= strata_i_max && i < static_cast<int>(by_weight.size()); ++i)
        for (const auto& [w, cnt] : by_weight[static_cast<size_t>(i)])
            os << "stratum-w " << i << " " << w << " " << cnt.get_str() << "\n";
    for (const auto& [key, cnt] : by_type) {
        auto type = lattice::DivisorType::from_lambda(key.first);
        os << "stratum-type " << type.index_exponent() << " " << type.encode() << " "
           << key.second << " " << cnt.get_str() << "\n";
    }
    return os.str();
}

std::string CountTable::to_text() const {
    std::ostringstream os;
    os << "algebra " << (algebra_name.empty() ? "-" : algebra_name) << "  n=" << n << "  p=" << p
       << "\n";
    os << std::left << std::setw(4) << "i" << std::setw(22) << "lattices" << std::setw(22)
       << "subalgebras" << std::setw(22) << "ideals" << "\n";
    for (int i = 0; i <= i_max(); ++i) {
        os << std::left << std::setw(4) << i << std::setw(22)
           << lattices[static_cast<size_t>(i)].get_str() << std::setw(22)
           << subalgebras[static_cast<size_t>(i)].get_str() << std::setw(22)
           << ideals[static_cast<size_t>(i)].get_str() << "\n";
    }
    return os.str();
}

std::vector<ZInt> c_series(const CountTable& t, int k_max) {
    if (t.strata_i_max < k_max || t.i_max() < k_max)
        throw MathError("c_series: table strata do not reach k_max");
    std::vector<ZInt> c(static_cast<size_t>(k_max) + 1);
    for (int i = 0; i <= k_max; ++i)
        for (const auto& [w, cnt] : t.by_weight[static_cast<size_t>(i)]) {
            long k = i + static_cast<long>(t.n) * w;
            if (k <= k_max) c[static_cast<size_t>(k)] += cnt;
        }
    // cross-check against the homothety recursion a^max_k = a_k - a_{k-n}
    for (int k = 0; k <= k_max; ++k) {
        ZInt amax = t.subalgebras[static_cast<size_t>(k)];
        if (k >= t.n) amax -= t.subalgebras[static_cast<size_t>(k - t.n)];
        ZInt ck = 0;
        for (int i = 0; i <= k; ++i) {
            int rem = k - i;
            if (rem % t.n == 0) {
                int w = rem / t.n;
                auto it = t.by_weight[static_cast<size_t>(i)].find(w);
                if (it != t.by_weight[static_cast<size_t>(i)].end()) ck += it->second;
            }
        }
        if (ck != amax) throw MathError("c_series: strata disagree with the count recursion");
    }
    return c;
}

std::pair<ZInt, ZInt> non_subalgebra_counts(const CountTable& t, int i) {
    ZInt abelian(exactmath::gaussian_binomial(t.n - 1 + i, t.n - 1, t.p).get_num());
    return {abelian - t.subalgebras[static_cast<size_t>(i)],
            abelian - t.ideals[static_cast<size_t>(i)]};
}

ZInt class2_split_count(const algebra::StructureAlgebra& alg, int i, Kind kind,
                        const Parallel& par) {
    (void)par;
    if (kind == Kind::Lattice) throw MathError("class2_split_count: lattice kind is trivial");
    auto s = algebra::class2_structure(alg);
    const int64_t p = alg.p;

    auto phi = [&](const std::vector<ZInt>& u, const std::vector<ZInt>& v) {
        std::vector<ZInt> out(static_cast<size_t>(s.b));
        for (int r = 0; r < s.a; ++r)
            for (int c = 0; c < s.a; ++c) {
                if (u[static_cast<size_t>(r)] == 0 || v[static_cast<size_t>(c)] == 0) continue;
                const auto& w = s.product[static_cast<size_t>(r)][static_cast<size_t>(c)];
                for (int k = 0; k < s.b; ++k)
                    out[static_cast<size_t>(k)] +=
                        u[static_cast<size_t>(r)] * v[static_cast<size_t>(c)] * w[static_cast<size_t>(k)];
            }
        return out;
    };

    ZInt total = 0;
    for (int i2 = 0; i2 <= i; ++i2) {
        int i1 = i - i2;
        std::vector<lattice::HNFLattice> l2s;
        if (s.b == 0) {
            if (i2 != 0) continue;
        } else {
            l2s = lattice::enumerate_all(s.b, p, i2);
        }
        std::vector<lattice::HNFLattice> l1s;
        if (s.a == 0) {
            if (i1 != 0) continue;
        } else {
            l1s = lattice::enumerate_all(s.a, p, i1);
        }

        ZInt pairs = 0;
        auto pair_ok = [&](const lattice::HNFLattice* l1, const lattice::HNFLattice* l2) {
            if (s.a == 0 || s.b == 0) return true;
            auto in_l2 = [&](const std::vector<ZInt>& v) { return lattice::contains(*l2, v); };
            if (kind == Kind::Subalgebra) {
                for (int r = 0; r < s.a; ++r)
                    for (int c = 0; c < s.a; ++c)
                        if (!in_l2(phi(l1->row_z(r), l1->row_z(c)))) return false;
                return true;
            }
            std::vector<ZInt> e(static_cast<size_t>(s.a));
            for (int k = 0; k < s.a; ++k) {
                std::fill(e.begin(), e.end(), ZInt(0));
                e[static_cast<size_t>(k)] = 1;
                for (int r = 0; r < s.a; ++r) {
                    if (!in_l2(phi(l1->row_z(r), e))) return false;
                    if (!in_l2(phi(e, l1->row_z(r)))) return false;
                }
            }
            return true;
        };

        if (s.a == 0) {
            pairs = s.b == 0 ? ZInt(i2 == 0 ? 1 : 0) : ZInt(static_cast<long>(l2s.size()));
        } else if (s.b == 0) {
            pairs = ZInt(static_cast<long>(l1s.size()));
        } else {
            for (const auto& l1 : l1s)
                for (const auto& l2 : l2s)
                    if (pair_ok(&l1, &l2)) pairs += 1;
        }
        total += pow_z(p, s.a * i2) * pairs;
    }
    return total;
}

algebra::StructureAlgebra induced_algebra(const lattice::HNFLattice& h,
                                          const algebra::StructureAlgebra& a) {
    if (h.n != a.n || h.p != a.p) throw MathError("induced_algebra: mismatch");
    algebra::StructureAlgebra out("", a.n, a.p);
    for (int r = 0; r < a.n; ++r)
        for (int s = 0; s < a.n; ++s) {
            auto prod = algebra::multiply(a, h.row_z(r), h.row_z(s));
            auto coords = lattice::coordinates(h, prod);
            for (int k = 0; k < a.n; ++k) {
                const QInt& q = coords[static_cast<size_t>(k)];
                if (q == 0) continue;
                if (q.get_den() != 1)
                    throw MathError("induced_algebra: lattice is not a subalgebra");
                ZInt num(q.get_num());
                if (!fits_i64(num)) throw MathError("induced_algebra: constant overflow");
                out.set_c(r, s, k, to_i64(num));
            }
        }
    out.rebuild_terms();
    return out;
}

GrowthIdentityReport local_growth_identity_check(const algebra::StructureAlgebra& a, int i,
                                                 const Parallel& par) {
    GrowthIdentityReport rep;
    rep.lhs = 0;
    rep.rhs = 0;
    rep.all_a_congruent = true;
    rep.all_b_congruent = true;

    for (const auto& h : lattice::enumerate_all(a.n, a.p, i)) {
        if (!is_subalgebra(h, a)) continue;
        auto induced = induced_algebra(h, a);
        ZInt ah = count(induced, 1, Kind::Subalgebra, par);
        rep.lhs += ah;
        if (ah % a.p != 1) rep.all_a_congruent = false;
    }
    for (const auto& k : lattice::enumerate_all(a.n, a.p, i + 1)) {
        if (!is_subalgebra(k, a)) continue;
        ZInt bk = 0;
        for (const auto& h : lattice::superlattices_index_p(k))
            if (is_subalgebra(h, a)) bk += 1;
        rep.rhs += bk;
        if (bk % a.p != 1) rep.all_b_congruent = false;
    }
    rep.identity_holds = rep.lhs == rep.rhs;
    return rep;
}

std::string GrowthIdentityReport::str() const {
    std::ostringstream os;
    os << "lhs=" << lhs.get_str() << " rhs=" << rhs.get_str()
       << " identity=" << (identity_holds ? "yes" : "no")
       << " a-congruences=" << (all_a_congruent ? "yes" : "no")
       << " b-congruences=" << (all_b_congruent ? "yes" : "no");
    return os.str();
}

}  // namespace latzeta::counting
