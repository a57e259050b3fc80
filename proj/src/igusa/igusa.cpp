#include "igusa/igusa.hpp"

#include <algorithm>
#include <sstream>

#include "support/zmat.hpp"

namespace latzeta::igusa {

namespace {

uint64_t power_u64(int64_t p, int e, uint64_t cap) {
    unsigned __int128 t = 1;
    for (int k = 0; k < e; ++k) {
        t *= static_cast<unsigned __int128>(p);
        if (t > cap) throw MathError("igusa: sweep exceeds budget");
    }
    return static_cast<uint64_t>(t);
}

ZInt eval_poly_z(const Poly& poly, const std::vector<ZInt>& a) {
    ZInt acc = 0;
    for (const auto& m : poly.monomials) {
        ZInt term(static_cast<long>(m.coeff));
        for (size_t v = 0; v < a.size(); ++v)
            for (int e = 0; e < m.exp[v]; ++e) term *= a[v];
        acc += term;
    }
    return acc;
}

// Jacobian entries mod `mod`
std::vector<int64_t> jacobian_mod(const PolySystem& f, const std::vector<int64_t>& a,
                                  int64_t mod, int rows) {
    std::vector<int64_t> j(static_cast<size_t>(rows) * f.n, 0);
    for (int r = 0; r < f.m() && r < rows; ++r)
        for (int c = 0; c < f.n; ++c) {
            Poly d = f.polys[static_cast<size_t>(r)].derivative(c);
            PolySystem tmp;
            tmp.n = f.n;
            tmp.p = f.p;
            tmp.polys.push_back(d);
            j[static_cast<size_t>(r) * f.n + c] = tmp.eval(0, a, mod);
        }
    return j;
}

// valuations of elementary divisors mod p^K by local elimination
std::vector<int> capped_divisors(std::vector<int64_t> w, int rows, int cols, int64_t p, int K) {
    int64_t mod = checked_pow_i64(p, K);
    auto at = [&](int r, int c) -> int64_t& { return w[static_cast<size_t>(r) * cols + c]; };
    const int lim = std::min(rows, cols);
    std::vector<int> out(static_cast<size_t>(lim), K);
    for (int t = 0; t < lim; ++t) {
        int bestv = K;
        int br = -1, bc = -1;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                int v = capped_valuation_i64(at(r, c), p, K);
                if (v < bestv) {
                    bestv = v;
                    br = r;
                    bc = c;
                }
            }
        if (br < 0) break;  // all remaining entries are 0 mod p^K; stay capped
        out[static_cast<size_t>(t)] = bestv;
        // swap pivot into place
        for (int c = 0; c < cols; ++c) std::swap(at(t, c), at(br, c));
        for (int r = 0; r < rows; ++r) std::swap(at(r, t), at(r, bc));
        int64_t pv = checked_pow_i64(p, bestv);
        int64_t unit = at(t, t) / pv;
        int64_t unit_inv = inv_mod(unit, mod);
        for (int r = t + 1; r < rows; ++r) {
            if (at(r, t) % mod == 0) continue;
            int64_t q = mul_mod(at(r, t) / pv, unit_inv, mod);
            for (int c = t; c < cols; ++c)
                at(r, c) = mod_floor(at(r, c) - mul_mod(q, at(t, c), mod), mod);
        }
        for (int c = t + 1; c < cols; ++c) {
            if (at(t, c) % mod == 0) continue;
            int64_t q = mul_mod(at(t, c) / pv, unit_inv, mod);
            for (int r = t; r < rows; ++r)
                at(r, c) = mod_floor(at(r, c) - mul_mod(q, at(r, t), mod), mod);
        }
    }
    return out;
}

}  // namespace

ZInt count_naive(const PolySystem& f, int i, uint64_t budget) {
    if (i < 0) throw MathError("count_naive: negative precision");
    if (i == 0) return 1;
    power_u64(f.p, f.n * i, budget);  // budget check
    int64_t mod = checked_pow_i64(f.p, i);
    std::vector<int64_t> a(static_cast<size_t>(f.n), 0);
    ZInt count = 0;
    for (;;) {
        bool ok = true;
        for (int j = 0; j < f.m() && ok; ++j)
            if (f.eval(j, a, mod) != 0) ok = false;
        if (ok) count += 1;
        int d = f.n - 1;
        while (d >= 0) {
            if (++a[static_cast<size_t>(d)] < mod) break;
            a[static_cast<size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
    }
    return count;
}

SolutionCounts count_tree(const PolySystem& f, int i_max, uint64_t budget) {
    SolutionCounts out;
    out.M.push_back(ZInt(1));
    if (i_max == 0) return out;
    const bool square = f.m() == f.n;
    int64_t henselized = 0;

    std::vector<std::vector<int64_t>> live;  // solutions mod p^k, not yet unique-lifting
    live.emplace_back(static_cast<size_t>(f.n), 0);
    // level 0 has the single empty solution; extend level by level
    for (int k = 0; k < i_max; ++k) {
        int64_t mod_next = checked_pow_i64(f.p, k + 1);
        int64_t pk = checked_pow_i64(f.p, k);
        std::vector<std::vector<int64_t>> next;
        uint64_t children = static_cast<uint64_t>(live.size());
        children *= power_u64(f.p, f.n, budget);
        if (children > budget) throw MathError("count_tree: extension exceeds budget");
        std::vector<int64_t> cand(static_cast<size_t>(f.n));
        std::vector<int> digits(static_cast<size_t>(f.n), 0);
        for (const auto& base : live) {
            std::fill(digits.begin(), digits.end(), 0);
            for (;;) {
                for (int v = 0; v < f.n; ++v)
                    cand[static_cast<size_t>(v)] =
                        base[static_cast<size_t>(v)] + pk * digits[static_cast<size_t>(v)];
                bool ok = true;
                for (int j = 0; j < f.m() && ok; ++j)
                    if (f.eval(j, cand, mod_next) != 0) ok = false;
                if (ok) next.push_back(cand);
                int d = f.n - 1;
                while (d >= 0) {
                    if (++digits[static_cast<size_t>(d)] < f.p) break;
                    digits[static_cast<size_t>(d)] = 0;
                    --d;
                }
                if (d < 0) break;
            }
        }
        // separate unit-Jacobian solutions: they lift uniquely forever
        if (square && k + 1 >= 1) {
            std::vector<std::vector<int64_t>> keep;
            for (auto& s : next) {
                auto j = jacobian_mod(f, s, f.p, f.n);
                // determinant mod p
                int64_t det;
                if (f.n == 1) det = j[0];
                else {
                    // small-n determinant mod p by Gaussian elimination
                    std::vector<int64_t> w = j;
                    det = 1;
                    bool sing = false;
                    for (int t = 0; t < f.n && !sing; ++t) {
                        int piv = -1;
                        for (int r = t; r < f.n; ++r)
                            if (w[static_cast<size_t>(r) * f.n + t] % f.p != 0) {
                                piv = r;
                                break;
                            }
                        if (piv < 0) {
                            sing = true;
                            break;
                        }
                        if (piv != t)
                            for (int c = 0; c < f.n; ++c)
                                std::swap(w[static_cast<size_t>(piv) * f.n + c],
                                          w[static_cast<size_t>(t) * f.n + c]);
                        int64_t pv = mod_floor(w[static_cast<size_t>(t) * f.n + t], f.p);
                        det = mul_mod(det, pv, f.p);
                        int64_t pinv = inv_mod(pv, f.p);
                        for (int r = t + 1; r < f.n; ++r) {
                            int64_t q = mul_mod(w[static_cast<size_t>(r) * f.n + t], pinv, f.p);
                            for (int c = t; c < f.n; ++c)
                                w[static_cast<size_t>(r) * f.n + c] =
                                    mod_floor(w[static_cast<size_t>(r) * f.n + c] -
                                                  q * w[static_cast<size_t>(t) * f.n + c],
                                              f.p);
                        }
                    }
                    if (sing) det = 0;
                }
                if (mod_floor(det, f.p) != 0) ++henselized;
                else keep.push_back(std::move(s));
            }
            next = std::move(keep);
        }
        live = std::move(next);
        ZInt level_count = ZInt(static_cast<long>(live.size())) + ZInt(static_cast<long>(henselized));
        out.M.push_back(level_count);
    }
    return out;
}

PoincareData poincare_coeffs(const PolySystem& f, const SolutionCounts& counts) {
    const int i_max = counts.i_max();
    PoincareData out;
    out.poincare = exactmath::TruncatedSeries(f.p, i_max);
    for (int i = 0; i <= i_max; ++i) {
        QInt c(counts.M[static_cast<size_t>(i)]);
        c /= QInt(pow_z(f.p, f.n * i));
        c.canonicalize();
        out.poincare[i] = c;
    }
    // (1 - t I(t)) / (1 - t) = P(t)  =>  I(t) = (1 - (1-t) P(t)) / t
    exactmath::TruncatedSeries tmp = out.poincare;
    tmp.mul_factor(0, 1);  // (1 - t) P
    if (tmp[0] != 1) throw MathError("poincare_coeffs: M_0 must be 1");
    out.igusa_series = exactmath::TruncatedSeries(f.p, std::max(0, i_max - 1));
    for (int i = 0; i <= i_max - 1; ++i) out.igusa_series[i] = -tmp[i + 1];
    return out;
}

SlopeReport slope_report(const PolySystem& f, const SolutionCounts& counts) {
    SlopeReport rep;
    rep.M = counts.M;
    for (int i = 0; i <= counts.i_max(); ++i) {
        const ZInt& m = counts.M[static_cast<size_t>(i)];
        rep.valuation.push_back(m == 0 ? -1 : valuation_z(m, f.p));
        if (i >= 1 && m != 0) {
            QInt s(ZInt(rep.valuation.back()), ZInt(i));
            s.canonicalize();
            rep.slope.push_back(s);
            if (!rep.running_min || s < *rep.running_min) rep.running_min = s;
        }
    }
    return rep;
}

std::string SlopeReport::str() const {
    std::ostringstream os;
    os << "i M v slope (running minimum is a finite-depth estimate)\n";
    for (size_t i = 0; i < M.size(); ++i) {
        os << i << " " << M[i].get_str() << " ";
        if (valuation[i] < 0) os << "inf";
        else os << valuation[i];
        if (i >= 1 && valuation[i] >= 0) os << " " << slope[i - 1].get_str();
        os << "\n";
    }
    if (running_min) os << "running-min-slope " << running_min->get_str() << "\n";
    return os.str();
}

std::vector<int> jacobian_profile(const PolySystem& f, const std::vector<int64_t>& a, int K) {
    if (K < 1) throw MathError("jacobian_profile: K must be >= 1");
    const int rows = std::max(f.m(), f.n);
    int64_t mod = checked_pow_i64(f.p, K);
    auto j = jacobian_mod(f, a, mod, rows);
    auto div = capped_divisors(std::move(j), rows, f.n, f.p, K);
    div.resize(static_cast<size_t>(f.n), K);
    return div;
}

ReverseHenselResult reverse_hensel_check(const PolySystem& f, const std::vector<QInt>& lambdas,
                                         int K, int slope_window_i_max, uint64_t budget) {
    if (static_cast<int>(lambdas.size()) != f.n)
        throw MathError("reverse_hensel_check: one lambda per variable required");
    for (const auto& l : lambdas)
        if (l < 0 || l > 1) throw MathError("reverse_hensel_check: lambda_j must lie in [0,1]");
    ReverseHenselResult res;
    res.precision = K;

    std::vector<int64_t> num(static_cast<size_t>(f.n)), den(static_cast<size_t>(f.n));
    for (int j = 0; j < f.n; ++j) {
        num[static_cast<size_t>(j)] = to_i64(ZInt(lambdas[static_cast<size_t>(j)].get_num()));
        den[static_cast<size_t>(j)] = to_i64(ZInt(lambdas[static_cast<size_t>(j)].get_den()));
    }

    power_u64(f.p, f.n * K, budget);
    int64_t mod = checked_pow_i64(f.p, K);
    std::vector<int64_t> a(static_cast<size_t>(f.n), 0);
    res.hypothesis_holds = true;
    for (;;) {
        int vf = K;
        for (int j = 0; j < f.m(); ++j)
            vf = std::min(vf, capped_valuation_i64(f.eval(j, a, mod), f.p, K));
        if (vf > 0) {
            auto prof = jacobian_profile(f, a, K);
            for (int j = 0; j < f.n; ++j) {
                if (prof[static_cast<size_t>(j)] >= K) continue;  // capped favourably
                // 2 den_j v(delta_j) >= num_j v(f(a)), both sides capped at K
                if (2 * den[static_cast<size_t>(j)] * prof[static_cast<size_t>(j)] <
                    num[static_cast<size_t>(j)] * vf) {
                    res.hypothesis_holds = false;
                    res.counterexample = a;
                    res.failing_j = j;
                    break;
                }
            }
        }
        if (!res.hypothesis_holds) break;
        int d = f.n - 1;
        while (d >= 0) {
            if (++a[static_cast<size_t>(d)] < mod) break;
            a[static_cast<size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
    }

    QInt sum(0);
    for (const auto& l : lambdas) sum += l;
    res.bound = sum / QInt(2) - QInt(f.n);
    res.bound.canonicalize();

    if (res.hypothesis_holds) {
        auto counts = count_tree(f, slope_window_i_max);
        res.slope_check_ok = true;
        // v(M_{2t}) >= t * sum  and  v(M_{2t+1}) >= t * sum
        for (int i = 1; i <= counts.i_max(); ++i) {
            const ZInt& m = counts.M[static_cast<size_t>(i)];
            long v = m == 0 ? -1 : valuation_z(m, f.p);
            if (v < 0) continue;  // no solutions at all: nothing to bound
            long t = i / 2;
            // v >= t * sum  <=>  v * den(sum) >= t * num(sum)
            ZInt lhs = ZInt(v) * ZInt(sum.get_den());
            ZInt rhs = ZInt(t) * ZInt(sum.get_num());
            if (lhs < rhs) res.slope_check_ok = false;
        }
    }
    return res;
}

std::string ReverseHenselResult::str() const {
    std::ostringstream os;
    if (hypothesis_holds) {
        os << "hypothesis holds at precision K=" << precision << "; pole bound Re(s) >= "
           << bound.get_str() << "; slope cross-check "
           << (slope_check_ok ? "passed" : "FAILED");
    } else {
        os << "hypothesis fails at a = (";
        for (size_t i = 0; i < counterexample.size(); ++i) {
            if (i) os << ",";
            os << counterexample[i];
        }
        os << ") for j=" << failing_j + 1 << " at precision K=" << precision;
    }
    return os.str();
}

HenselResult hensel_lift(const PolySystem& f, const std::vector<ZInt>& a, int k_target) {
    if (f.m() != f.n) throw MathError("hensel_lift: square system required");
    if (static_cast<int>(a.size()) != f.n) throw MathError("hensel_lift: point length");
    HenselResult res;

    // exact det J_f(a) via the Smith form of the integer Jacobian
    auto jac_z = [&](const std::vector<ZInt>& x) {
        ZMat j(f.n, f.n);
        for (int r = 0; r < f.n; ++r)
            for (int c = 0; c < f.n; ++c)
                j.at(r, c) = eval_poly_z(f.polys[static_cast<size_t>(r)].derivative(c), x);
        return j;
    };
    auto det_of = [&](const ZMat& m) {
        // Smith form gives |det| as the product of the invariant factors
        SmithResult s = smith_normal_form(m);
        if (s.rank < f.n) return ZInt(0);
        ZInt d(1);
        for (int t = 0; t < f.n; ++t) d *= s.s.at(t, t);
        return d;
    };

    ZMat j0 = jac_z(a);
    ZInt det0 = det_of(j0);
    long vdet = det0 == 0 ? -1 : valuation_z(det0, f.p);
    long vf = -1;
    bool fzero = true;
    for (int r = 0; r < f.n; ++r) {
        ZInt val = eval_poly_z(f.polys[static_cast<size_t>(r)], a);
        if (val != 0) {
            fzero = false;
            long v = valuation_z(val, f.p);
            if (vf < 0 || v < vf) vf = v;
        }
    }
    if (det0 == 0 || (!fzero && 2 * vdet >= vf)) {
        res.applicable = false;
        return res;
    }
    res.applicable = true;
    res.det_valuation = vdet;

    const int W = k_target + 2 * static_cast<int>(vdet) + 2;
    ZInt mod = pow_z(f.p, W);
    ZInt target_mod = pow_z(f.p, k_target);
    std::vector<ZInt> x = a;
    for (auto& c : x) {
        c %= mod;
        if (c < 0) c += mod;
    }

    for (int iter = 0; iter < 64; ++iter) {
        std::vector<ZInt> fx(static_cast<size_t>(f.n));
        bool done = true;
        for (int r = 0; r < f.n; ++r) {
            fx[static_cast<size_t>(r)] = eval_poly_z(f.polys[static_cast<size_t>(r)], x);
            if (fx[static_cast<size_t>(r)] % target_mod != 0) done = false;
        }
        if (done) {
            for (auto& c : x) {
                c %= target_mod;
                if (c < 0) c += target_mod;
            }
            // v(a - b) > v(det J_f(a))
            for (int r = 0; r < f.n; ++r) {
                ZInt diff = (a[static_cast<size_t>(r)] - x[static_cast<size_t>(r)]);
                if (diff != 0 && valuation_z(diff, f.p) <= vdet)
                    throw MathError("hensel_lift: proximity bound violated");
            }
            res.root = x;
            return res;
        }
        // Newton step: solve J(x) s = f(x) exactly, subtract mod p^W
        ZMat j = jac_z(x);
        std::vector<std::vector<ZInt>> cols(static_cast<size_t>(f.n),
                                            std::vector<ZInt>(static_cast<size_t>(f.n)));
        for (int r = 0; r < f.n; ++r)
            for (int c = 0; c < f.n; ++c) cols[static_cast<size_t>(c)][static_cast<size_t>(r)] = j.at(r, c);
        std::vector<QInt> rhs(static_cast<size_t>(f.n));
        for (int r = 0; r < f.n; ++r) rhs[static_cast<size_t>(r)] = QInt(fx[static_cast<size_t>(r)]);
        auto sol = solve_row_combination(cols, rhs);
        if (!sol) throw MathError("hensel_lift: Newton system is singular");
        for (int r = 0; r < f.n; ++r) {
            const QInt& s = (*sol)[static_cast<size_t>(r)];
            if (s == 0) continue;
            if (valuation_q(s, f.p) < 0) throw MathError("hensel_lift: non-integral Newton step");
            // rational with p-unit denominator -> residue mod p^W
            ZInt numz(s.get_num()), denz(s.get_den());
            ZInt dinv;
            if (mpz_invert(dinv.get_mpz_t(), denz.get_mpz_t(), mod.get_mpz_t()) == 0)
                throw MathError("hensel_lift: denominator not invertible");
            ZInt step = (numz * dinv) % mod;
            x[static_cast<size_t>(r)] = (x[static_cast<size_t>(r)] - step) % mod;
            if (x[static_cast<size_t>(r)] < 0) x[static_cast<size_t>(r)] += mod;
        }
    }
    throw MathError("hensel_lift: Newton iteration did not converge");
}

std::string HenselResult::str() const {
    std::ostringstream os;
    if (!applicable) return "not-applicable (precondition fails)";
    os << "root (";
    for (size_t i = 0; i < root.size(); ++i) {
        if (i) os << ",";
        os << root[i].get_str();
    }
    os << ") det-valuation " << det_valuation;
    return os.str();
}

HomogBoundReport homogeneous_bound_check(const PolySystem& f, int i_max, uint64_t budget) {
    HomogBoundReport rep;
    rep.homogeneous = true;
    rep.all_degrees_ge_2 = true;
    for (const auto& poly : f.polys) {
        if (!poly.homogeneous()) rep.homogeneous = false;
        if (!poly.monomials.empty() && poly.total_degree() < 2) rep.all_degrees_ge_2 = false;
    }
    if (!rep.homogeneous || !rep.all_degrees_ge_2)
        throw MathError("homogeneous_bound_check: system must be homogeneous of degree >= 2");

    auto counts = count_tree(f, i_max, budget);
    rep.verdict = true;
    for (int i = 1; i <= counts.i_max(); ++i) {
        const ZInt& m = counts.M[static_cast<size_t>(i)];
        long v = m == 0 ? 0 : valuation_z(m, f.p);
        // margin = v + slack_numerator - n i / (n+1), slack 1 even / 1+n odd
        long slack = (i % 2 == 0) ? 1 : 1 + f.n;
        QInt margin = QInt(v + slack) - QInt(ZInt(static_cast<long>(f.n) * i), ZInt(f.n + 1));
        margin.canonicalize();
        rep.margin.push_back(margin);
        if (margin < 0) rep.verdict = false;
    }
    return rep;
}

std::string HomogBoundReport::str() const {
    std::ostringstream os;
    os << "margins:";
    for (const auto& m : margin) os << ' ' << m.get_str();
    os << " verdict: " << (verdict ? "pass" : "fail");
    return os.str();
}

}  // namespace latzeta::igusa
