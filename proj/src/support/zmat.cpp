#include "support/zmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace latzeta {

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ZMat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

namespace {

void swap_rows(ZMat& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(ZMat& m, int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

// row r1 += q * row r2
void add_row(ZMat& m, int r1, int r2, const ZInt& q) {
    for (int c = 0; c < m.cols; ++c) m.at(r1, c) += q * m.at(r2, c);
}

void add_col(ZMat& m, int c1, int c2, const ZInt& q) {
    for (int r = 0; r < m.rows; ++r) m.at(r, c1) += q * m.at(r, c2);
}

void negate_row(ZMat& m, int r) {
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
}

}  // namespace

SmithResult smith_normal_form(const ZMat& m) {
    SmithResult res;
    res.s = m;
    res.u = ZMat::identity(m.rows);
    res.v = ZMat::identity(m.cols);
    ZMat& s = res.s;
    ZMat& u = res.u;
    ZMat& v = res.v;

    int lim = std::min(m.rows, m.cols);
    for (int t = 0; t < lim; ++t) {
        for (;;) {
            // minimal nonzero entry of the trailing submatrix
            int pr = -1, pc = -1;
            for (int r = t; r < s.rows; ++r)
                for (int c = t; c < s.cols; ++c) {
                    if (s.at(r, c) == 0) continue;
                    if (pr < 0 || cmp(abs(s.at(r, c)), abs(s.at(pr, pc))) < 0) {
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) {
                res.rank = t;
                return res;
            }
            swap_rows(s, t, pr);
            swap_rows(u, t, pr);
            swap_cols(s, t, pc);
            swap_cols(v, t, pc);
            if (s.at(t, t) < 0) {
                negate_row(s, t);
                negate_row(u, t);
            }

            bool dirty = false;
            for (int r = t + 1; r < s.rows; ++r) {
                if (s.at(r, t) == 0) continue;
                ZInt q;
                mpz_fdiv_q(q.get_mpz_t(), s.at(r, t).get_mpz_t(), s.at(t, t).get_mpz_t());
                add_row(s, r, t, -q);
                add_row(u, r, t, -q);
                if (s.at(r, t) != 0) dirty = true;
            }
            for (int c = t + 1; c < s.cols; ++c) {
                if (s.at(t, c) == 0) continue;
                ZInt q;
                mpz_fdiv_q(q.get_mpz_t(), s.at(t, c).get_mpz_t(), s.at(t, t).get_mpz_t());
                add_col(s, c, t, -q);
                add_col(v, c, t, -q);
                if (s.at(t, c) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide the rest of the submatrix
            bool fixed = false;
            for (int r = t + 1; r < s.rows && !fixed; ++r)
                for (int c = t + 1; c < s.cols && !fixed; ++c)
                    if (s.at(r, c) % s.at(t, t) != 0) {
                        add_row(s, t, r, 1);
                        add_row(u, t, r, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }
    res.rank = 0;
    for (int t = 0; t < lim; ++t)
        if (s.at(t, t) != 0) ++res.rank;
    return res;
}

std::vector<std::vector<ZInt>> hnf_row_basis(const std::vector<std::vector<ZInt>>& gens,
                                             int cols) {
    std::vector<std::vector<ZInt>> active;
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != cols) throw MathError("hnf_row_basis: row length");
        bool zero = true;
        for (const auto& x : g)
            if (x != 0) {
                zero = false;
                break;
            }
        if (!zero) active.push_back(g);
    }

    std::vector<int> pivot_col;
    std::vector<std::vector<ZInt>> pivots;
    for (int c = cols - 1; c >= 0; --c) {
        // reduce the column-c entries of the active rows to a single one
        for (;;) {
            int best = -1;
            for (size_t r = 0; r < active.size(); ++r) {
                if (active[r][c] == 0) continue;
                if (best < 0 ||
                    cmp(abs(active[r][c]), abs(active[static_cast<size_t>(best)][c])) < 0)
                    best = static_cast<int>(r);
            }
            if (best < 0) break;
            auto& piv = active[static_cast<size_t>(best)];
            bool others = false;
            for (size_t r = 0; r < active.size(); ++r) {
                if (static_cast<int>(r) == best || active[r][c] == 0) continue;
                others = true;
                ZInt q;
                mpz_tdiv_q(q.get_mpz_t(), active[r][c].get_mpz_t(), piv[c].get_mpz_t());
                for (int j = 0; j <= c; ++j) active[r][j] -= q * piv[j];
            }
            if (!others) {
                if (piv[c] < 0)
                    for (auto& x : piv) x = -x;
                pivot_col.push_back(c);
                pivots.push_back(piv);
                active.erase(active.begin() + best);
                break;
            }
            // drop rows that became zero
            active.erase(std::remove_if(active.begin(), active.end(),
                                        [](const std::vector<ZInt>& row) {
                                            for (const auto& x : row)
                                                if (x != 0) return false;
                                            return true;
                                        }),
                         active.end());
        }
    }

    // pivots were collected right-to-left; order by ascending pivot column
    std::reverse(pivots.begin(), pivots.end());
    std::reverse(pivot_col.begin(), pivot_col.end());

    // reduce entries at earlier pivot columns into canonical residues
    for (size_t i = 0; i < pivots.size(); ++i) {
        for (size_t j = i; j-- > 0;) {
            int c = pivot_col[j];
            ZInt q;
            mpz_fdiv_q(q.get_mpz_t(), pivots[i][static_cast<size_t>(c)].get_mpz_t(),
                       pivots[j][static_cast<size_t>(c)].get_mpz_t());
            if (q != 0)
                for (int col = 0; col <= c; ++col)
                    pivots[i][static_cast<size_t>(col)] -= q * pivots[j][static_cast<size_t>(col)];
        }
    }
    return pivots;
}

std::vector<std::vector<ZInt>> integer_column_kernel(const ZMat& m) {
    SmithResult snf = smith_normal_form(m);
    std::vector<std::vector<ZInt>> basis;
    for (int j = snf.rank; j < m.cols; ++j) {
        std::vector<ZInt> col(static_cast<size_t>(m.cols));
        for (int r = 0; r < m.cols; ++r) col[static_cast<size_t>(r)] = snf.v.at(r, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

std::vector<std::vector<ZInt>> integer_row_kernel(const ZMat& m) {
    SmithResult snf = smith_normal_form(m);
    std::vector<std::vector<ZInt>> basis;
    for (int r = snf.rank; r < m.rows; ++r) {
        std::vector<ZInt> row(static_cast<size_t>(m.rows));
        for (int c = 0; c < m.rows; ++c) row[static_cast<size_t>(c)] = snf.u.at(r, c);
        basis.push_back(std::move(row));
    }
    return basis;
}

std::optional<std::vector<QInt>> solve_row_combination(
    const std::vector<std::vector<ZInt>>& rows, const std::vector<QInt>& x) {
    const int nr = static_cast<int>(rows.size());
    if (nr == 0) {
        for (const auto& v : x)
            if (v != 0) return std::nullopt;
        return std::vector<QInt>{};
    }
    const int nc = static_cast<int>(rows[0].size());
    // augmented system: columns are the unknown coefficients
    std::vector<std::vector<QInt>> aug(static_cast<size_t>(nc),
                                       std::vector<QInt>(static_cast<size_t>(nr) + 1));
    for (int c = 0; c < nc; ++c) {
        for (int r = 0; r < nr; ++r)
            aug[static_cast<size_t>(c)][static_cast<size_t>(r)] =
                QInt(rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        aug[static_cast<size_t>(c)][static_cast<size_t>(nr)] = x[static_cast<size_t>(c)];
    }

    std::vector<int> pivot_of_col(static_cast<size_t>(nr), -1);
    int row = 0;
    for (int col = 0; col < nr && row < nc; ++col) {
        int sel = -1;
        for (int r = row; r < nc; ++r)
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(aug[static_cast<size_t>(sel)], aug[static_cast<size_t>(row)]);
        QInt inv = aug[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& v : aug[static_cast<size_t>(row)]) v /= inv;
        for (int r = 0; r < nc; ++r) {
            if (r == row) continue;
            QInt f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c2 = col; c2 <= nr; ++c2)
                aug[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                    f * aug[static_cast<size_t>(row)][static_cast<size_t>(c2)];
        }
        pivot_of_col[static_cast<size_t>(col)] = row;
        ++row;
    }
    // consistency: zero rows must have zero rhs
    for (int r = row; r < nc; ++r)
        if (aug[static_cast<size_t>(r)][static_cast<size_t>(nr)] != 0) return std::nullopt;

    std::vector<QInt> sol(static_cast<size_t>(nr));
    for (int col = 0; col < nr; ++col)
        if (pivot_of_col[static_cast<size_t>(col)] >= 0)
            sol[static_cast<size_t>(col)] =
                aug[static_cast<size_t>(pivot_of_col[static_cast<size_t>(col)])]
                   [static_cast<size_t>(nr)];
    return sol;
}

bool zp_member(const std::vector<std::vector<ZInt>>& rows, const std::vector<ZInt>& x,
               int64_t p) {
    std::vector<QInt> xq(x.size());
    for (size_t i = 0; i < x.size(); ++i) xq[i] = QInt(x[i]);
    auto sol = solve_row_combination(rows, xq);
    if (!sol) return false;
    for (const auto& c : *sol) {
        if (c == 0) continue;
        if (valuation_q(c, p) < 0) return false;
    }
    return true;
}

ZMat unimodular_inverse(const ZMat& m) {
    if (m.rows != m.cols) throw MathError("unimodular_inverse: square matrix required");
    const int n = m.rows;
    std::vector<std::vector<QInt>> aug(static_cast<size_t>(n),
                                       std::vector<QInt>(static_cast<size_t>(2 * n)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug[static_cast<size_t>(r)][static_cast<size_t>(c)] = QInt(m.at(r, c));
        aug[static_cast<size_t>(r)][static_cast<size_t>(n + r)] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) throw MathError("unimodular_inverse: singular matrix");
        std::swap(aug[static_cast<size_t>(sel)], aug[static_cast<size_t>(col)]);
        QInt piv = aug[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (auto& v : aug[static_cast<size_t>(col)]) v /= piv;
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            QInt f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c = 0; c < 2 * n; ++c)
                aug[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * aug[static_cast<size_t>(col)][static_cast<size_t>(c)];
        }
    }
    ZMat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const QInt& q = aug[static_cast<size_t>(r)][static_cast<size_t>(n + c)];
            if (q.get_den() != 1) throw MathError("unimodular_inverse: matrix is not unimodular");
            inv.at(r, c) = ZInt(q.get_num());
        }
    return inv;
}

int rational_rank(const std::vector<std::vector<ZInt>>& rows, int cols) {
    std::vector<std::vector<QInt>> work;
    for (const auto& r : rows) {
        std::vector<QInt> q(r.size());
        for (size_t i = 0; i < r.size(); ++i) q[i] = QInt(r[i]);
        work.push_back(std::move(q));
    }
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(work.size()); ++c) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(work.size()); ++r)
            if (work[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(work[static_cast<size_t>(sel)], work[static_cast<size_t>(rank)]);
        for (int r = 0; r < static_cast<int>(work.size()); ++r) {
            if (r == rank) continue;
            QInt f = work[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                     work[static_cast<size_t>(rank)][static_cast<size_t>(c)];
            if (f == 0) continue;
            for (int c2 = c; c2 < cols; ++c2)
                work[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                    f * work[static_cast<size_t>(rank)][static_cast<size_t>(c2)];
        }
        ++rank;
    }
    return rank;
}

}  // namespace latzeta
