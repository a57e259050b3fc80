#include "algebra/structure_algebra.hpp"

#include <algorithm>

namespace latzeta::algebra {

StructureAlgebra::StructureAlgebra(std::string name_, int n_, int64_t p_)
    : name(std::move(name_)), n(n_), p(p_),
      constants(static_cast<size_t>(n_) * n_ * n_, 0) {
    if (n < 1) throw MathError("algebra dimension must be >= 1");
    if (p < 2) throw MathError("algebra prime must be >= 2");
}

void StructureAlgebra::set_c(int i, int j, int k, int64_t v) {
    constants[(static_cast<size_t>(i) * n + j) * n + k] = v;
}

void StructureAlgebra::rebuild_terms() {
    terms.clear();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (c(i, j, k) != 0) terms.push_back({i, j, k, c(i, j, k)});
}

int64_t StructureAlgebra::max_abs_constant() const {
    int64_t m = 0;
    for (const auto& t : terms) m = std::max(m, std::abs(t.v));
    return m;
}

std::string to_string(ResidualVerdict v) {
    switch (v) {
        case ResidualVerdict::Verified: return "verified";
        case ResidualVerdict::RefutedAtDepth: return "refuted-at-depth";
        default: return "inconclusive";
    }
}

std::vector<ZInt> multiply(const StructureAlgebra& a, const std::vector<ZInt>& x,
                           const std::vector<ZInt>& y) {
    if (static_cast<int>(x.size()) != a.n || static_cast<int>(y.size()) != a.n)
        throw MathError("multiply: vector length");
    std::vector<ZInt> z(static_cast<size_t>(a.n));
    for (const auto& t : a.terms) {
        if (x[static_cast<size_t>(t.i)] == 0 || y[static_cast<size_t>(t.j)] == 0) continue;
        z[static_cast<size_t>(t.k)] += t.v * x[static_cast<size_t>(t.i)] * y[static_cast<size_t>(t.j)];
    }
    return z;
}

bool is_lie(const StructureAlgebra& a) {
    const int n = a.n;
    auto basis = [n](int i) {
        std::vector<ZInt> e(static_cast<size_t>(n));
        e[static_cast<size_t>(i)] = 1;
        return e;
    };
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a.c(i, i, k) != 0) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (a.c(i, j, k) != -a.c(j, i, k)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                auto ei = basis(i), ej = basis(j), ek = basis(k);
                auto s = multiply(a, multiply(a, ei, ej), ek);
                auto t = multiply(a, multiply(a, ej, ek), ei);
                auto u = multiply(a, multiply(a, ek, ei), ej);
                for (int q = 0; q < n; ++q)
                    if (s[static_cast<size_t>(q)] + t[static_cast<size_t>(q)] +
                            u[static_cast<size_t>(q)] != 0)
                        return false;
            }
    return true;
}

namespace {

// One step of the descending product chain: span of b*e and e*b for chain
// basis vectors b and standard basis vectors e.
std::vector<std::vector<ZInt>> chain_step(const StructureAlgebra& a,
                                          const std::vector<std::vector<ZInt>>& basis) {
    std::vector<std::vector<ZInt>> gens;
    std::vector<ZInt> e(static_cast<size_t>(a.n));
    for (const auto& b : basis) {
        for (int k = 0; k < a.n; ++k) {
            std::fill(e.begin(), e.end(), ZInt(0));
            e[static_cast<size_t>(k)] = 1;
            gens.push_back(multiply(a, b, e));
            gens.push_back(multiply(a, e, b));
        }
    }
    return hnf_row_basis(gens, a.n);
}

std::vector<std::vector<ZInt>> full_basis(int n) {
    std::vector<std::vector<ZInt>> rows(static_cast<size_t>(n),
                                        std::vector<ZInt>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return rows;
}

bool zp_equal_span(const std::vector<std::vector<ZInt>>& x,
                   const std::vector<std::vector<ZInt>>& y, int64_t p) {
    if (x.size() != y.size()) return false;
    for (const auto& row : x)
        if (!zp_member(y, row, p)) return false;
    for (const auto& row : y)
        if (!zp_member(x, row, p)) return false;
    return true;
}

bool inside_p_power(const std::vector<std::vector<ZInt>>& rows, int64_t p, int m) {
    ZInt pm = pow_z(p, m);
    for (const auto& row : rows)
        for (const auto& x : row)
            if (x % pm != 0) return false;
    return true;
}

}  // namespace

std::optional<int> nilpotency_class(const StructureAlgebra& a, int depth_bound) {
    if (depth_bound < 1) throw MathError("nilpotency_class: depth_bound must be >= 1");
    auto t = full_basis(a.n);
    for (int k = 1; k <= depth_bound; ++k) {
        auto next = chain_step(a, t);
        if (next.empty()) return k;  // T_{k+1} = 0
        t = std::move(next);
    }
    return std::nullopt;
}

ResidualVerdict is_residually_nilpotent(const StructureAlgebra& a, int m, int depth_bound) {
    if (m < 1) throw MathError("is_residually_nilpotent: m must be >= 1");
    auto t = full_basis(a.n);
    for (int k = 1; k <= depth_bound; ++k) {
        auto next = chain_step(a, t);
        if (inside_p_power(next, a.p, m)) return ResidualVerdict::Verified;
        if (!next.empty() && zp_equal_span(next, t, a.p))
            return ResidualVerdict::RefutedAtDepth;
        t = std::move(next);
    }
    return ResidualVerdict::Inconclusive;
}

bool verify_grading(const StructureAlgebra& a, const std::vector<int>& weights) {
    if (static_cast<int>(weights.size()) != a.n) throw MathError("verify_grading: weight count");
    for (int w : weights)
        if (w <= 0) throw MathError("verify_grading: weights must be positive");
    for (const auto& t : a.terms)
        if (weights[static_cast<size_t>(t.k)] !=
            weights[static_cast<size_t>(t.i)] + weights[static_cast<size_t>(t.j)])
            return false;
    return true;
}

void attach_weights(StructureAlgebra& a, std::vector<int> weights) {
    for (size_t i = 0; i + 1 < weights.size(); ++i)
        if (weights[i] > weights[i + 1])
            throw MathError("grading weights must be non-decreasing");
    if (!verify_grading(a, weights)) throw MathError("grading condition fails for given weights");
    a.weights = std::move(weights);
}

SubmoduleBasis centre(const StructureAlgebra& a) {
    // stack the constraints sum_j c[k][j][m] z_j = 0 and sum_j c[j][k][m] z_j = 0
    const int n = a.n;
    ZMat m(2 * n * n, n);
    int row = 0;
    for (int k = 0; k < n; ++k)
        for (int q = 0; q < n; ++q) {
            for (int j = 0; j < n; ++j) m.at(row, j) = a.c(k, j, q);
            ++row;
            for (int j = 0; j < n; ++j) m.at(row, j) = a.c(j, k, q);
            ++row;
        }
    auto kernel = integer_column_kernel(m);
    SubmoduleBasis basis;
    basis.n = n;
    basis.rows = hnf_row_basis(kernel, n);
    basis.saturated = true;
    return basis;
}

Class2Structure class2_structure(const StructureAlgebra& a) {
    auto z = centre(a);
    const int n = a.n;
    const int b = z.rank();
    const int dim_a = n - b;

    // complete the saturated centre basis to a basis of Z^n: for
    // Z = U^{-1} S V^{-1} with S = (I_b | 0), the first b rows of V^{-1}
    // span the centre and the remaining rows are lifts of a quotient basis
    std::vector<std::vector<ZInt>> lifts;
    if (dim_a > 0) {
        ZMat zm(b > 0 ? b : 1, n);
        if (b == 0)
            for (int c = 0; c < n; ++c) zm.at(0, c) = 0;
        for (int r = 0; r < b; ++r)
            for (int c = 0; c < n; ++c)
                zm.at(r, c) = z.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        SmithResult snf = smith_normal_form(zm);
        for (int r = 0; r < snf.rank; ++r)
            if (abs(snf.s.at(r, r)) != 1)
                throw MathError("class2_structure: centre basis not saturated");
        ZMat vinv = unimodular_inverse(snf.v);
        for (int r = b; r < n; ++r) {
            std::vector<ZInt> lift(static_cast<size_t>(n));
            for (int c = 0; c < n; ++c) lift[static_cast<size_t>(c)] = vinv.at(r, c);
            lifts.push_back(std::move(lift));
        }
    }

    Class2Structure s;
    s.a = dim_a;
    s.b = b;
    s.product.assign(static_cast<size_t>(dim_a),
                     std::vector<std::vector<ZInt>>(static_cast<size_t>(dim_a)));
    for (int r = 0; r < dim_a; ++r)
        for (int c = 0; c < dim_a; ++c) {
            auto prod = multiply(a, lifts[static_cast<size_t>(r)], lifts[static_cast<size_t>(c)]);
            std::vector<QInt> pq(prod.size());
            for (size_t k = 0; k < prod.size(); ++k) pq[k] = QInt(prod[k]);
            auto coords = solve_row_combination(z.rows, pq);
            if (!coords) throw MathError("class2_structure: product not in centre (class > 2)");
            std::vector<ZInt> out(static_cast<size_t>(b));
            for (int k = 0; k < b; ++k) {
                const QInt& q = (*coords)[static_cast<size_t>(k)];
                if (q.get_den() != 1)
                    throw MathError("class2_structure: non-integral centre coordinates");
                out[static_cast<size_t>(k)] = ZInt(q.get_num());
            }
            s.product[static_cast<size_t>(r)][static_cast<size_t>(c)] = std::move(out);
        }
    return s;
}

StructureAlgebra pi_scale(const StructureAlgebra& a) {
    StructureAlgebra r(a.name.empty() ? "" : ("pi-" + a.name), a.n, a.p);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            for (int k = 0; k < a.n; ++k) {
                int64_t v = a.c(i, j, k);
                if (v != 0 && std::abs(v) > INT64_MAX / a.p)
                    throw MathError("pi_scale: constant overflow");
                r.set_c(i, j, k, v * a.p);
            }
    r.rebuild_terms();
    r.weights = a.weights;
    return r;
}

std::vector<int64_t> dilation_matrix(const StructureAlgebra& a, int64_t lambda_unit, int K) {
    if (!a.weights) throw MathError("dilation_matrix: algebra has no grading");
    if (K < 1) throw MathError("dilation_matrix: precision must be >= 1");
    int64_t mod = checked_pow_i64(a.p, K);
    if (mod_floor(lambda_unit, a.p) == 0) throw MathError("dilation_matrix: lambda is not a p-unit");
    const auto& w = *a.weights;
    std::vector<int64_t> diag(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i)
        diag[static_cast<size_t>(i)] = pow_mod(lambda_unit, w[static_cast<size_t>(i)], mod);
    // homomorphism check on structure constants: T e_i * T e_j = T(e_i e_j)
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            for (int k = 0; k < a.n; ++k) {
                int64_t lhs = mul_mod(mul_mod(diag[static_cast<size_t>(i)],
                                              diag[static_cast<size_t>(j)], mod),
                                      mod_floor(a.c(i, j, k), mod), mod);
                int64_t rhs = mul_mod(mod_floor(a.c(i, j, k), mod),
                                      diag[static_cast<size_t>(k)], mod);
                if (lhs != rhs) throw MathError("dilation_matrix: homomorphism check failed");
            }
    return diag;
}

ZMat mult_matrix(const StructureAlgebra& a, const std::vector<ZInt>& x) {
    if (static_cast<int>(x.size()) != a.n) throw MathError("mult_matrix: vector length");
    ZMat m(a.n, a.n);
    for (const auto& t : a.terms) m.at(t.i, t.j) += t.v * x[static_cast<size_t>(t.k)];
    return m;
}

}  // namespace latzeta::algebra
