#pragma once

#include <optional>
#include <string>
#include <vector>

#include "support/numeric.hpp"
#include "support/zmat.hpp"

namespace latzeta::algebra {

// Finite-dimensional Z_p-algebra given by integer structure constants
// c[i][j][k]:  e_i * e_j = sum_k c[i][j][k] e_k.
struct StructureAlgebra {
    std::string name;
    int n = 0;
    int64_t p = 0;
    std::vector<int64_t> constants;  // dense n^3, index ((i*n)+j)*n+k

    struct Term {
        int i, j, k;
        int64_t v;
    };
    std::vector<Term> terms;  // nonzero constants, for sparse products

    // basis-adapted grading weights, non-decreasing, verified on construction
    std::optional<std::vector<int>> weights;

    StructureAlgebra() = default;
    StructureAlgebra(std::string name_, int n_, int64_t p_);

    int64_t c(int i, int j, int k) const {
        return constants[(static_cast<size_t>(i) * n + j) * n + k];
    }
    void set_c(int i, int j, int k, int64_t v);
    void rebuild_terms();

    bool is_abelian() const { return terms.empty(); }
    int64_t max_abs_constant() const;
};

// Basis of a submodule of Z^n, rows linearly independent over Q.
struct SubmoduleBasis {
    int n = 0;
    std::vector<std::vector<ZInt>> rows;
    bool saturated = false;

    int rank() const { return static_cast<int>(rows.size()); }
};

enum class ResidualVerdict { Verified, RefutedAtDepth, Inconclusive };

std::string to_string(ResidualVerdict v);

// Bilinear extension of the structure constants.
std::vector<ZInt> multiply(const StructureAlgebra& a, const std::vector<ZInt>& x,
                           const std::vector<ZInt>& y);

// Anticommutativity (including e_i * e_i = 0) and the Jacobi identity on
// basis triples.
bool is_lie(const StructureAlgebra& a);

// Least c with T_{c+1} = 0 for the descending product chain
// T_1 = Z^n, T_{k+1} = T_k*A + A*T_k; nullopt if the chain survives past
// depth_bound.
std::optional<int> nilpotency_class(const StructureAlgebra& a, int depth_bound);

// Chain-based semidecision: Verified when T_k falls into p^m Z^n within
// depth_bound steps, RefutedAtDepth when the chain stabilizes at a nonzero
// lattice (as Z_p-modules), Inconclusive otherwise.
ResidualVerdict is_residually_nilpotent(const StructureAlgebra& a, int m, int depth_bound);

// c[i][j][k] != 0  =>  w_k = w_i + w_j.
bool verify_grading(const StructureAlgebra& a, const std::vector<int>& weights);

// Saturated basis of { z : e_k z = z e_k = 0 for all k }.
SubmoduleBasis centre(const StructureAlgebra& a);

// Multiplication data of a class-2 algebra split through its centre:
// A/Z(A) = Z^a with products landing in centre coordinates Z^b.
struct Class2Structure {
    int a = 0;  // dim A/Z(A)
    int b = 0;  // dim Z(A)
    // product[r][s] in Z^b: image of (lift_r * lift_s) in centre coordinates
    std::vector<std::vector<std::vector<ZInt>>> product;
};

// Requires nilpotency class <= 2 (every product must land in the centre).
Class2Structure class2_structure(const StructureAlgebra& a);

// Algebra on the rescaled basis p*e_i; every constant is multiplied by p.
StructureAlgebra pi_scale(const StructureAlgebra& a);

// diag(lambda^{w_1}, ..., lambda^{w_n}) mod p^K for a p-unit lambda; checks
// the homomorphism property on the structure constants mod p^K.
std::vector<int64_t> dilation_matrix(const StructureAlgebra& a, int64_t lambda_unit, int K);

// R(x): the matrix of linear forms l_{ij}(x) = sum_q c[i][j][q] x_q
// evaluated at a concrete vector.
ZMat mult_matrix(const StructureAlgebra& a, const std::vector<ZInt>& x);

// Attaches weights after verifying the grading condition; throws on failure.
void attach_weights(StructureAlgebra& a, std::vector<int> weights);

}  // namespace latzeta::algebra
