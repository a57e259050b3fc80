#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/structure_algebra.hpp"
#include "lattice/hnf.hpp"

namespace latzeta::bruhat {

// Primitive lattice presented as D * beta * C_sigma: a diagonal of p-powers
// from the elementary-divisor type, a lower-unitriangular beta with entry
// (r, c) reduced modulo p^{sum of r_iota over c < iota <= r}, and a column
// permutation.  Row/column indices are 0-based here; jump positions iota
// stay 1-based as in the type.
struct BruhatCell {
    int n = 0;
    int64_t p = 0;
    lattice::DivisorType type;
    std::vector<int> sigma;     // column c of beta lands in column sigma[c]
    std::vector<int64_t> beta;  // n*n row-major, unit diagonal

    int64_t b(int r, int c) const { return beta[static_cast<size_t>(r) * n + c]; }
    int64_t& b(int r, int c) { return beta[static_cast<size_t>(r) * n + c]; }

    // residue modulus exponent of entry (r, c), r > c
    int residue_exponent(int r, int c) const;

    std::string str() const;
};

// sum of r_iota over 1-based jump positions lo <= iota <= hi
int sum_r(const lattice::DivisorType& t, int lo, int hi);

// All cells of the given primitive type and permutation; the number of beta
// residues is p^{sum of residue exponents} and must stay below the budget.
std::vector<BruhatCell> cells_for_type(int n, int64_t p, const lattice::DivisorType& type,
                                       const std::vector<int>& sigma, uint64_t budget);

// All primitive divisor types of index exponent <= i_budget (excluding no
// lattice; the trivial type of the full lattice is included).
std::vector<lattice::DivisorType> primitive_types(int n, int i_budget);

std::vector<std::vector<int>> all_permutations(int n);

// The lattice spanned by the rows of D * beta * C_sigma.
lattice::HNFLattice cell_lattice(const BruhatCell& cell);

// Exact integer inverse of the unitriangular beta.
std::vector<ZInt> beta_inverse(const BruhatCell& cell);

enum class IndexConvention { Direct, Inverse };

// f^m_{k,l}(beta) = sum_{i,j} beta_ki beta_lj l_ij(beta^{-1}[m]) with the
// structure constants read through sigma; all indices 0-based.
ZInt f_klm(const BruhatCell& cell, const algebra::StructureAlgebra& a, int k, int l, int m,
           IndexConvention conv = IndexConvention::Direct);

// The divisibility conditions on all f^m_{k,l}; equivalent to membership of
// all products for the represented lattice.  homothety_shift adds the
// weakening exponent used for non-primitive homotheties p^shift * Lambda.
bool subalgebra_condition(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                          int homothety_shift = 0,
                          IndexConvention conv = IndexConvention::Direct);

// Weighted-homogeneity identity for a graded algebra, as an exact congruence
// mod p^K:  lambda^{w_m} f(beta') = lambda^{w_k + w_l} f(beta) for the
// substitution beta_rc -> lambda^{w_r - w_c} beta_rc (weights read through
// sigma).
bool homogeneity_check(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                       int64_t lambda_unit, int K);

struct OrbitStats {
    int mult_orbit_valuation = 0;  // v_p of the dilation-orbit size
    int delta = 0;                 // v_p of the additive-orbit size
    int eps_plus = 0;              // (v+1)(n-1)
    int eps_minus = 0;             // (v-1)(n-1)
    int iota_star = 0;             // 1-based jump with maximal r
    int r_star = 0;                // 0-based row index used by the additive action
    int c_star = 0;                // 0-based column index
};

// Dilation and transvection orbit data; requires a graded algebra and a
// nontrivial type.
OrbitStats orbit_stats(const BruhatCell& cell, const algebra::StructureAlgebra& a);

// The orbit-lemma inequalities for one cell; all must hold.
struct LemmaCheck {
    bool beta_added = true;
    bool beta_inv_added = true;
    bool beta_influenced = true;
    bool beta_inv_influenced = true;
    // the same inequalities with (v-1)(n-1) in place of (v+1)(n-1)
    bool influenced_minus_variant = true;
    bool all_plus() const {
        return beta_added && beta_inv_added && beta_influenced && beta_inv_influenced;
    }
};

LemmaCheck check_orbit_lemmas(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                              const OrbitStats& stats);

// Weight preservation under beta -> beta * M_{r*c*}(mu); the threshold on
// v(mu) must hold (throws otherwise).  Returns true when the transformed
// lattice has the same weight.
bool additive_weight_preservation(const BruhatCell& cell, const algebra::StructureAlgebra& a,
                                  const ZInt& mu);

}  // namespace latzeta::bruhat
