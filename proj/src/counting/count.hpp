#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra/structure_algebra.hpp"
#include "lattice/enumerate.hpp"
#include "lattice/hnf.hpp"
#include "support/parallel.hpp"

namespace latzeta::counting {

enum class Kind { Lattice, Subalgebra, Ideal };

std::string to_string(Kind k);
std::optional<Kind> kind_from_string(const std::string& s);

bool is_subalgebra(const lattice::HNFLattice& l, const algebra::StructureAlgebra& a);
bool is_ideal(const lattice::HNFLattice& l, const algebra::StructureAlgebra& a);

// Least w with p^w l closed under multiplication; requires a primitive
// lattice.  Computed from basis-pair product deficiencies.
int weight(const lattice::HNFLattice& l, const algebra::StructureAlgebra& a);

// All counters produced by one enumeration pass over index p^i.
struct PassResult {
    ZInt lattices;
    ZInt subalgebras;
    ZInt ideals;
    ZInt primitives;
    // primitive lattices by weight, and by (lambda, weight)
    std::map<int, ZInt> by_weight;
    std::map<std::pair<std::vector<int>, int>, ZInt> by_type;
};

struct PassOptions {
    bool subalgebras = true;
    bool ideals = true;
    bool strata = false;
};

PassResult run_pass(const algebra::StructureAlgebra& a, int i, const PassOptions& opts,
                    const Parallel& par);

ZInt count(const algebra::StructureAlgebra& a, int i, Kind kind, const Parallel& par);

// Full table through i_max; strata recorded for i <= strata_i_max.
struct CountTable {
    std::string algebra_name;
    int n = 0;
    int64_t p = 0;
    std::vector<ZInt> lattices;      // index i
    std::vector<ZInt> subalgebras;
    std::vector<ZInt> ideals;
    std::vector<ZInt> primitives;
    int strata_i_max = -1;
    std::vector<std::map<int, ZInt>> by_weight;                            // [i][w]
    std::map<std::pair<std::vector<int>, int>, ZInt> by_type;              // (lambda, w)

    int i_max() const { return static_cast<int>(lattices.size()) - 1; }
    std::string to_records() const;
    std::string to_text() const;
};

CountTable count_table(const algebra::StructureAlgebra& a, int i_max, int strata_i_max,
                       const Parallel& par);

// c_k = sum over i + n*w = k of the weight strata; needs strata through k_max.
std::vector<ZInt> c_series(const CountTable& t, int k_max);

// (a^{not<=}, a^{not<|}) at index p^i, from the abelian count.
std::pair<ZInt, ZInt> non_subalgebra_counts(const CountTable& t, int i);

// Centre-splitting counter for class-2 algebras; must agree with count().
ZInt class2_split_count(const algebra::StructureAlgebra& a, int i, Kind kind,
                        const Parallel& par);

// Both sides of the index-raising double count at level i, with the
// per-object congruence witnesses.
struct GrowthIdentityReport {
    ZInt lhs;  // sum over subalgebras H of index p^i of a_p(H)
    ZInt rhs;  // sum over subalgebras K of index p^{i+1} of b_p(K)
    bool identity_holds = false;
    bool all_a_congruent = false;  // every a_p(H) = 1 mod p
    bool all_b_congruent = false;  // every b_p(K) = 1 mod p
    std::string str() const;
};

GrowthIdentityReport local_growth_identity_check(const algebra::StructureAlgebra& a, int i,
                                                 const Parallel& par);

// Multiplication of a subalgebra lattice re-expressed in its own basis.
algebra::StructureAlgebra induced_algebra(const lattice::HNFLattice& h,
                                          const algebra::StructureAlgebra& a);

}  // namespace latzeta::counting
