#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exactmath/series.hpp"
#include "igusa/polysystem.hpp"
#include "support/parallel.hpp"

namespace latzeta::igusa {

// M_i = number of solutions of f = 0 mod p^i, by direct sweep over
// (Z/p^i)^n.  Throws when p^{n i} exceeds the budget.
ZInt count_naive(const PolySystem& f, int i, uint64_t budget = 10000000);

struct SolutionCounts {
    std::vector<ZInt> M;  // index 0..i_max, M[0] = 1
    int i_max() const { return static_cast<int>(M.size()) - 1; }
};

// Lifting-tree counter: solutions mod p^{k+1} extend solutions mod p^k;
// for square systems, points with unit Jacobian determinant mod p are
// moved to a unique-lift counter instead of being extended.
SolutionCounts count_tree(const PolySystem& f, int i_max, uint64_t budget = 50000000);

// Coefficients M_i p^{-n i} of the Poincare-style series, and the truncated
// igusa series recovered from (1 - t I(t))/(1 - t) = P(t).
struct PoincareData {
    exactmath::TruncatedSeries poincare;      // order i_max
    exactmath::TruncatedSeries igusa_series;  // order i_max - 1
};
PoincareData poincare_coeffs(const PolySystem& f, const SolutionCounts& counts);

struct SlopeReport {
    std::vector<ZInt> M;
    std::vector<long> valuation;       // v_p(M_i); -1 marks M_i = 0
    std::vector<QInt> slope;           // v_p(M_i)/i for i >= 1 with M_i != 0
    std::optional<QInt> running_min;   // finite-depth liminf estimate
    std::string str() const;
};

SlopeReport slope_report(const PolySystem& f, const SolutionCounts& counts);

// Valuations of the elementary divisors of the Jacobian at a, computed mod
// p^K; the system is padded with zero rows up to n; entries >= K are capped
// at K.
std::vector<int> jacobian_profile(const PolySystem& f, const std::vector<int64_t>& a, int K);

struct ReverseHenselResult {
    bool hypothesis_holds = false;
    int precision = 0;
    std::vector<int64_t> counterexample;  // point a when the hypothesis fails
    int failing_j = -1;
    QInt bound;          // -n + sum lambda_j / 2 (meaningful on success)
    bool slope_check_ok = false;
    std::string str() const;
};

// Sweeps all a mod p^K and checks 2 v(delta_j) >= lambda_j v(f(a)) with both
// sides capped at the working precision; on success cross-checks the count
// valuations v(M_{2i}) >= i * sum lambda and v(M_{2i+1}) >= i * sum lambda
// over the supplied window.
ReverseHenselResult reverse_hensel_check(const PolySystem& f, const std::vector<QInt>& lambdas,
                                         int K, int slope_window_i_max,
                                         uint64_t budget = 10000000);

struct HenselResult {
    bool applicable = false;
    std::vector<ZInt> root;  // mod p^{k_target}
    long det_valuation = 0;
    std::string str() const;
};

// Newton lifting for square systems under 2 v(det J_f(a)) < v(f(a)).
HenselResult hensel_lift(const PolySystem& f, const std::vector<ZInt>& a, int k_target);

struct HomogBoundReport {
    bool homogeneous = false;
    bool all_degrees_ge_2 = false;
    std::vector<QInt> margin;  // per i >= 1; all must be >= 0
    bool verdict = false;
    std::string str() const;
};

// Margin sequence for v(M_i)/i >= n/(n+1) - slack(i) with the proof's
// constant offsets (1 at even i, 1 + n at odd i).
HomogBoundReport homogeneous_bound_check(const PolySystem& f, int i_max,
                                         uint64_t budget = 50000000);

}  // namespace latzeta::igusa
