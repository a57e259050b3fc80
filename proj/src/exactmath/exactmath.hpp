#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exactmath/series.hpp"
#include "exactmath/valuation.hpp"

namespace latzeta::exactmath {

// Gaussian binomial coefficient evaluated at integer q >= 2:
//   prod_{k=0}^{b-1} (1 - q^(a-k)) / prod_{k=1}^{b} (1 - q^k).
// Zero for b > a; an integer whenever a >= b.
QInt gaussian_binomial(int a, int b, int64_t q);

// prod_{j=1}^{n-1} (1 - q^j)^(-1); the empty product for n = 1.
QInt limit_gaussian(int n, int64_t q);

// One factor (1 - p^a t^b)^multiplicity of a candidate denominator.
struct DenomFactor {
    int a = 0;
    int b = 1;
    int multiplicity = 1;

    auto operator<=>(const DenomFactor&) const = default;
};

struct RationalFit {
    std::vector<ZInt> numerator;       // coefficient i of t^i
    std::vector<DenomFactor> factors;  // sorted by (a, b)
    int verified_through = 0;

    int denominator_degree() const;
    TruncatedSeries expand(int64_t p, int i_max) const;
    std::string str() const;
};

// Finds an exact rational-function representation of the series whose
// denominator is a product of candidate factors (1 - p^a t^b).  Among the
// denominators that reproduce every supplied coefficient, one of minimal
// degree is returned, ties broken by lexicographic order on the expanded
// factor list.  Numerator coefficients are solved exactly from the trial
// denominator; min_spare trailing coefficients must be left over as a
// verification margin.  No fit -> nullopt.
std::optional<RationalFit> fit_rational(const TruncatedSeries& series,
                                        const std::set<std::pair<int, int>>& candidates,
                                        int max_multiplicity, int min_spare = 2);

struct PadicReport {
    std::vector<Valuation> step;      // v_p(a_i - a_{i+1})
    std::vector<Valuation> to_target; // v_p(a_i - target), when a target is given
    bool step_nondecreasing = false;
    bool target_nondecreasing = false;
    std::string str() const;
};

// Valuation table describing p-adic convergence of a sequence at finite depth.
PadicReport padic_limit_report(const std::vector<QInt>& sequence, int64_t p,
                               const std::optional<QInt>& target = std::nullopt);

}  // namespace latzeta::exactmath
