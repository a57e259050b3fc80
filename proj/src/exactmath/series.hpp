#pragma once

#include <string>
#include <vector>

#include "support/numeric.hpp"

namespace latzeta::exactmath {

// Power series in t with exact rational coefficients, truncated at a fixed
// order.  All arithmetic agrees with polynomial arithmetic mod t^(I_max+1).
struct TruncatedSeries {
    int64_t p = 0;  // prime the series belongs to (q = p in every formula)
    std::vector<QInt> coeff;

    TruncatedSeries() = default;
    TruncatedSeries(int64_t prime, int i_max)
        : p(prime), coeff(static_cast<size_t>(i_max) + 1) {}

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    const QInt& operator[](int i) const { return coeff[static_cast<size_t>(i)]; }
    QInt& operator[](int i) { return coeff[static_cast<size_t>(i)]; }

    static TruncatedSeries one(int64_t prime, int i_max);

    TruncatedSeries add(const TruncatedSeries& o) const;
    TruncatedSeries sub(const TruncatedSeries& o) const;
    TruncatedSeries mul(const TruncatedSeries& o) const;
    // division by a series with nonzero constant term
    TruncatedSeries div(const TruncatedSeries& o) const;

    // in-place multiply by (1 - p^a t^b)
    void mul_factor(int a, int b);

    bool operator==(const TruncatedSeries& o) const {
        return p == o.p && coeff == o.coeff;
    }

    std::string str() const;
};

}  // namespace latzeta::exactmath
