#include "exactmath/series.hpp"

#include <sstream>

namespace latzeta::exactmath {

TruncatedSeries TruncatedSeries::one(int64_t prime, int i_max) {
    TruncatedSeries s(prime, i_max);
    s.coeff[0] = 1;
    return s;
}

namespace {
void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.p != b.p || a.coeff.size() != b.coeff.size())
        throw MathError("series mismatch (prime or truncation order)");
}
}  // namespace

TruncatedSeries TruncatedSeries::add(const TruncatedSeries& o) const {
    require_compatible(*this, o);
    TruncatedSeries r(p, order());
    for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] + o.coeff[i];
    return r;
}

TruncatedSeries TruncatedSeries::sub(const TruncatedSeries& o) const {
    require_compatible(*this, o);
    TruncatedSeries r(p, order());
    for (size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] - o.coeff[i];
    return r;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
    require_compatible(*this, o);
    TruncatedSeries r(p, order());
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] == 0) continue;
        for (size_t j = 0; i + j < coeff.size(); ++j) {
            if (o.coeff[j] == 0) continue;
            r.coeff[i + j] += coeff[i] * o.coeff[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::div(const TruncatedSeries& o) const {
    require_compatible(*this, o);
    if (o.coeff[0] == 0) throw MathError("series division by non-unit");
    TruncatedSeries r(p, order());
    for (size_t i = 0; i < coeff.size(); ++i) {
        QInt acc = coeff[i];
        for (size_t j = 1; j <= i; ++j) acc -= o.coeff[j] * r.coeff[i - j];
        r.coeff[i] = acc / o.coeff[0];
    }
    return r;
}

void TruncatedSeries::mul_factor(int a, int b) {
    if (b <= 0) throw MathError("mul_factor: b must be positive");
    QInt scale{pow_z(p, a)};
    for (size_t i = coeff.size(); i-- > 0;) {
        if (i >= static_cast<size_t>(b) && coeff[i - static_cast<size_t>(b)] != 0)
            coeff[i] -= scale * coeff[i - static_cast<size_t>(b)];
    }
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < coeff.size(); ++i) {
        if (i) os << ' ';
        os << coeff[i].get_str();
    }
    return os.str();
}

}  // namespace latzeta::exactmath
