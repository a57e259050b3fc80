#include "exactmath/exactmath.hpp"

#include <algorithm>
#include <sstream>

namespace latzeta::exactmath {

Valuation valuation(const QInt& x, int64_t p) {
    if (x == 0) return Valuation::infinity();
    return Valuation(valuation_q(x, p));
}

Valuation valuation(const ZInt& x, int64_t p) {
    if (x == 0) return Valuation::infinity();
    return Valuation(valuation_z(x, p));
}

QInt gaussian_binomial(int a, int b, int64_t q) {
    if (a < 0 || b < 0) throw MathError("gaussian_binomial: negative argument");
    if (q < 2) throw MathError("gaussian_binomial: q must be >= 2");
    if (b > a) return QInt(0);
    QInt num(1), den(1);
    for (int k = 0; k < b; ++k) num *= QInt(1) - QInt(pow_z(q, a - k));
    for (int k = 1; k <= b; ++k) den *= QInt(1) - QInt(pow_z(q, k));
    QInt r = num / den;
    r.canonicalize();
    return r;
}

QInt limit_gaussian(int n, int64_t q) {
    if (n < 1) throw MathError("limit_gaussian: n must be >= 1");
    if (q < 2) throw MathError("limit_gaussian: q must be >= 2");
    QInt r(1);
    for (int j = 1; j <= n - 1; ++j) r /= QInt(1) - QInt(pow_z(q, j));
    r.canonicalize();
    return r;
}

int RationalFit::denominator_degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.b * f.multiplicity;
    return d;
}

TruncatedSeries RationalFit::expand(int64_t p, int i_max) const {
    TruncatedSeries num(p, i_max);
    for (size_t i = 0; i < numerator.size() && i <= static_cast<size_t>(i_max); ++i)
        num[static_cast<int>(i)] = QInt(numerator[i]);
    TruncatedSeries den = TruncatedSeries::one(p, i_max);
    for (const auto& f : factors)
        for (int m = 0; m < f.multiplicity; ++m) den.mul_factor(f.a, f.b);
    return num.div(den);
}

std::string RationalFit::str() const {
    std::ostringstream os;
    os << "numerator:";
    for (const auto& c : numerator) os << ' ' << c.get_str();
    os << " denominator:";
    if (factors.empty()) os << " 1";
    for (const auto& f : factors) {
        os << " (1-p^" << f.a << "*t^" << f.b << ")";
        if (f.multiplicity > 1) os << "^" << f.multiplicity;
    }
    os << " verified_through: " << verified_through;
    return os.str();
}

namespace {

struct Candidate {
    int degree = 0;
    std::vector<std::pair<int, int>> expanded;  // factor (a,b) repeated by mult
    std::vector<DenomFactor> factors;
};

void collect_candidates(const std::vector<std::pair<int, int>>& pool, size_t idx,
                        int max_mult, int degree_left, Candidate& cur,
                        std::vector<Candidate>& out) {
    if (idx == pool.size()) {
        out.push_back(cur);
        return;
    }
    auto [a, b] = pool[idx];
    for (int m = 0; m <= max_mult && m * b <= degree_left; ++m) {
        Candidate next = cur;
        if (m > 0) {
            next.factors.push_back({a, b, m});
            for (int k = 0; k < m; ++k) next.expanded.emplace_back(a, b);
            next.degree = cur.degree + m * b;
        }
        collect_candidates(pool, idx + 1, max_mult, degree_left - m * b, next, out);
    }
}

}  // namespace

std::optional<RationalFit> fit_rational(const TruncatedSeries& series,
                                        const std::set<std::pair<int, int>>& candidates,
                                        int max_multiplicity, int min_spare) {
    const int i_max = series.order();
    bool all_zero = true;
    for (const auto& c : series.coeff)
        if (c != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) return std::nullopt;

    std::vector<std::pair<int, int>> pool(candidates.begin(), candidates.end());
    std::vector<Candidate> trials;
    Candidate empty;
    // leave room for at least a constant numerator plus the spare margin
    int degree_cap = i_max - min_spare;
    if (degree_cap < 0) return std::nullopt;
    collect_candidates(pool, 0, max_multiplicity, degree_cap, empty, trials);
    std::sort(trials.begin(), trials.end(), [](const Candidate& x, const Candidate& y) {
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.expanded < y.expanded;
    });

    for (const auto& trial : trials) {
        // u = series * denominator must be a polynomial of low degree
        TruncatedSeries u = series;
        for (auto [a, b] : trial.expanded) u.mul_factor(a, b);
        int top = -1;
        for (int i = 0; i <= i_max; ++i)
            if (u[i] != 0) top = i;
        if (top > i_max - trial.degree - min_spare) continue;
        bool integral = true;
        for (int i = 0; i <= top; ++i)
            if (u[i].get_den() != 1) {
                integral = false;
                break;
            }
        if (!integral) continue;
        RationalFit fit;
        for (int i = 0; i <= std::max(top, 0); ++i) fit.numerator.push_back(ZInt(u[i].get_num()));
        fit.factors = trial.factors;
        fit.verified_through = i_max;
        return fit;
    }
    return std::nullopt;
}

PadicReport padic_limit_report(const std::vector<QInt>& sequence, int64_t p,
                               const std::optional<QInt>& target) {
    if (sequence.empty()) throw MathError("padic_limit_report: empty sequence");
    PadicReport rep;
    for (size_t i = 0; i + 1 < sequence.size(); ++i)
        rep.step.push_back(valuation(QInt(sequence[i] - sequence[i + 1]), p));
    if (target)
        for (const auto& a : sequence)
            rep.to_target.push_back(valuation(QInt(a - *target), p));
    auto nondec = [](const std::vector<Valuation>& v) {
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i + 1] < v[i]) return false;
        return true;
    };
    rep.step_nondecreasing = nondec(rep.step);
    rep.target_nondecreasing = nondec(rep.to_target);
    return rep;
}

std::string PadicReport::str() const {
    std::ostringstream os;
    os << "step-valuations:";
    for (const auto& v : step) os << ' ' << v.str();
    if (!to_target.empty()) {
        os << " target-valuations:";
        for (const auto& v : to_target) os << ' ' << v.str();
    }
    os << " step-nondecreasing: " << (step_nondecreasing ? "yes" : "no");
    if (!to_target.empty())
        os << " target-nondecreasing: " << (target_nondecreasing ? "yes" : "no");
    return os.str();
}

}  // namespace latzeta::exactmath
