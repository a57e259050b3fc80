#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "exactmath/exactmath.hpp"

using namespace latzeta;
using namespace latzeta::exactmath;

TEST_CASE("valuation basics") {
    CHECK(valuation(QInt(8), 2) == Valuation(3));
    QInt three_quarters(ZInt(3), ZInt(4));
    CHECK(valuation(three_quarters, 2) == Valuation(-2));
    CHECK(valuation(QInt(5), 3) == Valuation(0));
    CHECK(valuation(QInt(0), 2).is_infinite());
    CHECK(Valuation(5) < Valuation::infinity());
    CHECK(Valuation::infinity() == Valuation::infinity());
    CHECK(Valuation(2) + Valuation(3) == Valuation(5));
    CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
}

TEST_CASE("gaussian binomial values") {
    CHECK(gaussian_binomial(2, 1, 2) == QInt(3));
    CHECK(gaussian_binomial(7, 0, 3) == QInt(1));
    CHECK(gaussian_binomial(4, 2, 2) == QInt(35));
    CHECK(gaussian_binomial(1, 2, 2) == QInt(0));  // b > a
}

TEST_CASE("gaussian binomial q-Pascal identity") {
    for (int64_t q : {2, 3, 5})
        for (int a = 1; a <= 12; ++a)
            for (int b = 1; b <= a; ++b) {
                QInt lhs = gaussian_binomial(a, b, q);
                QInt rhs = gaussian_binomial(a - 1, b - 1, q) +
                           QInt(pow_z(q, b)) * gaussian_binomial(a - 1, b, q);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("limit gaussian") {
    CHECK(limit_gaussian(2, 2) == QInt(-1));
    QInt third(ZInt(1), ZInt(3));
    CHECK(limit_gaussian(3, 2) == third);
    CHECK(limit_gaussian(1, 5) == QInt(1));
}

TEST_CASE("series arithmetic is commutative and associative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries a(3, 8), b(3, 8), c(3, 8);
        for (int i = 0; i <= 8; ++i) {
            a[i] = QInt(static_cast<long>(rng() % 11) - 5);
            b[i] = QInt(static_cast<long>(rng() % 11) - 5);
            c[i] = QInt(static_cast<long>(rng() % 11) - 5);
        }
        CHECK(a.mul(b) == b.mul(a));
        CHECK(a.mul(b).mul(c) == a.mul(b.mul(c)));
    }
}

TEST_CASE("series division inverts multiplication by a unit") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries a(2, 10), u(2, 10);
        for (int i = 0; i <= 10; ++i) {
            a[i] = QInt(static_cast<long>(rng() % 9) - 4);
            u[i] = QInt(static_cast<long>(rng() % 9) - 4);
        }
        u[0] = QInt(static_cast<long>(1 + rng() % 5));
        CHECK(a.mul(u).div(u) == a);
    }
}

namespace {
TruncatedSeries closed_form(int64_t p, int i_max, const std::vector<std::pair<int, int>>& num,
                            const std::vector<std::pair<int, int>>& den) {
    TruncatedSeries n = TruncatedSeries::one(p, i_max);
    for (auto [a, b] : num) n.mul_factor(a, b);
    TruncatedSeries d = TruncatedSeries::one(p, i_max);
    for (auto [a, b] : den) d.mul_factor(a, b);
    return n.div(d);
}
}  // namespace

TEST_CASE("fit recovers the abelian rank-2 form") {
    // 1/((1-t)(1-2t)): coefficients 2^{i+1}-1
    TruncatedSeries s(2, 8);
    for (int i = 0; i <= 8; ++i) s[i] = QInt(pow_z(2, i + 1) - 1);
    std::set<std::pair<int, int>> grid;
    for (int a = 0; a <= 3; ++a)
        for (int b = 1; b <= 2; ++b) grid.insert({a, b});
    auto fit = fit_rational(s, grid, 2);
    REQUIRE(fit.has_value());
    CHECK(fit->numerator == std::vector<ZInt>{ZInt(1)});
    CHECK(fit->factors == std::vector<DenomFactor>{{0, 1, 1}, {1, 1, 1}});
    CHECK(fit->verified_through == 8);
    CHECK(fit->expand(2, 8) == s);
}

TEST_CASE("fit reconstructs the Heisenberg zeta series") {
    const int64_t q = 2;
    // (1 - q^3 t^3) / ((1-t)(1-qt)(1-q^2t^2)(1-q^3t^2)) through t^10
    auto s = closed_form(q, 10, {{3, 3}}, {{0, 1}, {1, 1}, {2, 2}, {3, 2}});
    CHECK(s[0] == QInt(1));
    CHECK(s[1] == QInt(3));
    CHECK(s[2] == QInt(19));
    std::set<std::pair<int, int>> grid;
    for (int a = 0; a <= 4; ++a)
        for (int b = 1; b <= 3; ++b) grid.insert({a, b});
    auto fit = fit_rational(s, grid, 3);
    REQUIRE(fit.has_value());
    // minimal-degree representation: the factor (1-qt) of the displayed
    // denominator cancels against the numerator 1-q^3t^3
    CHECK(fit->factors == std::vector<DenomFactor>{{0, 1, 1}, {2, 2, 1}, {3, 2, 1}});
    CHECK(fit->numerator == std::vector<ZInt>{ZInt(1), ZInt(2), ZInt(4)});
    CHECK(fit->expand(q, 10) == s);
}

TEST_CASE("fit refuses the zero series") {
    TruncatedSeries s(2, 6);
    std::set<std::pair<int, int>> grid{{0, 1}, {1, 1}};
    CHECK(!fit_rational(s, grid, 2).has_value());
}

TEST_CASE("fit refuses when nothing matches") {
    // q^{i^2}-style growth is not rational with small candidates
    TruncatedSeries s(2, 8);
    for (int i = 0; i <= 8; ++i) s[i] = QInt(pow_z(2, i * i));
    std::set<std::pair<int, int>> grid;
    for (int a = 0; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) grid.insert({a, b});
    CHECK(!fit_rational(s, grid, 2).has_value());
}

TEST_CASE("p-adic limit report") {
    std::vector<QInt> constant(5, QInt(7));
    auto rep = padic_limit_report(constant, 3, QInt(7));
    for (const auto& v : rep.step) CHECK(v.is_infinite());
    for (const auto& v : rep.to_target) CHECK(v.is_infinite());
    CHECK(rep.step_nondecreasing);

    std::vector<QInt> powers;
    for (int i = 0; i <= 6; ++i) powers.emplace_back(pow_z(3, i));
    auto rep2 = padic_limit_report(powers, 3, QInt(0));
    for (size_t i = 0; i < rep2.to_target.size(); ++i)
        CHECK(rep2.to_target[i] == Valuation(static_cast<long>(i)));

    // abelian counts approach the stated limit with growing valuations
    std::vector<QInt> abelian;
    for (int i = 0; i <= 6; ++i) abelian.push_back(gaussian_binomial(2 + i, 2, 2));
    auto rep3 = padic_limit_report(abelian, 2, limit_gaussian(3, 2));
    CHECK(rep3.target_nondecreasing);
    for (size_t i = 1; i < rep3.to_target.size(); ++i)
        CHECK(rep3.to_target[i] > rep3.to_target[i - 1]);
}
