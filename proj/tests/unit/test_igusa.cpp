#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igusa/igusa.hpp"

using namespace latzeta;
using namespace latzeta::igusa;

namespace {
PolySystem sys(const std::string& text) { return PolySystem::parse(text); }
}  // namespace

TEST_CASE("polynomial parsing") {
    auto f = sys("n=2 p=3\nx1^2 + 2*x1*x2 - 3\n");
    CHECK(f.n == 2);
    CHECK(f.p == 3);
    REQUIRE(f.m() == 1);
    CHECK(f.polys[0].monomials.size() == 3);
    CHECK(f.eval(0, {1, 1}, 9) == 0);   // 1 + 2 - 3
    CHECK(f.eval(0, {2, 0}, 9) == 1);   // 4 - 3
    CHECK(f.polys[0].total_degree() == 2);
    CHECK(!f.polys[0].homogeneous());

    auto multi = sys("# comment\nn=2 p=2\nx1*x2\n0\nx1 - x1 + x2\n");
    CHECK(multi.m() == 3);
    CHECK(multi.polys[1].monomials.empty());
    CHECK(multi.polys[2].monomials.size() == 1);  // x1 cancels

    CHECK_THROWS(PolySystem::parse("x1^2\n"));            // missing header
    CHECK_THROWS(PolySystem::parse("n=2 p=3\nx3\n"));     // variable out of range
    CHECK_THROWS(PolySystem::parse("n=1 p=3\nx1^\n"));    // malformed exponent
}

TEST_CASE("naive counting") {
    CHECK(count_naive(sys("n=1 p=3\nx1^2\n"), 2) == 3);  // 0, 3, 6
    CHECK(count_naive(sys("n=1 p=3\nx1^2\n"), 0) == 1);
    CHECK(count_naive(sys("n=2 p=2\nx1*x2\n"), 1) == 3);  // (0,0) (0,1) (1,0)
    CHECK_THROWS(count_naive(sys("n=2 p=3\nx1\n"), 12, 1000));  // budget
}

TEST_CASE("tree counting agrees with the naive sweep") {
    for (const char* body : {"x1^2", "x1^3 - x2^2", "x1*x2", "x1^2 + x2^2"}) {
        for (int64_t p : {2, 3}) {
            std::string text = std::string("n=") + (std::string(body).find("x2") != std::string::npos ? "2" : "1") +
                               " p=" + std::to_string(p) + "\n" + body + "\n";
            auto f = sys(text);
            auto counts = count_tree(f, 4);
            for (int i = 0; i <= 4; ++i)
                CHECK(counts.M[static_cast<size_t>(i)] == count_naive(f, i));
        }
    }
}

TEST_CASE("closed count formulas") {
    for (int64_t p : {2, 3, 5}) {
        auto f = sys("n=1 p=" + std::to_string(p) + "\nx1^2\n");
        auto counts = count_tree(f, 7);
        for (int i = 0; i <= 7; ++i)
            CHECK(counts.M[static_cast<size_t>(i)] == pow_z(p, i / 2));
    }
    for (int64_t p : {2, 3}) {
        auto f = sys("n=2 p=" + std::to_string(p) + "\nx1*x2\n");
        auto counts = count_tree(f, 5);
        for (int i = 1; i <= 5; ++i) {
            ZInt expect = ZInt(i + 1) * pow_z(p, i) - ZInt(i) * pow_z(p, i - 1);
            CHECK(counts.M[static_cast<size_t>(i)] == expect);
        }
    }
}

TEST_CASE("one-more-digit bound M_{i+1} <= p^n M_i") {
    for (const char* body : {"x1^2", "x1*x2", "x1^2 + x2^2"}) {
        std::string text = std::string("n=") + (std::string(body).find("x2") != std::string::npos ? "2" : "1") +
                           " p=3\n" + body + "\n";
        auto f = sys(text);
        auto counts = count_tree(f, 5);
        ZInt pn = pow_z(3, f.n);
        for (int i = 0; i < 5; ++i)
            CHECK(counts.M[static_cast<size_t>(i + 1)] <= pn * counts.M[static_cast<size_t>(i)]);
    }
}

TEST_CASE("poincare coefficients and the series round trip") {
    auto zero = sys("n=1 p=2\n0\n");
    auto cz = count_tree(zero, 5);
    auto pz = poincare_coeffs(zero, cz);
    for (int i = 0; i <= 5; ++i) CHECK(pz.poincare[i] == QInt(1));

    auto unit = sys("n=1 p=2\n1\n");
    auto cu = count_tree(unit, 5);
    auto pu = poincare_coeffs(unit, cu);
    CHECK(pu.poincare[0] == QInt(1));
    for (int i = 1; i <= 5; ++i) CHECK(pu.poincare[i] == QInt(0));

    auto square = sys("n=1 p=3\nx1^2\n");
    auto cs = count_tree(square, 6);
    auto ps = poincare_coeffs(square, cs);
    QInt third(ZInt(1), ZInt(3)), ninth(ZInt(1), ZInt(9));
    CHECK(ps.poincare[0] == QInt(1));
    CHECK(ps.poincare[1] == third);
    CHECK(ps.poincare[2] == third);
    CHECK(ps.poincare[3] == ninth);

    // reconstruct P from the igusa series: P = (1 - t I)/(1 - t)
    for (const auto* f : {&zero, &unit, &square}) {
        auto counts = count_tree(*f, 5);
        auto data = poincare_coeffs(*f, counts);
        exactmath::TruncatedSeries ti(f->p, 5);
        for (int i = 0; i + 1 <= 5 && i <= data.igusa_series.order(); ++i)
            ti[i + 1] = data.igusa_series[i];  // t * I(t)
        exactmath::TruncatedSeries one = exactmath::TruncatedSeries::one(f->p, 5);
        exactmath::TruncatedSeries den = one;
        den.mul_factor(0, 1);  // 1 - t
        auto back = one.sub(ti).div(den);
        for (int i = 0; i <= 5; ++i) CHECK(back[i] == data.poincare[i]);
    }
}

TEST_CASE("slope report") {
    auto square = sys("n=1 p=3\nx1^2\n");
    auto rep = slope_report(square, count_tree(square, 8));
    QInt half(ZInt(1), ZInt(2));
    REQUIRE(rep.running_min.has_value());
    CHECK(*rep.running_min == QInt(0));  // odd indices dip below 1/2
    for (int i = 2; i <= 8; i += 2)
        CHECK(rep.slope[static_cast<size_t>(i - 1)] == half);

    auto linear = sys("n=1 p=3\nx1\n");
    auto rl = slope_report(linear, count_tree(linear, 5));
    for (int i = 1; i <= 5; ++i) CHECK(rl.slope[static_cast<size_t>(i - 1)] == QInt(0));

    auto zero = sys("n=1 p=3\n0\n");
    auto rz = slope_report(zero, count_tree(zero, 5));
    for (int i = 1; i <= 5; ++i) CHECK(rz.slope[static_cast<size_t>(i - 1)] == QInt(1));
}

TEST_CASE("jacobian profiles") {
    auto square = sys("n=1 p=3\nx1^2\n");
    CHECK(jacobian_profile(square, {3}, 4) == std::vector<int>{1});   // v(2*3) = 1
    CHECK(jacobian_profile(square, {9}, 4) == std::vector<int>{2});
    CHECK(jacobian_profile(square, {0}, 4) == std::vector<int>{4});   // capped

    auto pair = sys("n=2 p=2\nx1^2\nx2^2\n");
    CHECK(jacobian_profile(pair, {0, 0}, 3) == std::vector<int>{3, 3});

    auto linear = sys("n=2 p=5\nx1 + x2\nx2\n");
    CHECK(jacobian_profile(linear, {4, 4}, 3) == std::vector<int>{0, 0});

    // a single polynomial in two variables is padded with a zero row
    auto xy = sys("n=2 p=2\nx1*x2\n");
    auto prof = jacobian_profile(xy, {1, 4}, 4);
    CHECK(prof == std::vector<int>{0, 4});
}

TEST_CASE("reverse Hensel check") {
    for (int64_t p : {2, 3}) {
        auto square = sys("n=1 p=" + std::to_string(p) + "\nx1^2\n");
        auto res = reverse_hensel_check(square, {QInt(1)}, 4, 8);
        CHECK(res.hypothesis_holds);
        QInt minus_half(ZInt(-1), ZInt(2));
        CHECK(res.bound == minus_half);
        CHECK(res.slope_check_ok);
    }

    // a unit Jacobian over a vanishing value defeats any positive lambda
    auto linear = sys("n=1 p=2\nx1\n");
    auto res = reverse_hensel_check(linear, {QInt(1)}, 4, 4);
    CHECK(!res.hypothesis_holds);
    CHECK(res.counterexample == std::vector<int64_t>{0});

    // the hyperbola fails the lambda = 1/2 hypothesis at (unit, divisible)
    auto xy = sys("n=2 p=2\nx1*x2\n");
    QInt half(ZInt(1), ZInt(2));
    auto rxy = reverse_hensel_check(xy, {half, half}, 4, 4);
    CHECK(!rxy.hypothesis_holds);
}

TEST_CASE("Hensel lifting") {
    auto quad = sys("n=1 p=7\nx1^2 - 2\n");
    auto res = hensel_lift(quad, {ZInt(3)}, 2);
    REQUIRE(res.applicable);
    CHECK(res.root == std::vector<ZInt>{ZInt(10)});
    // the lift really solves the congruence: 10^2 - 2 = 98 = 2 * 49
    CHECK((ZInt(10) * 10 - 2) % 49 == 0);

    // deeper precision refines the same root
    auto deep = hensel_lift(quad, {ZInt(3)}, 5);
    REQUIRE(deep.applicable);
    CHECK((deep.root[0] * deep.root[0] - 2) % pow_z(7, 5) == 0);
    CHECK((deep.root[0] - 10) % 49 == 0);

    auto affine = sys("n=1 p=2\nx1 - 5\n");
    auto direct = hensel_lift(affine, {ZInt(1)}, 3);
    REQUIRE(direct.applicable);
    CHECK(direct.root == std::vector<ZInt>{ZInt(5)});

    auto degenerate = sys("n=1 p=2\nx1^2\n");
    CHECK(!hensel_lift(degenerate, {ZInt(0)}, 3).applicable);

    // uniqueness near the start point at small precision, by sweep
    int64_t found = 0;
    for (int64_t x = 0; x < 49; ++x)
        if ((x * x - 2) % 49 == 0 && (x - 3) % 7 == 0) ++found;
    CHECK(found == 1);
}

TEST_CASE("homogeneous pole bound margins") {
    auto square = sys("n=1 p=3\nx1^2\n");
    auto rep = homogeneous_bound_check(square, 6);
    CHECK(rep.verdict);
    for (const auto& m : rep.margin) CHECK(m >= 0);

    auto circle = sys("n=2 p=3\nx1^2 + x2^2\n");
    CHECK(homogeneous_bound_check(circle, 6).verdict);

    auto zero = sys("n=1 p=3\n0\n");
    CHECK(homogeneous_bound_check(zero, 5).verdict);

    auto cusp = sys("n=2 p=2\nx1^3 - x2^2\n");
    CHECK_THROWS(homogeneous_bound_check(cusp, 4));
}
