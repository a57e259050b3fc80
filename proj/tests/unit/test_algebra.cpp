#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algebra/structure_algebra.hpp"
#include "io/formats.hpp"

using namespace latzeta;
using namespace latzeta::algebra;

namespace {
std::vector<ZInt> basis(int n, int i) {
    std::vector<ZInt> e(static_cast<size_t>(n));
    e[static_cast<size_t>(i)] = 1;
    return e;
}
}  // namespace

TEST_CASE("multiplication follows the structure constants") {
    auto h = io::catalog_algebra("heisenberg", 2);
    auto z = multiply(h, basis(3, 0), basis(3, 1));
    CHECK(z == std::vector<ZInt>{ZInt(0), ZInt(0), ZInt(1)});
    auto zz = multiply(h, basis(3, 1), basis(3, 0));
    CHECK(zz == std::vector<ZInt>{ZInt(0), ZInt(0), ZInt(-1)});
    // x*x = 0 in a Lie algebra, on a non-basis vector
    std::vector<ZInt> x{ZInt(2), ZInt(-3), ZInt(5)};
    auto sq = multiply(h, x, x);
    CHECK(sq == std::vector<ZInt>(3));

    auto ab = io::catalog_algebra("abelian-3", 2);
    CHECK(multiply(ab, x, x) == std::vector<ZInt>(3));
}

TEST_CASE("Lie identity checks") {
    CHECK(is_lie(io::catalog_algebra("heisenberg", 3)));
    CHECK(is_lie(io::catalog_algebra("filiform-4", 2)));
    CHECK(is_lie(io::catalog_algebra("abelian-2", 5)));
    CHECK(!is_lie(io::catalog_algebra("zp2-componentwise", 3)));
}

TEST_CASE("nilpotency classes") {
    CHECK(nilpotency_class(io::catalog_algebra("abelian-4", 3), 8) == 1);
    CHECK(nilpotency_class(io::catalog_algebra("heisenberg", 2), 8) == 2);
    CHECK(nilpotency_class(io::catalog_algebra("filiform-4", 2), 8) == 3);
    CHECK(!nilpotency_class(io::catalog_algebra("zp2-componentwise", 2), 10).has_value());
}

TEST_CASE("residual nilpotency semidecision") {
    CHECK(is_residually_nilpotent(io::catalog_algebra("heisenberg", 2), 3, 10) ==
          ResidualVerdict::Verified);
    CHECK(is_residually_nilpotent(io::catalog_algebra("zp2-componentwise", 3), 1, 10) ==
          ResidualVerdict::RefutedAtDepth);
    CHECK(is_residually_nilpotent(io::catalog_algebra("pi-zp2-componentwise", 3), 2, 10) ==
          ResidualVerdict::Verified);
}

TEST_CASE("residual nilpotency sees units that are invisible over Z") {
    // e1*e1 = 3 e1 at p = 2: the chain is 3^k Z, constant as a Z_2-lattice
    StructureAlgebra a("unit-chain", 1, 2);
    a.set_c(0, 0, 0, 3);
    a.rebuild_terms();
    CHECK(is_residually_nilpotent(a, 1, 10) == ResidualVerdict::RefutedAtDepth);
}

TEST_CASE("grading verification") {
    auto h = io::catalog_algebra("heisenberg", 2);
    CHECK(verify_grading(h, {1, 1, 2}));
    CHECK(!verify_grading(h, {1, 1, 1}));
    auto ab = io::catalog_algebra("abelian-3", 2);
    CHECK(verify_grading(ab, {3, 1, 2}));
    auto fil = io::catalog_algebra("filiform-4", 3);
    CHECK(verify_grading(fil, {1, 1, 2, 3}));
    CHECK(!verify_grading(fil, {1, 1, 2, 2}));
}

TEST_CASE("centres") {
    auto h = io::catalog_algebra("heisenberg", 2);
    auto z = centre(h);
    REQUIRE(z.rank() == 1);
    CHECK(z.rows[0] == std::vector<ZInt>{ZInt(0), ZInt(0), ZInt(1)});
    CHECK(z.saturated);

    auto ab = io::catalog_algebra("abelian-3", 3);
    CHECK(centre(ab).rank() == 3);

    auto zp2 = io::catalog_algebra("zp2-componentwise", 3);
    CHECK(centre(zp2).rank() == 0);

    // centre vectors annihilate everything, both sides
    for (int k = 0; k < 3; ++k) {
        auto prod = multiply(h, z.rows[0], basis(3, k));
        CHECK(prod == std::vector<ZInt>(3));
        prod = multiply(h, basis(3, k), z.rows[0]);
        CHECK(prod == std::vector<ZInt>(3));
    }
}

TEST_CASE("pi scaling") {
    auto ab = io::catalog_algebra("abelian-2", 5);
    CHECK(pi_scale(ab).constants == ab.constants);

    auto h = io::catalog_algebra("heisenberg", 2);
    auto ph = pi_scale(h);
    CHECK(ph.c(0, 1, 2) == 2);
    auto pph = pi_scale(ph);
    CHECK(pph.c(0, 1, 2) == 4);

    // scaling preserves the nilpotency class
    CHECK(nilpotency_class(ph, 8) == nilpotency_class(h, 8));
    auto fil = io::catalog_algebra("filiform-4", 3);
    CHECK(nilpotency_class(pi_scale(fil), 8) == nilpotency_class(fil, 8));
}

TEST_CASE("dilation matrices") {
    auto h = io::catalog_algebra("heisenberg", 3);
    auto id = dilation_matrix(h, 1, 4);
    CHECK(id == std::vector<int64_t>{1, 1, 1});
    int64_t mod = checked_pow_i64(3, 5);
    auto d = dilation_matrix(h, 7, 5);
    CHECK(d[0] == 7);
    CHECK(d[1] == 7);
    CHECK(d[2] == 49 % mod);
    CHECK_THROWS(dilation_matrix(h, 6, 5));  // not a unit at p=3

    // endomorphism property on random vectors for random units
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int K = 1 + static_cast<int>(rng() % 8);
        int64_t m = checked_pow_i64(3, K);
        int64_t lam = 0;
        while (lam % 3 == 0) lam = static_cast<int64_t>(rng() % static_cast<uint64_t>(m));
        auto diag = dilation_matrix(h, lam, K);
        std::vector<ZInt> x(3), y(3);
        for (int i = 0; i < 3; ++i) {
            x[static_cast<size_t>(i)] = ZInt(static_cast<long>(rng() % 50) - 25);
            y[static_cast<size_t>(i)] = ZInt(static_cast<long>(rng() % 50) - 25);
        }
        std::vector<ZInt> tx(3), ty(3);
        for (int i = 0; i < 3; ++i) {
            tx[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] * diag[static_cast<size_t>(i)];
            ty[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] * diag[static_cast<size_t>(i)];
        }
        auto lhs = multiply(h, tx, ty);
        auto rhs = multiply(h, x, y);
        for (int i = 0; i < 3; ++i) {
            ZInt diff = lhs[static_cast<size_t>(i)] -
                        rhs[static_cast<size_t>(i)] * diag[static_cast<size_t>(i)];
            CHECK(diff % m == 0);
        }
    }
}

TEST_CASE("catalog gradings are verified") {
    for (const auto& name : io::catalog_names()) {
        auto a = io::catalog_algebra(name, 3);
        if (a.weights) CHECK(verify_grading(a, *a.weights));
    }
}

TEST_CASE("mult matrix of linear forms") {
    auto h = io::catalog_algebra("heisenberg", 2);
    auto m = mult_matrix(h, {ZInt(0), ZInt(0), ZInt(1)});
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(1, 0) == -1);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(2, 2) == 0);

    auto ab = io::catalog_algebra("abelian-3", 2);
    CHECK(mult_matrix(ab, {ZInt(4), ZInt(5), ZInt(6)}).is_zero());

    // linearity
    std::vector<ZInt> x{ZInt(1), ZInt(2), ZInt(3)}, y{ZInt(-2), ZInt(0), ZInt(7)};
    std::vector<ZInt> xy(3);
    for (int i = 0; i < 3; ++i) xy[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] + y[static_cast<size_t>(i)];
    auto mx = mult_matrix(h, x), my = mult_matrix(h, y), mxy = mult_matrix(h, xy);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(mxy.at(r, c) == mx.at(r, c) + my.at(r, c));
}

TEST_CASE("class-2 structure splits through the centre") {
    auto h = io::catalog_algebra("heisenberg", 2);
    auto s = class2_structure(h);
    CHECK(s.a == 2);
    CHECK(s.b == 1);
    // the induced pairing is the symplectic form up to sign
    CHECK(s.product[0][0] == std::vector<ZInt>{ZInt(0)});
    CHECK(s.product[1][1] == std::vector<ZInt>{ZInt(0)});
    ZInt v01 = s.product[0][1][0], v10 = s.product[1][0][0];
    CHECK(v01 == -v10);
    CHECK((v01 == 1 || v01 == -1));

    CHECK_THROWS(class2_structure(io::catalog_algebra("filiform-4", 2)));
}
