#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "exactmath/exactmath.hpp"
#include "lattice/enumerate.hpp"
#include "lattice/hnf.hpp"

using namespace latzeta;
using namespace latzeta::lattice;

namespace {
std::vector<std::vector<ZInt>> zrows(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<ZInt>> out;
    for (auto& r : rows) {
        std::vector<ZInt> z;
        for (long v : r) z.emplace_back(v);
        out.push_back(std::move(z));
    }
    return out;
}
}  // namespace

TEST_CASE("canonicalize hand example") {
    // span{(2,0),(0,2),(1,1)} at p=2 has index 2
    auto l = canonicalize(zrows({{2, 0}, {0, 2}, {1, 1}}), 2, 2);
    CHECK(l.index_exponent() == 1);
    CHECK(l.at(0, 0) == 2);
    CHECK(l.at(1, 0) == 1);
    CHECK(l.at(1, 1) == 1);
    auto same = canonicalize(zrows({{1, 1}, {0, 2}}), 2, 2);
    CHECK(l == same);
}

TEST_CASE("canonicalize is idempotent on every enumerated lattice") {
    for (int i = 0; i <= 3; ++i)
        for (const auto& l : enumerate_all(3, 2, i)) {
            std::vector<std::vector<ZInt>> gens;
            for (int r = 0; r < l.n; ++r) gens.push_back(l.row_z(r));
            CHECK(canonicalize(gens, 3, 2) == l);
        }
}

TEST_CASE("canonicalize discards prime-to-p units") {
    // over Z_2 the span of (3,0),(0,5) is everything
    auto l = canonicalize(zrows({{3, 0}, {0, 5}}), 2, 2);
    CHECK(l == full_lattice(2, 2));
    CHECK_THROWS(canonicalize(zrows({{1, 2}, {2, 4}}), 2, 2));  // rank deficient
}

TEST_CASE("membership by back-substitution") {
    auto l = canonicalize(zrows({{2, 0}, {0, 1}}), 2, 2);
    CHECK(!contains(l, {ZInt(1), ZInt(0)}));
    CHECK(contains(l, {ZInt(2), ZInt(0)}));
    CHECK(contains(l, {ZInt(0), ZInt(7)}));
    CHECK(contains(full_lattice(2, 2), {ZInt(-13), ZInt(9)}));
    // the index kills every standard vector
    auto deep = canonicalize(zrows({{4, 0}, {3, 2}}), 2, 2);
    int64_t idx = checked_pow_i64(2, deep.index_exponent());
    for (int k = 0; k < 2; ++k) {
        std::vector<ZInt> v(2);
        v[static_cast<size_t>(k)] = idx;
        CHECK(contains(deep, v));
    }
}

TEST_CASE("enumeration counts match the Gaussian binomial") {
    for (int64_t p : {2, 3}) {
        for (int n = 1; n <= 3; ++n)
            for (int i = 0; i <= 4; ++i) {
                Parallel par(1);
                ZInt counted = count_lattices(n, p, i, par);
                CHECK(QInt(counted) == exactmath::gaussian_binomial(n - 1 + i, n - 1, p));
            }
    }
    Parallel par(1);
    CHECK(count_lattices(3, 2, 2, par) == 35);
    CHECK(count_lattices(1, 5, 4, par) == 1);
}

TEST_CASE("count is independent of the worker count") {
    Parallel one(1), four(4);
    CHECK(count_lattices(3, 3, 4, one) == count_lattices(3, 3, 4, four));
}

TEST_CASE("no duplicates among enumerated matrices") {
    for (int i = 0; i <= 4; ++i) {
        auto all = enumerate_all(3, 2, i);
        std::unordered_set<size_t> seen;
        HNFLatticeHash hash;
        for (const auto& l : all) {
            CHECK(l.index_exponent() == i);
            seen.insert(hash(l));
        }
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("divisor types") {
    auto full = full_lattice(3, 2);
    auto t = divisor_type(full);
    CHECK(t.lambda == std::vector<int>{0, 0, 0});
    CHECK(t.jump_set().empty());
    CHECK(t.primitive());

    auto pfull = scale_by_p(full_lattice(3, 3), 1);
    auto tp = divisor_type(pfull);
    CHECK(tp.lambda == std::vector<int>{1, 1, 1});
    CHECK(tp.jump_set().empty());
    CHECK(tp.homothety() == 1);

    auto d41 = canonicalize(zrows({{4, 0}, {0, 1}}), 2, 2);
    auto t41 = divisor_type(d41);
    CHECK(t41.lambda == std::vector<int>{2, 0});
    CHECK(t41.jump_set() == std::vector<int>{1});
    CHECK(t41.r(1) == 2);
    CHECK(t41.primitive());
    CHECK(t41.R() == 2);

    // the off-diagonal entry makes this primitive despite even diagonal
    auto mixed = canonicalize(zrows({{2, 0}, {1, 2}}), 2, 2);
    CHECK(divisor_type(mixed).lambda == std::vector<int>{2, 0});
}

TEST_CASE("primitive part") {
    auto full = full_lattice(2, 2);
    CHECK(primitive_part(full) == std::pair{full, 0});
    auto p2 = scale_by_p(full, 2);
    CHECK(primitive_part(p2) == std::pair{full, 2});
    auto l = canonicalize(zrows({{8, 0}, {0, 2}}), 2, 2);
    auto [l0, shift] = primitive_part(l);
    CHECK(shift == 1);
    CHECK(l0 == canonicalize(zrows({{4, 0}, {0, 1}}), 2, 2));
}

TEST_CASE("sum and intersection") {
    auto a = canonicalize(zrows({{2, 0}, {0, 1}}), 2, 2);
    auto b = canonicalize(zrows({{1, 0}, {0, 2}}), 2, 2);
    CHECK(lattice_sum(a, full_lattice(2, 2)) == full_lattice(2, 2));
    CHECK(lattice_intersect(a, a) == a);
    CHECK(lattice_sum(a, b) == full_lattice(2, 2));

    // index identity on every enumerated pair at index 4
    auto lats = enumerate_all(2, 2, 2);
    for (const auto& x : lats)
        for (const auto& y : lats) {
            auto s = lattice_sum(x, y);
            auto m = lattice_intersect(x, y);
            CHECK(x.index_exponent() + y.index_exponent() ==
                  s.index_exponent() + m.index_exponent());
            // containment both ways
            for (int r = 0; r < 2; ++r) {
                CHECK(contains(s, x.row_z(r)));
                CHECK(contains(s, y.row_z(r)));
                CHECK(contains(x, m.row_z(r)));
                CHECK(contains(y, m.row_z(r)));
            }
        }
}

TEST_CASE("index-p superlattices") {
    auto k = scale_by_p(full_lattice(2, 2), 1);
    auto sup = superlattices_index_p(k);
    CHECK(sup.size() == 3);  // order-2 subgroups of (Z/2)^2
    for (const auto& h : sup) CHECK(h.index_exponent() == 1);

    CHECK(superlattices_index_p(full_lattice(2, 2)).empty());

    // cross-check: the count of order-p subgroups of the p-elementary quotient
    for (int64_t p : {2, 3}) {
        auto deep = scale_by_p(full_lattice(3, p), 1);
        auto sups = superlattices_index_p(deep);
        CHECK(static_cast<long>(sups.size()) == (p * p + p + 1));
    }

    // consistency with enumeration: the superlattices of index p^1 over K
    // are exactly the enumerated lattices of index p containing K
    auto k2 = canonicalize(zrows({{4, 0}, {1, 1}}), 2, 2);
    auto direct = superlattices_index_p(k2);
    int found = 0;
    for (const auto& h : enumerate_all(2, 2, k2.index_exponent() - 1)) {
        bool covers = true;
        for (int r = 0; r < 2; ++r)
            if (!contains(h, k2.row_z(r))) covers = false;
        if (covers) {
            ++found;
            CHECK(std::find(direct.begin(), direct.end(), h) != direct.end());
        }
    }
    CHECK(found == static_cast<int>(direct.size()));
}

TEST_CASE("primitives per index match the homothety recursion") {
    // primitive count at i = a_i(lattices) - a_{i-n}(lattices)
    for (int64_t p : {2, 3})
        for (int i = 0; i <= 4; ++i) {
            long prim = 0;
            for (const auto& l : enumerate_all(3, p, i))
                if (l.is_primitive()) ++prim;
            QInt expect = exactmath::gaussian_binomial(2 + i, 2, p);
            if (i >= 3) expect -= exactmath::gaussian_binomial(2 + i - 3, 2, p);
            CHECK(QInt(prim) == expect);
        }
}
