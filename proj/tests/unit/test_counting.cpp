#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "counting/count.hpp"
#include "exactmath/exactmath.hpp"
#include "io/formats.hpp"
#include "lattice/enumerate.hpp"

using namespace latzeta;
using namespace latzeta::counting;

namespace {
lattice::HNFLattice span_of(std::vector<std::vector<long>> rows, int n, int64_t p) {
    std::vector<std::vector<ZInt>> gens;
    for (auto& r : rows) {
        std::vector<ZInt> z;
        for (long v : r) z.emplace_back(v);
        gens.push_back(std::move(z));
    }
    return lattice::canonicalize(gens, n, p);
}
}  // namespace

TEST_CASE("closure predicates on hand examples") {
    auto h = io::catalog_algebra("heisenberg", 2);
    auto ab = io::catalog_algebra("abelian-3", 2);

    auto full = lattice::full_lattice(3, 2);
    CHECK(is_subalgebra(full, h));
    CHECK(is_ideal(full, h));

    auto not_closed = span_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, 3, 2);
    CHECK(!is_subalgebra(not_closed, h));  // e1*e2 = e3 escapes
    CHECK(is_subalgebra(not_closed, ab));  // everything closes in the abelian algebra

    auto ideal = span_of({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3, 2);
    CHECK(is_ideal(ideal, h));
    CHECK(is_subalgebra(ideal, h));
}

TEST_CASE("every ideal is a subalgebra on a full sweep") {
    auto h = io::catalog_algebra("heisenberg", 2);
    for (int i = 0; i <= 3; ++i)
        for (const auto& l : lattice::enumerate_all(3, 2, i))
            if (is_ideal(l, h)) CHECK(is_subalgebra(l, h));
}

TEST_CASE("counts against the Heisenberg closed form") {
    auto h = io::catalog_algebra("heisenberg", 2);
    Parallel par(1);
    CHECK(count(h, 0, Kind::Subalgebra, par) == 1);
    CHECK(count(h, 1, Kind::Subalgebra, par) == 3);
    CHECK(count(h, 2, Kind::Subalgebra, par) == 19);
    CHECK(count(h, 0, Kind::Ideal, par) == 1);
    CHECK(count(h, 2, Kind::Lattice, par) == 35);
}

TEST_CASE("the enumeration-pass predicates agree with the public ones") {
    for (const auto& name : {"heisenberg", "zp2-componentwise"}) {
        for (int64_t p : {2, 3}) {
            auto a = io::catalog_algebra(name, p);
            Parallel par(2);
            for (int i = 0; i <= 3; ++i) {
                PassOptions opts;
                opts.strata = true;
                auto pass = run_pass(a, i, opts, par);
                ZInt sub = 0, ideal = 0, prim = 0;
                std::map<int, ZInt> by_weight;
                for (const auto& l : lattice::enumerate_all(a.n, p, i)) {
                    if (is_subalgebra(l, a)) sub += 1;
                    if (is_ideal(l, a)) ideal += 1;
                    if (l.is_primitive()) {
                        prim += 1;
                        by_weight[weight(l, a)] += 1;
                    }
                }
                CHECK(pass.subalgebras == sub);
                CHECK(pass.ideals == ideal);
                CHECK(pass.primitives == prim);
                CHECK(pass.by_weight == by_weight);
            }
        }
    }
}

TEST_CASE("weights") {
    auto ab = io::catalog_algebra("abelian-2", 3);
    auto zp2 = io::catalog_algebra("zp2-componentwise", 3);
    CHECK(weight(lattice::full_lattice(2, 3), zp2) == 0);
    for (const auto& l : lattice::enumerate_all(2, 3, 2))
        if (l.is_primitive()) CHECK(weight(l, ab) == 0);
    CHECK_THROWS(weight(lattice::scale_by_p(lattice::full_lattice(2, 3), 1), zp2));

    // stratified counts reproduce the componentwise-example formulas at i=2
    Parallel par(1);
    PassOptions opts;
    opts.strata = true;
    auto pass = run_pass(zp2, 2, opts, par);
    CHECK(pass.by_weight[0] == 3);
    CHECK(pass.by_weight[1] == 6);
    CHECK(pass.by_weight[2] == 3);
    CHECK(pass.primitives == 12);

    // per-type strata refine the per-weight strata
    std::map<int, ZInt> from_types;
    for (const auto& [key, cnt] : pass.by_type) from_types[key.second] += cnt;
    CHECK(from_types == pass.by_weight);
}

TEST_CASE("weight never exceeds the index exponent") {
    auto zp2 = io::catalog_algebra("zp2-componentwise", 3);
    for (int i = 0; i <= 3; ++i)
        for (const auto& l : lattice::enumerate_all(2, 3, i)) {
            if (!l.is_primitive()) continue;
            int w = weight(l, zp2);
            CHECK(w >= 0);
            CHECK(w <= l.index_exponent());
        }
}

TEST_CASE("c-series for the componentwise algebra") {
    auto zp2 = io::catalog_algebra("zp2-componentwise", 3);
    Parallel par(1);
    auto table = count_table(zp2, 6, 6, par);
    auto c = c_series(table, 6);
    CHECK(c[0] == 1);
    CHECK(c[1] == 3);
    CHECK(c[2] == 3);
    CHECK(c[3] == 3 + 1);  // (p+1) p^0
    CHECK(c[4] == 9);      // 3 p
    CHECK(c[5] == 9);
    CHECK(c[6] == 12);     // (p+1) p
    CHECK_THROWS(c_series(table, 7));  // strata window too small
}

TEST_CASE("non-subalgebra counts") {
    Parallel par(1);
    auto ab = io::catalog_algebra("abelian-3", 2);
    auto table_ab = count_table(ab, 3, -1, par);
    for (int i = 0; i <= 3; ++i) {
        auto [ns, ni] = non_subalgebra_counts(table_ab, i);
        CHECK(ns == 0);
        CHECK(ni == 0);
    }
    auto h = io::catalog_algebra("heisenberg", 2);
    auto table_h = count_table(h, 2, -1, par);
    auto [ns1, ni1] = non_subalgebra_counts(table_h, 1);
    CHECK(ns1 == 4);  // 7 - 3
    CHECK(ni1 >= ns1);
}

TEST_CASE("class-2 splitting agrees with the direct count") {
    auto h = io::catalog_algebra("heisenberg", 2);
    Parallel par(1);
    CHECK(class2_split_count(h, 0, Kind::Subalgebra, par) == 1);
    for (int i = 0; i <= 4; ++i) {
        CHECK(class2_split_count(h, i, Kind::Subalgebra, par) ==
              count(h, i, Kind::Subalgebra, par));
        CHECK(class2_split_count(h, i, Kind::Ideal, par) == count(h, i, Kind::Ideal, par));
    }
    // the abelian algebra splits with a trivial quotient: a = 0
    auto ab = io::catalog_algebra("abelian-2", 3);
    for (int i = 0; i <= 3; ++i)
        CHECK(class2_split_count(ab, i, Kind::Subalgebra, par) ==
              count(ab, i, Kind::Lattice, par));
}

TEST_CASE("induced multiplication in a subalgebra basis") {
    auto h = io::catalog_algebra("heisenberg", 2);
    auto sub = span_of({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3, 2);
    auto induced = induced_algebra(sub, h);
    // (2e1)*(e2) = 2e3 = 2*h3
    CHECK(induced.c(0, 1, 2) == 2);
    CHECK(induced.c(1, 0, 2) == -2);
    CHECK(induced.c(0, 0, 0) == 0);
    CHECK_THROWS(induced_algebra(span_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, 3, 2), h));
}

TEST_CASE("double-count identity at small index") {
    Parallel par(1);
    for (int64_t p : {2, 3}) {
        auto h = io::catalog_algebra("heisenberg", p);
        for (int i = 0; i <= 1; ++i) {
            auto rep = local_growth_identity_check(h, i, par);
            CHECK(rep.identity_holds);
            CHECK(rep.all_a_congruent);
            CHECK(rep.all_b_congruent);
        }
    }
    // abelian double count: both sides equal a_1 squared at i = 1 in rank 2
    auto ab = io::catalog_algebra("abelian-2", 2);
    auto rep = local_growth_identity_check(ab, 1, par);
    CHECK(rep.identity_holds);
    ZInt a1(exactmath::gaussian_binomial(2, 1, 2).get_num());
    CHECK(rep.lhs == a1 * a1);
}

TEST_CASE("theorem-A congruences at small index") {
    Parallel par(1);
    auto h = io::catalog_algebra("heisenberg", 2);
    auto table = count_table(h, 4, -1, par);
    for (int i = 0; i <= 4; ++i) {
        CHECK(table.subalgebras[static_cast<size_t>(i)] % 2 == 1);
        CHECK(table.ideals[static_cast<size_t>(i)] % 2 == 1);
    }
}

TEST_CASE("count tables serialize to records and text") {
    Parallel par(1);
    auto h = io::catalog_algebra("heisenberg", 2);
    auto table = count_table(h, 2, 2, par);
    auto records = table.to_records();
    CHECK(records.find("table heisenberg n=3 p=2") != std::string::npos);
    CHECK(records.find("count subalgebra 2 19") != std::string::npos);
    CHECK(records.find("count lattice 2 35") != std::string::npos);
    CHECK(records.find("stratum-w 1 0 3") != std::string::npos);
    auto text = table.to_text();
    CHECK(text.find("19") != std::string::npos);
}
