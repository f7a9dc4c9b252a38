#include <catch2/catch_amalgamated.hpp>

#include "tdp/families.hpp"

using namespace tdp;

TEST_CASE("basic families") {
    CHECK(build(PathSpec{1}).order() == 1);
    CHECK(build(CycleSpec{3}).edge_count() == 3);
    CHECK(build(CycleSpec{3}).is_regular(2));
    CHECK(build(CompleteSpec{5}).edge_count() == 10);
    CHECK(build(StarSpec{6}).degree(0) == 5);
    CHECK_THROWS_AS(build(CycleSpec{2}), parameter_error);
    CHECK_THROWS_AS(build(PathSpec{0}), parameter_error);
}

TEST_CASE("firecrackers") {
    Graph f23 = build(FirecrackerSpec{2, 3});
    CHECK(f23.order() == 6);
    CHECK(f23.edge_count() == 5);
    CHECK(f23.is_connected());

    for (int n : {1, 2, 3, 4})
        for (int k : {2, 3, 4}) {
            Graph f = build(FirecrackerSpec{n, k});
            CHECK(f.order() == n * k);
            CHECK(f.is_connected());
            if (k >= 3) CHECK(f.supports_and_leaves().second.count() == n);
        }

    Graph gen = build(GeneralizedFirecrackerSpec{{5, 9, 7, 4, 3}});
    CHECK(gen.order() == 5 + 9 + 7 + 4 + 3);
    CHECK(gen.is_connected());
    CHECK(gen.supports_and_leaves().second.count() == 5);
    CHECK_THROWS_AS(build(FirecrackerSpec{2, 1}), parameter_error);
}

TEST_CASE("H(3) construction") {
    Graph h = build(H3Spec{build(CycleSpec{3})});
    CHECK(h.order() == 9);
    CHECK(h.edge_count() == 9);
    CHECK(h.is_connected());
    // every base vertex gains a pendant path of length two
    for (int i = 0; i < 3; ++i) {
        CHECK(h.has_edge(i, 3 + 2 * i));
        CHECK(h.has_edge(3 + 2 * i, 3 + 2 * i + 1));
        CHECK(h.degree(3 + 2 * i + 1) == 1);
    }
}

TEST_CASE("H_k family is cubic of order 4k") {
    for (int k : {2, 3, 4, 5}) {
        Graph h = build(HFamilySpec{k});
        CHECK(h.order() == 4 * k);
        CHECK(h.is_regular(3));
        CHECK(h.is_connected());
    }
    CHECK_THROWS_AS(build(HFamilySpec{1}), parameter_error);
}

TEST_CASE("generalized Petersen graphs") {
    Graph pet = build(GeneralizedPetersenSpec{5, 2});
    CHECK(pet.order() == 10);
    CHECK(pet.is_regular(3));
    CHECK(pet.is_connected());

    Graph gp83 = build(GeneralizedPetersenSpec{8, 3});
    CHECK(gp83.order() == 16);
    CHECK(gp83.is_regular(3));
    CHECK_THROWS_AS(build(GeneralizedPetersenSpec{8, 4}), parameter_error);
    CHECK_THROWS_AS(build(GeneralizedPetersenSpec{2, 1}), parameter_error);
}

TEST_CASE("corona attaches one copy per base vertex") {
    Graph cor = build(CoronaSpec{build(CycleSpec{4}), Graph(1)});
    CHECK(cor.order() == 8);
    CHECK(cor.edge_count() == 8);
    auto [leaves, supports] = cor.supports_and_leaves();
    CHECK(leaves.count() == 4);
    CHECK(supports.count() == 4);

    Graph cor2 = build(CoronaSpec{build(PathSpec{2}), build(PathSpec{2})});
    CHECK(cor2.order() == 6);
    CHECK(cor2.edge_count() == 1 + 2 * (1 + 2));
}

TEST_CASE("disjoint union spec") {
    Graph u = build(DisjointUnionSpec{build(CycleSpec{3}), build(PathSpec{3})});
    CHECK(u.order() == 6);
    CHECK(u.edge_count() == 5);
    CHECK(u.components().size() == 2);
}
