#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/oracles.hpp"
#include "tdp/count.hpp"
#include "tdp/families.hpp"
#include "tdp/transitive.hpp"

using namespace tdp;

namespace {
IntPoly P(std::vector<BigInt> cs) { return IntPoly::from_coefficients(std::move(cs)); }
} // namespace

TEST_CASE("is_total_dominating") {
    Graph c4 = build(CycleSpec{4});
    VertexSet ab(4);
    ab.add(0);
    ab.add(1);
    CHECK(is_total_dominating(c4, ab));
    VertexSet ac(4);
    ac.add(0);
    ac.add(2);
    CHECK_FALSE(is_total_dominating(c4, ac));
    CHECK_FALSE(is_total_dominating(c4, VertexSet(4)));
}

TEST_CASE("count_all fixed values") {
    CountVector k4 = count_all(build(CompleteSpec{4}));
    CHECK(k4.polynomial() == P({0, 0, 6, 4, 1}));
    CHECK(k4.gamma_t == 2);

    CHECK(count_all(build(CycleSpec{3})).polynomial() == P({0, 0, 3, 1}));
    CHECK(count_all(build(PathSpec{4})).polynomial() == P({0, 0, 1, 2, 1}));
    CHECK(count_all(Graph(0)).polynomial() == IntPoly::one());
    CHECK(count_all(Graph(1)).polynomial().is_zero());
}

TEST_CASE("count_all equals the definition oracle") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(rng, 1 + int(rng() % 9));
        CHECK(count_all(g).counts == oracle::tds_counts(g));
    }
}

TEST_CASE("count vector structural invariants") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g = oracle::random_graph(rng, n);
        CountVector cv = count_all(g);
        CHECK(cv.counts[0] == 0);
        CHECK((cv.counts[std::size_t(n)] == 1) == !g.has_isolated_vertex());
        for (int i = 1; i < n; ++i)
            if (cv.counts[std::size_t(i)] > 0) CHECK(cv.counts[std::size_t(i) + 1] > 0);
    }
}

TEST_CASE("enumeration limit is enforced") {
    EnumerationOptions tight;
    tight.max_n = 5;
    CHECK_THROWS_AS(count_all(build(CycleSpec{6}), tight), size_error);
    CHECK_THROWS_AS(count_containing(build(CycleSpec{6}), 0, tight), size_error);
    CHECK_NOTHROW(count_all(build(CycleSpec{5}), tight));
}

TEST_CASE("count_containing") {
    CountVector c3 = count_containing(build(CycleSpec{3}), 0);
    CHECK(c3.counts[2] == 2);
    CHECK(c3.counts[3] == 1);

    CountVector p3 = count_containing(build(PathSpec{3}), 1);
    CHECK(p3.counts[2] == 2);

    // Petersen: d_t^v(P,4) = (i/n) d_t(P,4) = 4
    CHECK(count_containing(petersen(), 3).counts[4] == 4);

    // rooted counts sum against full counts on random graphs
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + int(rng() % 6);
        Graph g = oracle::random_graph(rng, n);
        CountVector all = count_all(g);
        for (int i = 0; i <= n; ++i) {
            BigInt sum = 0;
            for (int v = 0; v < n; ++v) sum += count_containing(g, v).counts[std::size_t(i)];
            CHECK(sum == BigInt(i) * all.counts[std::size_t(i)]);
        }
    }
}

TEST_CASE("gamma_t") {
    CHECK(gamma_t(petersen()) == 4);
    CHECK(gamma_t(build(FirecrackerSpec{3, 4})) == 6);
    CHECK(gamma_t(build(CompleteSpec{2})) == 2);
    CHECK(gamma_t(build(CycleSpec{6})) == 4);
    CHECK_THROWS_AS(gamma_t(Graph(3)), precondition_error);
    CHECK_THROWS_AS(gamma_t(Graph::from_edges(3, {{0, 1}})), precondition_error);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = oracle::random_graph(rng, 2 + int(rng() % 7), 0.5);
        if (g.has_isolated_vertex()) continue;
        CHECK(gamma_t(g) == oracle::tds_gamma(g));
        CHECK(gamma_t(g) == count_all(g).gamma_t);
    }
}

TEST_CASE("worker count never changes the counts") {
    Graph gp = build(GeneralizedPetersenSpec{8, 3});
    EnumerationOptions serial;
    EnumerationOptions parallel;
    parallel.workers = 4;
    CHECK(count_all(gp, serial).counts == count_all(gp, parallel).counts);
    CHECK(count_containing(gp, 5, serial).counts == count_containing(gp, 5, parallel).counts);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_graph(rng, 10 + int(rng() % 4));
        EnumerationOptions w3;
        w3.workers = 3;
        CHECK(count_all(g, w3).counts == count_all(g, serial).counts);
    }
}

TEST_CASE("superset closure of total dominating sets") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + int(rng() % 6);
        Graph g = oracle::random_graph(rng, n, 0.5);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            VertexSet d(n);
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) d.add(v);
            if (!is_total_dominating(g, d)) continue;
            for (int v = 0; v < n; ++v) {
                VertexSet bigger = d;
                bigger.add(v);
                CHECK(is_total_dominating(g, bigger));
            }
        }
    }
}

TEST_CASE("vertex transitive counting lemma") {
    CHECK(polynomial_vertex_transitive(build(CycleSpec{6})) == P({0, 0, 0, 0, 9, 6, 1}));
    CHECK(polynomial_vertex_transitive(build(CycleSpec{4})) == P({0, 0, 4, 4, 1}));
    CHECK(polynomial_vertex_transitive(petersen()) ==
          P({0, 0, 0, 0, 10, 72, 140, 110, 45, 10, 1}));
    CHECK(polynomial_vertex_transitive(build(CycleSpec{4})) ==
          total_domination_polynomial(build(CycleSpec{4})));
    CHECK_THROWS_AS(polynomial_vertex_transitive(build(PathSpec{3})), precondition_error);
}

TEST_CASE("regular tail") {
    CHECK(regular_tail(10, 3, 8) == 45);
    CHECK(regular_tail(10, 3, 9) == 10);
    CHECK(regular_tail(10, 3, 10) == 1);
    CHECK(regular_tail(4, 2, 3) == 4); // matches d_t(C_4, 3)
    CHECK(count_all(build(CycleSpec{4})).counts[3] == 4);
    CHECK_THROWS_AS(regular_tail(10, 3, 7), precondition_error);
}
