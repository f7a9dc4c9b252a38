#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "tdp/canonical.hpp"
#include "tdp/connectivity.hpp"
#include "tdp/families.hpp"

using namespace tdp;

TEST_CASE("canonical form identifies isomorphism classes") {
    // every labeling of P_4 gives one form
    Graph p4 = build(PathSpec{4});
    std::set<std::string> forms;
    std::vector<int> perm{0, 1, 2, 3};
    do {
        forms.insert(canonical_form(p4.relabel(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(forms.size() == 1);

    CHECK(canonical_form(build(PathSpec{3})) != canonical_form(build(CycleSpec{3})));
    CHECK(are_isomorphic(build(PathSpec{3}).relabel({2, 0, 1}), build(PathSpec{3})));
    CHECK_FALSE(are_isomorphic(build(PathSpec{4}), build(StarSpec{4})));
}

TEST_CASE("canonical form is invariant under random relabeling") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + int(rng() % 9);
        Graph g = oracle::random_graph(rng, n);
        std::string form = canonical_form(g);
        CHECK(canonical_form(g.relabel(oracle::random_permutation(rng, n))) == form);
        // the canonical form is itself a decodable graph6 line of an
        // isomorphic graph
        CHECK(canonical_form(graph6_decode(form)) == form);
    }
}

TEST_CASE("automorphism orbits") {
    auto c6 = automorphism_orbits(build(CycleSpec{6}));
    CHECK(c6.orbits.size() == 1);
    CHECK(c6.automorphism_count == 12);

    auto p3 = automorphism_orbits(build(PathSpec{3}));
    REQUIRE(p3.orbits.size() == 2);
    CHECK(p3.orbits[0] == std::vector<int>{0, 2});
    CHECK(p3.orbits[1] == std::vector<int>{1});
    CHECK(p3.automorphism_count == 2);

    auto pet = automorphism_orbits(petersen());
    CHECK(pet.orbits.size() == 1);
    CHECK(pet.is_vertex_transitive());
    CHECK(pet.automorphism_count == 120);

    auto k4 = automorphism_orbits(build(CompleteSpec{4}));
    CHECK(k4.automorphism_count == 24);

    // generators preserve adjacency
    Graph g = build(GeneralizedPetersenSpec{8, 3});
    auto orb = automorphism_orbits(g);
    for (const auto& perm : orb.generators)
        for (Edge e : g.edges()) CHECK(g.has_edge(perm[e.u], perm[e.v]));

    CHECK_THROWS_AS(automorphism_orbits(Graph(70)), size_error);
    CHECK_THROWS_AS(automorphism_orbits(Graph(20), 10), size_error);
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(build(CycleSpec{4})) == 2);
    CHECK(vertex_connectivity(build(CompleteSpec{4})) == 3);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(build(PathSpec{5})) == 1);
    CHECK(vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})) == 0);
    for (int n : {3, 5, 8}) CHECK(vertex_connectivity(build(CycleSpec{n})) == 2);
    for (int n : {2, 3, 6}) CHECK(vertex_connectivity(build(CompleteSpec{n})) == n - 1);

    // flow-based answer matches subset-removal brute force
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = oracle::random_graph(rng, 4 + int(rng() % 4), 0.5);
        if (g.order() < 2) continue;
        CHECK(vertex_connectivity(g) == oracle::kappa(g));
    }
}
