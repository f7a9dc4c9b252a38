#include <catch2/catch_amalgamated.hpp>

#include "tdp/analysis.hpp"
#include "tdp/graph6.hpp"

using namespace tdp;

namespace {
IntPoly P(std::vector<BigInt> cs) { return IntPoly::from_coefficients(std::move(cs)); }
} // namespace

TEST_CASE("polynomial partition") {
    Corpus corpus = Corpus::from_graphs({{"c3", build(CycleSpec{3})},
                                         {"c6", build(CycleSpec{6})},
                                         {"f23", build(FirecrackerSpec{2, 3})},
                                         {"p3p3", build(PathSpec{3}).disjoint_union(
                                                      build(PathSpec{3}))}});
    EquivClassReport report = partition_by_polynomial(corpus);
    REQUIRE(report.classes.size() == 3);
    CHECK(report.classes[0] == std::vector<std::string>{"f23", "p3p3"});
    CHECK(report.unique_ids == std::vector<std::string>{"c3", "c6"});

    // a partition: every id in exactly one nonempty class
    std::size_t total = 0;
    for (const auto& cls : report.classes) {
        CHECK_FALSE(cls.empty());
        total += cls.size();
    }
    CHECK(total == corpus.entries.size());
}

TEST_CASE("two-root classification verdicts") {
    TwoRootVerdict p4 = classify_two_root(build(PathSpec{4}));
    CHECK(p4.root_set == TwoRootSet::minus_one_zero);
    CHECK(p4.support_count == 2);
    CHECK(p4.violations.empty());

    TwoRootVerdict h3 = classify_two_root(build(H3Spec{build(CycleSpec{3})}));
    CHECK(h3.root_set == TwoRootSet::minus_two_zero);
    REQUIRE(h3.kappa.has_value());
    CHECK(*h3.kappa == 1);
    CHECK(h3.violations.empty());

    TwoRootVerdict c6 = classify_two_root(build(CycleSpec{6}));
    CHECK(c6.root_set == TwoRootSet::minus_three_zero);
    CHECK(c6.delta == 2);
    REQUIRE_FALSE(c6.notes.empty());
    CHECK(c6.notes[0] == "classified as C_6");
    CHECK(c6.violations.empty());

    TwoRootVerdict k4 = classify_two_root(build(CompleteSpec{4}));
    CHECK(k4.root_set == TwoRootSet::other);

    CHECK_THROWS_AS(classify_two_root(Graph(2)), precondition_error);
}

TEST_CASE("integer root conjecture scan") {
    std::vector<std::pair<std::string, Graph>> named;
    int i = 0;
    for (Graph& g : generate_all(6, true))
        named.emplace_back("g" + std::to_string(i++), std::move(g));
    Corpus corpus = Corpus::from_graphs(std::move(named));
    ConjectureScanReport report = integer_root_conjecture_scan(corpus);
    CHECK(report.scanned == corpus.entries.size());
    CHECK(report.violations.empty());
    CHECK_FALSE(report.theorem_breach);
}

TEST_CASE("root bound check") {
    CHECK(root_bound_check(build(CycleSpec{3})));
    CHECK(root_bound_check(build(CompleteSpec{4})));
    CHECK(root_bound_check(petersen()));
    // C_3: roots {0,-3}; |-3+1| = 2 <= sqrt(7)
    CHECK(root_bound_radius(3, 2) > 2.0);
}

TEST_CASE("identity suite on a mixed corpus") {
    Corpus corpus = Corpus::from_graphs({{"k4", build(CompleteSpec{4})},
                                         {"c6", build(CycleSpec{6})},
                                         {"f23", build(FirecrackerSpec{2, 3})},
                                         {"paw", Graph::from_edges(4, {{0, 1}, {0, 2},
                                                                       {1, 2}, {2, 3}})},
                                         {"pet", petersen()}});
    IdentityReport report = verify_identity_suite(corpus);
    CHECK(report.all_passed());
    CHECK(report.pass_counts.at("vertex-identity") == 4 + 6 + 6 + 4 + 10);
    CHECK(report.pass_counts.at("coefficient-theorem") == 5);
    CHECK(report.pass_counts.count("twin-identity") == 1);
    CHECK(report.pass_counts.at("regular-tail") > 0);
    CHECK(report.pass_counts.at("vertex-transitive-counting") == 4 + 6 + 10); // k4, c6, pet
}

TEST_CASE("witness searches") {
    auto witness = find_covered_not_irrelevant_witness(4);
    REQUIRE(witness.has_value());
    // K_3 is the smallest: both endpoints covered in P_3, polynomials differ
    CHECK(witness->first.order() == 3);
    CHECK(witness->first.edge_count() == 3);

    auto instances = find_five_vertex_example();
    REQUIRE(instances.size() == 1);
    const auto& [g, e] = instances[0];
    CHECK(total_domination_polynomial(g) == P({0, 0, 5, 8, 5, 1}));
    CHECK(total_domination_polynomial(g.delete_edge(e)) == P({0, 0, 4, 6, 5, 1}));
}
