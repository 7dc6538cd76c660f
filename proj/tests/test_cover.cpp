#include <doctest.h>

#include <sstream>

#include <ovq/cover.hpp>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace ovq;

TEST_CASE("crisp covers parse one community per line") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover cover = fixtures::cover_from(g, "1 2 3 4\n3 4 5 6\n");
    CHECK(cover.communities().size() == 2);
    CHECK(cover.kind() == CoverKind::Crisp);
    int node3 = *g.table()->find("3");
    CHECK(cover.memberships(node3).size() == 2);
}

TEST_CASE("fuzzy covers parse label:coefficient tokens") {
    Graph g = fixtures::graph_from("1 3\n3 5\n");
    Cover cover = fixtures::cover_from(g, "1:1 3:0.5\n3:0.5 5:1\n", CoverKind::Fuzzy);
    int node3 = *g.table()->find("3");
    double sum = 0.0;
    for (const auto& [c, a] : cover.memberships(node3))
        sum += a;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
    cover.validate_rows();
}

TEST_CASE("out-of-range coefficients are rejected") {
    Graph g = fixtures::graph_from("1 2\n");
    std::istringstream in("1:1.5\n");
    CHECK_THROWS_AS(Cover::load(in, CoverKind::Fuzzy, g.table()), ParseError);
    std::istringstream neg("1:-0.25\n");
    CHECK_THROWS_AS(Cover::load(neg, CoverKind::Fuzzy, g.table()), ParseError);
}

TEST_CASE("duplicate node within a community line is an error") {
    Graph g = fixtures::graph_from("1 2\n");
    std::istringstream in("1 2 1\n");
    CHECK_THROWS_AS(Cover::load(in, CoverKind::Crisp, g.table()), ParseError);
}

TEST_CASE("whitespace-only community lines are an error, empty lines are skipped") {
    Graph g = fixtures::graph_from("1 2\n");
    std::istringstream blank("1\n\n2\n");
    Cover cover = Cover::load(blank, CoverKind::Crisp, g.table());
    CHECK(cover.communities().size() == 2);
    std::istringstream spaces("1\n   \n");
    CHECK_THROWS_AS(Cover::load(spaces, CoverKind::Crisp, g.table()), ParseError);
}

TEST_CASE("unknown labels are rejected when bound to a graph") {
    Graph g = fixtures::graph_from("1 2\n");
    std::istringstream in("1 9\n");
    CHECK_THROWS_AS(Cover::load(in, CoverKind::Crisp, g.table()), ParseError);
}

TEST_CASE("v1 assigns the reciprocal of the membership count") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover crisp = fixtures::cover_from(g, fixtures::kBarbellOverlapCover);
    Cover fuzzy = assign_v1(crisp);
    int node3 = *g.table()->find("3");
    for (const auto& [c, a] : fuzzy.memberships(node3))
        CHECK(a == 0.5);
    int node1 = *g.table()->find("1");
    CHECK(fuzzy.memberships(node1).size() == 1);
    CHECK(fuzzy.memberships(node1)[0].second == 1.0);
    fuzzy.validate_rows(1e-12);
}

TEST_CASE("v1 on a disjoint cover gives exact ones") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover fuzzy = assign_v1(fixtures::cover_from(g, fixtures::kBarbellDisjointCover));
    for (const auto& c : fuzzy.communities())
        for (const auto& [node, a] : c.members)
            CHECK(a == 1.0);
}

TEST_CASE("v2 weights memberships by edge strength into each community") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover fuzzy = assign_v2(g, fixtures::cover_from(g, fixtures::kBarbellOverlapCover));
    int node3 = *g.table()->find("3");
    // neighbors of 3 are {1,2,4}: all three in A, only 4 in B.
    auto ms3 = fuzzy.memberships(node3);
    REQUIRE(ms3.size() == 2);
    CHECK(ms3[0].second == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(ms3[1].second == doctest::Approx(0.25).epsilon(1e-14));
    // neighbors of 4 are {3,5,6}: 3 in A; all of 3,5,6 in B.
    int node4 = *g.table()->find("4");
    auto ms4 = fuzzy.memberships(node4);
    REQUIRE(ms4.size() == 2);
    CHECK(ms4[0].second == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(ms4[1].second == doctest::Approx(0.75).epsilon(1e-14));
    fuzzy.validate_rows(1e-12);
}

TEST_CASE("v2 on a disjoint cover gives ones; isolated members are an error") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover fuzzy = assign_v2(g, fixtures::cover_from(g, fixtures::kBarbellDisjointCover));
    for (const auto& c : fuzzy.communities())
        for (const auto& [node, a] : c.members)
            CHECK(a == 1.0);

    // node 6 alone in a community with no internal neighbor
    Cover bad = fixtures::cover_from(g, "1 2 3 4 5\n6\n");
    CHECK_THROWS_AS(assign_v2(g, bad), DomainError);
    Cover fallback = assign_v2(g, bad, true);
    int node6 = *g.table()->find("6");
    CHECK(fallback.memberships(node6)[0].second == 1.0);
}

TEST_CASE("v1 and v2 rows sum to one on random crisp covers") {
    gen::Rng rng(8101);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gen::random_graph(rng, 4 + trial % 20, 0.4, false, true);
        Cover crisp = gen::random_crisp_cover(rng, g);
        for (const Cover& fuzzy : {assign_v1(crisp), assign_v2(g, crisp)})
            for (int i = 0; i < g.node_count(); ++i) {
                auto ms = fuzzy.memberships(i);
                if (ms.empty())
                    continue;
                double sum = 0.0;
                for (const auto& [c, a] : ms)
                    sum += a;
                CHECK(fixtures::close(sum, 1.0, 1e-12));
            }
    }
}

TEST_CASE("fuzzy_to_crisp keeps strictly-above-threshold memberships") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover fuzzy = assign_v1(fixtures::cover_from(g, fixtures::kBarbellOverlapCover));
    int node3 = *g.table()->find("3");

    Cover kept = fuzzy_to_crisp(fuzzy, 0.4);
    CHECK(kept.memberships(node3).size() == 2);

    std::vector<int> dropped;
    Cover cut = fuzzy_to_crisp(fuzzy, 0.5, &dropped);
    CHECK(cut.memberships(node3).empty());
    CHECK(dropped.size() == 2); // nodes 3 and 4 lose both memberships
}

TEST_CASE("threshold 0 keeps every positive membership") {
    gen::Rng rng(8102);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gen::random_graph(rng, 5 + trial, 0.35);
        Cover fuzzy = gen::random_fuzzy_cover(rng, g);
        Cover crisp = fuzzy_to_crisp(fuzzy, 0.0);
        for (int i = 0; i < g.node_count(); ++i)
            CHECK(crisp.memberships(i).size() == fuzzy.memberships(i).size());
    }
}

TEST_CASE("crisp cover thresholded at 0.99 is unchanged") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover crisp = fixtures::cover_from(g, fixtures::kBarbellOverlapCover);
    Cover as_fuzzy(crisp.table(), crisp.communities(), CoverKind::Fuzzy);
    Cover cut = fuzzy_to_crisp(as_fuzzy, 0.99);
    CHECK(cut.communities().size() == crisp.communities().size());
    for (int i = 0; i < g.node_count(); ++i)
        CHECK(cut.memberships(i).size() == crisp.memberships(i).size());
}

TEST_CASE("add_singletons wraps uncovered nodes") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    Cover partial = fixtures::cover_from(g, "1 2 3 4\n");
    Cover full = add_singletons(g, partial);
    CHECK(full.communities().size() == 3);
    CHECK(full.covered_node_count() == 6);

    Cover unchanged = add_singletons(g, fixtures::cover_from(g, fixtures::kBarbellDisjointCover));
    CHECK(unchanged.communities().size() == 2);

    Cover empty(g.table(), {}, CoverKind::Crisp);
    CHECK(add_singletons(g, empty).communities().size() == 6);
}

TEST_CASE("fuzzy_size sums the coefficients") {
    Community crisp5{0, {{0, 1.0}, {1, 1.0}, {2, 1.0}, {3, 1.0}, {4, 1.0}}};
    CHECK(fuzzy_size(crisp5) == doctest::Approx(5.0));
    Community mixed{1, {{2, 0.5}, {3, 0.5}, {4, 1.0}, {5, 1.0}}};
    CHECK(fuzzy_size(mixed) == doctest::Approx(3.0));
    CHECK(fuzzy_size(Community{2, {}}) == 0.0);
}

TEST_CASE("cover writer mirrors the reader") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    gen::Rng rng(8103);
    Cover fuzzy = gen::random_fuzzy_cover(rng, g);
    std::ostringstream out;
    fuzzy.write(out);
    std::istringstream in(out.str());
    Cover re = Cover::load(in, CoverKind::Fuzzy, g.table());
    REQUIRE(re.communities().size() == fuzzy.communities().size());
    for (size_t c = 0; c < re.communities().size(); ++c) {
        REQUIRE(re.communities()[c].members.size() == fuzzy.communities()[c].members.size());
        for (size_t k = 0; k < re.communities()[c].members.size(); ++k) {
            CHECK(re.communities()[c].members[k].first == fuzzy.communities()[c].members[k].first);
            CHECK(re.communities()[c].members[k].second
                  == fuzzy.communities()[c].members[k].second); // bit-exact via 17 digits
        }
    }
}

TEST_CASE("given-fuzzy rows must sum to one unless normalized") {
    Graph g = fixtures::graph_from("1 2\n2 3\n");
    Cover skewed = fixtures::cover_from(g, "1:0.5 2:0.5\n2:0.8 3:1\n", CoverKind::Fuzzy);
    CHECK_THROWS_AS(skewed.validate_rows(), DomainError);
    BelongingConfig cfg{Scheme::Given, BelongingFn::Product, 30.0};
    CHECK_THROWS_AS(resolve_cover(g, skewed, cfg), DomainError);
    Cover normalized = resolve_cover(g, skewed, cfg, ResolveOptions{true, false});
    normalized.validate_rows(1e-12);
}
