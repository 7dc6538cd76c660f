#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include <ovq/graph.hpp>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace ovq;

TEST_CASE("barbell edge list loads with six nodes and seven edges") {
    Graph g = fixtures::graph_from(fixtures::kBarbellEdges);
    CHECK(g.node_count() == 6);
    CHECK(g.total_edge_weight() == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(g.edges().size() == 7);
    CHECK(g.degree("3") == doctest::Approx(3.0));
    CHECK(g.degree("1") == doctest::Approx(2.0));
}

TEST_CASE("antiparallel duplicates merge by weight sum under symmetrize") {
    Graph g = fixtures::graph_from("a b 2.5\nb a 1.5\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edges().size() == 1);
    CHECK(g.edges()[0].weight == doctest::Approx(4.0));
    CHECK(g.total_edge_weight() == doctest::Approx(4.0));
}

TEST_CASE("duplicate edges are rejected under the reject policy") {
    std::istringstream in("a b\nb a\n");
    CHECK_THROWS_AS(Graph::load_edge_list(in, DirectedPolicy::Reject), ParseError);
}

TEST_CASE("self-loops are dropped and counted") {
    Graph g = fixtures::graph_from("x x 1\n");
    CHECK(g.node_count() == 1);
    CHECK(g.total_edge_weight() == 0.0);
    CHECK(g.self_loops_dropped() == 1);
    CHECK(g.degree("x") == 0.0);
}

TEST_CASE("comments and blank lines are skipped") {
    Graph g = fixtures::graph_from("# a comment\n\n1 2\n   \n# trailing\n2 3\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edges().size() == 2);
}

TEST_CASE("malformed lines report their line number") {
    std::istringstream one_token("1 2\nonly_one\n");
    CHECK_THROWS_WITH_AS(Graph::load_edge_list(one_token), doctest::Contains("line 2"),
                         ParseError);
    std::istringstream bad_weight("1 2 zero\n");
    CHECK_THROWS_AS(Graph::load_edge_list(bad_weight), ParseError);
    std::istringstream negative("1 2 -1\n");
    CHECK_THROWS_AS(Graph::load_edge_list(negative), ParseError);
    std::istringstream zero("1 2 0\n");
    CHECK_THROWS_AS(Graph::load_edge_list(zero), ParseError);
}

TEST_CASE("unknown nodes raise") {
    Graph g = fixtures::graph_from("1 2\n");
    CHECK_THROWS_AS(g.degree("7"), DomainError);
}

TEST_CASE("degree sum equals twice the total weight on random graphs") {
    gen::Rng rng(7001);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gen::random_graph(rng, 2 + trial % 29, 0.3, trial % 2 == 1);
        double sum = 0.0;
        for (int i = 0; i < g.node_count(); ++i)
            sum += g.degree(i);
        CHECK(fixtures::close(sum, 2.0 * g.total_edge_weight(), 1e-12));
    }
}

TEST_CASE("canonical writer round-trips the labeled graph") {
    gen::Rng rng(7002);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = gen::random_graph(rng, 3 + trial % 20, 0.4, trial % 3 == 0, true);
        std::ostringstream out;
        g.write_edge_list(out);
        Graph re = fixtures::graph_from(out.str());
        CHECK(re.same_labeled_graph(g));
        CHECK(re.total_edge_weight() == doctest::Approx(g.total_edge_weight()).epsilon(1e-15));
    }
}

TEST_CASE("loading is insensitive to input line order") {
    gen::Rng rng(7003);
    Graph g = gen::random_graph(rng, 15, 0.4);
    std::ostringstream out;
    g.write_edge_list(out);

    std::istringstream lines_in(out.str());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(lines_in, line))
        lines.push_back(line);
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string shuffled;
    for (const auto& l : lines)
        shuffled += l + "\n";

    Graph permuted = fixtures::graph_from(shuffled);
    CHECK(permuted.same_labeled_graph(g));
    for (int i = 0; i < g.node_count(); ++i) {
        const std::string& label = g.nodes().label(i);
        CHECK(permuted.degree(label) == doctest::Approx(g.degree(label)).epsilon(1e-15));
    }
}

TEST_CASE("weight column is omitted exactly when all weights are 1") {
    Graph unweighted = fixtures::graph_from("1 2\n2 3\n");
    std::ostringstream out;
    unweighted.write_edge_list(out);
    CHECK(out.str() == "1 2\n2 3\n");

    Graph weighted = fixtures::graph_from("1 2 2\n2 3 1\n");
    std::ostringstream wout;
    weighted.write_edge_list(wout);
    CHECK(wout.str() == "1 2 2\n2 3 1\n");
}
