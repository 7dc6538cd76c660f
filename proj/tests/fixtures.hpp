#pragma once

#include <sstream>
#include <string>

#include <ovq/cover.hpp>
#include <ovq/graph.hpp>

namespace fixtures {

// Two triangles {1,2,3} and {4,5,6} joined by the bridge 3-4. |V|=6, m=7.
inline constexpr const char* kBarbellEdges = "1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n3 4\n";

inline constexpr const char* kBarbellDisjointCover = "1 2 3\n4 5 6\n";
inline constexpr const char* kBarbellOverlapCover = "1 2 3 4\n3 4 5 6\n";

// Zachary's karate club, 34 nodes, 78 edges.
inline constexpr const char* kKarateEdges =
    "1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n1 8\n1 9\n1 11\n1 12\n1 13\n1 14\n1 18\n1 20\n1 22\n1 32\n"
    "2 3\n2 4\n2 8\n2 14\n2 18\n2 20\n2 22\n2 31\n"
    "3 4\n3 8\n3 9\n3 10\n3 14\n3 28\n3 29\n3 33\n"
    "4 8\n4 13\n4 14\n"
    "5 7\n5 11\n"
    "6 7\n6 11\n6 17\n"
    "7 17\n"
    "9 31\n9 33\n9 34\n"
    "10 34\n"
    "14 34\n"
    "15 33\n15 34\n"
    "16 33\n16 34\n"
    "19 33\n19 34\n"
    "20 34\n"
    "21 33\n21 34\n"
    "23 33\n23 34\n"
    "24 26\n24 28\n24 30\n24 33\n24 34\n"
    "25 26\n25 28\n25 32\n"
    "26 32\n"
    "27 30\n27 34\n"
    "28 34\n"
    "29 32\n29 34\n"
    "30 33\n30 34\n"
    "31 33\n31 34\n"
    "32 33\n32 34\n"
    "33 34\n";

// The club's two factions (instructor's side first).
inline constexpr const char* kKarateFactions =
    "1 2 3 4 5 6 7 8 11 12 13 14 17 18 20 22\n"
    "9 10 15 16 19 21 23 24 25 26 27 28 29 30 31 32 33 34\n";

// Three triangles chained by the bridges 3-4 and 6-7; the end communities
// share no edge. m = 11.
inline constexpr const char* kTriangleChainEdges =
    "1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n7 8\n7 9\n8 9\n3 4\n6 7\n";
inline constexpr const char* kTriangleChainCover = "1 2 3\n4 5 6\n7 8 9\n";

inline ovq::Graph graph_from(const std::string& edges,
                             ovq::DirectedPolicy policy = ovq::DirectedPolicy::Symmetrize) {
    std::istringstream in(edges);
    return ovq::Graph::load_edge_list(in, policy);
}

inline ovq::Cover cover_from(const ovq::Graph& g, const std::string& text,
                             ovq::CoverKind kind = ovq::CoverKind::Crisp) {
    std::istringstream in(text);
    return ovq::Cover::load(in, kind, g.table());
}

inline bool close(double a, double b, double tol) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

} // namespace fixtures
