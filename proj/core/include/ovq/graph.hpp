#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <ovq/errors.hpp>

namespace ovq {

/// Bijection between external node labels and dense indices in [0, size()).
/// Indices are assigned contiguously in first-intern order.
class NodeTable {
public:
    int intern(std::string_view label);
    std::optional<int> find(std::string_view label) const;
    const std::string& label(int index) const { return labels_.at(static_cast<size_t>(index)); }
    int size() const { return static_cast<int>(labels_.size()); }

private:
    struct Hash {
        using is_transparent = void;
        size_t operator()(std::string_view s) const noexcept {
            return std::hash<std::string_view>{}(s);
        }
    };

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int, Hash, std::equal_to<>> index_;
};

/// Canonical undirected edge, u < v.
struct Edge {
    int u;
    int v;
    double weight;
};

struct Neighbor {
    int node;
    double weight;
};

enum class DirectedPolicy {
    Symmetrize, ///< duplicate and antiparallel lines merge by summing weights
    Reject      ///< any repeated unordered pair is an error
};

class Graph;

/// Accumulates edges and produces an immutable Graph. Self-loops are dropped
/// and counted; duplicate handling follows the DirectedPolicy.
class GraphBuilder {
public:
    explicit GraphBuilder(DirectedPolicy policy = DirectedPolicy::Symmetrize);

    int intern(std::string_view label) { return table_->intern(label); }
    void add_edge(std::string_view u, std::string_view v, double weight = 1.0);
    void add_edge(int u, int v, double weight = 1.0);

    Graph build();

private:
    std::shared_ptr<NodeTable> table_;
    std::unordered_map<uint64_t, double> weights_;
    int self_loops_dropped_ = 0;
    DirectedPolicy policy_;
};

/// Immutable weighted undirected graph. No self-loops, no duplicate edges.
/// Safe for concurrent reads once constructed.
class Graph {
public:
    /// Parses `u v [w]` lines; `#`-prefixed lines are comments, blank lines
    /// are skipped. Labels are interned in first-seen order.
    static Graph load_edge_list(std::istream& in,
                                DirectedPolicy policy = DirectedPolicy::Symmetrize);

    int node_count() const { return static_cast<int>(degree_.size()); }

    /// m = half the sum of the full adjacency matrix.
    double total_edge_weight() const { return total_weight_; }

    /// Weighted degree k_i (sum of incident edge weights).
    double degree(int node) const;
    double degree(std::string_view label) const;

    std::span<const Neighbor> neighbors(int node) const;

    /// Edges sorted by (u, v) internal index.
    const std::vector<Edge>& edges() const { return edges_; }

    const NodeTable& nodes() const { return *table_; }
    std::shared_ptr<const NodeTable> table() const { return table_; }

    int self_loops_dropped() const { return self_loops_dropped_; }

    /// Emits `label_u label_v weight` sorted by (u, v); the weight column is
    /// omitted when every weight is exactly 1.
    void write_edge_list(std::ostream& out) const;

    /// Equality as a labeled graph: same label set and the same weighted
    /// edges between labels, regardless of internal index assignment.
    bool same_labeled_graph(const Graph& other) const;

private:
    friend class GraphBuilder;
    Graph() = default;

    std::shared_ptr<const NodeTable> table_;
    std::vector<Edge> edges_;
    std::vector<int> adj_offsets_;
    std::vector<Neighbor> adj_;
    std::vector<double> degree_;
    double total_weight_ = 0.0;
    int self_loops_dropped_ = 0;
};

} // namespace ovq
