#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include <ovq/belonging.hpp>
#include <ovq/errors.hpp>
#include <ovq/graph.hpp>

namespace ovq {

/// One community: node indices with belonging coefficients in (0, 1].
/// Zero-coefficient entries are never stored; membership means a > 0.
struct Community {
    int id = 0;
    std::vector<std::pair<int, double>> members; ///< sorted by node index
};

enum class CoverKind {
    Crisp, ///< every stored coefficient is exactly 1
    Fuzzy  ///< coefficients in (0, 1]; validated rows sum to 1
};

/// A set of possibly overlapping communities over a node table. Immutable
/// after construction; every transformation below returns a new cover.
class Cover {
public:
    Cover(std::shared_ptr<const NodeTable> table, std::vector<Community> communities,
          CoverKind kind);

    /// Crisp format: one community per line, labels whitespace-separated.
    /// Fuzzy format: `label:coefficient` tokens. Communities are numbered by
    /// line order; blank lines are skipped. When `table` is null a private
    /// table is built from the cover's own labels; metric evaluation requires
    /// loading against the graph's table.
    static Cover load(std::istream& in, CoverKind kind,
                      std::shared_ptr<const NodeTable> table = nullptr);

    const std::vector<Community>& communities() const { return communities_; }

    /// Per-node list of (community id, coefficient).
    std::span<const std::pair<int, double>> memberships(int node) const;

    CoverKind kind() const { return kind_; }
    const NodeTable& nodes() const { return *table_; }
    std::shared_ptr<const NodeTable> table() const { return table_; }

    int covered_node_count() const { return covered_nodes_; }

    /// Mirrors the reader: crisp covers as label lines, fuzzy covers as
    /// `label:coef` tokens with coefficients at 17 significant digits.
    void write(std::ostream& out) const;

    /// Enforces sum_c a_{i,c} = 1 within `tol` for every covered node.
    void validate_rows(double tol = 1e-9) const;

    /// Rescales each covered node's coefficients to sum to 1.
    Cover normalized() const;

private:
    std::shared_ptr<const NodeTable> table_;
    std::vector<Community> communities_;
    std::vector<int> member_offsets_;
    std::vector<std::pair<int, double>> member_data_;
    CoverKind kind_;
    int covered_nodes_ = 0;
};

/// a_{i,c} = 1 / O_i where O_i is the number of communities containing i.
Cover assign_v1(const Cover& crisp);

/// a_{i,c} = (weight of i's edges into c) / (total weight of i's edges into
/// all of its communities). Nodes with no edge into any of their communities
/// are an error unless `fallback_v1` assigns them 1 / O_i instead.
Cover assign_v2(const Graph& g, const Cover& crisp, bool fallback_v1 = false);

/// Keeps memberships with a > threshold (strict) at coefficient 1, drops
/// emptied communities, and reports nodes that lost every membership.
Cover fuzzy_to_crisp(const Cover& cover, double threshold,
                     std::vector<int>* dropped_nodes = nullptr);

/// Appends a one-node community (coefficient 1) for every node of g absent
/// from all communities.
Cover add_singletons(const Graph& g, const Cover& cover);

/// Fuzzy community size |c| = sum of coefficients.
double fuzzy_size(const Community& c);

struct ResolveOptions {
    bool normalize = false;   ///< rescale given-fuzzy rows instead of rejecting
    bool v2_fallback = false; ///< v2 zero-denominator nodes get 1 / O_i
};

/// Applies the configured coefficient scheme and returns a validated fuzzy
/// cover ready for metric evaluation.
Cover resolve_cover(const Graph& g, const Cover& cover, const BelongingConfig& cfg,
                    const ResolveOptions& opts = {});

} // namespace ovq
