#pragma once

#include <vector>

#include <ovq/belonging.hpp>
#include <ovq/cover.hpp>
#include <ovq/graph.hpp>

namespace ovq {

/// Per-community edge aggregates under a belonging function.
///
/// e_in       = half the sum of f(a_i, a_j) * A_ij over ordered internal pairs
/// e_between  = sum of f(a_i, a_j) * A_ij over ordered (i in c, j in c') pairs;
///              each unordered edge contributes once per role assignment
/// e_out      = sum of e_between over the other communities
/// d_in       = 2 e_in / sum_{i != j in c} f(a_i, a_j), 0 when the denominator is 0
/// pair_density aligns with e_between: e_between / sum_{i in c, j in c'} f, 0 on 0
struct CommunityAggregates {
    double e_in = 0.0;
    double e_out = 0.0;
    double d_in = 0.0;
    std::vector<std::pair<int, double>> e_between;     ///< sorted by community id, > 0 entries
    std::vector<std::pair<int, double>> pair_density;  ///< same keys as e_between
};

/// Computes all per-community aggregates in one pass over the edges.
/// The cover must be validated and bound to the graph's node table.
/// Accumulation order is fixed, so results are bit-reproducible.
std::vector<CommunityAggregates> community_aggregates(const Graph& g, const Cover& cover,
                                                      const BelongingConfig& cfg);

/// Newman modularity of a disjoint partition covering all nodes.
double q_disjoint(const Graph& g, const Cover& partition);

/// Node-based overlapping modularity built from community aggregates:
/// sum_c [ e_in/m - ((2 e_in + e_out) / 2m)^2 ].
double q_ov(const Graph& g, const Cover& cover, const BelongingConfig& cfg);
double q_ov_from(const std::vector<CommunityAggregates>& aggs, double m);

/// Pairwise form (1/2m) sum_c sum_{i,j in c} [A_ij - k_i k_j / 2m] f(a_i, a_j).
/// Equals q_ov for the product belonging function; differs for the average.
double q_ov_prime(const Graph& g, const Cover& cover, const BelongingConfig& cfg);

/// Edge-based overlapping modularity with the two-dimensional logistic
/// belonging function at steepness p. The null term sums the expected edge
/// coefficient over every node of the graph, members or not.
double q_ov_link(const Graph& g, const Cover& cover, double p = 30.0);

/// Localized modularity: each community is scored against the edge count of
/// its own neighborhood (itself plus the communities it shares edges with)
/// instead of the whole graph.
double nq_ov(const Graph& g, const Cover& cover, const BelongingConfig& cfg);
double nq_ov_from(const std::vector<CommunityAggregates>& aggs);

/// Modularity density: density-weighted modularity with a pairwise split
/// penalty, extended to overlapping covers.
double q_ds_ov(const Graph& g, const Cover& cover, const BelongingConfig& cfg);
double q_ds_ov_from(const std::vector<CommunityAggregates>& aggs, double m);

/// Disjoint baselines, computed with an all-ones crisp cover. Exact: the
/// product belonging function evaluates to 1 on crisp memberships.
double nq_disjoint(const Graph& g, const Cover& partition);
double q_ds_disjoint(const Graph& g, const Cover& partition);

} // namespace ovq
