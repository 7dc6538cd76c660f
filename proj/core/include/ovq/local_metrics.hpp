#pragma once

#include <span>
#include <vector>

#include <ovq/global_metrics.hpp>

namespace ovq {

/// The eight local quality metrics of one community. Every ratio with a zero
/// denominator is defined as 0, so singleton communities stay harmless.
struct LocalMetricRow {
    int community_id = 0;
    double ie = 0.0;      ///< internal edge weight
    double id = 0.0;      ///< internal density
    double cnt = 0.0;     ///< contraction, 2 ie / |c|
    double be = 0.0;      ///< boundary edge weight
    double exp = 0.0;     ///< expansion, be / |c|
    double cnd = 0.0;     ///< conductance, be / (2 ie + be)
    double fitness = 0.0; ///< ie / (ie + be)
    double d_term = 0.0;  ///< average modularity degree, (2 ie - be) / |c|
};

LocalMetricRow local_row(const CommunityAggregates& agg, double size, int community_id);

/// Network-level aggregation: IE, BE and D sum over communities; the
/// densities and ratios take the unweighted mean.
struct LocalAggregate {
    double ie_sum = 0.0;
    double be_sum = 0.0;
    double d_sum = 0.0;
    double id_mean = 0.0;
    double cnt_mean = 0.0;
    double exp_mean = 0.0;
    double cnd_mean = 0.0;
    double fitness_mean = 0.0;
};

LocalAggregate aggregate_local(std::span<const LocalMetricRow> rows);

} // namespace ovq
