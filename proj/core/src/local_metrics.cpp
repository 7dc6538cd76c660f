#include <ovq/local_metrics.hpp>

namespace ovq {

namespace {

double ratio(double num, double denom) {
    return denom > 0.0 ? num / denom : 0.0;
}

} // namespace

LocalMetricRow local_row(const CommunityAggregates& agg, double size, int community_id) {
    if (size < 0.0)
        throw DomainError("community size must be nonnegative");
    LocalMetricRow row;
    row.community_id = community_id;
    row.ie = agg.e_in;
    row.id = agg.d_in;
    row.cnt = ratio(2.0 * agg.e_in, size);
    row.be = agg.e_out;
    row.exp = ratio(agg.e_out, size);
    row.cnd = ratio(agg.e_out, 2.0 * agg.e_in + agg.e_out);
    row.fitness = ratio(agg.e_in, agg.e_in + agg.e_out);
    row.d_term = size > 0.0 ? (2.0 * agg.e_in - agg.e_out) / size : 0.0;
    return row;
}

LocalAggregate aggregate_local(std::span<const LocalMetricRow> rows) {
    if (rows.empty())
        throw DomainError("cannot aggregate an empty cover");
    LocalAggregate out;
    for (const auto& row : rows) {
        out.ie_sum += row.ie;
        out.be_sum += row.be;
        out.d_sum += row.d_term;
        out.id_mean += row.id;
        out.cnt_mean += row.cnt;
        out.exp_mean += row.exp;
        out.cnd_mean += row.cnd;
        out.fitness_mean += row.fitness;
    }
    double n = static_cast<double>(rows.size());
    out.id_mean /= n;
    out.cnt_mean /= n;
    out.exp_mean /= n;
    out.cnd_mean /= n;
    out.fitness_mean /= n;
    return out;
}

} // namespace ovq
