#include <ovq/report.hpp>

#include <ovq/local_metrics.hpp>

namespace ovq {

namespace {

constexpr std::array<const char*, kMetricCount> kNames = {
    "Q_ov", "NQ_ov", "Q_ov^L", "Q_ds^ov", "IE", "ID", "CNT", "BE", "EXP", "CND", "F", "D",
};

} // namespace

const char* metric_name(Metric m) {
    return kNames[static_cast<size_t>(m)];
}

std::optional<Metric> metric_from_name(std::string_view name) {
    for (int i = 0; i < kMetricCount; ++i)
        if (name == kNames[static_cast<size_t>(i)])
            return static_cast<Metric>(i);
    return std::nullopt;
}

bool larger_is_better(Metric m) {
    switch (m) {
    case Metric::BE:
    case Metric::EXP:
    case Metric::CND:
        return false;
    default:
        return true;
    }
}

MetricReport compute_report(const Graph& g, const Cover& cover, const BelongingConfig& cfg) {
    double m = g.total_edge_weight();
    if (m <= 0.0)
        throw DomainError("metric undefined on a graph without edges");

    auto aggs = community_aggregates(g, cover, cfg);

    MetricReport report;
    report[Metric::QOv] = q_ov_from(aggs, m);
    report[Metric::NQOv] = nq_ov_from(aggs);
    report[Metric::QOvL] = q_ov_link(g, cover, cfg.p);
    report[Metric::QDsOv] = q_ds_ov_from(aggs, m);

    const auto& comms = cover.communities();
    std::vector<LocalMetricRow> rows;
    rows.reserve(comms.size());
    for (size_t c = 0; c < comms.size(); ++c)
        rows.push_back(local_row(aggs[c], fuzzy_size(comms[c]), comms[c].id));
    LocalAggregate local = aggregate_local(rows);

    report[Metric::IE] = local.ie_sum;
    report[Metric::ID] = local.id_mean;
    report[Metric::CNT] = local.cnt_mean;
    report[Metric::BE] = local.be_sum;
    report[Metric::EXP] = local.exp_mean;
    report[Metric::CND] = local.cnd_mean;
    report[Metric::F] = local.fitness_mean;
    report[Metric::D] = local.d_sum;
    return report;
}

} // namespace ovq
