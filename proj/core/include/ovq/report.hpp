#pragma once

#include <array>
#include <optional>
#include <string_view>

#include <ovq/cover.hpp>
#include <ovq/global_metrics.hpp>
#include <ovq/graph.hpp>

namespace ovq {

/// The twelve network-level metrics, in report column order.
enum class Metric {
    QOv,
    NQOv,
    QOvL,
    QDsOv,
    IE,
    ID,
    CNT,
    BE,
    EXP,
    CND,
    F,
    D,
};

inline constexpr int kMetricCount = 12;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::QOv, Metric::NQOv, Metric::QOvL, Metric::QDsOv, Metric::IE, Metric::ID,
    Metric::CNT, Metric::BE,   Metric::EXP,  Metric::CND,   Metric::F,  Metric::D};

constexpr const std::array<Metric, kMetricCount>& all_metrics() {
    return kAllMetrics;
}

const char* metric_name(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

/// True when a larger value indicates better community quality.
/// BE, EXP and CND are smaller-is-better; the rest are larger-is-better.
bool larger_is_better(Metric m);

struct MetricReport {
    std::array<double, kMetricCount> values{};

    double& operator[](Metric m) { return values[static_cast<size_t>(m)]; }
    double operator[](Metric m) const { return values[static_cast<size_t>(m)]; }
};

/// Evaluates all twelve metrics for one (graph, cover, config) triple.
/// The cover must be a validated fuzzy cover bound to the graph (see
/// resolve_cover). Q_ov^L always uses the logistic belonging function at
/// cfg.p; the other metrics use cfg.fn.
MetricReport compute_report(const Graph& g, const Cover& cover, const BelongingConfig& cfg);

} // namespace ovq
