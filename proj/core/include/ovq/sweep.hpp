#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <ovq/report.hpp>

namespace ovq {

/// One sweep point: a parameter label and the covers of its repeated runs.
/// Labels are opaque strings preserved verbatim, so "0.50" and "0.5" are
/// distinct parameters.
struct ParamPoint {
    std::string param;
    std::vector<Cover> covers;
};

/// Metric values per parameter, averaged over each point's runs.
struct SweepTable {
    std::vector<std::string> params;                      ///< sweep order
    std::vector<std::array<double, kMetricCount>> values; ///< [param][metric]
    std::vector<Metric> metrics;                          ///< reported columns, sweep order
};

struct SweepOptions {
    ResolveOptions resolve;
    bool add_singletons = false;
    std::vector<Metric> metrics{all_metrics().begin(), all_metrics().end()};
};

/// Evaluates every point's covers under cfg and averages the reports.
/// Failures are rethrown with the offending parameter named.
SweepTable evaluate_sweep(const Graph& g, const std::vector<ParamPoint>& points,
                          const BelongingConfig& cfg, const SweepOptions& opts = {});

/// Parameters whose averaged value is best for the metric, following its
/// better-direction; everything within `tol` (absolute) of the best ties in.
std::vector<std::string> best_params(const SweepTable& table, Metric metric, double tol = 1e-9);

struct ConsensusResult {
    std::vector<Metric> metrics;
    std::vector<std::vector<std::string>> per_metric_best; ///< aligned with metrics
    std::vector<std::string> winners;                      ///< in sweep order
    int count = 0; ///< number of metrics whose best set contains a winner
};

/// The parameter(s) contained in the most per-metric best sets, plus the count.
ConsensusResult consensus(const SweepTable& table, double tol = 1e-9);

/// Consensus over externally supplied per-metric best sets. `param_order`
/// fixes the winner ordering; every best entry must appear in it.
ConsensusResult consensus_from_best(const std::vector<std::vector<std::string>>& best_sets,
                                    const std::vector<std::string>& param_order,
                                    const std::vector<Metric>& metrics = {all_metrics().begin(),
                                                                          all_metrics().end()});

/// "0.5 (6)" for a single winner, "{0.5,1} (3)" for ties.
std::string format_winner_cell(const ConsensusResult& result);

/// Tab-separated table: one row per parameter, a `best` row with the
/// per-metric best parameters, and a final `consensus` row. Values use 6
/// significant digits.
void render_tsv(std::ostream& out, const SweepTable& table, const ConsensusResult& result);

/// JSON document mirroring the TSV content with 17-significant-digit numbers.
void render_json(std::ostream& out, const SweepTable& table, const ConsensusResult& result);

/// Single-report renderers used by the compute command.
void render_report_tsv(std::ostream& out, const MetricReport& report,
                       const std::vector<Metric>& metrics);
void render_report_json(std::ostream& out, const MetricReport& report,
                        const std::vector<Metric>& metrics);

/// Manifest lines are `param<TAB>cover_path`; repeated parameters denote
/// repeated runs. Paths are resolved against `base_dir`.
std::vector<ParamPoint> load_manifest(std::istream& in, const std::string& base_dir,
                                      CoverKind cover_kind,
                                      std::shared_ptr<const NodeTable> table);

} // namespace ovq
