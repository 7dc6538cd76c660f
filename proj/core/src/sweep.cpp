#include <ovq/sweep.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

namespace ovq {

namespace {

std::string fmt(double v, const char* spec) {
    char buf[40];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt6(double v) {
    return fmt(v, "%.6g");
}

std::string fmt17(double v) {
    return fmt(v, "%.17g");
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\t':
            out += "\\t";
            break;
        case '\r':
            out += "\\r";
            break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += sep;
        out += items[i];
    }
    return out;
}

} // namespace

SweepTable evaluate_sweep(const Graph& g, const std::vector<ParamPoint>& points,
                          const BelongingConfig& cfg, const SweepOptions& opts) {
    SweepTable table;
    table.metrics = opts.metrics;
    for (const auto& point : points) {
        if (point.covers.empty())
            throw DomainError("parameter '" + point.param + "' has no covers");
        // Mean as first + sum(x - first)/n: identical runs average bit-exactly.
        std::array<double, kMetricCount> first{};
        std::array<double, kMetricCount> shifted{};
        try {
            bool is_first = true;
            for (const Cover& cover : point.covers) {
                const Cover& base = cover;
                Cover prepared = opts.add_singletons ? add_singletons(g, base) : base;
                Cover fuzzy = resolve_cover(g, prepared, cfg, opts.resolve);
                MetricReport report = compute_report(g, fuzzy, cfg);
                if (is_first) {
                    first = report.values;
                    is_first = false;
                } else {
                    for (int i = 0; i < kMetricCount; ++i)
                        shifted[static_cast<size_t>(i)] +=
                            report.values[static_cast<size_t>(i)] - first[static_cast<size_t>(i)];
                }
            }
        } catch (const DomainError& e) {
            throw DomainError("parameter '" + point.param + "': " + e.what());
        }
        double runs = static_cast<double>(point.covers.size());
        std::array<double, kMetricCount> mean{};
        for (int i = 0; i < kMetricCount; ++i)
            mean[static_cast<size_t>(i)] =
                first[static_cast<size_t>(i)] + shifted[static_cast<size_t>(i)] / runs;
        table.params.push_back(point.param);
        table.values.push_back(mean);
    }
    return table;
}

std::vector<std::string> best_params(const SweepTable& table, Metric metric, double tol) {
    std::vector<std::string> best;
    if (table.params.empty())
        return best;
    size_t mi = static_cast<size_t>(metric);
    bool larger = larger_is_better(metric);
    double best_value = table.values[0][mi];
    for (const auto& row : table.values) {
        double v = row[mi];
        if (larger ? v > best_value : v < best_value)
            best_value = v;
    }
    for (size_t p = 0; p < table.params.size(); ++p) {
        double v = table.values[p][mi];
        if (larger ? v >= best_value - tol : v <= best_value + tol)
            best.push_back(table.params[p]);
    }
    return best;
}

ConsensusResult consensus_from_best(const std::vector<std::vector<std::string>>& best_sets,
                                    const std::vector<std::string>& param_order,
                                    const std::vector<Metric>& metrics) {
    if (best_sets.size() != metrics.size())
        throw DomainError("per-metric best sets do not match the metric list");
    std::unordered_map<std::string, int> votes;
    for (const auto& param : param_order)
        votes.emplace(param, 0);
    for (const auto& set : best_sets)
        for (const auto& param : set) {
            auto it = votes.find(param);
            if (it == votes.end())
                throw DomainError("best parameter '" + param + "' is not in the sweep");
            ++it->second;
        }

    ConsensusResult result;
    result.metrics = metrics;
    result.per_metric_best = best_sets;
    for (const auto& param : param_order)
        result.count = std::max(result.count, votes[param]);
    for (const auto& param : param_order)
        if (votes[param] == result.count)
            result.winners.push_back(param);
    return result;
}

ConsensusResult consensus(const SweepTable& table, double tol) {
    std::vector<std::vector<std::string>> best_sets;
    best_sets.reserve(table.metrics.size());
    for (Metric m : table.metrics)
        best_sets.push_back(best_params(table, m, tol));
    return consensus_from_best(best_sets, table.params, table.metrics);
}

std::string format_winner_cell(const ConsensusResult& result) {
    std::string cell = result.winners.size() == 1 ? result.winners.front()
                                                  : "{" + join(result.winners, ",") + "}";
    return cell + " (" + std::to_string(result.count) + ")";
}

void render_tsv(std::ostream& out, const SweepTable& table, const ConsensusResult& result) {
    out << "param";
    for (Metric m : table.metrics)
        out << '\t' << metric_name(m);
    out << '\n';
    for (size_t p = 0; p < table.params.size(); ++p) {
        out << table.params[p];
        for (Metric m : table.metrics)
            out << '\t' << fmt6(table.values[p][static_cast<size_t>(m)]);
        out << '\n';
    }
    out << "best";
    for (const auto& set : result.per_metric_best)
        out << '\t' << join(set, ",");
    out << '\n';
    out << "consensus\t" << format_winner_cell(result) << '\n';
}

namespace {

void json_string_array(std::ostream& out, const std::vector<std::string>& items) {
    out << '[';
    for (size_t i = 0; i < items.size(); ++i) {
        if (i)
            out << ',';
        out << '"' << json_escape(items[i]) << '"';
    }
    out << ']';
}

} // namespace

void render_json(std::ostream& out, const SweepTable& table, const ConsensusResult& result) {
    out << "{\n  \"params\": ";
    json_string_array(out, table.params);
    out << ",\n  \"metrics\": [";
    for (size_t i = 0; i < table.metrics.size(); ++i) {
        if (i)
            out << ',';
        out << '"' << json_escape(metric_name(table.metrics[i])) << '"';
    }
    out << "],\n  \"values\": {";
    for (size_t i = 0; i < table.metrics.size(); ++i) {
        if (i)
            out << ',';
        out << "\n    \"" << json_escape(metric_name(table.metrics[i])) << "\": [";
        for (size_t p = 0; p < table.params.size(); ++p) {
            if (p)
                out << ',';
            out << fmt17(table.values[p][static_cast<size_t>(table.metrics[i])]);
        }
        out << ']';
    }
    out << "\n  },\n  \"per_metric_best\": {";
    for (size_t i = 0; i < table.metrics.size(); ++i) {
        if (i)
            out << ',';
        out << "\n    \"" << json_escape(metric_name(table.metrics[i])) << "\": ";
        json_string_array(out, result.per_metric_best[i]);
    }
    out << "\n  },\n  \"winners\": ";
    json_string_array(out, result.winners);
    out << ",\n  \"count\": " << result.count << ",\n  \"consensus\": \""
        << json_escape(format_winner_cell(result)) << "\"\n}\n";
}

void render_report_tsv(std::ostream& out, const MetricReport& report,
                       const std::vector<Metric>& metrics) {
    for (size_t i = 0; i < metrics.size(); ++i) {
        if (i)
            out << '\t';
        out << metric_name(metrics[i]);
    }
    out << '\n';
    for (size_t i = 0; i < metrics.size(); ++i) {
        if (i)
            out << '\t';
        out << fmt6(report[metrics[i]]);
    }
    out << '\n';
}

void render_report_json(std::ostream& out, const MetricReport& report,
                        const std::vector<Metric>& metrics) {
    out << "{\n";
    for (size_t i = 0; i < metrics.size(); ++i) {
        out << "  \"" << json_escape(metric_name(metrics[i])) << "\": " << fmt17(report[metrics[i]]);
        if (i + 1 < metrics.size())
            out << ',';
        out << '\n';
    }
    out << "}\n";
}

std::vector<ParamPoint> load_manifest(std::istream& in, const std::string& base_dir,
                                      CoverKind cover_kind,
                                      std::shared_ptr<const NodeTable> table) {
    std::vector<ParamPoint> points;
    std::unordered_map<std::string, size_t> index;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        if (raw.empty())
            continue;
        auto tab = raw.find('\t');
        if (tab == std::string::npos || tab == 0 || tab + 1 == raw.size())
            throw ParseError("manifest line " + std::to_string(line_no)
                             + ": expected 'param<TAB>cover_path'");
        std::string param = raw.substr(0, tab);
        std::string path = raw.substr(tab + 1);
        std::filesystem::path full = std::filesystem::path(base_dir) / path;

        std::ifstream cover_file(full);
        if (!cover_file)
            throw IoError("cannot open cover file '" + full.string() + "' (manifest line "
                          + std::to_string(line_no) + ")");
        Cover cover = Cover::load(cover_file, cover_kind, table);

        auto [it, inserted] = index.try_emplace(param, points.size());
        if (inserted)
            points.push_back(ParamPoint{param, {}});
        points[it->second].covers.push_back(std::move(cover));
    }
    if (in.bad())
        throw IoError("I/O failure while reading manifest");
    return points;
}

} // namespace ovq
