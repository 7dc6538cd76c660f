// ovq — overlapping community quality metrics over graphs and covers.
//
// Subcommands:
//   compute   twelve-metric report for one (graph, cover, config) triple
//   sweep     averaged metric table over a parameter sweep plus the
//             cross-metric consensus winner
//   convert   crisp->fuzzy coefficient assignment or fuzzy->crisp threshold cut
//
// Exit codes: 0 success, 1 computation/validation error, 2 usage or I/O error.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <ovq/cover.hpp>
#include <ovq/global_metrics.hpp>
#include <ovq/graph.hpp>
#include <ovq/report.hpp>
#include <ovq/sweep.hpp>

namespace {

struct CliConfig {
    std::string graph_path;
    std::string cover_path;
    std::string manifest_path;
    std::string bc = "given";
    std::string bf = "prod";
    double p = 30.0;
    double threshold = -1.0; // <0 means unset
    bool add_singletons = false;
    bool normalize = false;
    bool v2_fallback = false;
    std::string directed = "symmetrize";
    double tie_tolerance = 1e-9;
    std::string format = "tsv";
    std::string metrics_list;
    std::string out_path;
};

ovq::BelongingConfig belonging_config(const CliConfig& cfg) {
    ovq::BelongingConfig out;
    auto scheme = ovq::scheme_from_name(cfg.bc);
    auto fn = ovq::belonging_fn_from_name(cfg.bf);
    if (!scheme)
        throw CLI::ValidationError("--bc", "expected given, v1 or v2");
    if (!fn)
        throw CLI::ValidationError("--bf", "expected avg, prod or logistic");
    if (!(cfg.p > 0.0))
        throw CLI::ValidationError("--p", "must be > 0");
    out.scheme = *scheme;
    out.fn = *fn;
    out.p = cfg.p;
    return out;
}

ovq::DirectedPolicy directed_policy(const CliConfig& cfg) {
    if (cfg.directed == "symmetrize")
        return ovq::DirectedPolicy::Symmetrize;
    if (cfg.directed == "reject")
        return ovq::DirectedPolicy::Reject;
    throw CLI::ValidationError("--directed", "expected symmetrize or reject");
}

std::vector<ovq::Metric> selected_metrics(const CliConfig& cfg) {
    auto all = ovq::all_metrics();
    if (cfg.metrics_list.empty())
        return {all.begin(), all.end()};
    std::vector<bool> wanted(ovq::kMetricCount, false);
    std::stringstream ss(cfg.metrics_list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto m = ovq::metric_from_name(name);
        if (!m)
            throw CLI::ValidationError("--metrics", "unknown metric '" + name + "'");
        wanted[static_cast<size_t>(*m)] = true;
    }
    std::vector<ovq::Metric> out;
    for (ovq::Metric m : all)
        if (wanted[static_cast<size_t>(m)])
            out.push_back(m);
    if (out.empty())
        throw CLI::ValidationError("--metrics", "empty metric selection");
    return out;
}

ovq::Graph load_graph(const CliConfig& cfg) {
    std::ifstream in(cfg.graph_path);
    if (!in)
        throw ovq::IoError("cannot open graph file '" + cfg.graph_path + "'");
    ovq::Graph g = ovq::Graph::load_edge_list(in, directed_policy(cfg));
    if (g.self_loops_dropped() > 0)
        std::cerr << "warning: dropped " << g.self_loops_dropped() << " self-loop(s) from '"
                  << cfg.graph_path << "'\n";
    return g;
}

ovq::Cover load_cover(const CliConfig& cfg, ovq::CoverKind kind,
                      std::shared_ptr<const ovq::NodeTable> table) {
    std::ifstream in(cfg.cover_path);
    if (!in)
        throw ovq::IoError("cannot open cover file '" + cfg.cover_path + "'");
    return ovq::Cover::load(in, kind, std::move(table));
}

// Covers in "given" mode carry their own coefficients, so the file is fuzzy;
// v1/v2 start from detection output, which is crisp.
ovq::CoverKind cover_kind_for(const ovq::BelongingConfig& cfg) {
    return cfg.scheme == ovq::Scheme::Given ? ovq::CoverKind::Fuzzy : ovq::CoverKind::Crisp;
}

int with_output(const CliConfig& cfg, const std::function<void(std::ostream&)>& emit) {
    if (cfg.out_path.empty()) {
        emit(std::cout);
        return 0;
    }
    std::ofstream out(cfg.out_path);
    if (!out)
        throw ovq::IoError("cannot open output file '" + cfg.out_path + "'");
    emit(out);
    return 0;
}

int run_compute(const CliConfig& cfg) {
    ovq::BelongingConfig bcfg = belonging_config(cfg);
    auto metrics = selected_metrics(cfg);
    ovq::Graph g = load_graph(cfg);
    // A threshold means the input file carries coefficients, whatever the scheme.
    ovq::CoverKind kind = cfg.threshold >= 0.0 ? ovq::CoverKind::Fuzzy : cover_kind_for(bcfg);
    ovq::Cover cover = load_cover(cfg, kind, g.table());
    if (cfg.threshold >= 0.0) {
        std::vector<int> dropped;
        cover = ovq::fuzzy_to_crisp(cover, cfg.threshold, &dropped);
        if (!dropped.empty())
            std::cerr << "warning: " << dropped.size()
                      << " node(s) lost every membership at threshold " << cfg.threshold << "\n";
    }
    if (cfg.add_singletons)
        cover = ovq::add_singletons(g, cover);
    ovq::Cover fuzzy =
        ovq::resolve_cover(g, cover, bcfg, ovq::ResolveOptions{cfg.normalize, cfg.v2_fallback});
    ovq::MetricReport report = ovq::compute_report(g, fuzzy, bcfg);
    return with_output(cfg, [&](std::ostream& out) {
        if (cfg.format == "json")
            ovq::render_report_json(out, report, metrics);
        else
            ovq::render_report_tsv(out, report, metrics);
    });
}

int run_sweep(const CliConfig& cfg) {
    ovq::BelongingConfig bcfg = belonging_config(cfg);
    ovq::SweepOptions opts;
    opts.resolve = ovq::ResolveOptions{cfg.normalize, cfg.v2_fallback};
    opts.add_singletons = cfg.add_singletons;
    opts.metrics = selected_metrics(cfg);

    ovq::Graph g = load_graph(cfg);
    std::ifstream in(cfg.manifest_path);
    if (!in)
        throw ovq::IoError("cannot open manifest '" + cfg.manifest_path + "'");
    std::string base_dir = std::filesystem::path(cfg.manifest_path).parent_path().string();
    auto points = ovq::load_manifest(in, base_dir, cover_kind_for(bcfg), g.table());
    if (points.empty())
        throw ovq::IoError("manifest '" + cfg.manifest_path + "' contains no sweep points");

    ovq::SweepTable table = ovq::evaluate_sweep(g, points, bcfg, opts);
    ovq::ConsensusResult result = ovq::consensus(table, cfg.tie_tolerance);
    return with_output(cfg, [&](std::ostream& out) {
        if (cfg.format == "json")
            ovq::render_json(out, table, result);
        else
            ovq::render_tsv(out, table, result);
    });
}

int run_convert(const CliConfig& cfg) {
    bool to_crisp = cfg.threshold >= 0.0;
    auto scheme = ovq::scheme_from_name(cfg.bc);
    if (!scheme)
        throw CLI::ValidationError("--bc", "expected given, v1 or v2");
    if (!to_crisp && *scheme == ovq::Scheme::Given)
        throw ovq::DomainError(
            "nothing to convert: pass --bc v1/v2 for crisp->fuzzy or --threshold for fuzzy->crisp");

    std::shared_ptr<const ovq::NodeTable> table;
    std::optional<ovq::Graph> g;
    if (!cfg.graph_path.empty()) {
        g = load_graph(cfg);
        table = g->table();
    }

    ovq::CoverKind kind = to_crisp ? ovq::CoverKind::Fuzzy : ovq::CoverKind::Crisp;
    ovq::Cover cover = load_cover(cfg, kind, table);

    ovq::Cover converted = [&]() -> ovq::Cover {
        if (to_crisp) {
            if (cfg.normalize)
                cover = cover.normalized();
            else
                cover.validate_rows();
            std::vector<int> dropped;
            ovq::Cover out = ovq::fuzzy_to_crisp(cover, cfg.threshold, &dropped);
            if (!dropped.empty())
                std::cerr << "warning: " << dropped.size()
                          << " node(s) lost every membership at threshold " << cfg.threshold
                          << "\n";
            return out;
        }
        if (cfg.add_singletons) {
            if (!g)
                throw ovq::DomainError("--add-singletons requires --graph");
            cover = ovq::add_singletons(*g, cover);
        }
        if (*scheme == ovq::Scheme::V1)
            return ovq::assign_v1(cover);
        if (!g)
            throw ovq::DomainError("--bc v2 requires --graph");
        return ovq::assign_v2(*g, cover, cfg.v2_fallback);
    }();

    return with_output(cfg, [&](std::ostream& out) { converted.write(out); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Overlapping community quality metrics"};
    app.require_subcommand(1);

    CliConfig cfg;

    auto add_common = [&](CLI::App* cmd, bool needs_graph) {
        if (needs_graph)
            cmd->add_option("--graph", cfg.graph_path, "edge list file")->required();
        else
            cmd->add_option("--graph", cfg.graph_path, "edge list file");
        cmd->add_option("--bc", cfg.bc, "belonging coefficient scheme: given|v1|v2");
        cmd->add_option("--bf", cfg.bf, "belonging function: avg|prod|logistic");
        cmd->add_option("--p", cfg.p, "logistic steepness (default 30)");
        cmd->add_flag("--add-singletons", cfg.add_singletons,
                      "wrap uncovered nodes into one-node communities");
        cmd->add_flag("--normalize", cfg.normalize, "rescale fuzzy rows to sum to 1");
        cmd->add_flag("--v2-fallback", cfg.v2_fallback,
                      "assign 1/O_i when a node has no edges into its communities");
        cmd->add_option("--directed", cfg.directed, "directed input policy: symmetrize|reject");
        cmd->add_option("--format", cfg.format, "output format: tsv|json")
            ->check(CLI::IsMember({"tsv", "json"}));
        cmd->add_option("--metrics", cfg.metrics_list, "comma-separated metric subset");
        cmd->add_option("--out", cfg.out_path, "write the report to a file instead of stdout");
    };

    CLI::App* compute = app.add_subcommand("compute", "metric report for one cover");
    add_common(compute, true);
    compute->add_option("--cover", cfg.cover_path, "cover file")->required();
    compute->add_option("--threshold", cfg.threshold,
                        "convert a fuzzy cover to crisp before the scheme applies")
        ->check(CLI::Range(0.0, 1.0));

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep with consensus");
    add_common(sweep, true);
    sweep->add_option("--manifest", cfg.manifest_path, "sweep manifest file")->required();
    sweep->add_option("--tie-tolerance", cfg.tie_tolerance,
                      "absolute tolerance for per-metric ties (default 1e-9)");

    CLI::App* convert = app.add_subcommand("convert", "crisp<->fuzzy cover conversion");
    add_common(convert, false);
    convert->add_option("--cover", cfg.cover_path, "cover file")->required();
    convert->add_option("--threshold", cfg.threshold, "fuzzy->crisp cut, keeps a > threshold")
        ->check(CLI::Range(0.0, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return run_compute(cfg);
        if (sweep->parsed())
            return run_sweep(cfg);
        return run_convert(cfg);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ovq::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ovq::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ovq::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
