// Experiment driver: dataset ingest, disconnection-game sweeps, theorem
// validation runs, privacy reports, and SVG plots.
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "netrobust/experiment.hpp"
#include "netrobust/plot.hpp"
#include "netrobust/snap_io.hpp"

namespace {

using namespace netrobust;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split(s, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const auto& tok : split(s, ',')) out.push_back(std::stod(tok));
    return out;
}

// Either a comma list "0,0.05,0.1" or an inclusive range "start:stop:step".
std::vector<double> parse_fractions(const std::string& s) {
    if (s.find(':') == std::string::npos) return parse_doubles(s);
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw CLI::ValidationError("--fractions", "expected start:stop:step");
    const double start = std::stod(parts[0]), stop = std::stod(parts[1]),
                 step = std::stod(parts[2]);
    if (step <= 0.0) throw CLI::ValidationError("--fractions", "step must be > 0");
    std::vector<double> out;
    for (double f = start; f <= stop + 1e-9; f += step) out.push_back(f);
    return out;
}

BaSpec parse_ba(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 3) throw CLI::ValidationError("--ba", "expected n,m_attach,seed_size");
    BaSpec spec;
    spec.n = std::stoi(parts[0]);
    spec.m_attach = std::stoi(parts[1]);
    spec.seed_size = std::stoi(parts[2]);
    return spec;
}

TheoremInstanceSpec parse_theorem(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 7)
        throw CLI::ValidationError("--theorem", "expected C,a,b,alpha,beta,gamma,n");
    TheoremInstanceSpec spec;
    spec.C = std::stod(parts[0]);
    spec.a = std::stod(parts[1]);
    spec.b = std::stod(parts[2]);
    spec.alpha = std::stod(parts[3]);
    spec.beta = std::stod(parts[4]);
    spec.gamma = std::stod(parts[5]);
    spec.n = std::stoi(parts[6]);
    return spec;
}

std::vector<MetricsOver> parse_metrics(const std::string& s) {
    std::vector<MetricsOver> out;
    for (const auto& tok : split(s, ',')) {
        if (tok == "all")
            out.push_back(MetricsOver::All);
        else if (tok == "participants")
            out.push_back(MetricsOver::Participants);
        else if (tok == "nonparticipants")
            out.push_back(MetricsOver::NonParticipants);
        else
            throw CLI::ValidationError("--metrics",
                                       "expected all|participants|nonparticipants");
    }
    return out;
}

// Paths are tried as given, then under the dataset cache directory.
std::string resolve_graph_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("NETROBUST_DATA_DIR")) {
        const fs::path cached = fs::path(dir) / path;
        if (fs::exists(cached)) return cached.string();
    }
    return path;  // let the loader report the error
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int cmd_ingest(const std::string& graph_path, const std::string& out_path,
               const std::string& id_map_path, const std::string& golden_path) {
    const SnapLoadResult res = load_snap_file(resolve_graph_path(graph_path));
    std::cout << "nodes:            " << res.graph.node_count() << '\n';
    std::cout << "raw edge lines:   " << res.data_lines << '\n';
    std::cout << "self-loop lines:  " << res.self_loop_lines << '\n';
    std::cout << "undirected edges: " << res.graph.edge_count() << '\n';
    std::cout << "largest component fraction: " << largest_component_fraction(res.graph)
              << '\n';

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        write_snap_edgelist(res.graph, out);
        std::cout << "normalized edge list written to " << out_path << '\n';
    }
    if (!id_map_path.empty()) {
        std::ofstream out(id_map_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + id_map_path);
        write_id_map(res.original_ids, out);
        std::cout << "id map written to " << id_map_path << '\n';
    }
    if (!golden_path.empty()) {
        std::ostringstream os;
        os << "nodes=" << res.graph.node_count() << '\n'
           << "raw_edge_lines=" << res.data_lines << '\n'
           << "undirected_edges=" << res.graph.edge_count() << '\n';
        write_file(golden_path, os.str());
        std::cout << "golden counts written to " << golden_path << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local graph-enrichment protocols vs adversarial node removal"};
    app.require_subcommand(1);
    // key=value config file; keys live under a [subcommand] section and the
    // command line wins on conflict
    app.set_config("--config");

    // ---- ingest ----
    auto* ingest = app.add_subcommand("ingest", "load a SNAP edge list and report counts");
    std::string in_graph, in_out, in_idmap, in_golden;
    ingest->add_option("--graph", in_graph, "SNAP edge-list path")->required();
    ingest->add_option("--out", in_out, "write normalized undirected edge list");
    ingest->add_option("--id-map", in_idmap, "write dense-to-original id map");
    ingest->add_option("--write-golden", in_golden, "freeze ingest counts to a key=value file");

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "run a disconnection-game sweep, emit CSV");
    std::string sw_graph, sw_ba, sw_theorem, sw_preset, sw_protocols = "none";
    std::string sw_m = "0", sw_q = "1", sw_adversary = "random", sw_fractions = "0:0.9:0.1";
    std::string sw_out, sw_plot, sw_metrics, sw_title;
    int sw_reps = 10, sw_threads = 0, sw_fat = 0;
    std::uint64_t sw_seed = 1;
    bool sw_timings = false, sw_honest_only = false;
    sweep->add_option("--graph", sw_graph, "SNAP edge-list path");
    sweep->add_option("--ba", sw_ba, "synthetic source: n,m_attach,seed_size");
    sweep->add_option("--theorem", sw_theorem, "synthetic source: C,a,b,alpha,beta,gamma,n");
    sweep->add_option("--preset", sw_preset, "figure-1 .. figure-8 axes (needs --graph)");
    sweep->add_option("--protocol", sw_protocols, "comma list of none|2sff|a3f");
    sweep->add_option("--m", sw_m, "comma list of rounds per participant");
    sweep->add_option("--q", sw_q, "comma list of participation fractions");
    sweep->add_option("--adversary", sw_adversary, "random|targeted");
    sweep->add_option("--fractions", sw_fractions, "corruption fractions: list or start:stop:step");
    sweep->add_option("--reps", sw_reps, "replicates per config point");
    sweep->add_option("--seed", sw_seed, "base seed (replicate seeds are derived)");
    sweep->add_option("--fat-count", sw_fat, "A3F fat-list size (default floor(log2 n))");
    sweep->add_option("--out", sw_out, "CSV output path (default stdout)");
    sweep->add_option("--plot", sw_plot, "also write an SVG chart here");
    sweep->add_option("--metrics", sw_metrics, "plotted series: all|participants|nonparticipants");
    sweep->add_option("--title", sw_title, "plot title");
    int sw_walk_length = 2;
    sweep->add_option("--walk-length", sw_walk_length,
                      "2sff walk length; reserved for future extension, only 2 is supported");
    sweep->add_option("--threads", sw_threads, "worker threads (0 = hardware)");
    sweep->add_flag("--timings", sw_timings, "append a wall_ms column (breaks byte determinism)");
    sweep->add_flag("--participants-honest-only", sw_honest_only,
                    "sample participants from honest nodes only");

    // ---- theorem-check ----
    auto* thm = app.add_subcommand("theorem-check", "empirical check of the fat-set theorems");
    std::string th_spec;
    int th_trials = 100;
    std::uint64_t th_seed = 1;
    std::string th_out;
    thm->add_option("--theorem", th_spec, "C,a,b,alpha,beta,gamma,n")->required();
    thm->add_option("--trials", th_trials, "number of instances");
    thm->add_option("--seed", th_seed, "base seed");
    thm->add_option("--out", th_out, "per-trial CSV output path");

    // ---- privacy ----
    auto* priv = app.add_subcommand("privacy", "privacy statements from a measured xi");
    double pr_xi = -1.0, pr_eps = 1.0, pr_delta = 0.0, pr_sens = 1.0, pr_s = 1.0;
    std::string pr_csv;
    std::int64_t pr_threshold = -1;
    priv->add_option("--xi", pr_xi, "measured strength in [0,1]");
    priv->add_option("--from-csv", pr_csv, "take xi (and honest count) from a sweep CSV");
    priv->add_option("--epsilon", pr_eps, "DP budget")->required();
    priv->add_option("--delta", pr_delta, "DP slack in [0,1)");
    priv->add_option("--sensitivity", pr_sens, "query sensitivity Delta");
    priv->add_option("--group-size", pr_s, "aggregation group-size parameter s");
    priv->add_option("--group-threshold", pr_threshold,
                     "honest-component size needed for the noiseless-aggregation advisory");

    // ---- plot ----
    auto* plot = app.add_subcommand("plot", "render a sweep CSV as an SVG line chart");
    std::string pl_in, pl_out, pl_metrics = "all", pl_title;
    plot->add_option("--in", pl_in, "sweep CSV path")->required();
    plot->add_option("--out", pl_out, "SVG output path")->required();
    plot->add_option("--metrics", pl_metrics, "series: all|participants|nonparticipants");
    plot->add_option("--title", pl_title, "chart title");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return cmd_ingest(in_graph, in_out, in_idmap, in_golden);

        if (*sweep) {
            if (sw_walk_length != 2)
                throw std::invalid_argument(
                    "--walk-length is reserved for a future extension; only 2 is supported");
            SweepSpec spec;
            if (!sw_preset.empty()) {
                if (sw_preset.rfind("figure-", 0) != 0)
                    throw std::invalid_argument("--preset expects figure-1 .. figure-8");
                if (sw_graph.empty())
                    throw std::invalid_argument("--preset needs --graph (the dataset path)");
                spec = figure_preset(std::stoi(sw_preset.substr(7)),
                                     resolve_graph_path(sw_graph), sw_seed, sw_reps);
            } else {
                const int sources = !sw_graph.empty() + !sw_ba.empty() + !sw_theorem.empty();
                if (sources != 1)
                    throw std::invalid_argument(
                        "exactly one of --graph, --ba, --theorem is required");
                if (!sw_graph.empty()) {
                    spec.source.kind = GraphSource::Kind::File;
                    spec.source.path = resolve_graph_path(sw_graph);
                } else if (!sw_ba.empty()) {
                    spec.source.kind = GraphSource::Kind::Ba;
                    spec.source.ba = parse_ba(sw_ba);
                } else {
                    spec.source.kind = GraphSource::Kind::Theorem;
                    spec.source.theorem = parse_theorem(sw_theorem);
                }
                spec.base_seed = sw_seed;
                spec.replicates = sw_reps;
            }

            // Explicit axis flags override the preset.
            if (sw_preset.empty() || sweep->count("--protocol") || sweep->count("--m")) {
                spec.protocols.clear();
                for (const auto& name : split(sw_protocols, ',')) {
                    const ProtocolKind kind = protocol_from_name(name);
                    if (kind == ProtocolKind::None) {
                        spec.protocols.push_back({kind, 0});
                    } else {
                        for (int m : parse_ints(sw_m)) spec.protocols.push_back({kind, m});
                    }
                }
            }
            if (sw_preset.empty() || sweep->count("--q")) spec.qs = parse_doubles(sw_q);
            if (sw_preset.empty() || sweep->count("--adversary"))
                spec.adversary = strategy_from_name(sw_adversary);
            if (sw_preset.empty() || sweep->count("--fractions"))
                spec.fractions = parse_fractions(sw_fractions);
            if (!sw_metrics.empty()) spec.metrics = parse_metrics(sw_metrics);
            spec.fat_count = sw_fat;
            spec.participants_honest_only = sw_honest_only;

            const int threads = sw_threads > 0
                                    ? sw_threads
                                    : static_cast<int>(std::thread::hardware_concurrency());
            const auto rows = run_sweep(spec, std::max(1, threads));

            std::ostringstream csv;
            emit_csv(rows, csv, sw_timings);
            if (sw_out.empty())
                std::cout << csv.str();
            else
                write_file(sw_out, csv.str());

            if (!sw_plot.empty()) {
                PlotSpec pspec;
                pspec.title = sw_title.empty() ? spec.source.label() : sw_title;
                pspec.metrics = spec.metrics;
                write_file(sw_plot, emit_plot_svg(rows, pspec));
            }
            return 0;
        }

        if (*thm) {
            const TheoremReport report =
                run_theorem_check(parse_theorem(th_spec), th_trials, th_seed);
            std::cout << format_theorem_report(report);
            if (!th_out.empty()) {
                std::ostringstream os;
                os << "trial,seed,connected,xi,honest,largest\n";
                for (const auto& t : report.rows)
                    os << t.trial << ',' << t.seed << ',' << (t.connected ? 1 : 0) << ','
                       << t.xi << ',' << t.honest << ',' << t.largest << '\n';
                write_file(th_out, os.str());
            }
            return 0;
        }

        if (*priv) {
            PrivacyParams params;
            params.epsilon = pr_eps;
            params.delta = pr_delta;
            params.Delta = pr_sens;
            params.s = pr_s;
            std::optional<std::int64_t> honest;
            if (!pr_csv.empty()) {
                std::ifstream in(pr_csv);
                if (!in) throw std::runtime_error("missing run: cannot open " + pr_csv);
                const auto rows = parse_sweep_csv(in);
                const SweepRow* last_mean = nullptr;
                for (const auto& r : rows)
                    if (r.kind == SweepRow::Kind::Mean) last_mean = &r;
                if (!last_mean)
                    throw std::runtime_error("missing run: no mean rows in " + pr_csv);
                params.xi = last_mean->xi;
                honest = static_cast<std::int64_t>(last_mean->honest);
            } else if (pr_xi >= 0.0) {
                params.xi = pr_xi;
            } else {
                throw std::invalid_argument("one of --xi or --from-csv is required");
            }
            std::optional<std::int64_t> threshold;
            if (pr_threshold >= 0) threshold = pr_threshold;
            std::cout << privacy_report(params, honest, threshold);
            return 0;
        }

        if (*plot) {
            std::ifstream in(pl_in);
            if (!in) throw std::runtime_error("cannot open " + pl_in);
            const auto rows = parse_sweep_csv(in);
            PlotSpec pspec;
            pspec.title = pl_title.empty() ? pl_in : pl_title;
            pspec.metrics = parse_metrics(pl_metrics);
            write_file(pl_out, emit_plot_svg(rows, pspec));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
