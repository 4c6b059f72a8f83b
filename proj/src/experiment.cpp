#include "netrobust/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "netrobust/snap_io.hpp"

namespace netrobust {

const char* metric_name(MetricsOver m) {
    switch (m) {
        case MetricsOver::All: return "all";
        case MetricsOver::Participants: return "participants";
        case MetricsOver::NonParticipants: return "nonparticipants";
    }
    return "?";
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string trimmed_double(double v) {
    // Shortest representation that round-trips; used in source labels.
    std::ostringstream os;
    os << v;
    return os.str();
}

// RFC-4180 quoting for fields that carry commas (e.g. "ba:100,3,5").
std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> cols;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cols.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw std::runtime_error("CSV line " + std::to_string(line_no) + ": unterminated quote");
    cols.push_back(std::move(cur));
    return cols;
}

}  // namespace

std::string GraphSource::label() const {
    switch (kind) {
        case Kind::File: return path;
        case Kind::Ba: {
            std::ostringstream os;
            os << "ba:" << ba.n << ',' << ba.m_attach << ',' << ba.seed_size;
            return os.str();
        }
        case Kind::Theorem: {
            std::ostringstream os;
            os << "theorem:" << trimmed_double(theorem.C) << ',' << trimmed_double(theorem.a)
               << ',' << trimmed_double(theorem.b) << ',' << trimmed_double(theorem.alpha)
               << ',' << trimmed_double(theorem.beta) << ',' << trimmed_double(theorem.gamma)
               << ',' << theorem.n;
            return os.str();
        }
    }
    return "?";
}

Graph realize_graph(const GraphSource& source, std::uint64_t base_seed) {
    switch (source.kind) {
        case GraphSource::Kind::File: return load_snap_file(source.path).graph;
        case GraphSource::Kind::Ba: {
            Rng rng(mix_seed(base_seed, 0xBA));
            return generate_ba(source.ba, rng);
        }
        case GraphSource::Kind::Theorem: {
            Rng rng(mix_seed(base_seed, 0x7E0));
            return build_theorem_instance(source.theorem, rng).graph;
        }
    }
    throw std::logic_error("unreachable");
}

void SweepSpec::validate() const {
    if (protocols.empty()) throw std::invalid_argument("sweep needs at least one protocol point");
    if (qs.empty()) throw std::invalid_argument("sweep needs at least one q value");
    if (fractions.empty()) throw std::invalid_argument("sweep needs at least one fraction");
    if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    for (double f : fractions)
        if (f < 0.0 || f > 1.0) throw std::invalid_argument("fractions must lie in [0,1]");
    for (double q : qs)
        if (q < 0.0 || q > 1.0) throw std::invalid_argument("q values must lie in [0,1]");
    for (const auto& [kind, m] : protocols)
        if (m < 0) throw std::invalid_argument("m must be >= 0");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
    spec.validate();
    const Graph graph = realize_graph(spec.source, spec.base_seed);
    const std::string source_label = spec.source.label();
    if (spec.fat_count < 0 || spec.fat_count > graph.node_count())
        throw std::invalid_argument("fat_count must lie in [0, node count]");

    struct Point {
        ProtocolKind kind;
        int m;
        double q;
        double fraction;
    };
    std::vector<Point> points;
    for (const auto& [kind, m] : spec.protocols)
        for (double q : spec.qs)
            for (double f : spec.fractions) points.push_back({kind, m, q, f});

    const int reps = spec.replicates;
    const std::size_t n_tasks = points.size() * static_cast<std::size_t>(reps);
    std::vector<SweepRow> data(n_tasks);

    std::atomic<std::size_t> next_task{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t task = next_task.fetch_add(1);
            if (task >= n_tasks) return;
            const int point = static_cast<int>(task / static_cast<std::size_t>(reps));
            const int rep = static_cast<int>(task % static_cast<std::size_t>(reps));
            const Point& pt = points[static_cast<std::size_t>(point)];

            GameConfig cfg;
            cfg.protocol.kind = pt.kind;
            cfg.protocol.m = pt.m;
            cfg.protocol.q = pt.q;
            cfg.protocol.fat_count = spec.fat_count;
            cfg.strategy = spec.adversary;
            cfg.corruption_fraction = pt.fraction;
            cfg.seed = mix_seed(spec.base_seed, static_cast<std::uint64_t>(point),
                                static_cast<std::uint64_t>(rep));
            cfg.participants_honest_only = spec.participants_honest_only;

            const auto t0 = std::chrono::steady_clock::now();
            const GameOutcome out = play_game(graph, cfg);
            const auto t1 = std::chrono::steady_clock::now();

            SweepRow& row = data[task];
            row.kind = SweepRow::Kind::Data;
            row.point = point;
            row.replicate = rep;
            row.source = source_label;
            row.protocol = pt.kind;
            row.m = pt.m;
            row.q = pt.q;
            row.adversary = spec.adversary;
            row.fraction = pt.fraction;
            row.seed = cfg.seed;
            row.nodes = graph.node_count();
            row.honest = static_cast<double>(out.honest);
            row.honest_participants = static_cast<double>(out.honest_participants);
            row.frac_all = out.frac_all;
            row.frac_participants = out.frac_participants;
            row.frac_nonparticipants = out.frac_nonparticipants;
            row.xi = out.xi;
            row.messages = static_cast<double>(out.messages);
            row.edges_added = static_cast<double>(out.edges_added);
            row.edges_surviving = static_cast<double>(out.edges_surviving);
            row.wall_ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
    };

    const int n_workers = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int i = 1; i < n_workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    // Per-point mean and sample-stddev rows, appended after the data block.
    std::vector<SweepRow> rows = data;
    for (std::size_t p = 0; p < points.size(); ++p) {
        SweepRow mean = data[p * static_cast<std::size_t>(reps)];
        mean.kind = SweepRow::Kind::Mean;
        mean.replicate = 0;
        mean.seed = 0;
        SweepRow sd = mean;
        sd.kind = SweepRow::Kind::Stddev;

        auto field = [](SweepRow& r, int i) -> double& {
            double* fields[] = {&r.honest,       &r.honest_participants,
                                &r.frac_all,     &r.frac_participants,
                                &r.frac_nonparticipants, &r.xi,
                                &r.messages,     &r.edges_added,
                                &r.edges_surviving, &r.wall_ms};
            return *fields[i];
        };
        for (int i = 0; i < 10; ++i) {
            double sum = 0.0;
            for (int r = 0; r < reps; ++r)
                sum += field(data[p * static_cast<std::size_t>(reps) + r], i);
            const double mu = sum / reps;
            double ss = 0.0;
            for (int r = 0; r < reps; ++r) {
                const double d = field(data[p * static_cast<std::size_t>(reps) + r], i) - mu;
                ss += d * d;
            }
            field(mean, i) = mu;
            field(sd, i) = reps > 1 ? std::sqrt(ss / (reps - 1)) : 0.0;
        }
        rows.push_back(mean);
        rows.push_back(sd);
    }
    return rows;
}

namespace {

constexpr const char* kSchemaTag = "sweep.v1";

}  // namespace

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out, bool with_timings) {
    out << "schema,point,replicate,source,protocol,m,q,adversary,fraction,seed,nodes,"
           "honest,honest_participants,frac_all,frac_participants,frac_nonparticipants,"
           "xi,messages,edges_added,edges_surviving";
    if (with_timings) out << ",wall_ms";
    out << '\n';

    for (const SweepRow& r : rows) {
        out << kSchemaTag << ',' << r.point << ',';
        switch (r.kind) {
            case SweepRow::Kind::Data: out << r.replicate; break;
            case SweepRow::Kind::Mean: out << "mean"; break;
            case SweepRow::Kind::Stddev: out << "stddev"; break;
        }
        out << ',' << csv_escape(r.source) << ',' << protocol_name(r.protocol) << ',' << r.m << ','
            << format_double(r.q) << ',' << strategy_name(r.adversary) << ','
            << format_double(r.fraction) << ',';
        if (r.kind == SweepRow::Kind::Data) out << r.seed;
        out << ',' << r.nodes;

        auto count_col = [&](double v) {
            if (r.kind == SweepRow::Kind::Data)
                out << ',' << static_cast<long long>(v);
            else
                out << ',' << format_double(v);
        };
        count_col(r.honest);
        count_col(r.honest_participants);
        out << ',' << format_double(r.frac_all) << ',' << format_double(r.frac_participants)
            << ',' << format_double(r.frac_nonparticipants) << ',' << format_double(r.xi);
        count_col(r.messages);
        count_col(r.edges_added);
        count_col(r.edges_surviving);
        if (with_timings) out << ',' << format_double(r.wall_ms);
        out << '\n';
    }
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("empty CSV");
    if (header.rfind("schema,", 0) != 0)
        throw std::runtime_error("unrecognized CSV header: " + header);
    const bool with_timings = header.find(",wall_ms") != std::string::npos;

    std::vector<SweepRow> rows;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> cols = split_csv_line(line, line_no);
        const std::size_t expected = with_timings ? 21 : 20;
        if (cols.size() != expected)
            throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(expected) + " columns, got " +
                                     std::to_string(cols.size()));
        if (cols[0] != kSchemaTag)
            throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                     ": unknown schema tag " + cols[0]);
        SweepRow r;
        r.point = std::stoi(cols[1]);
        if (cols[2] == "mean") {
            r.kind = SweepRow::Kind::Mean;
        } else if (cols[2] == "stddev") {
            r.kind = SweepRow::Kind::Stddev;
        } else {
            r.kind = SweepRow::Kind::Data;
            r.replicate = std::stoi(cols[2]);
        }
        r.source = cols[3];
        r.protocol = protocol_from_name(cols[4]);
        r.m = std::stoi(cols[5]);
        r.q = std::stod(cols[6]);
        r.adversary = strategy_from_name(cols[7]);
        r.fraction = std::stod(cols[8]);
        r.seed = cols[9].empty() ? 0 : std::stoull(cols[9]);
        r.nodes = std::stoll(cols[10]);
        r.honest = std::stod(cols[11]);
        r.honest_participants = std::stod(cols[12]);
        r.frac_all = std::stod(cols[13]);
        r.frac_participants = std::stod(cols[14]);
        r.frac_nonparticipants = std::stod(cols[15]);
        r.xi = std::stod(cols[16]);
        r.messages = std::stod(cols[17]);
        r.edges_added = std::stod(cols[18]);
        r.edges_surviving = std::stod(cols[19]);
        if (with_timings) r.wall_ms = std::stod(cols[20]);
        rows.push_back(std::move(r));
    }
    return rows;
}

SweepSpec figure_preset(int figure, const std::string& graph_path, std::uint64_t base_seed,
                        int replicates) {
    if (figure < 1 || figure > 8)
        throw std::invalid_argument("preset figures are figure-1 .. figure-8");

    SweepSpec spec;
    spec.source.kind = GraphSource::Kind::File;
    spec.source.path = graph_path;
    spec.base_seed = base_seed;
    spec.replicates = replicates;

    const bool a3f = (figure == 3 || figure == 4 || figure == 7 || figure == 8);
    const bool partial = (figure % 2 == 0);
    const bool targeted = (figure >= 5);
    const ProtocolKind kind = a3f ? ProtocolKind::A3F : ProtocolKind::TwoSFF;

    spec.protocols.clear();
    if (partial) {
        spec.protocols.push_back({kind, 15});
        spec.qs = {0.1, 0.25, 0.5, 1.0};
        spec.metrics = {MetricsOver::All, MetricsOver::Participants,
                        MetricsOver::NonParticipants};
    } else {
        for (int m : {0, 1, 5, 10, 15}) spec.protocols.push_back({kind, m});
        spec.qs = {1.0};
        spec.metrics = {MetricsOver::All};
    }

    spec.adversary =
        targeted ? AdversaryStrategy::TargetedDegree : AdversaryStrategy::RandomFailures;
    spec.fractions.clear();
    if (targeted) {
        for (int pct = 0; pct <= 30; pct += 5) spec.fractions.push_back(pct / 100.0);
    } else {
        for (int pct = 0; pct <= 90; pct += 10) spec.fractions.push_back(pct / 100.0);
    }
    return spec;
}

TheoremReport run_theorem_check(const TheoremInstanceSpec& spec, int trials,
                                std::uint64_t base_seed) {
    spec.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    TheoremReport report;
    report.spec = spec;
    report.trials = trials;
    report.m_rounds =
        static_cast<int>(std::floor(std::log(static_cast<double>(spec.n))));
    report.bound = 1.0 - (1.0 - spec.beta) * spec.alpha;

    double xi_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        Rng inst_rng(mix_seed(base_seed, 101, static_cast<std::uint64_t>(t)));
        const TheoremInstance inst = build_theorem_instance(spec, inst_rng);
        const std::uint64_t prot_seed = mix_seed(base_seed, 102, static_cast<std::uint64_t>(t));
        const GameOutcome out =
            play_game_with(inst.graph, ProtocolKind::A3F, report.m_rounds, inst.participants,
                           inst.fat_nodes, inst.fat_nodes, prot_seed);

        TheoremTrial trial;
        trial.trial = t;
        trial.seed = prot_seed;
        trial.connected = out.component_sizes.size() == 1;
        trial.xi = out.xi;
        trial.honest = out.honest;
        trial.largest = out.in_largest;
        report.rows.push_back(trial);

        if (trial.connected) ++report.connected_count;
        if (trial.xi >= report.bound - report.slack) ++report.xi_ok_count;
        xi_sum += trial.xi;
        report.min_xi = std::min(report.min_xi, trial.xi);
    }
    report.mean_xi = xi_sum / trials;
    return report;
}

std::string format_theorem_report(const TheoremReport& r) {
    std::ostringstream os;
    const bool full = (r.spec.beta == 1.0 && r.spec.gamma == 1.0);
    os << "theorem instance: n=" << r.spec.n << " C=" << trimmed_double(r.spec.C)
       << " a=" << trimmed_double(r.spec.a) << " b=" << trimmed_double(r.spec.b)
       << " alpha=" << trimmed_double(r.spec.alpha) << " beta=" << trimmed_double(r.spec.beta)
       << " gamma=" << trimmed_double(r.spec.gamma) << '\n';
    os << "  |W|=" << r.spec.fat_count() << " |N_W|=" << r.spec.neighborhood_count()
       << " |V_alpha|=" << r.spec.outsider_count() << " fat degrees in ["
       << r.spec.degree_lo() << "," << r.spec.degree_hi() << "]\n";
    os << "  hypotheses: C*a=" << trimmed_double(r.spec.C * r.spec.a) << " vs 1-alpha="
       << trimmed_double(1.0 - r.spec.alpha) << "; C*b=" << trimmed_double(r.spec.C * r.spec.b)
       << " vs gamma*(1-alpha)=" << trimmed_double(r.spec.gamma * (1.0 - r.spec.alpha)) << '\n';
    os << "  protocol: " << r.m_rounds << "-a3f, fat list = W, adversary corrupts W\n";
    os << "  regime: " << (full ? "full participation (connectivity)" : "partial participation")
       << '\n';
    os << "  trials=" << r.trials << " connected=" << r.connected_count << " rate="
       << format_double(static_cast<double>(r.connected_count) / r.trials) << '\n';
    os << "  xi: mean=" << format_double(r.mean_xi) << " min=" << format_double(r.min_xi)
       << " bound=" << format_double(r.bound) << " slack=" << format_double(r.slack)
       << " xi_ok=" << r.xi_ok_count << "/" << r.trials << '\n';
    return os.str();
}

std::string privacy_report(const PrivacyParams& p, std::optional<std::int64_t> honest_count,
                           std::optional<std::int64_t> group_threshold) {
    p.validate();
    std::ostringstream os;
    os << "measured xi: " << format_double(p.xi) << '\n';
    if (p.delta > 0.0) {
        const PaalecParams pa = paalec_params(p);
        os << "aggregation parameters: alpha=exp(epsilon/Delta)=" << trimmed_double(pa.alpha)
           << " beta=2*ln(1/delta)/s=" << trimmed_double(pa.beta) << '\n';
    } else {
        os << "aggregation parameters: alpha=exp(epsilon/Delta)="
           << trimmed_double(std::exp(p.epsilon / p.Delta))
           << " beta undefined (delta = 0)\n";
    }
    const DpGuarantee g = dp_guarantee(p);
    os << "largest-component nodes: (" << trimmed_double(g.epsilon_component) << ", "
       << trimmed_double(g.delta_component) << ")-differential privacy\n";
    os << "any arbitrary node:      (" << trimmed_double(g.epsilon_any) << ", "
       << trimmed_double(g.delta_any) << ")-differential privacy"
       << (g.delta_any == 1.0 ? " [clamped at 1]" : "") << '\n';
    if (honest_count && group_threshold) {
        const bool ok = noiseless_aggregation_plausible(p.xi, *honest_count, *group_threshold);
        os << "noiseless aggregation (heuristic advisory): "
           << (ok ? "plausible" : "not indicated") << " (xi*honest="
           << trimmed_double(p.xi * static_cast<double>(*honest_count)) << " vs threshold "
           << *group_threshold << ")\n";
    }
    return os.str();
}

}  // namespace netrobust
