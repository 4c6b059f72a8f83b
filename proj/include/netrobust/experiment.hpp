#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netrobust/game.hpp"
#include "netrobust/generate.hpp"
#include "netrobust/graph.hpp"
#include "netrobust/privacy.hpp"

namespace netrobust {

enum class MetricsOver { All, Participants, NonParticipants };

const char* metric_name(MetricsOver m);

struct GraphSource {
    enum class Kind { File, Ba, Theorem };
    Kind kind = Kind::File;
    std::string path;             // File
    BaSpec ba;                    // Ba
    TheoremInstanceSpec theorem;  // Theorem

    std::string label() const;  // stable string used in CSV rows
};

// Synthetic sources derive their generation stream from the sweep seed;
// file sources load as-is.
Graph realize_graph(const GraphSource& source, std::uint64_t base_seed);

struct SweepSpec {
    GraphSource source;
    std::vector<std::pair<ProtocolKind, int>> protocols;  // (kind, m) axis
    std::vector<double> qs = {1.0};
    AdversaryStrategy adversary = AdversaryStrategy::RandomFailures;
    std::vector<double> fractions;
    int replicates = 10;
    std::uint64_t base_seed = 0;
    NodeId fat_count = 0;  // 0 = floor(log2 n)
    bool participants_honest_only = false;
    std::vector<MetricsOver> metrics = {MetricsOver::All};  // plotted series

    void validate() const;
};

struct SweepRow {
    enum class Kind { Data, Mean, Stddev };
    Kind kind = Kind::Data;
    int point = 0;
    int replicate = 0;  // Data rows only
    std::string source;
    ProtocolKind protocol = ProtocolKind::None;
    int m = 0;
    double q = 1.0;
    AdversaryStrategy adversary = AdversaryStrategy::RandomFailures;
    double fraction = 0.0;
    std::uint64_t seed = 0;  // Data rows only
    std::int64_t nodes = 0;

    // Integral metrics are exact integers in Data rows, aggregates in
    // Mean/Stddev rows.
    double honest = 0, honest_participants = 0;
    double frac_all = 0, frac_participants = 0, frac_nonparticipants = 0, xi = 0;
    double messages = 0, edges_added = 0, edges_surviving = 0;
    double wall_ms = 0;  // emitted only with timings enabled
};

// Full cross product, replicate (point i, rep r) seeded with
// mix(base_seed, i, r). Rows come back in deterministic order with
// per-point mean and stddev rows appended; output is identical for any
// worker count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 1);

// Header plus one line per row, LF endings, fractions with 6 digits.
// Schema version rides in the first column.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out, bool with_timings = false);

std::vector<SweepRow> parse_sweep_csv(std::istream& in);

// Epinions figure presets: axes (protocol kind, m set, q set, adversary,
// fraction range) for figures 1-8. Path/seed/replicates supplied by caller.
SweepSpec figure_preset(int figure, const std::string& graph_path, std::uint64_t base_seed,
                        int replicates = 10);

struct TheoremTrial {
    int trial = 0;
    std::uint64_t seed = 0;
    bool connected = false;
    double xi = 0.0;
    std::int64_t honest = 0;
    std::int64_t largest = 0;
};

struct TheoremReport {
    TheoremInstanceSpec spec;
    int m_rounds = 0;  // floor(ln n) protocol rounds
    int trials = 0;
    int connected_count = 0;
    double bound = 1.0;   // 1 - (1-beta)*alpha
    double slack = 0.02;  // desk-scale tolerance below the bound
    int xi_ok_count = 0;  // trials with xi >= bound - slack
    double mean_xi = 0.0;
    double min_xi = 1.0;
    std::vector<TheoremTrial> rows;
};

// Builds `trials` instances, runs floor(ln n)-A3F with fat list = W and the
// adversary corrupting exactly W, and reports connectivity rate and
// empirical xi against the 1-(1-beta)*alpha bound.
TheoremReport run_theorem_check(const TheoremInstanceSpec& spec, int trials,
                                std::uint64_t base_seed);

std::string format_theorem_report(const TheoremReport& report);

// Measured xi plugged into the aggregation-parameter and DP statements.
std::string privacy_report(const PrivacyParams& p, std::optional<std::int64_t> honest_count,
                           std::optional<std::int64_t> group_threshold);

}  // namespace netrobust
