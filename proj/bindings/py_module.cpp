// Python bindings for the core operations: graph construction and
// analysis, enrichment protocols, the disconnection game, and the privacy
// calculations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "netrobust/experiment.hpp"
#include "netrobust/game.hpp"
#include "netrobust/generate.hpp"
#include "netrobust/graph.hpp"
#include "netrobust/plot.hpp"
#include "netrobust/privacy.hpp"
#include "netrobust/protocols.hpp"
#include "netrobust/snap_io.hpp"

namespace py = pybind11;
using namespace netrobust;

namespace {

GameConfig make_game_config(const std::string& protocol, int m, double q, NodeId fat_count,
                            const std::string& adversary, double fraction, std::uint64_t seed,
                            bool participants_honest_only) {
    GameConfig cfg;
    cfg.protocol.kind = protocol_from_name(protocol);
    cfg.protocol.m = m;
    cfg.protocol.q = q;
    cfg.protocol.fat_count = fat_count;
    cfg.strategy = strategy_from_name(adversary);
    cfg.corruption_fraction = fraction;
    cfg.seed = seed;
    cfg.participants_honest_only = participants_honest_only;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "graph enrichment protocols and the disconnection game";

    py::class_<Graph>(m, "Graph")
        .def(py::init<NodeId>(), py::arg("n"))
        .def_static(
            "from_edges",
            [](NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
                return Graph::from_edges(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"),
             py::return_value_policy::reference_internal)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.node_count() << ", edges=" << g.edge_count() << ")";
            return os.str();
        });

    py::class_<ComponentLabeling>(m, "ComponentLabeling")
        .def_readonly("label", &ComponentLabeling::label)
        .def_readonly("component_sizes", &ComponentLabeling::component_sizes)
        .def_readonly("largest_size", &ComponentLabeling::largest_size)
        .def_readonly("largest_label", &ComponentLabeling::largest_label);

    m.def("connected_components", &connected_components, py::arg("g"));
    m.def(
        "largest_component_fraction",
        [](const Graph& g, std::optional<std::vector<NodeId>> over) {
            if (over) return largest_component_fraction(g, std::span<const NodeId>(*over));
            return largest_component_fraction(g);
        },
        py::arg("g"), py::arg("over") = py::none());
    m.def(
        "remove_nodes",
        [](const Graph& g, const std::vector<NodeId>& removed) {
            auto sub = remove_nodes(g, removed);
            return py::make_tuple(sub.graph, sub.kept, sub.new_id);
        },
        py::arg("g"), py::arg("removed"),
        "returns (graph, kept_original_ids, new_id_of_original)");
    m.def("degrees", &degrees, py::arg("g"));
    m.def("xi_strength", &xi_strength, py::arg("g_honest"));

    m.def(
        "load_snap_edgelist",
        [](const std::string& path) {
            auto res = load_snap_file(path);
            return py::make_tuple(res.graph, res.original_ids, res.data_lines,
                                  res.self_loop_lines);
        },
        py::arg("path"),
        "returns (graph, original_ids, raw_edge_lines, self_loop_lines)");
    m.def(
        "loads_snap_edgelist",
        [](const std::string& text) {
            std::istringstream in(text);
            auto res = load_snap_edgelist(in);
            return py::make_tuple(res.graph, res.original_ids, res.data_lines,
                                  res.self_loop_lines);
        },
        py::arg("text"));

    m.def(
        "generate_ba",
        [](NodeId n, NodeId m_attach, NodeId seed_size, std::uint64_t seed) {
            Rng rng(seed);
            return generate_ba({n, m_attach, seed_size}, rng);
        },
        py::arg("n"), py::arg("m_attach") = 3, py::arg("seed_size") = 5, py::arg("seed") = 1);

    m.def(
        "select_participants",
        [](NodeId n, double q, std::uint64_t seed) {
            Rng rng(seed);
            return select_participants(n, q, rng);
        },
        py::arg("n"), py::arg("q"), py::arg("seed"));
    m.def("select_fat_nodes", &select_fat_nodes, py::arg("g"), py::arg("fat_count"));
    m.def("default_fat_count", &default_fat_count, py::arg("n"));

    py::class_<EnrichmentResult>(m, "EnrichmentResult")
        .def_readonly("added_edges", &EnrichmentResult::added_edges)
        .def_readonly("messages_sent", &EnrichmentResult::messages_sent)
        .def_readonly("participants", &EnrichmentResult::participants)
        .def_readonly("skipped_isolated", &EnrichmentResult::skipped_isolated);

    m.def(
        "run_2sff",
        [](const Graph& g, const std::vector<NodeId>& participants, int m, std::uint64_t seed) {
            return run_2sff(g, participants, m, seed);
        },
        py::arg("g"), py::arg("participants"), py::arg("m"), py::arg("seed"));
    m.def(
        "run_a3f",
        [](const Graph& g, const std::vector<NodeId>& participants,
           const std::vector<NodeId>& fat_list, int m, std::uint64_t seed) {
            return run_a3f(g, participants, fat_list, m, seed);
        },
        py::arg("g"), py::arg("participants"), py::arg("fat_list"), py::arg("m"),
        py::arg("seed"));
    m.def("apply_enrichment", &apply_enrichment, py::arg("g"), py::arg("result"));

    m.def(
        "plan_random_failures",
        [](const Graph& g, double fraction, std::uint64_t seed) {
            Rng rng(seed);
            return plan_random_failures(g, fraction, rng).corrupted;
        },
        py::arg("g"), py::arg("fraction"), py::arg("seed"));
    m.def(
        "plan_targeted",
        [](const Graph& g, double fraction) { return plan_targeted(g, fraction).corrupted; },
        py::arg("g"), py::arg("fraction"));

    py::class_<GameOutcome>(m, "GameOutcome")
        .def_readonly("frac_all", &GameOutcome::frac_all)
        .def_readonly("frac_participants", &GameOutcome::frac_participants)
        .def_readonly("frac_nonparticipants", &GameOutcome::frac_nonparticipants)
        .def_readonly("xi", &GameOutcome::xi)
        .def_readonly("messages", &GameOutcome::messages)
        .def_readonly("edges_added", &GameOutcome::edges_added)
        .def_readonly("edges_surviving", &GameOutcome::edges_surviving)
        .def_readonly("honest", &GameOutcome::honest)
        .def_readonly("honest_participants", &GameOutcome::honest_participants)
        .def_readonly("honest_nonparticipants", &GameOutcome::honest_nonparticipants)
        .def_readonly("component_sizes", &GameOutcome::component_sizes)
        .def("__repr__", [](const GameOutcome& o) {
            std::ostringstream os;
            os << "GameOutcome(frac_all=" << o.frac_all << ", xi=" << o.xi
               << ", messages=" << o.messages << ")";
            return os.str();
        });

    m.def(
        "play_game",
        [](const Graph& g, const std::string& protocol, int m, double q, NodeId fat_count,
           const std::string& adversary, double fraction, std::uint64_t seed,
           bool participants_honest_only) {
            return play_game(g, make_game_config(protocol, m, q, fat_count, adversary, fraction,
                                                 seed, participants_honest_only));
        },
        py::arg("g"), py::arg("protocol") = "none", py::arg("m") = 0, py::arg("q") = 1.0,
        py::arg("fat_count") = 0, py::arg("adversary") = "random", py::arg("fraction") = 0.0,
        py::arg("seed") = 0, py::arg("participants_honest_only") = false);

    m.def(
        "paalec_params",
        [](double epsilon, double delta, double sensitivity, double s) {
            PrivacyParams p;
            p.epsilon = epsilon;
            p.delta = delta;
            p.Delta = sensitivity;
            p.s = s;
            const auto out = paalec_params(p);
            return py::make_tuple(out.alpha, out.beta);
        },
        py::arg("epsilon"), py::arg("delta"), py::arg("sensitivity") = 1.0, py::arg("s") = 1.0);
    m.def(
        "dp_guarantee",
        [](double epsilon, double delta, double xi) {
            PrivacyParams p;
            p.epsilon = epsilon;
            p.delta = delta;
            p.xi = xi;
            const auto g = dp_guarantee(p);
            return py::make_tuple(py::make_tuple(g.epsilon_component, g.delta_component),
                                  py::make_tuple(g.epsilon_any, g.delta_any));
        },
        py::arg("epsilon"), py::arg("delta"), py::arg("xi"),
        "returns ((eps, delta) for component members, (eps, delta) for any node)");
    m.def("noiseless_aggregation_plausible", &noiseless_aggregation_plausible, py::arg("xi"),
          py::arg("honest_count"), py::arg("group_threshold"));

    py::class_<TheoremInstanceSpec>(m, "TheoremInstanceSpec")
        .def(py::init([](NodeId n, double C, double a, double b, double alpha, double beta,
                         double gamma) {
                 TheoremInstanceSpec spec;
                 spec.n = n;
                 spec.C = C;
                 spec.a = a;
                 spec.b = b;
                 spec.alpha = alpha;
                 spec.beta = beta;
                 spec.gamma = gamma;
                 return spec;
             }),
             py::arg("n"), py::arg("C"), py::arg("a"), py::arg("b"), py::arg("alpha"),
             py::arg("beta") = 1.0, py::arg("gamma") = 1.0)
        .def("validate", &TheoremInstanceSpec::validate)
        .def_property_readonly("fat_count", &TheoremInstanceSpec::fat_count)
        .def_property_readonly("neighborhood_count", &TheoremInstanceSpec::neighborhood_count)
        .def_property_readonly("outsider_count", &TheoremInstanceSpec::outsider_count);

    m.def(
        "build_theorem_instance",
        [](const TheoremInstanceSpec& spec, std::uint64_t seed) {
            Rng rng(seed);
            auto inst = build_theorem_instance(spec, rng);
            return py::make_tuple(inst.graph, inst.fat_nodes, inst.neighborhood,
                                  inst.outsiders, inst.participants);
        },
        py::arg("spec"), py::arg("seed"),
        "returns (graph, fat_nodes, neighborhood, outsiders, participants)");

    m.def(
        "run_theorem_check",
        [](const TheoremInstanceSpec& spec, int trials, std::uint64_t seed) {
            const auto rep = run_theorem_check(spec, trials, seed);
            py::dict out;
            out["trials"] = rep.trials;
            out["connected_count"] = rep.connected_count;
            out["bound"] = rep.bound;
            out["slack"] = rep.slack;
            out["xi_ok_count"] = rep.xi_ok_count;
            out["mean_xi"] = rep.mean_xi;
            out["min_xi"] = rep.min_xi;
            out["m_rounds"] = rep.m_rounds;
            return out;
        },
        py::arg("spec"), py::arg("trials"), py::arg("seed"));

    m.def("mix_seed", [](std::uint64_t a, std::uint64_t b) { return mix_seed(a, b); },
          py::arg("a"), py::arg("b"));
}
