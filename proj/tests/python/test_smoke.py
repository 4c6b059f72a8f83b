"""Smoke tests for the python bindings."""

import math

import pytest

import netrobust as nr


def test_graph_basics():
    g = nr.Graph(3)
    assert g.add_edge(0, 1)
    assert not g.add_edge(0, 1)
    assert not g.add_edge(2, 2)
    assert g.edge_count == 1
    assert g.neighbors(0) == [1]
    with pytest.raises(IndexError):
        g.add_edge(0, 5)


def test_components_and_fraction():
    g = nr.Graph.from_edges(5, [(0, 1), (2, 3)])
    labeling = nr.connected_components(g)
    assert labeling.largest_size == 2
    assert sorted(labeling.component_sizes) == [1, 2, 2]
    assert nr.largest_component_fraction(g) == pytest.approx(0.4)
    assert nr.largest_component_fraction(g, over=[2, 3]) == pytest.approx(0.0)


def test_remove_nodes_keeps_a_mapping():
    g = nr.Graph.from_edges(3, [(0, 1), (1, 2)])
    sub, kept, new_id = nr.remove_nodes(g, [1])
    assert sub.node_count == 2
    assert sub.edge_count == 0
    assert kept == [0, 2]
    assert new_id == [0, -1, 1]


def test_snap_parsing_from_text():
    g, original_ids, lines, loops = nr.loads_snap_edgelist("# c\n0 1\n1 0\n1 2\n5 5\n")
    assert g.node_count == 4  # 0, 1, 2, 5
    assert g.edge_count == 2
    assert lines == 4
    assert loops == 1
    assert original_ids == [0, 1, 2, 5]


def test_ba_generation_is_seed_stable():
    a = nr.generate_ba(500, m_attach=3, seed_size=5, seed=7)
    b = nr.generate_ba(500, m_attach=3, seed_size=5, seed=7)
    assert a.edge_count == b.edge_count == 10 + 495 * 3
    assert all(a.neighbors(v) == b.neighbors(v) for v in range(500))


def test_protocols_and_game():
    g = nr.generate_ba(800, seed=3)
    participants = nr.select_participants(800, 0.5, seed=11)
    assert len(participants) == 400

    res = nr.run_2sff(g, participants, m=4, seed=21)
    assert res.messages_sent == 2 * 4 * len(participants)
    enriched = nr.apply_enrichment(g, res)
    assert enriched.edge_count == g.edge_count + len(res.added_edges)

    fat = nr.select_fat_nodes(g, 8)
    a3f = nr.run_a3f(g, participants, fat, m=4, seed=22)
    assert a3f.messages_sent == 2 * 4 * len(participants)

    out = nr.play_game(
        g, protocol="a3f", m=5, q=0.5, adversary="targeted", fraction=0.2, seed=9
    )
    assert 0.0 <= out.frac_all <= 1.0
    assert out.xi == out.frac_all
    assert out.honest == 800 - round(0.2 * 800)
    again = nr.play_game(
        g, protocol="a3f", m=5, q=0.5, adversary="targeted", fraction=0.2, seed=9
    )
    assert again.frac_all == out.frac_all


def test_privacy_formulas():
    alpha, beta = nr.paalec_params(epsilon=1.0, delta=math.exp(-1.0), sensitivity=1.0, s=2.0)
    assert alpha == pytest.approx(math.e, rel=1e-12)
    assert beta == pytest.approx(1.0, rel=1e-12)

    (eps_c, delta_c), (eps_any, delta_any) = nr.dp_guarantee(1.0, 0.01, xi=0.9)
    assert (eps_c, delta_c) == (1.0, 0.01)
    assert eps_any == 1.0
    assert delta_any == pytest.approx(0.11)

    with pytest.raises(ValueError):
        nr.paalec_params(epsilon=1.0, delta=0.0)


def test_theorem_instance_roundtrip():
    spec = nr.TheoremInstanceSpec(n=2000, C=1.0, a=0.2, b=0.8, alpha=0.5)
    graph, fat, neighborhood, outsiders, participants = nr.build_theorem_instance(spec, seed=5)
    assert len(fat) == spec.fat_count
    assert len(outsiders) == spec.outsider_count
    assert all(graph.degree(v) == 0 for v in outsiders)
    assert len(participants) == 2000

    report = nr.run_theorem_check(spec, trials=3, seed=4)
    assert report["trials"] == 3
    assert report["bound"] == pytest.approx(1.0)
    assert 0 <= report["connected_count"] <= 3
