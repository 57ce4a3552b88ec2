import pytest

import colref


def test_graph_and_graph6_round_trip():
    g = colref.Graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]
    assert colref.degree_summary(g) == {1: 2, 2: 1}
    line = colref.graph6_encode(g)
    assert colref.graph6_decode(line) == g


def test_refinement_and_traces():
    p5 = colref.path_graph(5)
    assert colref.wl1_iterations(p5) == 2
    trace = colref.run(p5)
    assert trace.wl1 == 2
    assert trace.rounds[0] == [[0, 1, 2, 3, 4]]
    assert trace.rounds[-1] == trace.rounds[-2]
    assert '"wl1":2' in trace.to_json()
    assert colref.run(p5, engine="reference").rounds == trace.rounds


def test_codes_and_families():
    g = colref.build_graph("S011XX")
    assert g.n == 12
    assert colref.wl1_iterations(g) == 11
    assert colref.is_long_refinement(g)
    assert colref.decode_graph(g) == "S011XX"
    assert colref.code_order("S0X1X^") == 11
    assert colref.family_member("E2", 3) == "S11100111X1X1110"
    rows = colref.catalogue(2)
    assert ("E1", 0, "S011XX", 12) in rows


def test_code_errors_raise():
    with pytest.raises(colref.ColrefError):
        colref.build_graph("S01X")
    with pytest.raises(colref.ColrefError):
        colref.decode_graph(colref.path_graph(6))


def test_witness():
    w = colref.witness(24)
    assert w.order == 24
    assert w.achieved == 22
    assert colref.wl1_iterations(w.graph) == 22
    w12 = colref.witness(12)
    assert w12.achieved == 11 and "E1" in w12.provenance


def test_canonical_and_search():
    c5 = colref.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert colref.are_isomorphic(c5, colref.complement(c5))
    assert colref.canonical_code(c5) == colref.canonical_code(colref.complement(c5))
    assert colref.enumerate_count(6) == 156
    assert colref.enumerate_count(6, connected_only=True) == 112
    scanned, found = colref.count_long_refinement(6)
    assert scanned == 156 and found == []


def test_complement_invariance_property():
    g = colref.random_gnp(40, 0.5, 7)
    assert colref.run(g).rounds == colref.run(colref.complement(g)).rounds
