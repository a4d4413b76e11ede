import pytest

from arcmaps.families import build_family
from arcmaps.groups import generate
from arcmaps.integers import factor, is_squarefree
from arcmaps.maps import (
    MapStructureError,
    MultiGraph,
    build_cartesian_square,
    build_map,
    build_multicycle,
    euler_characteristic_closed,
    euler_characteristic_counted,
    is_cartesian_square_of_cycle,
    is_multicycle,
    underlying_graph,
)
from arcmaps.perms import Permutation
from arcmaps.triples import GeneratingTriple


def P(text, degree):
    return Permutation.parse(text, degree)


def test_map_counts_c31_n5():
    inst = build_family("C31", 5)
    m = build_map(inst.group, inst.triple)
    assert (m.n_vertices, m.n_edges, m.n_faces) == (5, 25, 10)
    assert m.valency == 10
    assert m.face_length == 5
    assert euler_characteristic_counted(m) == -10


def test_map_counts_c34_n3():
    inst = build_family("C34", 3)
    m = build_map(inst.group, inst.triple)
    assert m.valency == 4
    assert m.face_length == 6
    assert euler_characteristic_counted(m) == -3


def test_degenerate_klein_map():
    # G = Z2^2 with x, z the generators and y = xz: all three coset spaces
    # are single points and chi = 1
    G = generate(4, [P("(0 1)(2 3)", 4), P("(0 2)(1 3)", 4)])
    x = P("(0 1)(2 3)", 4)
    z = P("(0 2)(1 3)", 4)
    y = x * z
    triple = GeneratingTriple("regular", (x, y, z), G)
    m = build_map(G, triple)
    assert (m.n_vertices, m.n_edges, m.n_faces) == (1, 1, 1)
    assert euler_characteristic_counted(m) == 1
    assert euler_characteristic_closed(G, triple).value == 1
    with pytest.raises(MapStructureError):
        underlying_graph(m)  # its one edge is a loop


def test_two_way_chi_agreement_samples():
    for family, n in (("C31", 7), ("C33", 5), ("C34", 5)):
        inst = build_family(family, n)
        m = build_map(inst.group, inst.triple)
        closed = euler_characteristic_closed(inst.group, inst.triple)
        assert closed.value == euler_characteristic_counted(m)


def test_handshake_and_valency_identity():
    for family, n in (("C31", 5), ("C33", 4), ("C34", 3)):
        inst = build_family(family, n)
        m = build_map(inst.group, inst.triple)
        g = underlying_graph(m)
        assert sum(g.degree_sequence()) == 2 * len(g.edges)
        assert m.valency * m.n_vertices == 2 * m.n_edges
        for ends in m.edge_vertices():
            assert len(ends) == 2
        for faces in m.edge_faces():
            assert len(faces) <= 2


def test_underlying_graphs_of_families():
    g31 = underlying_graph(build_map(*_gt(build_family("C31", 5))))
    assert is_multicycle(g31) == (5, 5)
    g33 = underlying_graph(build_map(*_gt(build_family("C33", 2))))
    assert g33.n_vertices == 2 and len(g33.edges) == 4
    assert is_multicycle(g33) == (2, 2)
    g34 = underlying_graph(build_map(*_gt(build_family("C34", 3))))
    assert is_cartesian_square_of_cycle(g34) == 3


def _gt(inst):
    return inst.group, inst.triple


def test_multigraph_rejects_loops():
    with pytest.raises(MapStructureError):
        MultiGraph.from_pairs(2, [(0, 0)])


def test_multicycle_recognition_round_trip():
    for n in range(2, 51):
        for lam in (1, 2, 5):
            g = build_multicycle(n, lam)
            assert is_multicycle(g) == (n, lam)


def test_multicycle_rejects_k4():
    k4 = MultiGraph.from_pairs(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert is_multicycle(k4) is None


def test_cartesian_recognition_round_trip():
    for n in range(3, 51):
        g = build_cartesian_square(n)
        assert is_cartesian_square_of_cycle(g) == n


def test_cartesian_rejects_near_misses():
    # 4-regular on n^2 vertices but a multicycle, not a torus
    g = build_multicycle(9, 2)
    assert is_cartesian_square_of_cycle(g) is None
    assert is_cartesian_square_of_cycle(build_multicycle(4, 2)) is None
    # two disjoint tori have the right degree sequence but are disconnected
    t = build_cartesian_square(3)
    double = MultiGraph.from_pairs(
        18, list(t.edges) + [(u + 9, v + 9) for u, v in t.edges]
    )
    assert is_cartesian_square_of_cycle(double) is None


def test_factor_and_squarefree():
    fi = factor(-10)
    assert fi.dot_string() == "-2.5" and fi.squarefree
    assert factor(12).dot_string() == "2.2.3" and not factor(12).squarefree
    assert factor(-143).dot_string() == "-11.13" and is_squarefree(-143)
    assert factor(2).dot_string() == "2"
    assert factor(1).dot_string() == "1"
    assert factor(-1).dot_string() == "-1"
    zero = factor(0)
    assert zero.dot_string() == "0" and not zero.squarefree and zero.zero_warning
    assert not is_squarefree(0)


def test_dot_export_repeats_multiedges():
    g = build_multicycle(3, 2)
    dot = g.to_dot("test")
    assert dot.count("--") == 6
    assert dot.startswith('graph "test"')
