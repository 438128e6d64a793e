import json
from fractions import Fraction

import pytest
from golden import picture_edges

from symspinor.derham import (
    DIRAC,
    GENERALIZED_RS,
    RARITA_SCHWINGER,
    TWISTOR,
    Diagram,
    diagram,
    edge_name,
    emit,
    intersection_bound,
    targets,
    verify_diagram,
    window,
)
from symspinor.findim import Decomposition, ModuleLabel
from symspinor.spinor_decomp import XiIndex, forms_spinor_decomposition, tensor_with_defining, xi
from symspinor.weights import DomainError, from_fundamental

X = XiIndex
H = Fraction(1, 2)
def test_xi_sizes():
    assert len(xi(2)) == 9
    assert len(xi(3)) == 16
    for l in range(2, 7):
        assert len(xi(l)) == (l + 1) ** 2


def test_intersection_bound_examples():
    a = tensor_with_defining(from_fundamental([0, 0, -H], 3))
    b = forms_spinor_decomposition(3, 1)
    assert intersection_bound(a, b) == b.label_set()
    empty = Decomposition.of([])
    assert intersection_bound(a, empty) == frozenset()
    lab = ModuleLabel.bounded(from_fundamental([0, 0, H], 3))
    assert intersection_bound(Decomposition.of([lab]), a) == frozenset()


def test_targets_examples():
    assert targets(3, X(0, 0)) == {X(1, 0), X(1, 1)}
    assert targets(3, X(3, 3)) == {X(4, 2)}
    assert targets(3, X(5, 0)) == {X(6, 0)}
    assert targets(3, X(6, 0)) == frozenset()
    with pytest.raises(DomainError):
        targets(3, X(1, 2))


def test_rank3_diagram_matches_picture():
    d = diagram(3)
    assert len(d.nodes) == 16
    assert d.edges == picture_edges()
    assert len(d.edges) == 30


@pytest.mark.parametrize("l, count", [(2, 14), (3, 30), (4, 52), (5, 80)])
def test_edges_stay_in_window(l, count):
    d = diagram(l)
    for s, t in d.edges:
        assert t in window(l, s)
    assert len(d.edges) == count
    assert verify_diagram(l).ok


@pytest.mark.parametrize("l", [2, 3, 4])
def test_mirror_symmetry(l):
    d = diagram(l)

    def m(x):
        return X(2 * l - x.i, x.j)

    assert {(m(t), m(s)) for s, t in d.edges} == d.edges


def test_edge_names():
    assert edge_name(X(0, 0), X(1, 0)) == DIRAC
    assert edge_name(X(0, 0), X(1, 1)) == TWISTOR
    assert edge_name(X(1, 1), X(2, 1)) == RARITA_SCHWINGER
    assert edge_name(X(2, 2), X(3, 2)) == GENERALIZED_RS
    assert edge_name(X(1, 1), X(2, 0)) is None


def test_dot_output():
    text = emit(diagram(3), "dot")
    assert text.startswith("digraph derham_l3 {") and text.rstrip().endswith("}")
    nodes = {line.split()[0] for line in text.splitlines() if "[label=\"E_" in line}
    assert len(nodes) == 16
    assert text.count("->") == 30
    assert text.count("rank=same") == 7


def test_dot_without_edges():
    d = diagram(2)
    bare = Diagram(d.rank, d.nodes, set())
    text = emit(bare, "dot")
    assert "->" not in text and text.rstrip().endswith("}")


def test_text_triangle():
    lines = emit(diagram(3), "text").splitlines()
    assert lines[0].startswith("rank 3: 16 nodes, 30 edges")
    triangle = lines[1:5]
    assert [len(r.split()) for r in triangle] == [7, 5, 3, 1]
    assert lines[5] == ""


def test_json_round_trip():
    d = diagram(3)
    doc = json.loads(emit(d, "json"))
    back = Diagram.from_json(doc)
    assert back.edges == d.edges and back.nodes == d.nodes
    assert emit(back, "json") == emit(d, "json")


def test_unknown_format():
    with pytest.raises(DomainError):
        emit(diagram(2), "png")


def test_rank_guard():
    with pytest.raises(DomainError):
        diagram(9)
