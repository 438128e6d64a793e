"""Target structure of the spinor twisted de Rham sequence.

For each ``E_{i,j}`` the summands of ``V (x) E_{i,j}`` are intersected (as
isomorphism classes) with the summands of degree ``i + 1``.  The surviving
summands bound the image of the covariant derivative, so an edge of the
resulting diagram means "possibly nonzero component", never "nonzero".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .findim import Decomposition, ModuleLabel, SuiteReport, VerificationError
from .spinor_decomp import (
    XiIndex,
    column_labels,
    e_label,
    forms_spinor_decomposition,
    tensor_with_defining,
    xi,
)
from .weights import DomainError, Weight

MAX_DIAGRAM_RANK = 8

FORMATS = ("dot", "text", "json")

DIRAC = "symplectic Dirac"
TWISTOR = "symplectic twistor"
RARITA_SCHWINGER = "symplectic Rarita-Schwinger"
GENERALIZED_RS = "symplectic generalized Rarita-Schwinger"


def intersection_bound(a: Decomposition, b: Decomposition) -> frozenset[ModuleLabel]:
    """Labels of ``a`` isomorphic to some summand of ``b``."""
    return a.label_set() & b.label_set()


def targets(l: int, idx: XiIndex) -> frozenset[XiIndex]:
    if not idx.in_xi(l):
        raise DomainError(f"({idx.i},{idx.j}) is not in Xi for l={l}")
    if idx.i == 2 * l:
        return frozenset()
    source = tensor_with_defining(e_label(l, idx).highest_weight)
    nxt = forms_spinor_decomposition(l, idx.i + 1)
    by_label = column_labels(l, idx.i + 1)
    out = set()
    for lab in intersection_bound(source, nxt):
        if lab not in by_label:
            raise VerificationError(f"{lab} in degree {idx.i + 1} has no Xi index")
        out.add(by_label[lab])
    return frozenset(out)


def window(l: int, idx: XiIndex) -> frozenset[XiIndex]:
    cand = (XiIndex(idx.i + 1, idx.j + dj) for dj in (-1, 0, 1))
    return frozenset(c for c in cand if c.in_xi(l))


def edge_name(src: XiIndex, dst: XiIndex) -> str | None:
    """Operator names for the first two rows; deeper horizontal edges are generalized RS."""
    if src.j == 0 and dst.j == 0:
        return DIRAC
    if src.j == 0 and dst.j == 1:
        return TWISTOR
    if src.j == 1 and dst.j == 1:
        return RARITA_SCHWINGER
    if src.j == dst.j:
        return GENERALIZED_RS
    return None


@dataclass
class Diagram:
    rank: int
    nodes: dict[XiIndex, ModuleLabel]
    edges: set[tuple[XiIndex, XiIndex]] = field(default_factory=set)

    def check(self) -> None:
        for src, dst in self.edges:
            if dst.i != src.i + 1:
                raise VerificationError(f"edge {src}->{dst} skips a column")
            if dst not in window(self.rank, src):
                raise VerificationError(f"edge {src}->{dst} leaves the three-term window")

    def sorted_edges(self) -> list[tuple[XiIndex, XiIndex]]:
        return sorted(self.edges)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "nodes": [
                {"i": idx.i, "j": idx.j, "label": lab.short(), "weight": lab.highest_weight.to_json()}
                for idx, lab in sorted(self.nodes.items())
            ],
            "edges": [
                dict(
                    {"from": [s.i, s.j], "to": [d.i, d.j]},
                    **({"name": edge_name(s, d)} if edge_name(s, d) else {}),
                )
                for s, d in self.sorted_edges()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        l = int(data["rank"])
        nodes = {}
        for n in data["nodes"]:
            w = Weight.from_json(n["weight"])
            nodes[XiIndex(n["i"], n["j"])] = ModuleLabel.bounded(w)
        edges = {(XiIndex(*e["from"]), XiIndex(*e["to"])) for e in data["edges"]}
        return cls(l, nodes, edges)


def diagram(l: int) -> Diagram:
    if not 2 <= l <= MAX_DIAGRAM_RANK:
        raise DomainError(f"rank {l} outside 2..{MAX_DIAGRAM_RANK}")
    nodes = {idx: e_label(l, idx) for idx in xi(l)}
    edges = {(idx, t) for idx in nodes for t in targets(l, idx)}
    d = Diagram(l, nodes, edges)
    d.check()
    return d


def _dot(d: Diagram) -> str:
    lines = [f"digraph derham_l{d.rank} {{", "  rankdir=LR;", "  node [shape=box];"]
    for i in range(2 * d.rank + 1):
        col = [idx for idx in sorted(d.nodes) if idx.i == i]
        ids = " ".join(f"E_{x.i}_{x.j};" for x in col)
        lines.append(f"  {{ rank=same; {ids} }}")
    for idx, lab in sorted(d.nodes.items()):
        lines.append(f'  E_{idx.i}_{idx.j} [label="E_{idx.i},{idx.j}\\n{lab.short()}"];')
    for s, t in d.sorted_edges():
        name = edge_name(s, t)
        attr = f' [label="{name}"]' if name else ""
        lines.append(f"  E_{s.i}_{s.j} -> E_{t.i}_{t.j}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _text(d: Diagram) -> str:
    """Triangle of nodes (row j, column i) followed by the edge list."""
    l = d.rank
    lines = [f"rank {l}: {len(d.nodes)} nodes, {len(d.edges)} edges (upper bound on the image)"]
    cell = max(len(str(idx)) for idx in d.nodes) + 2
    for j in range(l + 1):
        row = ""
        for i in range(2 * l + 1):
            idx = XiIndex(i, j)
            row += (str(idx) if idx in d.nodes else "").ljust(cell)
        lines.append(row.rstrip())
    lines.append("")
    for idx in sorted(d.nodes):
        outs = sorted(t for s, t in d.edges if s == idx)
        if outs:
            lines.append(f"{idx} {d.nodes[idx].short()} -> " + ", ".join(str(t) for t in outs))
    return "\n".join(lines) + "\n"


def emit(d: Diagram, fmt: str) -> str:
    if fmt == "dot":
        return _dot(d)
    if fmt == "text":
        return _text(d)
    if fmt == "json":
        return json.dumps(d.to_json(), indent=2, sort_keys=True) + "\n"
    raise DomainError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def verify_diagram(l: int) -> SuiteReport:
    report = SuiteReport(f"diagram(l={l})")
    for idx in xi(l):
        report.cases += 1
        got = targets(l, idx)
        stray = got - window(l, idx)
        if stray:
            report.fail(f"(l={l}, {idx}): targets {sorted(str(x) for x in stray)} outside the window")
    return report
