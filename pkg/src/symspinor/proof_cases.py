"""Regression data: the eleven hand-computed ``V (x) E`` decompositions.

Each case is transcribed as a pattern in fundamental coordinates that can be
instantiated for any rank.  Positions are 1-based; ``-1`` means ``l`` and
``-2`` means ``l - 1``.  Entries add up, so a pattern placing ``1`` at
positions ``k+1`` and ``l-1`` with ``k+1 = l-1`` yields a ``2`` there.

Printed labels are kept as raw weights because some of them are not in A.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .derham import intersection_bound, window
from .spinor_decomp import (
    XiIndex,
    column_labels,
    e_label,
    forms_spinor_decomposition,
    tensor_with_defining,
    xi,
)
from .weights import Weight, from_fundamental, is_in_A

H = Fraction(1, 2)

Pattern = tuple[tuple[int, int], ...]


def build(l: int, ones: Pattern, tail: Fraction) -> Weight:
    lam = [Fraction(0)] * l
    for pos, val in ones:
        k = pos - 1 if pos > 0 else l + pos
        if not 0 <= k < l - 1:
            raise ValueError(f"position {pos} invalid for rank {l}")
        lam[k] += val
    lam[-1] += tail
    return from_fundamental(lam, l)


@dataclass(frozen=True)
class Case:
    key: str
    source: Callable[[int, int], Weight]
    printed: Callable[[int, int], list[Weight]]
    # k values for which the pattern is meaningful at rank l
    k_range: Callable[[int], range] = lambda l: range(1)
    # printed intersections by source degree: degree -> list of labels, if any
    printed_intersections: Callable[[int, int], dict[int, list[Weight]]] | None = None


def _b(ones, tail):
    return lambda l, k: build(l, tuple(ones(l, k)) if callable(ones) else ones, tail)


CASES: list[Case] = [
    Case(
        "even degree, j = 0",
        _b((), -H),
        lambda l, k: [build(l, ((1, 1),), -H), build(l, ((-2, 1),), -3 * H)],
        printed_intersections=lambda l, k: {
            d: ([build(l, ((1, 1),), -H), build(l, ((-2, 1),), -3 * H)] if d < 2 * l else [])
            for d in range(0, 2 * l + 1, 2)
        },
    ),
    Case(
        "odd degree, j = 0",
        _b(((-2, 1),), -3 * H),
        lambda l, k: [
            build(l, ((1, 1), (-2, 1)), -3 * H),
            build(l, (), -H),
            build(l, ((l - 2, 1),), -3 * H),
        ],
        printed_intersections=lambda l, k: {
            d: (
                [build(l, (), -3 * H), build(l, ((1, 1), (-2, 1)), -3 * H)]
                if d <= 2 * l - 3
                else [build(l, (), -H)]
            )
            for d in range(1, 2 * l, 2)
        },
    ),
    Case(
        "even degree, even j > 0",
        lambda l, k: build(l, ((k, 1),), -H),
        lambda l, k: [
            build(l, ((k - 1, 1),), -H),
            build(l, ((k + 1, 1),), -H),
            build(l, ((k, 1), (-2, 1)), -3 * H),
            build(l, ((1, 1), (k, 1)), -H),
        ],
        k_range=lambda l: range(2, l - 1, 2),
        printed_intersections=lambda l, k: {
            d: (
                [
                    build(l, ((k - 1, 1),), -H),
                    build(l, ((k + 1, 1),), -H),
                    build(l, ((k, 1), (-2, 1)), -3 * H),
                ]
                if d + k < 2 * l
                else [build(l, ((k - 1, 1),), -H)]
            )
            for d in range(0, 2 * l + 1, 2)
            if XiIndex(d, k).in_xi(l)
        },
    ),
    Case(
        "1 at k and l-1, -3/2",
        lambda l, k: build(l, ((k, 1), (-2, 1)), -3 * H),
        lambda l, k: [
            build(l, ((k - 1, 1), (-2, 1)), -3 * H),
            build(l, ((k + 1, 1), (-2, 1)), -3 * H),
            build(l, ((1, 1), (k, 1), (-2, 1)), -3 * H),
            build(l, ((k, 1),), -H),
        ],
        k_range=lambda l: range(2, l - 1),
    ),
    Case(
        "1 at k, -1/2",
        lambda l, k: build(l, ((k, 1),), -H),
        lambda l, k: [
            build(l, ((k - 1, 1),), -H),
            build(l, ((k + 1, 1),), -H),
            build(l, ((1, 1), (k, 1)), -H),
            build(l, ((k, 1), (-2, 1)), -3 * H),
        ],
        k_range=lambda l: range(2, l - 1),
    ),
    Case(
        "1 at 1, -1/2",
        _b(((1, 1),), -H),
        lambda l, k: [build(l, (), -H), build(l, ((2, 1),), -H), build(l, ((1, 1), (-2, 1)), -3 * H)],
    ),
    Case(
        "1 at 1 and l-1, -3/2",
        _b(((1, 1), (-2, 1)), -3 * H),
        lambda l, k: [
            build(l, ((-2, 1),), -3 * H),
            build(l, ((2, 1), (-2, 1)), -3 * H),
            build(l, ((1, 1),), -H),
        ],
    ),
    Case(
        "1 at l-1, -1/2",
        _b(((-2, 1),), -H),
        lambda l, k: [build(l, ((1, 1), (-2, 1)), -H), build(l, ((-2, 2),), -3 * H), build(l, (), H)],
    ),
    Case(
        "1 at l-2 and l-1, -3/2",
        lambda l, k: build(l, ((l - 2, 1), (-2, 1)), -3 * H),
        lambda l, k: [
            build(l, ((1, 1), (l - 2, 1), (-2, 1)), -3 * H),
            build(l, ((-2, 2),), -3 * H),
            build(l, ((l - 2, 1),), -H),
        ],
    ),
    Case(
        "2 at l-1, -3/2",
        _b(((-2, 2),), -3 * H),
        lambda l, k: [
            build(l, ((1, 1), (-2, 2)), -3 * H),
            build(l, ((l - 2, 1), (-2, 1)), -3 * H),
            build(l, ((-2, 3),), -5 * H),
            build(l, ((-2, 1),), -H),
        ],
    ),
    Case(
        "1/2 at l",
        _b((), H),
        lambda l, k: [build(l, ((1, 1),), H), build(l, (), -H)],
    ),
]


@dataclass
class CaseResult:
    key: str
    k: int
    source: Weight
    computed: list[Weight]
    printed: list[Weight]
    missing_from_print: list[Weight] = field(default_factory=list)
    printed_not_computed: list[Weight] = field(default_factory=list)
    intersection_diffs: list[dict] = field(default_factory=list)
    window_failures: list[str] = field(default_factory=list)

    @property
    def decomposition_matches(self) -> bool:
        return not self.missing_from_print and not self.printed_not_computed

    def to_json(self) -> dict:
        s = lambda ws: [w.short() for w in ws]  # noqa: E731
        return {
            "case": self.key,
            "k": self.k,
            "source": self.source.short(),
            "computed": s(self.computed),
            "printed": s(self.printed),
            "missing_from_print": s(self.missing_from_print),
            "printed_not_computed": [
                w.short() + ("" if is_in_A(w) else " [not in A]") for w in self.printed_not_computed
            ],
            "intersection_diffs": self.intersection_diffs,
            "window_failures": self.window_failures,
        }


def _intersection(l: int, idx: XiIndex) -> list[Weight]:
    if idx.i == 2 * l:
        return []
    src = tensor_with_defining(e_label(l, idx).highest_weight)
    nxt = forms_spinor_decomposition(l, idx.i + 1)
    return sorted(lab.highest_weight for lab in intersection_bound(src, nxt))


def run_cases(l: int) -> list[CaseResult]:
    results = []
    for case in CASES:
        for k in case.k_range(l):
            src = case.source(l, k)
            computed = sorted(lab.highest_weight for lab in tensor_with_defining(src).labels())
            printed = sorted(set(case.printed(l, k)))
            res = CaseResult(case.key, k, src, computed, printed)
            res.missing_from_print = sorted(set(computed) - set(printed))
            res.printed_not_computed = sorted(set(printed) - set(computed))
            nodes = [idx for idx in xi(l) if e_label(l, idx).highest_weight == src]
            if case.printed_intersections is not None:
                by_degree = case.printed_intersections(l, k)
                for idx in nodes:
                    if idx.i not in by_degree:
                        continue
                    got = _intersection(l, idx)
                    want = sorted(set(by_degree[idx.i]))
                    if got != want:
                        res.intersection_diffs.append(
                            {
                                "node": [idx.i, idx.j],
                                "printed": [w.short() + ("" if is_in_A(w) else " [not in A]") for w in want],
                                "computed": [w.short() for w in got],
                            }
                        )
            for idx in nodes:
                labels = column_labels(l, idx.i + 1) if idx.i < 2 * l else {}
                got = {labels[lab] for lab in labels if lab.highest_weight in _intersection(l, idx)}
                stray = got - window(l, idx)
                if stray:
                    res.window_failures.append(f"{idx} -> {sorted(str(x) for x in stray)}")
            results.append(res)
    return results
