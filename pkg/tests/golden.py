"""Printed structures transcribed by hand, shared by unit and acceptance tests."""

from fractions import Fraction

from symspinor.findim import ModuleLabel
from symspinor.spinor_decomp import XiIndex
from symspinor.weights import from_fundamental

H = Fraction(1, 2)

# rank 3 table of spinor valued forms: rows j = 0..3, columns i = 0..6
L3_TABLE = {
    0: ["(0 0 -1/2)", "(0 1 -3/2)", "(0 0 -1/2)", "(0 1 -3/2)", "(0 0 -1/2)", "(0 1 -3/2)", "(0 0 -1/2)"],
    1: [None, "(1 0 -1/2)", "(1 1 -3/2)", "(1 0 -1/2)", "(1 1 -3/2)", "(1 0 -1/2)", None],
    2: [None, None, "(0 1 -1/2)", "(0 2 -3/2)", "(0 1 -1/2)", None, None],
    3: [None, None, None, "(0 0 1/2)", None, None, None],
}

# arrows of the rank 3 picture, read cell by cell
PICTURE_L3 = {
    (0, 0): "r dr", (1, 0): "r dr", (2, 0): "r dr", (3, 0): "r dr", (4, 0): "r dr", (5, 0): "r",
    (1, 1): "ur r dr", (2, 1): "r dr ur", (3, 1): "r dr ur", (4, 1): "r ur", (5, 1): "ur",
    (2, 2): "r ur dr", (3, 2): "ur r", (4, 2): "ur",
    (3, 3): "ur",
}
_STEP = {"r": 0, "dr": 1, "ur": -1}


def picture_edges() -> set:
    out = set()
    for (i, j), arrows in PICTURE_L3.items():
        for a in arrows.split():
            out.add((XiIndex(i, j), XiIndex(i + 1, j + _STEP[a])))
    return out


def printed_column(l: int, d: int) -> set:
    """The general-rank displays, transcribed pattern by pattern (mirrored for d > l)."""
    if d > l:
        d = 2 * l - d

    def lab(pos, tail, extra_lm1=0):
        lam = [Fraction(0)] * l
        if pos:
            lam[pos - 1] += 1
        lam[l - 2] += extra_lm1
        lam[-1] += tail
        return from_fundamental(lam, l)

    out = set()
    for p in range(0, d + 1):
        if p % 2 == d % 2:
            out.add(lab(p, -H))
        elif p <= d - 1:
            out.add(lab(p, Fraction(-3, 2), 1))
    return {ModuleLabel.bounded(w) for w in out}
