"""Decompositions of F(nu) (x) S, L(lam) (x) V and of spinor valued forms.

Module labels use the ``(l1 l2 ... ll)`` shorthand in fundamental
coordinates throughout.  The index set Xi and the labels ``E_{i,j}`` are
defined here too, because every decomposition of a form degree is indexed
by them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .charpoly import (
    FormalCharacter,
    defining_character,
    kw_character,
    mul,
    spinor_character,
    total,
)
from .findim import (
    Decomposition,
    ModuleLabel,
    SuiteReport,
    VerificationError,
    decomposition_character,
    wedge_character,
    wedge_decomposition,
)
from .weights import (
    DomainError,
    Weight,
    epsilon,
    from_fundamental,
    fundamental_coords,
    is_dominant_integral,
    is_in_A,
    iter_dominant,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True, order=True)
class XiIndex:
    """A pair (i, j) of the triangular index set Xi of rank l."""

    i: int
    j: int

    def in_xi(self, l: int) -> bool:
        if self.i < 0 or self.j < 0 or self.i > 2 * l:
            return False
        return self.j <= (self.i if self.i <= l else 2 * l - self.i)

    def __str__(self) -> str:
        return f"E_{self.i}_{self.j}"


def xi(l: int) -> list[XiIndex]:
    if l < 2:
        raise DomainError("rank must be at least 2")
    out = []
    for i in range(2 * l + 1):
        top = i if i <= l else 2 * l - i
        out.extend(XiIndex(i, j) for j in range(top + 1))
    return out


def spinor_weight(l: int) -> Weight:
    """Highest weight -w_l / 2 of S_+."""
    return from_fundamental([0] * (l - 1) + [-HALF], l)


def minus_spinor_weight(l: int) -> Weight:
    """Highest weight w_{l-1} - 3 w_l / 2 of S_-."""
    return from_fundamental([0] * (l - 2) + [1, -3 * HALF], l)


def t_nu(nu: Weight) -> list[Weight]:
    """The weights ``nu - sum d_i eps_i`` indexing the summands of F(nu) (x) S."""
    if not is_dominant_integral(nu):
        raise DomainError(f"{nu.short()} is not dominant integral")
    lam = [int(c) for c in fundamental_coords(nu)]
    l = nu.rank
    ranges = [range(lam[k] + 1) for k in range(l - 1)] + [range(2 * lam[-1] + 2)]
    out = []
    for d in product(*ranges):
        if sum(d) % 2:
            continue
        shift = Weight(tuple(2 * x for x in d))
        out.append(nu - shift)
    return sorted(set(out))


def tensor_with_spinor(nu: Weight) -> Decomposition:
    shift = spinor_weight(nu.rank)
    labels = []
    for kappa in t_nu(nu):
        mu = kappa + shift
        if not is_in_A(mu):
            raise VerificationError(f"{mu.short()} from T_nu of {nu.short()} is not in A")
        labels.append(ModuleLabel.bounded(mu))
    return Decomposition.of(labels)


def saturated_pi1(l: int) -> list[Weight]:
    """Weights of the defining representation: +-eps_i."""
    ws = [epsilon(i, l) for i in range(1, l + 1)]
    return ws + [-w for w in ws]


def a_lambda(lam: Weight) -> list[Weight]:
    if not is_in_A(lam):
        raise DomainError(f"{lam.short()} is not in A")
    return sorted(mu for mu in (lam + v for v in saturated_pi1(lam.rank)) if is_in_A(mu))


def tensor_with_defining(lam: Weight) -> Decomposition:
    return Decomposition.of(ModuleLabel.bounded(mu) for mu in a_lambda(lam))


def forms_spinor_decomposition(l: int, i: int) -> Decomposition:
    """Decomposition of the i-th exterior power of V* tensored with S."""
    if not 0 <= i <= 2 * l:
        raise DomainError(f"form degree {i} outside 0..{2 * l}")
    dec = Decomposition()
    for lab in wedge_decomposition(l, i):
        dec = dec + tensor_with_spinor(lab.highest_weight)
    if not dec.is_multiplicity_free():
        raise VerificationError(f"l={l}, i={i}: repeated summand in {dec}")
    return dec


def e_label(l: int, idx: XiIndex) -> ModuleLabel:
    """Closed-form label of E_{i,j}; the two collision cases come out additively."""
    if not idx.in_xi(l):
        raise DomainError(f"({idx.i},{idx.j}) is not in Xi for l={l}")
    i, j = idx.i, idx.j
    lam = [Fraction(0)] * l
    if j == 0:
        if i % 2 == 0:
            lam[-1] = -HALF
        else:
            lam[l - 2] += 1
            lam[-1] = -3 * HALF
    elif i % 2 == j % 2:
        lam[j - 1] += 1
        lam[-1] += -HALF
    else:
        lam[j - 1] += 1
        lam[l - 2] += 1
        lam[-1] += -3 * HALF
    w = from_fundamental(lam, l)
    if not is_in_A(w):
        raise VerificationError(f"E_{i},{j} = {w.short()} is not in A")
    return ModuleLabel.bounded(w)


def column_labels(l: int, i: int) -> dict[ModuleLabel, XiIndex]:
    out: dict[ModuleLabel, XiIndex] = {}
    for idx in xi(l):
        if idx.i == i:
            lab = e_label(l, idx)
            if lab in out:
                raise VerificationError(f"column {i} repeats {lab}")
            out[lab] = idx
    return out


def e_table(l: int) -> dict[XiIndex, ModuleLabel]:
    return {idx: e_label(l, idx) for idx in xi(l)}


def render_table(l: int) -> str:
    """Plain text triangle: row j holds E_{i,j} for every column i."""
    table = e_table(l)
    cells = {idx: table[idx].short() for idx in table}
    width = max(len(s) for s in cells.values())
    lines = []
    for j in range(l + 1):
        row = []
        for i in range(2 * l + 1):
            idx = XiIndex(i, j)
            row.append(cells[idx].ljust(width) if idx in cells else " " * width)
        lines.append("  ".join(row).rstrip())
    return "\n".join(lines) + "\n"


# --- character level verification --------------------------------------------


def decomposition_kw_character(dec: Decomposition, depth: int) -> FormalCharacter:
    return total(
        (kw_character(lab.highest_weight, depth).scale(m) for lab, m in dec.summands),
        rank=None,
    )


def check_tensor_with_spinor(nu: Weight, depth: int) -> list:
    """Mismatches of char F(nu) * char S_+ against the summed summand characters."""
    l = nu.rank
    finite = decomposition_character(Decomposition.of([ModuleLabel.finite(nu)]))
    lhs = mul(finite, spinor_character(l, "even", depth), depth)
    rhs = decomposition_kw_character(tensor_with_spinor(nu), depth)
    return lhs.mismatches(rhs, depth)


def check_tensor_with_defining(lam: Weight, depth: int) -> list:
    lhs = mul(kw_character(lam, depth), defining_character(lam.rank), depth)
    rhs = decomposition_kw_character(tensor_with_defining(lam), depth)
    return lhs.mismatches(rhs, depth)


def check_forms(l: int, i: int, depth: int) -> list:
    lhs = mul(wedge_character(l, i), spinor_character(l, "even", depth), depth)
    rhs = decomposition_kw_character(forms_spinor_decomposition(l, i), depth)
    return lhs.mismatches(rhs, depth)


def verify_forms(l: int, depth: int, characters: bool = True) -> SuiteReport:
    report = SuiteReport(f"forms(l={l}, depth={depth})")
    for i in range(2 * l + 1):
        report.cases += 1
        computed = forms_spinor_decomposition(l, i)
        expected = set(column_labels(l, i))
        if computed.label_set() != expected:
            extra = sorted(computed.label_set() - expected)
            missing = sorted(expected - computed.label_set())
            report.fail(
                f"(l={l}, i={i}): labels differ; computed only {[str(x) for x in extra]}, "
                f"table only {[str(x) for x in missing]}"
            )
            continue
        if characters:
            bad = check_forms(l, i, depth)
            if bad:
                w, x, y = bad[0]
                report.fail(f"(l={l}, i={i}): character differs at {w.epsilon}: {x} vs {y}")
    return report


def verify_tensor_spinor(l: int, depth: int, max_total: int = 3) -> SuiteReport:
    report = SuiteReport(f"tensor-spinor(l={l}, depth={depth})")
    for nu in iter_dominant(l, max_total):
        report.cases += 1
        bad = check_tensor_with_spinor(nu, depth)
        if bad:
            w, x, y = bad[0]
            report.fail(f"(l={l}, nu={nu.short()}): character differs at {w.epsilon}: {x} vs {y}")
    return report


def verify_tensor_defining(l: int, depth: int) -> SuiteReport:
    report = SuiteReport(f"tensor-defining(l={l}, depth={depth})")
    for lab in sorted(set(e_table(l).values())):
        report.cases += 1
        bad = check_tensor_with_defining(lab.highest_weight, depth)
        if bad:
            w, x, y = bad[0]
            report.fail(f"(l={l}, lam={lab.short()}): character differs at {w.epsilon}: {x} vs {y}")
    return report
