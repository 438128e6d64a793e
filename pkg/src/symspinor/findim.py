"""Finite-dimensional oracles and the wedge-power decomposition of V."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .charpoly import FormalCharacter, total
from .weights import (
    DomainError,
    Weight,
    dominant_rep,
    format_half,
    from_fundamental,
    fundamental_weight,
    is_dominant_integral,
    is_in_A,
    rho,
)
from .weyl import ResourceError, coroot_pairing, positive_roots, root_vector

MAX_DIMENSION = int(os.environ.get("SYMSPINOR_MAX_DIMENSION", str(10**6)))

FINITE = "Finite"
BOUNDED = "Bounded"


class VerificationError(AssertionError):
    """An independent oracle disagreed with a computed decomposition."""


@dataclass(frozen=True, order=True)
class ModuleLabel:
    """Isomorphism class of an irreducible: F(lam) or a higher spinor module L(lam)."""

    family: str
    highest_weight: Weight

    def __post_init__(self):
        if self.family == FINITE:
            if not is_dominant_integral(self.highest_weight):
                raise DomainError(f"F{self.highest_weight.short()} needs a dominant integral weight")
        elif self.family == BOUNDED:
            if not is_in_A(self.highest_weight):
                raise DomainError(f"L{self.highest_weight.short()} is not a higher spinor module")
        else:
            raise DomainError(f"unknown family {self.family!r}")

    @classmethod
    def finite(cls, lam: Weight) -> "ModuleLabel":
        return cls(FINITE, lam)

    @classmethod
    def bounded(cls, lam: Weight) -> "ModuleLabel":
        return cls(BOUNDED, lam)

    def __str__(self) -> str:
        prefix = "F" if self.family == FINITE else "L"
        return prefix + self.highest_weight.short()

    def short(self) -> str:
        return self.highest_weight.short()


@dataclass(frozen=True)
class Decomposition:
    """A multiset of module labels."""

    summands: tuple[tuple[ModuleLabel, int], ...] = field(default=())

    def __post_init__(self):
        if any(m <= 0 for _, m in self.summands):
            raise ValueError("multiplicities must be positive")

    @classmethod
    def of(cls, labels: Iterable[ModuleLabel]) -> "Decomposition":
        counts = Counter(labels)
        return cls(tuple(sorted(counts.items())))

    def counter(self) -> Counter:
        return Counter(dict(self.summands))

    def labels(self) -> list[ModuleLabel]:
        return [lab for lab, _ in self.summands]

    def label_set(self) -> frozenset[ModuleLabel]:
        return frozenset(self.labels())

    def __len__(self) -> int:
        return sum(m for _, m in self.summands)

    def __iter__(self) -> Iterator[ModuleLabel]:
        for lab, m in self.summands:
            for _ in range(m):
                yield lab

    def __add__(self, other: "Decomposition") -> "Decomposition":
        c = self.counter() + other.counter()
        return Decomposition(tuple(sorted(c.items())))

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for _, m in self.summands)

    def to_json(self) -> list[dict]:
        return [
            {
                "family": lab.family,
                "fundamental_coords": [format_half(c) for c in lab.highest_weight.fundamental()],
                "multiplicity": m,
            }
            for lab, m in self.summands
        ]

    @classmethod
    def from_json(cls, data: list[dict], l: int) -> "Decomposition":
        out = []
        for item in data:
            lam = from_fundamental(item["fundamental_coords"], l)
            out.append((ModuleLabel(item["family"], lam), int(item["multiplicity"])))
        return cls(tuple(sorted(out)))

    def __str__(self) -> str:
        parts = []
        for lab, m in self.summands:
            parts.append(str(lab) if m == 1 else f"{m}{lab}")
        return " + ".join(parts) if parts else "0"


def weyl_dimension(lam: Weight) -> int:
    if not is_dominant_integral(lam):
        raise DomainError(f"{lam.short()} is not dominant integral")
    l = lam.rank
    r = rho(l)
    shifted = lam + r
    num = Fraction(1)
    for root in positive_roots(l):
        num *= coroot_pairing(shifted, root) / coroot_pairing(r, root)
    assert num.denominator == 1
    return int(num)


def _dot(x: tuple[int, ...], y: tuple[int, ...]) -> int:
    return sum(a * b for a, b in zip(x, y))


def _dominant_weights_below(lam: Weight) -> list[tuple[int, ...]]:
    """Dominant weights mu with lam - mu in the positive root cone (doubled coords)."""
    l = lam.rank
    a = [x // 2 for x in lam.doubled]
    out = []

    def rec(k: int, prefix: list[int], upper: int):
        if k == l:
            diff = [x - y for x, y in zip(a, prefix)]
            partial = 0
            for d in diff[:-1]:
                partial += d
                if partial < 0:
                    return
            s = sum(diff)
            if s < 0 or s % 2:
                return
            out.append(tuple(2 * x for x in prefix))
            return
        for v in range(upper, -1, -1):
            prefix.append(v)
            # partial sums of lam - mu must stay non-negative
            if sum(a[: k + 1]) - sum(prefix) >= 0 or k == l - 1:
                rec(k + 1, prefix, v)
            prefix.pop()

    rec(0, [], a[0])
    return out


def freudenthal_multiplicities(lam: Weight) -> FormalCharacter:
    """Exact character of F(lam) by Freudenthal's recursion on dominant weights."""
    dim = weyl_dimension(lam)
    if dim > MAX_DIMENSION:
        raise ResourceError(f"dim F{lam.short()} = {dim} exceeds guard {MAX_DIMENSION}")
    l = lam.rank
    roots = [root_vector(l, r).doubled for r in positive_roots(l)]
    r2 = rho(l).doubled
    top = tuple(x + y for x, y in zip(lam.doubled, r2))
    top_norm = _dot(top, top)
    doms = _dominant_weights_below(lam)
    # process from the top down: higher weights have larger height
    from .weights import level, level_weights

    lw = level_weights(l)
    doms.sort(key=lambda d: -level(d, lw))
    dom_set = set(doms)
    mult: dict[tuple[int, ...], int] = {}

    def m(v: tuple[int, ...]) -> int:
        rep = dominant_rep(v)
        return mult.get(rep, 0) if rep in dom_set else 0

    for mu in doms:
        if mu == lam.doubled:
            mult[mu] = 1
            continue
        shifted = tuple(x + y for x, y in zip(mu, r2))
        denom = top_norm - _dot(shifted, shifted)
        acc = 0
        for alpha in roots:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(mu, alpha))
                if dominant_rep(v) not in dom_set:
                    # weights of F(lam) along a root string form an unbroken chain
                    break
                acc += m(v) * _dot(v, alpha)
                k += 1
        value = Fraction(2 * acc, denom)
        assert value.denominator == 1, (mu, value)
        mult[mu] = int(value)
    coeffs: dict[tuple[int, ...], int] = {}
    for mu, mval in mult.items():
        if mval == 0:
            continue
        for w in _orbit(mu):
            coeffs[w] = mval
    ch = FormalCharacter(lam, None, coeffs)
    assert ch.mass() == dim, (lam, ch.mass(), dim)
    return ch


def _orbit(mu: tuple[int, ...]) -> set[tuple[int, ...]]:
    from itertools import permutations, product

    out = set()
    for perm in set(permutations(mu)):
        nz = [i for i, x in enumerate(perm) if x]
        for signs in product((1, -1), repeat=len(nz)):
            v = list(perm)
            for i, s in zip(nz, signs):
                v[i] = s * v[i]
            out.add(tuple(v))
    return out


def wedge_character(l: int, i: int) -> FormalCharacter:
    """Character of the i-th exterior power of V (weights +-eps_k)."""
    if not 0 <= i <= 2 * l:
        raise DomainError(f"wedge degree {i} outside 0..{2 * l}")
    basis = [tuple(2 if k == j else 0 for k in range(l)) for j in range(l)]
    basis += [tuple(-x for x in b) for b in basis]
    counts: Counter = Counter()
    for subset in combinations(range(2 * l), i):
        w = tuple(sum(basis[s][k] for s in subset) for k in range(l))
        counts[w] += 1
    top = fundamental_weight(min(i, 2 * l - i), l)
    return FormalCharacter(top, None, dict(counts), check=True)


def wedge_decomposition(l: int, i: int) -> Decomposition:
    if not 0 <= i <= 2 * l:
        raise DomainError(f"wedge degree {i} outside 0..{2 * l}")
    k = i if i <= l else 2 * l - i
    return Decomposition.of(ModuleLabel.finite(fundamental_weight(k - 2 * p, l)) for p in range(k // 2 + 1))


@lru_cache(maxsize=None)
def _cached_freudenthal(lam: Weight) -> FormalCharacter:
    return freudenthal_multiplicities(lam)


def decomposition_character(dec: Decomposition) -> FormalCharacter:
    """Exact character of a finite decomposition (Freudenthal on each summand)."""
    chars = []
    for lab, mcount in dec.summands:
        if lab.family != FINITE:
            raise DomainError("decomposition_character needs finite summands")
        chars.append(_cached_freudenthal(lab.highest_weight).scale(mcount))
    return total(chars)


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "passed": self.ok,
            "first_failure": self.failures[0] if self.failures else None,
            "failures": self.failures,
            "notes": self.notes,
        }


def verify_wedge(l: int) -> SuiteReport:
    report = SuiteReport(f"wedge(l={l})")
    for i in range(2 * l + 1):
        report.cases += 1
        dec = wedge_decomposition(l, i)
        dims = sum(weyl_dimension(lab.highest_weight) * m for lab, m in dec.summands)
        if dims != comb(2 * l, i):
            report.fail(f"(l={l}, i={i}): dimensions sum to {dims}, expected {comb(2 * l, i)}")
            continue
        lhs = wedge_character(l, i)
        rhs = decomposition_character(dec)
        if lhs.raw() != rhs.raw():
            report.fail(f"(l={l}, i={i}): Freudenthal characters differ from the wedge character")
    return report

