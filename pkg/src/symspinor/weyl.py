"""The Weyl group of C_l as signed permutations of the epsilon basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Iterator

from .weights import Weight, rho

MAX_ENUM_RANK = 8


class ResourceError(RuntimeError):
    """A computation would exceed a configured size guard."""


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation acting by ``(w.v)_k = signs[k] * v[perm^-1(k)]``.

    ``perm`` is 0-based: ``perm[j]`` is the image of index ``j``.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, l: int) -> "WeylElement":
        return cls(tuple(range(l)), (1,) * l)

    @property
    def rank(self) -> int:
        return len(self.perm)

    @property
    def det(self) -> int:
        d = _perm_sign(self.perm)
        for s in self.signs:
            d *= s
        return d

    def _inverse_perm(self) -> tuple[int, ...]:
        inv = [0] * len(self.perm)
        for j, pj in enumerate(self.perm):
            inv[pj] = j
        return tuple(inv)

    def act_doubled(self, v: tuple[int, ...]) -> tuple[int, ...]:
        inv = self._inverse_perm()
        return tuple(self.signs[k] * v[inv[k]] for k in range(len(v)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other).v == self.(other.v)
        inv = self._inverse_perm()
        perm = tuple(self.perm[other.perm[j]] for j in range(self.rank))
        signs = tuple(self.signs[k] * other.signs[inv[k]] for k in range(self.rank))
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        inv = self._inverse_perm()
        signs = tuple(self.signs[self.perm[j]] for j in range(self.rank))
        return WeylElement(inv, signs)


def act(w: WeylElement, v: Weight) -> Weight:
    if w.rank != v.rank:
        from .weights import RankError

        raise RankError(f"rank {w.rank} element acting on rank {v.rank} weight")
    return Weight(w.act_doubled(v.doubled))


def enumerate_group(l: int) -> Iterator[tuple[WeylElement, int]]:
    """Yield every element of W(C_l) with its determinant."""
    if l > MAX_ENUM_RANK:
        raise ResourceError(f"W(C_{l}) has {2**l}*{l}! elements; guard is rank {MAX_ENUM_RANK}")
    for perm in permutations(range(l)):
        for signs in product((1, -1), repeat=l):
            w = WeylElement(perm, signs)
            yield w, w.det


def reflection(l: int, kind: str, i: int, j: int | None = None) -> WeylElement:
    """Reflection in a positive root; ``kind`` is '-', '+' or 'long' (1-based indices)."""
    perm = list(range(l))
    signs = [1] * l
    if kind == "long":
        signs[i - 1] = -1
    else:
        assert j is not None
        perm[i - 1], perm[j - 1] = j - 1, i - 1
        if kind == "+":
            signs[i - 1] = signs[j - 1] = -1
    return WeylElement(tuple(perm), tuple(signs))


def positive_roots(l: int) -> list[tuple[str, int, int | None]]:
    """The l^2 positive roots of C_l as (kind, i, j) tags."""
    out: list[tuple[str, int, int | None]] = []
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            out.append(("-", i, j))
            out.append(("+", i, j))
        out.append(("long", i, None))
    return out


def root_vector(l: int, root: tuple[str, int, int | None]) -> Weight:
    kind, i, j = root
    d = [0] * l
    if kind == "long":
        d[i - 1] = 4
    else:
        d[i - 1] = 2
        d[j - 1] = -2 if kind == "-" else 2
    return Weight(tuple(d))


def coroot_pairing(v: Weight, root: tuple[str, int, int | None]) -> Fraction:
    kind, i, j = root
    a = v.epsilon
    if kind == "long":
        return a[i - 1]
    if kind == "-":
        return a[i - 1] - a[j - 1]
    return a[i - 1] + a[j - 1]


def integral_subgroup(lam: Weight) -> list[tuple[WeylElement, int]]:
    """Subgroup generated by reflections s_a with <lam + rho, a^vee> integral."""
    l = lam.rank
    shifted = lam + rho(l)
    gens = [
        reflection(l, *r)
        for r in positive_roots(l)
        if coroot_pairing(shifted, r).denominator == 1
    ]
    e = WeylElement.identity(l)
    seen = {e}
    frontier = [e]
    limit = 2**l
    for k in range(2, l + 1):
        limit *= k
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise AssertionError("closure escaped W(C_l)")
        frontier = nxt
    return sorted(((w, w.det) for w in seen), key=lambda t: (t[0].perm, t[0].signs))
