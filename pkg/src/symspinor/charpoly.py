"""Truncated formal characters with exact integer coefficients.

A :class:`FormalCharacter` is a finite sum ``sum m_mu e^mu`` whose support
lies in the downward cone below ``top``.  ``depth`` says how far below
``top`` the coefficients are guaranteed exact (measured by simple-root
height); ``depth=None`` marks a character whose support is finite and
complete.  Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import floor
from typing import Iterator, Mapping

from .weights import (
    DomainError,
    RankError,
    Weight,
    cone_position,
    from_fundamental,
    fundamental_weight,
    is_dominant_integral,
    is_in_A,
    level,
    level_weights,
    rho,
)
from .weyl import ResourceError, integral_subgroup, positive_roots, root_vector

# Largest number of stored terms any single truncated product may hold.
MAX_TERMS = int(os.environ.get("SYMSPINOR_MAX_TERMS", "2000000"))


class TruncationError(ValueError):
    """A requested depth exceeds what the operands guarantee."""


def _min_depth(*depths):
    finite = [d for d in depths if d is not None]
    return min(finite) if finite else None


class FormalCharacter:
    """Immutable truncated formal character.

    Parameters
    ----------
    top : Weight
        Every support weight ``w`` satisfies ``top - w`` in the non-negative
        span of the simple roots (the long root may carry a half step).
    depth : int or None
        Coefficients are exact for all weights of height ``<= depth`` below
        ``top``.  ``None`` means the character is exact everywhere.
    coeffs : mapping
        Doubled epsilon coordinates to integer multiplicities.
    """

    __slots__ = ("top", "depth", "_coeffs", "_lw")

    def __init__(self, top: Weight, depth: int | None, coeffs: Mapping[tuple[int, ...], int], *, check: bool = False):
        self.top = top
        self.depth = depth
        self._lw = level_weights(top.rank)
        self._coeffs = {k: v for k, v in coeffs.items() if v}
        if depth is not None:
            cut = self._top_level - 4 * depth
            self._coeffs = {k: v for k, v in self._coeffs.items() if level(k, self._lw) >= cut}
        if check:
            self.validate()

    @property
    def _top_level(self) -> int:
        return level(self.top.doubled, self._lw)

    @property
    def rank(self) -> int:
        return self.top.rank

    def validate(self) -> None:
        for k in self._coeffs:
            if len(k) != self.rank:
                raise RankError("support weight of wrong rank")
            if cone_position(self.top, Weight(k)) is None:
                raise DomainError(f"{Weight(k).epsilon} is not below top {self.top.epsilon}")

    # --- access -------------------------------------------------------------

    def __getitem__(self, w: Weight) -> int:
        return self._coeffs.get(w.doubled, 0)

    def coeff(self, w: Weight) -> int:
        if self.depth is not None and self.height_of(w) > self.depth:
            raise TruncationError(f"weight lies below guaranteed depth {self.depth}")
        return self[w]

    def height_of(self, w: Weight) -> Fraction:
        return Fraction(self._top_level - level(w.doubled, self._lw), 4)

    def items(self) -> Iterator[tuple[Weight, int]]:
        for k, v in self._coeffs.items():
            yield Weight(k), v

    def raw(self) -> dict[tuple[int, ...], int]:
        return dict(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def mass(self) -> int:
        return sum(self._coeffs.values())

    def max_coeff(self) -> int:
        return max(self._coeffs.values(), default=0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __repr__(self) -> str:
        return f"FormalCharacter(top={self.top.epsilon}, depth={self.depth}, terms={len(self)})"

    # --- truncation and comparison ------------------------------------------

    def truncate(self, depth: int) -> "FormalCharacter":
        if self.depth is not None and depth > self.depth:
            raise TruncationError(f"cannot extend depth {self.depth} to {depth}")
        return FormalCharacter(self.top, depth, self._coeffs)

    def rebase(self, top: Weight) -> "FormalCharacter":
        """Same character viewed below a higher ``top``; depth shifts accordingly."""
        shift = cone_position(top, self.top)
        if shift is None:
            raise DomainError("new top is not above the old one")
        depth = None if self.depth is None else floor(self.depth + sum(shift))
        return FormalCharacter(top, depth, self._coeffs)

    def agrees_to(self, other: "FormalCharacter", depth: int) -> bool:
        return not self.mismatches(other, depth)

    def mismatches(self, other: "FormalCharacter", depth: int) -> list[tuple[Weight, int, int]]:
        """Weights of height ``<= depth`` below a common top where coefficients differ."""
        top = join(self.top, other.top)
        a, b = self.rebase(top), other.rebase(top)
        for ch in (a, b):
            if ch.depth is not None and ch.depth < depth:
                raise TruncationError(f"comparison depth {depth} exceeds guarantee {ch.depth}")
        cut = a._top_level - 4 * depth
        keys = {k for k in a._coeffs if level(k, a._lw) >= cut}
        keys |= {k for k in b._coeffs if level(k, b._lw) >= cut}
        out = []
        for k in sorted(keys):
            x, y = a._coeffs.get(k, 0), b._coeffs.get(k, 0)
            if x != y:
                out.append((Weight(k), x, y))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.top == other.top and self.depth == other.depth and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.top, self.depth, frozenset(self._coeffs.items())))

    # --- arithmetic ----------------------------------------------------------

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        return add(self, other)

    def scale(self, k: int) -> "FormalCharacter":
        return FormalCharacter(self.top, self.depth, {w: k * v for w, v in self._coeffs.items()})

    def __neg__(self) -> "FormalCharacter":
        return self.scale(-1)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return add(self, -other)

    def to_json(self) -> list[dict]:
        items = sorted(self._coeffs.items(), key=lambda kv: (self._top_level - level(kv[0], self._lw), kv[0]))
        return [{"weight": Weight(k).to_json(), "multiplicity": v} for k, v in items]


def join(a: Weight, b: Weight) -> Weight:
    """Least common upper bound of two weights in the cone order."""
    if a.rank != b.rank:
        raise RankError(f"rank {a.rank} vs rank {b.rank}")
    if any((x - y) % 2 for x, y in zip(a.doubled, b.doubled)):
        raise DomainError("weights differ by a non-integral vector; no common cone")
    diff = [(x - y) // 2 for x, y in zip(a.doubled, b.doubled)]
    l = a.rank
    # simple-root coordinates of a - b (last one may be a half-integer)
    c = []
    acc = 0
    for k in range(l - 1):
        acc += diff[k]
        c.append(Fraction(acc))
    c.append(Fraction(acc + diff[-1], 2))
    # raise a by max(0, -c_i) on each simple root
    lift = [max(Fraction(0), -x) for x in c]
    eps = [Fraction(0)] * l
    for k in range(l - 1):
        eps[k] += lift[k]
        eps[k + 1] -= lift[k]
    eps[l - 1] += 2 * lift[l - 1]
    return Weight(tuple(x + int(2 * e) for x, e in zip(a.doubled, eps)))


def add(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    if a.rank != b.rank:
        raise RankError(f"rank {a.rank} vs rank {b.rank}")
    top = join(a.top, b.top)
    ra, rb = a.rebase(top), b.rebase(top)
    coeffs = dict(ra._coeffs)
    for k, v in rb._coeffs.items():
        coeffs[k] = coeffs.get(k, 0) + v
    return FormalCharacter(top, _min_depth(ra.depth, rb.depth), coeffs)


def total(chars, rank: int | None = None) -> FormalCharacter:
    chars = list(chars)
    if not chars:
        if rank is None:
            raise ValueError("empty sum needs a rank")
        return FormalCharacter(Weight.zero(rank), None, {})
    out = chars[0]
    for ch in chars[1:]:
        out = add(out, ch)
    return out


def mul(a: FormalCharacter, b: FormalCharacter, result_depth: int | None = None) -> FormalCharacter:
    """Cauchy product truncated to ``result_depth`` below ``a.top + b.top``.

    Exact whenever ``result_depth`` does not exceed either operand's depth:
    each contributing pair splits the height into two non-negative parts.
    """
    if a.rank != b.rank:
        raise RankError(f"rank {a.rank} vs rank {b.rank}")
    guarantee = _min_depth(a.depth, b.depth)
    if result_depth is None:
        result_depth = guarantee
    elif guarantee is not None and result_depth > guarantee:
        raise TruncationError(f"requested depth {result_depth} exceeds guarantee {guarantee}")
    top = a.top + b.top
    lw = a._lw
    ta, tb = a._top_level, b._top_level
    # heights (times 4) of every term below its own top
    ha = sorted(((ta - level(k, lw), k, v) for k, v in a._coeffs.items()))
    hb = sorted(((tb - level(k, lw), k, v) for k, v in b._coeffs.items()))
    cap = None if result_depth is None else 4 * result_depth
    out: dict[tuple[int, ...], int] = {}
    for h1, k1, v1 in ha:
        if cap is not None and h1 > cap:
            break
        for h2, k2, v2 in hb:
            if cap is not None and h1 + h2 > cap:
                break
            key = tuple(x + y for x, y in zip(k1, k2))
            out[key] = out.get(key, 0) + v1 * v2
        if len(out) > MAX_TERMS:
            raise ResourceError(f"product exceeds {MAX_TERMS} terms")
    return FormalCharacter(top, result_depth, out)


def monomial(w: Weight, coeff: int = 1) -> FormalCharacter:
    return FormalCharacter(w, None, {w.doubled: coeff})


def trivial(l: int) -> FormalCharacter:
    return monomial(Weight.zero(l))


def weyl_denominator_inverse(l: int, depth: int, order=None) -> FormalCharacter:
    """``prod_{a > 0} (1 - e^{-a})^{-1}`` to ``depth``; coefficient at ``-b`` is the
    Kostant partition function of ``b``.

    ``order`` optionally permutes the positive roots (the result must not depend on it).
    """
    roots = positive_roots(l)
    if order is not None:
        roots = [roots[i] for i in order]
    if depth < 0:
        raise TruncationError("depth must be non-negative")
    zero = Weight.zero(l)
    lw = level_weights(l)
    cap = 4 * depth
    acc: dict[tuple[int, ...], int] = {zero.doubled: 1}
    for r in roots:
        alpha = root_vector(l, r).doubled
        step = level(alpha, lw)
        nxt: dict[tuple[int, ...], int] = {}
        for k, v in acc.items():
            h = -level(k, lw)
            cur = k
            while h <= cap:
                nxt[cur] = nxt.get(cur, 0) + v
                cur = tuple(x - y for x, y in zip(cur, alpha))
                h += step
        acc = nxt
        if len(acc) > MAX_TERMS:
            raise ResourceError(f"denominator expansion exceeds {MAX_TERMS} terms")
    return FormalCharacter(zero, depth, acc)


def _spinor_top(l: int, parity: str) -> Weight:
    if parity == "even":
        return from_fundamental([0] * (l - 1) + [Fraction(-1, 2)], l)
    if parity == "odd":
        return from_fundamental([0] * (l - 2) + [1, Fraction(-3, 2)], l)
    raise DomainError(f"parity must be 'even' or 'odd', not {parity!r}")


def spinor_character(l: int, parity: str, depth: int) -> FormalCharacter:
    """Explicit Kostant spinor character: multiplicity one at ``-1/2 - n``
    for every ``n`` in N_0^l with ``|n|`` of the given parity."""
    top = _spinor_top(l, parity)
    lw = level_weights(l)
    cap = level(top.doubled, lw) - 4 * depth
    want = 0 if parity == "even" else 1
    base = (-1,) * l
    out: dict[tuple[int, ...], int] = {}

    def rec(k: int, cur: list[int], s: int):
        if level(cur, lw) < cap:
            return
        if k == l:
            if s % 2 == want:
                out[tuple(cur)] = 1
            return
        n = 0
        while True:
            cur[k] = base[k] - 2 * n
            # lowering coordinate k only decreases the level
            if level(cur, lw) < cap:
                break
            rec(k + 1, cur, s + n)
            n += 1
        cur[k] = base[k]

    rec(0, list(base), 0)
    return FormalCharacter(top, depth, out)


def kw_numerator(lam: Weight) -> FormalCharacter:
    """``sum_{w in W_[lam]} det(w) e^{w(lam + rho) - rho}`` (finite, exact)."""
    r = rho(lam.rank)
    shifted = (lam + r).doubled
    out: dict[tuple[int, ...], int] = {}
    for w, d in integral_subgroup(lam):
        img = w.act_doubled(shifted)
        key = tuple(x - y for x, y in zip(img, r.doubled))
        out[key] = out.get(key, 0) + d
    return FormalCharacter(lam, None, out)


def kw_character(lam: Weight, depth: int) -> FormalCharacter:
    """Character of L(lam) for lam in A or dominant integral, to ``depth``."""
    if not (is_in_A(lam) or is_dominant_integral(lam)):
        raise DomainError(f"{lam.short()} is neither in A nor dominant integral")
    num = kw_numerator(lam)
    den = weyl_denominator_inverse(lam.rank, depth)
    return mul(num, den, depth)


def finite_character(weights) -> FormalCharacter:
    """Exact character of a finite multiset of weights, topped at its cone join."""
    weights = list(weights)
    out: dict[tuple[int, ...], int] = {}
    for w in weights:
        out[w.doubled] = out.get(w.doubled, 0) + 1
    top = weights[0]
    for w in weights[1:]:
        top = join(top, w)
    return FormalCharacter(top, None, out)


def defining_character(l: int) -> FormalCharacter:
    from .weights import epsilon

    ws = [epsilon(i, l) for i in range(1, l + 1)]
    ws += [-w for w in ws]
    ch = finite_character(ws)
    return ch.rebase(fundamental_weight(1, l)) if ch.top != fundamental_weight(1, l) else ch
