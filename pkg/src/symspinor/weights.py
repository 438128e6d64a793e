"""Exact arithmetic on the weight lattice of the symplectic algebra sp(2l).

Weights live in (1/2)Z^l and are stored with doubled epsilon coordinates, so
entry ``k`` of ``Weight.doubled`` holds ``2*a_k`` for the weight
``sum_k a_k eps_k``.  Fundamental weights are ``w_i = eps_1 + ... + eps_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class RankError(ValueError):
    """Operands disagree on the rank of the ambient algebra."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def _half(x) -> Fraction:
    """Parse an exact half-integer from int, Fraction or a string like '-3/2'."""
    q = Fraction(x)
    if (2 * q).denominator != 1:
        raise DomainError(f"{x!r} is not a half-integer")
    return q


def format_half(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, order=True)
class Weight:
    """A weight of C_l in doubled epsilon coordinates."""

    doubled: tuple[int, ...]

    def __post_init__(self):
        if len(self.doubled) < 1:
            raise RankError("weights need rank >= 1")
        if not all(isinstance(x, int) for x in self.doubled):
            raise TypeError("doubled coordinates must be ints")

    @property
    def rank(self) -> int:
        return len(self.doubled)

    @classmethod
    def from_epsilon(cls, coords: Iterable) -> "Weight":
        return cls(tuple(int(2 * _half(c)) for c in coords))

    @classmethod
    def zero(cls, l: int) -> "Weight":
        return cls((0,) * l)

    @property
    def epsilon(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def _check(self, other: "Weight") -> None:
        if self.rank != other.rank:
            raise RankError(f"rank {self.rank} vs rank {other.rank}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.doubled))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.doubled))

    def fundamental(self) -> tuple[Fraction, ...]:
        return fundamental_coords(self)

    def short(self) -> str:
        """The ``(l1 l2 ... ll)`` shorthand in fundamental coordinates."""
        return "(" + " ".join(format_half(c) for c in self.fundamental()) + ")"

    def __str__(self) -> str:
        return self.short()

    def to_json(self) -> dict:
        return {
            "fundamental": [format_half(c) for c in self.fundamental()],
            "epsilon": [format_half(c) for c in self.epsilon],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Weight":
        w = cls.from_epsilon(data["epsilon"])
        if "fundamental" in data:
            if from_fundamental(data["fundamental"], w.rank) != w:
                raise DomainError("fundamental and epsilon coordinates disagree")
        return w


def epsilon(i: int, l: int) -> Weight:
    """The basis vector eps_i (1-based)."""
    if not 1 <= i <= l:
        raise DomainError(f"eps_{i} does not exist in rank {l}")
    d = [0] * l
    d[i - 1] = 2
    return Weight(tuple(d))


def fundamental_weight(i: int, l: int) -> Weight:
    """w_i = eps_1 + ... + eps_i; w_0 is the zero weight."""
    if not 0 <= i <= l:
        raise DomainError(f"w_{i} does not exist in rank {l}")
    return Weight(tuple(2 if k < i else 0 for k in range(l)))


def rho(l: int) -> Weight:
    return Weight(tuple(2 * (l - k) for k in range(l)))


def from_fundamental(coeffs: Sequence, l: int) -> Weight:
    """Return ``sum_i coeffs[i] w_i``, i.e. ``a_k = sum_{i>=k} coeffs[i]``."""
    if len(coeffs) != l:
        raise RankError(f"expected {l} fundamental coordinates, got {len(coeffs)}")
    lam = [_half(c) for c in coeffs]
    out = []
    acc = Fraction(0)
    for c in reversed(lam):
        acc += c
        out.append(int(2 * acc))
    return Weight(tuple(reversed(out)))


def fundamental_coords(w: Weight) -> tuple[Fraction, ...]:
    a = w.epsilon
    l = w.rank
    return tuple(a[i] - a[i + 1] for i in range(l - 1)) + (a[l - 1],)


def is_dominant_integral(w: Weight) -> bool:
    return all(c >= 0 and c.denominator == 1 for c in fundamental_coords(w))


def a_condition(lam: Sequence[Fraction]) -> bool:
    """The three clauses defining the set A, on fundamental coordinates."""
    l = len(lam)
    if l < 2:
        return False
    head_ok = all(c.denominator == 1 and c >= 0 for c in lam[:-1])
    tail_ok = lam[-1].denominator == 2
    return head_ok and tail_ok and lam[-2] + 2 * lam[-1] + 3 > 0


def is_in_A(w: Weight) -> bool:
    """Highest weights of the bounded-multiplicity (higher spinor) modules."""
    return a_condition(fundamental_coords(w))


# Simple roots: alpha_i = eps_i - eps_{i+1} (i < l), alpha_l = 2 eps_l.
def simple_roots(l: int) -> list[Weight]:
    out = []
    for i in range(1, l):
        out.append(epsilon(i, l) - epsilon(i + 1, l))
    out.append(epsilon(l, l).scale(2))
    return out


def cone_position(top: Weight, w: Weight) -> tuple[Fraction, ...] | None:
    """Coefficients of ``top - w`` on the simple roots, allowing half steps.

    Returns ``None`` unless ``top - w`` has integral epsilon coordinates and
    every coefficient is non-negative.  Only the coefficient of the long root
    can be a half-integer.
    """
    top._check(w)
    diff = [t - x for t, x in zip(top.doubled, w.doubled)]
    if any(d % 2 for d in diff):
        return None
    b = [d // 2 for d in diff]
    l = len(b)
    c: list[Fraction] = []
    acc = 0
    for k in range(l - 1):
        acc += b[k]
        c.append(Fraction(acc))
    c.append(Fraction(acc + b[l - 1], 2))
    if any(x < 0 for x in c):
        return None
    return tuple(c)


def cone_coords(top: Weight, w: Weight) -> tuple[int, ...] | None:
    """Non-negative integer coordinates of ``top - w`` in simple roots, or None."""
    c = cone_position(top, w)
    if c is None or any(x.denominator != 1 for x in c):
        return None
    return tuple(int(x) for x in c)


def depth_below(top: Weight, w: Weight) -> int | None:
    c = cone_coords(top, w)
    return None if c is None else sum(c)


def level_weights(l: int) -> tuple[int, ...]:
    """Integer functional ``L`` on doubled coordinates with height = dL / 4.

    For ``top - w = sum c_i alpha_i`` we have
    ``sum c_i = (L(top) - L(w)) / 4``.
    """
    return tuple(2 * (l - k) - 1 for k in range(l))


def level(doubled: Sequence[int], lw: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(doubled, lw))


def height(top: Weight, w: Weight) -> Fraction:
    """Sum of simple-root coefficients of ``top - w`` (may be negative)."""
    lw = level_weights(top.rank)
    return Fraction(level(top.doubled, lw) - level(w.doubled, lw), 4)


def dominant_rep(doubled: Sequence[int]) -> tuple[int, ...]:
    """The dominant element of the W(C_l)-orbit (sorted absolute values)."""
    return tuple(sorted((abs(x) for x in doubled), reverse=True))


def iter_A(l: int, max_head: int, tail_range: Iterable[Fraction]) -> Iterator[Weight]:
    """Weights of A with ``sum_{i<l} lam_i <= max_head`` and ``lam_l`` in tail_range."""
    from itertools import product

    tails = [_half(t) for t in tail_range]
    for head in product(range(max_head + 1), repeat=l - 1):
        if sum(head) > max_head:
            continue
        for t in tails:
            lam = [Fraction(h) for h in head] + [t]
            if a_condition(lam):
                yield from_fundamental(lam, l)


def iter_dominant(l: int, total: int) -> Iterator[Weight]:
    """Dominant integral weights with ``sum lam_i <= total``."""
    from itertools import product

    for lam in product(range(total + 1), repeat=l):
        if sum(lam) <= total:
            yield from_fundamental(lam, l)
