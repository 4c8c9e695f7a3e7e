"""Permutations of bell positions and rows of bells.

Conventions used throughout the package:

* a :class:`Perm` acts on *positions* ``1..n``;
* products read left to right: ``p * q`` means "first ``p``, then ``q``",
  so ``(p * q)(i) == q(p(i))``;
* a permutation moves the bell standing in position ``i`` to position
  ``p(i)``.
"""

from __future__ import annotations

import math
from functools import reduce
from typing import Iterable, Sequence

from .errors import DegreeError, PointError, RinglabError, RowError

__all__ = [
    "Perm",
    "Row",
    "identity",
    "compose",
    "inverse",
    "apply_to_row",
    "order",
    "parity",
    "is_transition",
    "common_fixed_point",
    "rounds",
]


class Perm:
    """An immutable permutation of ``{1..degree}``.

    Internally the images are stored 0-based in ``_img``; the public API is
    1-based.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Iterable[int]):
        img = tuple(int(i) - 1 for i in images)
        n = len(img)
        if n < 1:
            raise RinglabError("invalid-degree: a permutation needs degree >= 1")
        if sorted(img) != list(range(n)):
            raise RinglabError(f"not a bijection of 1..{n}: {[i + 1 for i in img]}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _from_zero_based(cls, img: tuple[int, ...]) -> Perm:
        p = cls.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Perm:
        """Product of (possibly overlapping) cycles, composed left to right."""
        result = identity(n)
        for cyc in cycles:
            img = list(range(n))
            bad = [a for a in cyc if not 1 <= a <= n]
            if bad:
                raise PointError(f"point {bad[0]} outside 1..{n}")
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
            result = result * cls._from_zero_based(tuple(img))
        return result

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based images: ``images[i - 1] == self(i)``."""
        return tuple(i + 1 for i in self._img)

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def __invert__(self) -> Perm:
        return inverse(self)

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return inverse(self) ** (-k)
        result = identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self._img == other._img

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .notation import format_cycles

        return f"Perm({format_cycles(self)!r}, n={self.degree})"

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, sorted by that point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def fixed_points(self) -> frozenset[int]:
        return frozenset(i + 1 for i, j in enumerate(self._img) if i == j)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))


class Row(tuple):
    """An arrangement of the bells ``1..n``; ``row[k]`` is the bell in position ``k + 1``."""

    def __new__(cls, bells: Iterable[int]):
        bells = tuple(int(b) for b in bells)
        if sorted(bells) != list(range(1, len(bells) + 1)):
            raise RowError(f"not an arrangement of bells 1..{len(bells)}: {bells}")
        return super().__new__(cls, bells)

    @classmethod
    def _trusted(cls, bells: tuple[int, ...]) -> Row:
        return super().__new__(cls, bells)

    @property
    def stage(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return " ".join(map(str, self))


def rounds(n: int) -> Row:
    return Row._trusted(tuple(range(1, n + 1)))


def identity(n: int) -> Perm:
    if n < 1:
        raise RinglabError("invalid-degree: a permutation needs degree >= 1")
    return Perm._from_zero_based(tuple(range(n)))


def _check_degrees(p: Perm, q: Perm) -> None:
    if p.degree != q.degree:
        raise DegreeError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Perm, q: Perm) -> Perm:
    """First ``p``, then ``q``."""
    _check_degrees(p, q)
    qi = q._img
    return Perm._from_zero_based(tuple(qi[i] for i in p._img))


def product(perms: Iterable[Perm], n: int) -> Perm:
    return reduce(compose, perms, identity(n))


def inverse(p: Perm) -> Perm:
    img = [0] * p.degree
    for i, j in enumerate(p._img):
        img[j] = i
    return Perm._from_zero_based(tuple(img))


def apply_to_row(p: Perm, row: Sequence[int]) -> Row:
    """Move the bell in position ``i`` to position ``p(i)``."""
    if p.degree != len(row):
        raise DegreeError(f"degree mismatch: perm {p.degree} vs row {len(row)}")
    out = [0] * p.degree
    for i, j in enumerate(p._img):
        out[j] = row[i]
    return Row._trusted(tuple(out))


def order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in p.cycles(include_fixed=True)))


def parity(p: Perm) -> str:
    """``"even"`` or ``"odd"``."""
    swaps = sum(len(c) - 1 for c in p.cycles())
    return "odd" if swaps % 2 else "even"


def is_even(p: Perm) -> bool:
    return parity(p) == "even"


def is_transition(p: Perm) -> bool:
    """True for a non-empty product of disjoint adjacent swaps (rule 3)."""
    moved = False
    img = p._img
    for i, j in enumerate(img):
        if i == j:
            continue
        if abs(i - j) != 1 or img[j] != i:
            return False
        moved = True
    return moved


def is_adjacent_swap(p: Perm) -> bool:
    return is_transition(p) and len(p.cycles()) == 1


def common_fixed_point(p: Perm, q: Perm) -> bool:
    _check_degrees(p, q)
    return any(i == a and i == b for i, (a, b) in enumerate(zip(p._img, q._img)))


def swaps(n: int, *pairs: tuple[int, int]) -> Perm:
    """Product of the given disjoint swaps of positions."""
    img = list(range(n))
    for a, b in pairs:
        img[a - 1], img[b - 1] = b - 1, a - 1
    return Perm._from_zero_based(tuple(img))
