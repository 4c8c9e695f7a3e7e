"""Generators for the classical methods: plain changes, Plain Hunt, Plain Bob,
Grandsire and Christ Church Dublin Differential Doubles (CCDD)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import CompositionError, ResourceError, StageError
from .notation import LEAD_LABELS, CompositionFile, MethodFile, format_cycles
from .perm import Perm, Row, apply_to_row, identity, order, product, rounds, swaps

EAGER_ROW_LIMIT = 1_000_000
SJT_CAP = 10


@dataclass(frozen=True, eq=False)
class Method:
    """A start row plus a sequence of transitions.

    ``labels`` optionally names each transition (``"X"``, ``"Y"``, ...), which is
    how words such as ``X,Y,X,Z`` are recovered.
    """

    stage: int
    transitions: tuple[Perm, ...]
    start: Row = None  # type: ignore[assignment]
    labels: tuple[str, ...] | None = None
    name: str = ""
    _rows: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.start is None:
            object.__setattr__(self, "start", rounds(self.stage))
        if len(self.start) != self.stage:
            raise StageError(f"start row has {len(self.start)} bells, stage is {self.stage}")
        for i, t in enumerate(self.transitions):
            if t.degree != self.stage:
                raise StageError(f"transition {i} has degree {t.degree}, stage is {self.stage}")
        if self.labels is not None and len(self.labels) != len(self.transitions):
            raise ValueError("labels and transitions differ in length")

    def __len__(self) -> int:
        """Number of rows."""
        return len(self.transitions) + 1

    def iter_rows(self) -> Iterator[Row]:
        row = self.start
        yield row
        for t in self.transitions:
            row = apply_to_row(t, row)
            yield row

    @property
    def rows(self) -> list[Row]:
        if not self._rows:
            if len(self) > EAGER_ROW_LIMIT:
                raise ResourceError(f"{len(self)} rows exceeds the eager limit; use iter_rows()")
            self._rows.extend(self.iter_rows())
        return self._rows

    def word(self) -> list[str]:
        if self.labels is None:
            return [format_cycles(t) for t in self.transitions]
        return list(self.labels)

    def to_file(self) -> MethodFile:
        start = None if self.start == rounds(self.stage) else " ".join(map(str, self.start))
        return MethodFile(self.stage, self.name or f"method-{self.stage}",
                          [format_cycles(t) for t in self.transitions], start)

    @classmethod
    def from_file(cls, mf: MethodFile) -> Method:
        return cls(mf.stage, tuple(mf.perms()), mf.start(), name=mf.name)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], name: str = "") -> Method:
        """Recover the transitions between consecutive rows."""
        if not rows:
            raise StageError("no rows given")
        rows = [Row(r) for r in rows]
        n = len(rows[0])
        trans = []
        for i, (r, s) in enumerate(zip(rows, rows[1:])):
            if len(s) != n:
                raise StageError(f"row {i + 1} has {len(s)} bells, expected {n}")
            where = {b: j for j, b in enumerate(s)}
            trans.append(Perm._from_zero_based(tuple(where[b] for b in r)))
        m = cls(n, tuple(trans), rows[0], name=name)
        m._rows.extend(rows)
        return m


def _method(n: int, word: Sequence[str], table: dict[str, Perm], name: str) -> Method:
    return Method(n, tuple(table[s] for s in word), labels=tuple(word), name=name)


# -- plain changes ---------------------------------------------------------

def sjt_swaps(n: int) -> Iterator[int]:
    """Yield the ``n! - 1`` swap positions ``k`` (swap places ``k, k+1``) of plain changes.

    Directed-marker form: bell 1 is the most active, every bell starts
    travelling right, and at each step the lowest-numbered bell whose
    neighbour in its direction is a higher-numbered bell moves.
    """
    row = list(range(1, n + 1))
    pos = list(range(-1, n))  # pos[b] = 0-based place of bell b
    right = [True] * (n + 1)
    while True:
        for b in range(1, n + 1):
            p = pos[b]
            q = p + 1 if right[b] else p - 1
            if 0 <= q < n and row[q] > b:
                break
        else:
            return
        other = row[q]
        row[p], row[q] = other, b
        pos[b], pos[other] = q, p
        for c in range(1, b):
            right[c] = not right[c]
        yield min(p, q) + 1


def sjt_extent(n: int, cap: int = SJT_CAP) -> Method:
    """Plain changes on ``n`` bells: all ``n!`` rows by adjacent swaps, closed by rounds.

    For ``n == 1`` the single change is the identity, so the extent still
    opens and closes with rounds.
    """
    if n < 1:
        raise StageError("stage must be >= 1")
    if n > cap:
        raise ResourceError(f"stage {n} exceeds the plain-changes cap {cap}")
    if n == 1:
        return Method(1, (identity(1),), labels=("I",), name="plain-changes-1")
    letters = [_swap_letter(k) for k in range(1, n)]
    table = [swaps(n, (k, k + 1)) for k in range(1, n)]
    ks = list(sjt_swaps(n))
    # the last arrangement returns to rounds by one more adjacent swap
    last = _last_row_after(n, ks)
    closing = next(k for k in range(1, n) if last[k - 1] == k + 1 and last[k] == k)
    ks.append(closing)
    return Method(n, tuple(table[k - 1] for k in ks), labels=tuple(letters[k - 1] for k in ks),
                  name=f"plain-changes-{n}")


def _last_row_after(n: int, ks: Sequence[int]) -> list[int]:
    row = list(range(1, n + 1))
    for k in ks:
        row[k - 1], row[k] = row[k], row[k - 1]
    return row


def _swap_letter(k: int) -> str:
    # A=(1 2), B=(2 3), C=(3 4), ...
    return chr(ord("A") + k - 1) if k <= 26 else f"s{k}"


# -- hunting ---------------------------------------------------------------

def hunting_pair(n: int) -> tuple[Perm, Perm]:
    """``X = (1 2)(3 4)...`` and ``Y = (2 3)(4 5)...`` on ``n`` bells."""
    x = swaps(n, *[(i, i + 1) for i in range(1, n, 2)])
    y = swaps(n, *[(i, i + 1) for i in range(2, n, 2)])
    return x, y


def plain_hunt(n: int) -> Method:
    if n < 3:
        raise StageError("Plain Hunt needs at least 3 bells")
    x, y = hunting_pair(n)
    return _method(n, ["X", "Y"] * n, {"X": x, "Y": y}, f"plain-hunt-{n}")


# -- lead-based methods ----------------------------------------------------

@dataclass(frozen=True)
class LeadWords:
    """Transition table and the plain/bob lead words of a lead-based method."""

    stage: int
    table: dict[str, Perm]
    plain: tuple[str, ...]
    bob: tuple[str, ...]

    def perms(self, word: Sequence[str]) -> tuple[Perm, ...]:
        return tuple(self.table[s] for s in word)


def plain_bob_words(n: int) -> LeadWords:
    """Plain Bob: ``(X,Y)`` hunting with lead end ``Z`` (plain) or ``W`` (bob).

    ``Z`` swaps ``(3 4)(5 6)...`` leaving 1, 2 (and ``n`` when odd) fixed; ``W``
    swaps ``(2 3)(5 6)(7 8)...`` leaving 1, 4 (and ``n`` when odd) fixed.
    """
    if n < 4:
        raise StageError("Plain Bob needs at least 4 bells")
    x, y = hunting_pair(n)
    top = n if n % 2 == 0 else n - 1
    z = swaps(n, *[(i, i + 1) for i in range(3, top, 2)])
    w = swaps(n, (2, 3), *[(i, i + 1) for i in range(5, top, 2)])
    head = ("X", "Y") * (n - 1) + ("X",)
    return LeadWords(n, {"X": x, "Y": y, "Z": z, "W": w}, head + ("Z",), head + ("W",))


def grandsire_words(n: int) -> LeadWords:
    """Grandsire: each lead opens with ``Z``; a bob puts ``Z`` in place of the last ``X``."""
    if n < 5 or n % 2 == 0:
        raise StageError("Grandsire needs an odd number of bells, at least 5")
    x, y = hunting_pair(n)
    z = swaps(n, (1, 2), *[(i, i + 1) for i in range(4, n, 2)])
    plain = ("Z", "Y") + ("X", "Y") * (n - 1)
    bob = ("Z", "Y") + ("X", "Y") * (n - 2) + ("Z", "Y")
    return LeadWords(n, {"X": x, "Y": y, "Z": z}, plain, bob)


def ccdd_words() -> LeadWords:
    """CCDD on 5 bells: Plain Bob Doubles shape with lead end ``(1 2)``, bob ``(3 4)``."""
    x, y = hunting_pair(5)
    head = ("X", "Y") * 4 + ("X",)
    return LeadWords(5, {"X": x, "Y": y, "Z": swaps(5, (1, 2)), "W": swaps(5, (3, 4))},
                     head + ("Z",), head + ("W",))


def _course(words: LeadWords, leads: int, name: str) -> Method:
    return _method(words.stage, list(words.plain) * leads, words.table, name)


def plain_bob_course(n: int) -> Method:
    words = plain_bob_words(n)
    return _course(words, n - 1, f"plain-bob-{n}")


def grandsire_course(n: int) -> Method:
    words = grandsire_words(n)
    lead_head = product(words.perms(words.plain), n)
    return _course(words, order(lead_head), f"grandsire-{n}")


def ccdd_course() -> Method:
    words = ccdd_words()
    lead_head = product(words.perms(words.plain), 5)
    return _course(words, order(lead_head), "ccdd-5")


def expand_leads(scheme, comp: CompositionFile | Sequence[str]) -> Method:
    """Concatenate plain (``P``) and bob (``B``) lead words, starting from rounds.

    ``scheme`` is anything with ``stage``, ``table``, ``plain_word`` and
    ``bob_word`` (see :class:`ringlab.leads.LeadScheme`).
    """
    labels = comp.leads if isinstance(comp, CompositionFile) else list(comp)
    word: list[str] = []
    for i, lab in enumerate(labels):
        if lab == "P":
            word.extend(scheme.plain_word)
        elif lab == "B":
            word.extend(scheme.bob_word)
        else:
            raise CompositionError(f"lead {i}: unknown label {lab!r}; expected one of {LEAD_LABELS}")
    return _method(scheme.stage, word, scheme.table, getattr(scheme, "name", ""))


def extent_size(n: int) -> int:
    return math.factorial(n)
