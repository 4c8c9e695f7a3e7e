"""Check a method against the motel rules (1)(2)(3)(4M) or the ringers rules (1)(2)(3)(4R)."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Literal

from .methods import Method
from .perm import is_adjacent_swap, is_transition, rounds

Ruleset = Literal["motel", "ringers"]


@dataclass(frozen=True)
class Violation:
    rule: str
    row: int
    description: str


@dataclass
class ValidationReport:
    ruleset: str
    passed: bool
    is_extent: bool
    rows: int
    violations: list[Violation] = field(default_factory=list)

    def to_json(self) -> dict:
        return asdict(self)


def validate(m: Method, ruleset: Ruleset = "ringers") -> ValidationReport:
    """Collect every rule violation of ``m``.

    Rule 4R looks at each window of three consecutive rows; when the method
    starts and ends on the same row the window wraps around, since the block
    is rung cyclically.
    """
    if ruleset not in ("motel", "ringers"):
        raise ValueError(f"unknown ruleset {ruleset!r}")
    n = m.stage
    home = rounds(n)
    out: list[Violation] = []
    rows = m.rows
    last = len(rows) - 1

    if rows[0] != home:
        out.append(Violation("1", 0, f"first row {rows[0]} is not rounds"))
    if rows[last] != home:
        out.append(Violation("1", last, f"last row {rows[last]} is not rounds"))

    first_seen: dict[tuple, int] = {}
    for i, r in enumerate(rows[:last] if last > 0 else rows):
        j = first_seen.setdefault(r, i)
        if j != i:
            out.append(Violation("2", i, f"row {r} repeats row {j}"))

    # at stage 1 the identity is the only possible change
    trivial_stage = n == 1
    for i, t in enumerate(m.transitions):
        ok3 = is_transition(t) or (trivial_stage and t.is_identity())
        if not ok3:
            out.append(Violation("3", i + 1, f"change {i} is not a product of disjoint adjacent swaps"))
        if ruleset == "motel" and not (is_adjacent_swap(t) or (trivial_stage and t.is_identity())):
            out.append(Violation("4M", i + 1, f"change {i} does not swap exactly one adjacent pair"))

    if ruleset == "ringers" and len(rows) >= 3:
        cyclic = rows[0] == rows[last] and last >= 2
        body = rows[:last] if cyclic else rows
        k = len(body)
        windows = range(k) if cyclic else range(k - 2)
        for i in windows:
            a, b, c = body[i], body[(i + 1) % k], body[(i + 2) % k]
            stuck = [p + 1 for p in range(n) if a[p] == b[p] == c[p]]
            if stuck:
                out.append(Violation("4R", i, f"bell(s) {[a[p - 1] for p in stuck]} stay in "
                                              f"position(s) {stuck} for three rows from row {i}"))

    passed = not out
    extent = passed and last == math.factorial(n)
    return ValidationReport(ruleset, passed, extent, len(rows), out)


def is_extent(m: Method) -> bool:
    """True iff ``m`` obeys the ringers rules and has exactly ``n! + 1`` rows."""
    if len(m) != math.factorial(m.stage) + 1:
        return False
    return validate(m, "ringers").passed
