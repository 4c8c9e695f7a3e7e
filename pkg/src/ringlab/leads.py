"""Lead-level view of plain/bob methods: lead heads, compositions as chains, extent verdicts."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import ClosureError, CompositionError, SchemeError, StageError
from .methods import LeadWords, ccdd_words, expand_leads, grandsire_words, plain_bob_words
from .notation import CompositionFile
from .perm import Perm, Row, apply_to_row, identity, inverse, is_even, product, rounds
from .rules import validate
from .unicursal.groups import (
    CayleyGraph, GroupTable, closure, left_coset_classes, rankin_oracle,
)
from .unicursal.search import Chain, girth, longest_cycle

log = logging.getLogger(__name__)

FAMILIES = ("plain-bob", "grandsire", "ccdd")
DEFAULT_VERTEX_CAP = 120


@dataclass(frozen=True, eq=False)
class LeadScheme:
    """Plain and bob lead words of one method, with their lead-head permutations.

    ``P`` and ``B`` are the products of the plain and bob words: the lead head
    reached from rounds by one plain or one bob lead. ``bob_switch = P^-1 B``
    is the coset change a bob makes relative to a plain lead.
    """

    family: str
    stage: int
    words: LeadWords = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}-{self.stage}"

    @property
    def table(self) -> dict[str, Perm]:
        return self.words.table

    @property
    def plain_word(self) -> tuple[str, ...]:
        return self.words.plain

    @property
    def bob_word(self) -> tuple[str, ...]:
        return self.words.bob

    @property
    def lead_length(self) -> int:
        return len(self.plain_word)

    @cached_property
    def P(self) -> Perm:
        return product(self.words.perms(self.plain_word), self.stage)

    @cached_property
    def B(self) -> Perm:
        return product(self.words.perms(self.bob_word), self.stage)

    @cached_property
    def bob_switch(self) -> Perm:
        return inverse(self.P) * self.B

    def lead_perm(self, label: str) -> Perm:
        if label == "P":
            return self.P
        if label == "B":
            return self.B
        raise CompositionError(f"unknown lead label {label!r}")

    @cached_property
    def hunting_group(self) -> GroupTable:
        return closure([self.table["X"], self.table["Y"]])

    @cached_property
    def entry(self) -> Perm:
        """Product of the lead's opening changes before plain hunting starts (``Z`` for Grandsire)."""
        head = []
        for s in self.plain_word:
            if s in ("X", "Y"):
                break
            head.append(self.table[s])
        return product(head, self.stage)

    @cached_property
    def leadhead_group(self) -> GroupTable:
        return closure([self.P, self.B])

    @cached_property
    def exclusion_subgroup(self) -> list[Perm]:
        """Lead heads ``k`` with ``h`` and ``h*k`` opening leads over the same hunting coset.

        Two such lead heads cannot both appear in a true composition.
        """
        c, ci = self.entry, inverse(self.entry)
        H = self.hunting_group
        return [k for k in self.leadhead_group if ci * k * c in H]


def lead_scheme(family: str, n: int) -> LeadScheme:
    try:
        if family == "plain-bob":
            words = plain_bob_words(n)
        elif family == "grandsire":
            words = grandsire_words(n)
        elif family == "ccdd":
            if n != 5:
                raise StageError("ccdd is defined on 5 bells only")
            words = ccdd_words()
        else:
            raise SchemeError(f"unknown family {family!r}; choose from {FAMILIES}")
    except StageError as exc:
        raise SchemeError(f"{family}-{n}: {exc}") from None
    return LeadScheme(family, n, words)


def scheme_from_name(name: str) -> LeadScheme:
    """``"plain-bob-6"`` -> ``lead_scheme("plain-bob", 6)``."""
    fam, _, stage = name.rpartition("-")
    if not fam or not stage.isdigit():
        raise SchemeError(f"bad scheme name {name!r}")
    return lead_scheme(fam, int(stage))


def leadhead_row(h: Perm) -> Row:
    """Lead head reached by ``h`` from rounds, as a full row."""
    return apply_to_row(h, rounds(h.degree))


def drop_treble(row: Sequence[int]) -> tuple[int, ...]:
    """Lead heads are written without the 1 in front."""
    if row[0] != 1:
        raise ValueError(f"row {row} does not start with bell 1")
    return tuple(row[1:])


def leadhead_graph(s: LeadScheme) -> CayleyGraph:
    """Cayley graph of ``<P, B>`` with generators ``P``, ``B`` and exclusion classes from the hunting cosets."""
    G = s.leadhead_group
    alt = math.factorial(s.stage - 1) // 2
    if not (len(G) == alt and all(is_even(g) and g(1) == 1 for g in G)):
        log.warning("%s: <P, B> has order %d, not the alternating group on 2..%d (order %d)",
                    s.name, len(G), s.stage, alt)
    classes = left_coset_classes(G, s.exclusion_subgroup)
    return CayleyGraph(G, [s.P, s.B], ["P", "B"], classes)


def composition_to_chain(s: LeadScheme, comp: CompositionFile | Sequence[str]) -> Chain:
    labels = comp.leads if isinstance(comp, CompositionFile) else list(comp)
    if not labels:
        raise CompositionError("empty composition")
    G = s.leadhead_group
    h = identity(s.stage)
    heads = []
    for i, lab in enumerate(labels):
        heads.append(G.index(h))
        h = h * s.lead_perm(lab)
    if not h.is_identity():
        raise ClosureError(f"composition does not come round; residual lead head {h!r}", h)
    if len(set(heads)) != len(heads):
        raise CompositionError("composition repeats a lead head")
    return Chain(tuple(heads), tuple(0 if lab == "P" else 1 for lab in labels))


def chain_to_composition(s: LeadScheme, chain: Chain) -> CompositionFile:
    """Rotate ``chain`` to start at rounds and read off its lead labels."""
    if 0 not in chain.elements:
        raise CompositionError("chain does not pass through rounds")
    k = chain.elements.index(0)
    labels = chain.labels[k:] + chain.labels[:k]
    return CompositionFile(s.name, ["PB"[lab] for lab in labels])


@dataclass
class Feasibility:
    verdict: str  # "possible" | "impossible" | "unknown"
    test: str
    bound_rows: int | None = None
    bound_leads: int | None = None
    witness: list[str] | None = None
    detail: str = ""
    four_r_clean: bool = True

    def to_json(self) -> dict:
        d = {"verdict": self.verdict, "test": self.test}
        for key in ("bound_rows", "bound_leads", "witness"):
            val = getattr(self, key)
            if val is not None:
                d[key] = ",".join(val) if key == "witness" else val
        d["four_r_clean"] = self.four_r_clean
        if self.detail:
            d["detail"] = self.detail
        return d


def _four_r_clean(s: LeadScheme) -> bool:
    """No two consecutive changes share a fixed place, across every lead junction."""
    from .perm import common_fixed_point

    words = [s.plain_word, s.bob_word]
    for w in words:
        for a, b in zip(w, w[1:]):
            if common_fixed_point(s.table[a], s.table[b]):
                return False
        for v in words:
            if common_fixed_point(s.table[w[-1]], s.table[v[0]]):
                return False
    return True


def _prefixes(s: LeadScheme, word: Sequence[str]) -> list[Perm]:
    out = []
    g = identity(s.stage)
    for sym in word:
        g = g * s.table[sym]
        out.append(g)
    return out


def extent_feasibility(s: LeadScheme, vertex_cap: int = DEFAULT_VERTEX_CAP,
                       budget: int = 10**8) -> Feasibility:
    """Decide whether plain and bob leads can produce an extent, cheapest argument first.

    1. every change even: all rows are even, so at most ``n!/2`` rows;
    2. every row with the treble leading is an even arrangement: at most
       ``(n-1)!/2`` such rows, a fixed number per lead;
    3. Rankin's test on the lead-head group, when lead heads and leads correspond
       one to one and an extent needs every lead head;
    4. exhaustive longest-cycle search on a small lead-head graph.
    """
    n, L = s.stage, s.lead_length
    total = math.factorial(n)
    need_leads = total // L
    clean = _four_r_clean(s)
    used = set(s.plain_word) | set(s.bob_word)

    if all(is_even(s.table[sym]) for sym in used):
        leads = (total // 2) // L
        return Feasibility("impossible", "all-even-changes", leads * L, leads,
                           detail="every change is even, so only even rows occur", four_r_clean=clean)

    treble_rows = []
    for w in (s.plain_word, s.bob_word):
        treble_rows.append([g for g in _prefixes(s, w) if g(1) == 1])
    if all(is_even(g) for rows in treble_rows for g in rows) and min(map(len, treble_rows)) > 0:
        per_lead = min(map(len, treble_rows))
        leads = (math.factorial(n - 1) // 2) // per_lead
        if leads < need_leads:
            return Feasibility("impossible", "treble-lead-parity", leads * L, leads,
                               detail=f"{per_lead} treble-lead rows per lead, all even", four_r_clean=clean)

    G = s.leadhead_group
    graph = leadhead_graph(s)
    one_to_one = len(s.exclusion_subgroup) == 1 and len(G) == need_leads
    if one_to_one and s.P != s.B and not s.P.is_identity() and not s.B.is_identity():
        verdict = rankin_oracle(G, s.P, s.B)
        if verdict.verdict == "impossible":
            leads = len(G) - girth(graph)
            return Feasibility("impossible", "rankin", leads * L, leads,
                               detail=f"order(P^-1 B)={verdict.order_gamma}, index<P>={verdict.index_x}, "
                                      f"index<B>={verdict.index_y}; bound is |G| minus the shortest cycle",
                               four_r_clean=clean)

    if len(G) <= vertex_cap:
        res = longest_cycle(graph, budget=budget)
        if res.optimal and res.chain is not None:
            comp = chain_to_composition(s, res.chain)
            rows = len(res.chain) * L
            if rows == total:
                m = expand_leads(s, comp)
                covers = m.rows[-1] == rounds(n) and len(set(m.rows[:-1])) == total
                if covers:
                    note = "witness covers every row"
                    if not validate(m, "ringers").passed:
                        note += "; its lead-end changes break rule 4R"
                    return Feasibility("possible", "exhaustive-search", rows, len(res.chain), comp.leads,
                                       detail=note, four_r_clean=clean)
            return Feasibility("impossible", "exhaustive-search", rows, len(res.chain), comp.leads,
                               detail="longest composition found by complete search", four_r_clean=clean)
    return Feasibility("unknown", "none", four_r_clean=clean)
