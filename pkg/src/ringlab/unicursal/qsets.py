"""Chain covers and Q-set rearrangements.

A chain cover assigns to every group element one of the two generators
``P`` (label 0) or ``B`` (label 1) such that ``x -> x * gen[label[x]]`` is a
bijection; its cycles are the chains. Q-sets are the left cosets ``xC`` of
``C = <gamma>``, ``gamma = B * P^-1``. Because ``x gamma^i P = x gamma^(i-1) B``,
the elements of a Q-set all carry the same label, and flipping that label is
exactly the segment permutation of Rankin's argument.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import LabelError, RinglabError
from ..perm import Perm, inverse, order
from .groups import GroupTable
from .search import Chain

P_LABEL, B_LABEL = 0, 1
LABEL_NAMES = ("P", "B")


@dataclass(frozen=True)
class Coset:
    """``elements[i - 1]`` is ``rep * gamma**i`` for ``i = 1..m``; the last one is ``rep``."""

    rep: int
    elements: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class QSets:
    group: GroupTable
    P: Perm
    B: Perm
    gamma: Perm
    cosets: tuple[Coset, ...]
    coset_of: tuple[int, ...]  # element index -> coset number

    @property
    def size(self) -> int:
        return order(self.gamma)


def qset_cosets(G: GroupTable, P: Perm, B: Perm) -> QSets:
    gamma = B * inverse(P)
    m = order(gamma)
    powers = [gamma ** i for i in range(1, m + 1)]
    coset_of = [-1] * len(G)
    cosets = []
    for x in range(len(G)):
        if coset_of[x] >= 0:
            continue
        g = G.elements[x]
        members = tuple(G.index(g * c) for c in powers)
        for e in members:
            coset_of[e] = len(cosets)
        cosets.append(Coset(x, members))
    return QSets(G, P, B, gamma, tuple(cosets), tuple(coset_of))


class ChainCover:
    """A partition of the group into chains, stored as one label per element."""

    def __init__(self, qsets: QSets, labels: Sequence[int]):
        G = qsets.group
        if len(labels) != len(G):
            raise RinglabError("one label per group element")
        self.qsets = qsets
        self.labels = tuple(int(x) for x in labels)
        p_tab = G.right_table(qsets.P)
        b_tab = G.right_table(qsets.B)
        self._tabs = (p_tab, b_tab)
        self.succ = tuple(self._tabs[lab][x] for x, lab in enumerate(self.labels))
        if len(set(self.succ)) != len(self.succ):
            raise RinglabError("labels do not define a chain cover: two elements share a successor")

    @classmethod
    def all_p(cls, qsets: QSets) -> ChainCover:
        """Every element acted on by ``P``: the chains are the cosets of ``<P>``."""
        return cls(qsets, [P_LABEL] * len(qsets.group))

    @classmethod
    def from_chains(cls, qsets: QSets, chains: Iterable[Chain]) -> ChainCover:
        labels = [-1] * len(qsets.group)
        for ch in chains:
            for e, lab in zip(ch.elements, ch.labels):
                if labels[e] != -1:
                    raise RinglabError(f"element {e} lies on two chains")
                labels[e] = lab
        if -1 in labels:
            raise RinglabError("chains do not cover the group")
        cover = cls(qsets, labels)
        for ch in chains:
            m = len(ch)
            if any(cover.succ[ch.elements[i]] != ch.elements[(i + 1) % m] for i in range(m)):
                raise RinglabError("chain label equation fails")
        return cover

    def chains(self) -> list[Chain]:
        seen = [False] * len(self.succ)
        out = []
        for start in range(len(self.succ)):
            if seen[start]:
                continue
            els = []
            v = start
            while not seen[v]:
                seen[v] = True
                els.append(v)
                v = self.succ[v]
            out.append(Chain(tuple(els), tuple(self.labels[e] for e in els)))
        return out

    def n_chains(self) -> int:
        return len(self.chains())

    def is_valid(self) -> bool:
        """Partition property and the label equation of every chain."""
        chains = self.chains()
        covered = sorted(e for ch in chains for e in ch.elements)
        if covered != list(range(len(self.succ))):
            return False
        for ch in chains:
            m = len(ch)
            for i, e in enumerate(ch.elements):
                if self._tabs[ch.labels[i]][e] != ch.elements[(i + 1) % m]:
                    return False
        return True


def coset_label(cover: ChainCover, coset: Coset) -> str:
    """``"P"``, ``"B"``, or ``"mixed"``.

    For any valid cover the answer is never ``"mixed"``: a ``P`` at
    ``x gamma^i`` next to a ``B`` at ``x gamma^(i-1)`` would give two elements
    the same successor.
    """
    labs = {cover.labels[e] for e in coset.elements}
    if len(labs) > 1:
        return "mixed"
    return LABEL_NAMES[labs.pop()]


def _next_exponents(cover: ChainCover, coset: Coset) -> list[int]:
    """``k[i - 1]``: exponent of the first element of the coset met after ``x gamma^i``."""
    where = {e: i + 1 for i, e in enumerate(coset.elements)}
    ks = []
    for e in coset.elements:
        v = cover.succ[e]
        while v not in where:
            v = cover.succ[v]
        ks.append(where[v])
    return ks


def _require_b(cover: ChainCover, coset: Coset) -> None:
    lab = coset_label(cover, coset)
    if lab != "B":
        raise LabelError(f"coset is labelled {lab}, expected all-B")


def sigma_perm(cover: ChainCover, coset: Coset) -> Perm:
    """``i -> k_i`` on ``{1..|C|}``: where the traversal next re-enters the coset."""
    _require_b(cover, coset)
    return Perm(_next_exponents(cover, coset))


def tau_perm(cover: ChainCover, coset: Coset) -> Perm:
    """``i -> k_(i-1)``: the re-entry map after rearranging the coset."""
    _require_b(cover, coset)
    ks = _next_exponents(cover, coset)
    return Perm([ks[-1]] + ks[:-1])


def rearrange(cover: ChainCover, coset: Coset) -> ChainCover:
    """Permute the segments between the coset's elements so that the coset switches generator.

    An all-B coset becomes all-P and vice versa; nothing else changes.
    """
    lab = coset_label(cover, coset)
    if lab == "mixed":
        raise LabelError("cannot rearrange a mixed coset")
    new = 1 - (P_LABEL if lab == "P" else B_LABEL)
    labels = list(cover.labels)
    for e in coset.elements:
        labels[e] = new
    return ChainCover(cover.qsets, labels)


def cycle_count(p: Perm) -> int:
    return len(p.cycles(include_fixed=True))


@dataclass
class AuditStep:
    coset: int
    direction: str  # "B->P" or "P->B"
    chains_before: int
    chains_after: int
    sigma_cycles: int
    tau_cycles: int
    rotation_identity: bool
    label_flip: bool
    count_identity: bool


@dataclass
class AuditReport:
    coset_size: int
    n_cosets: int
    index_p: int
    start_chains: int
    steps: list[AuditStep] = field(default_factory=list)
    parity_law_held: bool = True
    single_chain_unreachable: bool = False

    @property
    def chain_counts(self) -> list[int]:
        return [self.start_chains] + [s.chains_after for s in self.steps]

    def to_json(self) -> dict:
        return {
            "coset_size": self.coset_size, "n_cosets": self.n_cosets, "index_p": self.index_p,
            "start_chains": self.start_chains, "steps": len(self.steps),
            "chain_counts": self.chain_counts, "parity_law_held": self.parity_law_held,
            "identities_held": all(s.rotation_identity and s.label_flip and s.count_identity for s in self.steps),
            "single_chain_unreachable": self.single_chain_unreachable,
        }


def _b_side_check(b_cover: ChainCover, coset: Coset, p_cover: ChainCover) -> tuple[int, int, bool, bool]:
    """Checks on the cover where ``coset`` is all-B, against its rearrangement ``p_cover``."""
    m = len(coset)
    sigma = sigma_perm(b_cover, coset)
    tau = tau_perm(b_cover, coset)
    rot = Perm(list(range(2, m + 1)) + [1])
    rotation_identity = rot * tau == sigma
    ident = p_cover.n_chains() == b_cover.n_chains() - cycle_count(sigma) + cycle_count(tau)
    return cycle_count(sigma), cycle_count(tau), rotation_identity, ident


def parity_audit(G: GroupTable, P: Perm, B: Perm, trace: Sequence[int]) -> AuditReport:
    """Replay coset rearrangements from the all-P cover and check the parity law.

    Each step flips one coset (either direction). The chain count must change
    by an amount congruent to ``|C| - 1`` mod 2; with ``|C|`` odd and an even
    number of cosets of ``<P>``, no trace can ever reach a single chain.
    """
    qs = qset_cosets(G, P, B)
    m = qs.size
    cover = ChainCover.all_p(qs)
    start = cover.n_chains()
    report = AuditReport(m, len(qs.cosets), start, start)
    for step in trace:
        if not 0 <= step < len(qs.cosets):
            raise LabelError(f"trace step {step} names no coset (have {len(qs.cosets)})")
        coset = qs.cosets[step]
        before_labels = cover.labels
        lab = coset_label(cover, coset)
        new = rearrange(cover, coset)
        if lab == "B":
            s_cyc, t_cyc, l6, ident = _b_side_check(cover, coset, new)
        else:
            s_cyc, t_cyc, l6, ident = _b_side_check(new, coset, cover)
        members = set(coset.elements)
        flipped = all(new.labels[e] != before_labels[e] for e in members)
        others = all(new.labels[e] == before_labels[e] for e in range(len(before_labels)) if e not in members)
        before_n, after_n = cover.n_chains(), new.n_chains()
        if (after_n - before_n - (m - 1)) % 2 != 0 or not new.is_valid():
            report.parity_law_held = False
        report.steps.append(AuditStep(step, f"{lab}->{'P' if lab == 'B' else 'B'}", before_n, after_n,
                                      s_cyc, t_cyc, l6, flipped and others, ident))
        cover = new
    report.single_chain_unreachable = m % 2 == 1 and start % 2 == 0
    return report


def random_trace(G: GroupTable, P: Perm, B: Perm, steps: int, seed: int | None = None) -> list[int]:
    qs = qset_cosets(G, P, B)
    rng = random.Random(seed)
    return [rng.randrange(len(qs.cosets)) for _ in range(steps)]
