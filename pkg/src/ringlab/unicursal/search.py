"""Hamiltonian-cycle and longest-cycle search on Cayley colour graphs.

Cayley graphs are vertex-transitive (and exclusion classes built from left
cosets are preserved by left multiplication), so every search anchors its
cycle at the identity, vertex 0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from ..errors import WordError
from ..perm import Perm, identity
from .groups import CayleyGraph, GroupTable

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class Chain:
    """A cyclic sequence of distinct group elements with ``elements[i+1] = elements[i] * gens[labels[i]]``."""

    elements: tuple[int, ...]
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def word(self, names: Sequence[str]) -> list[str]:
        return [names[k] for k in self.labels]

    def check(self, graph: CayleyGraph) -> bool:
        m = len(self.elements)
        if m == 0 or len(set(self.elements)) != m or len(self.labels) != m:
            return False
        return all(graph.succ[self.elements[i]][self.labels[i]] == self.elements[(i + 1) % m]
                   for i in range(m))


@dataclass
class SearchResult:
    status: str  # "found" | "none" | "exhausted"
    chain: Chain | None
    expansions: int
    elapsed: float
    names: tuple[str, ...] = ()

    @property
    def word(self) -> list[str] | None:
        return None if self.chain is None else self.chain.word(self.names)

    def to_json(self) -> dict:
        d = {"status": self.status, "expansions": self.expansions, "elapsed": round(self.elapsed, 6)}
        if self.chain is not None:
            d["word"] = ",".join(self.word or [])
        return d


@dataclass
class LongestResult:
    chain: Chain | None
    optimal: bool
    upper_bound: int
    expansions: int
    elapsed: float
    names: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return 0 if self.chain is None else len(self.chain)

    def to_json(self) -> dict:
        d = {"length": self.length, "optimal": self.optimal, "upper_bound": self.upper_bound,
             "expansions": self.expansions, "elapsed": round(self.elapsed, 6)}
        if self.chain is not None:
            d["word"] = ",".join(self.chain.word(self.names))
        return d


def verify_word(G: GroupTable, T: Sequence[Perm], word: Sequence, names: Sequence[str] | None = None) -> bool:
    """True iff the partial products of ``word`` from the identity list every element of ``G`` once
    and the whole word multiplies to the identity.

    ``word`` holds generator indices, or names looked up in ``names``.
    """
    if names is not None:
        lookup = {nm: i for i, nm in enumerate(names)}
        try:
            idx = [lookup[w] if isinstance(w, str) else int(w) for w in word]
        except KeyError as exc:
            raise WordError(f"unknown label {exc.args[0]!r}") from None
    else:
        idx = [int(w) for w in word]
    for k in idx:
        if not 0 <= k < len(T):
            raise WordError(f"label {k} out of range for {len(T)} generators")
    if len(idx) != len(G):
        return False
    g = identity(G.degree)
    seen = set()
    for k in idx:
        if g in seen or g not in G:
            return False
        seen.add(g)
        g = g * T[k]
    return g == identity(G.degree)


class _Budget(Exception):
    pass


def hamiltonian_cycle(graph: CayleyGraph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Depth-first search for a Hamiltonian cycle through the identity.

    Prunes with (a) in-degree bookkeeping: every unvisited vertex, and the
    identity, must keep at least one predecessor whose out-edge is still free,
    and a vertex with exactly one such predecessor forces that move;
    (b) reachability of every unvisited vertex and of the identity from the
    head; successors are tried fewest-onward-options first.
    ``none`` is returned only when the search space is exhausted.
    """
    t0 = time.perf_counter()
    N = len(graph)
    succ = [tuple(dict.fromkeys(s)) for s in graph.succ]
    if N == 1:
        k = next((i for i, v in enumerate(graph.succ[0]) if v == 0), None)
        chain = Chain((0,), (k,)) if k is not None else None
        return SearchResult("found" if chain else "none", chain, 0, time.perf_counter() - t0, graph.names)
    succ = [tuple(w for w in s if w != v) for v, s in enumerate(succ)]
    preds: list[list[int]] = [[] for _ in range(N)]
    for v, s in enumerate(succ):
        for w in s:
            preds[w].append(v)
    free_in = [len(p) for p in preds]
    visited = [False] * N
    visited[0] = True
    path = [0]
    expansions = 0

    def reach_ok(head: int, remaining: int) -> bool:
        if remaining == 0:
            return True
        seen = {head}
        stack = [head]
        hits = 0
        closes = False
        while stack:
            v = stack.pop()
            for w in succ[v]:
                if w == 0:
                    closes = True
                elif not visited[w] and w not in seen:
                    seen.add(w)
                    hits += 1
                    stack.append(w)
        return closes and hits == remaining

    def fix_edge(v: int, w: int) -> list[int]:
        lost = [u for u in succ[v] if u != w]
        for u in lost:
            free_in[u] -= 1
        return lost

    def dead(lost: list[int]) -> bool:
        return any(free_in[u] == 0 and (u == 0 or not visited[u]) for u in lost)

    # frames: (head, candidates, next index, lost-list of the edge that entered this frame)
    def candidates(v: int) -> list[int] | None:
        cand = [w for w in succ[v] if not visited[w]]
        forced = [w for w in cand if free_in[w] == 1]
        if len(forced) > 1:
            return None
        if forced:
            return forced
        cand.sort(key=lambda w: (sum(1 for u in succ[w] if not visited[u]), w))
        return cand

    stack: list[list] = [[0, candidates(0) or [], 0, []]]
    try:
        while stack:
            frame = stack[-1]
            v, cand, i, _ = frame
            if len(path) == N:
                if 0 in succ[v]:
                    labels = _labels_for(graph, path)
                    return SearchResult("found", Chain(tuple(path), labels), expansions,
                                        time.perf_counter() - t0, graph.names)
                cand = []
            if i >= len(cand):
                stack.pop()
                if not stack:
                    break
                # undo the edge that led into v
                for u in frame[3]:
                    free_in[u] += 1
                visited[v] = False
                path.pop()
                continue
            frame[2] = i + 1
            w = cand[i]
            expansions += 1
            if expansions > budget:
                raise _Budget
            lost = fix_edge(v, w)
            visited[w] = True
            path.append(w)
            nxt = None
            if not dead(lost) and reach_ok(w, N - len(path)):
                nxt = candidates(w) if len(path) < N else []
            if nxt is None:
                for u in lost:
                    free_in[u] += 1
                visited[w] = False
                path.pop()
                continue
            stack.append([w, nxt, 0, lost])
    except _Budget:
        return SearchResult("exhausted", None, expansions - 1, time.perf_counter() - t0, graph.names)
    return SearchResult("none", None, expansions, time.perf_counter() - t0, graph.names)


def _labels_for(graph: CayleyGraph, path: Sequence[int]) -> tuple[int, ...]:
    m = len(path)
    return tuple(graph.succ[path[i]].index(path[(i + 1) % m]) for i in range(m))


def girth(graph: CayleyGraph) -> int:
    """Length of the shortest directed cycle (through the identity, hence anywhere)."""
    dist = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for v in frontier:
            for w in graph.succ[v]:
                if w == 0:
                    return dist[v] + 1
                if w not in dist:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    raise ValueError("graph has no cycle through the identity")


def _greedy_cycles(graph: CayleyGraph, usable: list[bool]) -> Chain | None:
    """Best cycle from a family of rotor walks: at each step rotate through the generators,
    taking the first unvisited successor, and close as late as possible."""
    k = len(graph.gens)
    best: Chain | None = None
    for offset in range(k):
        for stride in range(1, k + 1):
            visited_cls = {graph.classes[0]}
            path = [0]
            closes_at = 1 if 0 in graph.succ[0] else 0
            rotor = offset
            v = 0
            while True:
                step = None
                for j in range(k):
                    t = (rotor + j) % k
                    w = graph.succ[v][t]
                    if w != 0 and usable[w] and graph.classes[w] not in visited_cls:
                        step = w
                        rotor = (t + stride) % k
                        break
                if step is None:
                    break
                v = step
                visited_cls.add(graph.classes[v])
                path.append(v)
                if 0 in graph.succ[v]:
                    closes_at = len(path)
            if closes_at and (best is None or closes_at > len(best)):
                cyc = path[:closes_at]
                best = Chain(tuple(cyc), _labels_for(graph, cyc))
    return best


def longest_cycle(graph: CayleyGraph, budget: int = DEFAULT_BUDGET,
                  upper_bound: int | None = None) -> LongestResult:
    """Branch and bound for the longest simple cycle respecting the exclusion classes.

    The bound at each node is the current length plus the number of unused
    classes reachable from the head. ``optimal`` is True when the search
    completed or met ``upper_bound``.
    """
    t0 = time.perf_counter()
    N = len(graph)
    classes = graph.classes
    ub = graph.n_classes if upper_bound is None else min(upper_bound, graph.n_classes)
    succ = [tuple(dict.fromkeys(w for w in s)) for s in graph.succ]
    usable = [True] * N
    best = _greedy_cycles(graph, usable)
    best_len = len(best) if best else 0
    if best_len >= ub:
        return LongestResult(best, True, ub, 0, time.perf_counter() - t0, graph.names)

    cls_used: dict[int, int] = {classes[0]: 0}
    visited = [False] * N
    visited[0] = True
    path = [0]
    expansions = 0

    def bound(head: int) -> tuple[int, bool]:
        seen = {head}
        stack = [head]
        free_cls = set()
        closes = 0 in succ[head]
        while stack:
            v = stack.pop()
            for w in succ[v]:
                if w == 0:
                    closes = True
                elif w not in seen and not visited[w] and classes[w] not in cls_used:
                    seen.add(w)
                    free_cls.add(classes[w])
                    stack.append(w)
        return len(path) + len(free_cls), closes

    def options(v: int) -> list[int]:
        cand = [w for w in succ[v] if w != 0 and not visited[w] and classes[w] not in cls_used]
        cand.sort(key=lambda w: (sum(1 for u in succ[w] if not visited[u]), w))
        return cand

    stack: list[list] = [[0, options(0), 0]]
    completed = True
    while stack:
        frame = stack[-1]
        v, cand, i = frame
        if i == 0 and 0 in succ[v] and len(path) > best_len:
            best_len = len(path)
            best = Chain(tuple(path), _labels_for(graph, path))
            if best_len >= ub:
                break
        if i >= len(cand):
            stack.pop()
            if stack:
                visited[v] = False
                del cls_used[classes[v]]
                path.pop()
            continue
        frame[2] = i + 1
        w = cand[i]
        expansions += 1
        if expansions > budget:
            completed = False
            break
        visited[w] = True
        cls_used[classes[w]] = w
        path.append(w)
        b, closes = bound(w)
        if not closes or b <= best_len:
            visited[w] = False
            del cls_used[classes[w]]
            path.pop()
            continue
        stack.append([w, options(w), 0])
    optimal = completed or best_len >= ub
    return LongestResult(best, optimal, best_len if optimal else ub, expansions, time.perf_counter() - t0, graph.names)
