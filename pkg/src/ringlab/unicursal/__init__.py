"""Unicursal generation: group closure, Cayley graphs, cycle search, Rankin's test, Q-sets."""

from .groups import (
    CayleyGraph, GroupTable, RankinVerdict, all_even, alternating_group, cayley_graph, closure,
    generates, rankin_oracle, subgroup_index, symmetric_group,
)
from .qsets import (
    ChainCover, Coset, QSets, coset_label, parity_audit, qset_cosets, random_trace,
    rearrange, sigma_perm, tau_perm,
)
from .search import (
    Chain, LongestResult, SearchResult, girth, hamiltonian_cycle, longest_cycle, verify_word,
)

__all__ = [
    "CayleyGraph", "GroupTable", "RankinVerdict", "all_even", "alternating_group",
    "cayley_graph", "closure", "generates", "rankin_oracle", "subgroup_index",
    "symmetric_group", "ChainCover", "Coset", "QSets", "coset_label", "parity_audit",
    "qset_cosets", "random_trace", "rearrange", "sigma_perm", "tau_perm", "Chain",
    "LongestResult", "SearchResult", "girth", "hamiltonian_cycle", "longest_cycle",
    "verify_word",
]
