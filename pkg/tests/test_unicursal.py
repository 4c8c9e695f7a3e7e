import pytest
from hypothesis import given, settings, strategies as st

from ringlab.errors import GenerationError, LabelError, MembershipError, ResourceError, WordError
from ringlab.notation import parse_cycles, parse_generators
from ringlab.perm import Perm, identity, order
from ringlab.unicursal import (
    CayleyGraph, alternating_group, closure, coset_label, generates, girth, hamiltonian_cycle,
    longest_cycle, parity_audit, qset_cosets, random_trace, rankin_oracle, rearrange, sigma_perm,
    subgroup_index, symmetric_group, tau_perm, verify_word,
)
from ringlab.unicursal.qsets import ChainCover, cycle_count

QA = "(3 4 6 7 5);(2 4 7)(3 6 5)"
S4_WORD = "B,A,B,A,A,B,B,B,A,B,B,A,A,B,B,B,A,A,B,A,B,B,B,A".split(",")
SJT4_WORD = "A,B,C,A,C,B,A,C,A,B,C,A,C,B,A,C,A,B,C,A,C,B,A,C".split(",")


def gens(text, n=None):
    return parse_generators(text, n)


def graph(text, n=None):
    g = gens(text, n)
    return CayleyGraph(closure(g), g)


# -- groups ----------------------------------------------------------------

@pytest.mark.parametrize("text,n,size", [
    ("(1 2)(3 4);(2 3)(4 5)", 5, 10),
    ("(1 2 3);(1 2 4)", 4, 12),
    (QA, 7, 360),
    ("(1 2);(1 2 3 4 5)", 5, 120),
])
def test_closure_orders(text, n, size):
    assert len(closure(gens(text, n))) == size


def test_closure_cap():
    with pytest.raises(ResourceError):
        closure(gens("(1 2);(1 2 3 4 5 6)"), cap=100)


def test_named_groups():
    assert len(symmetric_group(4)) == 24
    A5 = alternating_group(5)
    assert len(A5) == 60 and A5.is_closed()


def test_subgroup_index():
    A4 = alternating_group(4)
    assert subgroup_index(A4, gens("(1 2 3)", 4)) == 4
    P, B = gens(QA)
    assert subgroup_index(closure([P, B]), [P]) == 72
    g = gens("(1 2 3)", 3)
    assert subgroup_index(closure(g), g) == 1
    with pytest.raises(MembershipError):
        subgroup_index(A4, gens("(1 2)", 4))


@pytest.mark.parametrize("G,text,verdict", [
    (alternating_group(4), "(1 2 3);(1 2 4)", "impossible"),
    (symmetric_group(3), "(1 2);(2 3)", "inconclusive"),
    (alternating_group(5), "(1 3 5 4 2);(3 5 4)", "impossible"),
])
def test_rankin_examples(G, text, verdict):
    x, y = gens(text, G.elements[0].degree)
    assert rankin_oracle(G, x, y).verdict == verdict


def test_rankin_question_a():
    P, B = gens(QA)
    v = rankin_oracle(closure([P, B]), P, B)
    assert v.to_json() == {"verdict": "impossible", "order_gamma": 5, "index_x": 72, "index_y": 120}


def test_rankin_needs_generators():
    with pytest.raises(GenerationError):
        rankin_oracle(symmetric_group(4), *gens("(1 2);(3 4)", 4))
    assert not generates(symmetric_group(4), gens("(1 2);(3 4)", 4))


# -- search ----------------------------------------------------------------

@pytest.mark.parametrize("text,n,status", [
    ("(1 2);(2 3)", 3, "found"),
    ("(3 4);(1 2 3)", 4, "none"),
    ("(1 2 3);(1 2 3 4)", 4, "found"),
    ("(1 2 3);(1 2 4)", 4, "none"),
])
def test_hamiltonian(text, n, status):
    g = graph(text, n)
    res = hamiltonian_cycle(g)
    assert res.status == status
    if status == "found":
        assert len(res.chain) == len(g) and res.chain.check(g)
        assert verify_word(g.group, g.gens, res.word, g.names)


def test_budget_exhaustion_is_not_none():
    res = hamiltonian_cycle(graph("(3 4);(1 2 3)", 4), budget=3)
    assert res.status == "exhausted"
    assert "word" not in res.to_json()


def test_known_words_verify():
    A, B = gens("(1 2 3);(1 2 3 4)", 4)
    assert verify_word(symmetric_group(4), [A, B], S4_WORD, ["A", "B"])
    sjt = gens("(1 2);(2 3);(3 4)", 4)
    assert verify_word(symmetric_group(4), sjt, SJT4_WORD, ["A", "B", "C"])
    assert not verify_word(symmetric_group(4), [A, B], ["A"] * 24, ["A", "B"])
    with pytest.raises(WordError):
        verify_word(symmetric_group(4), [A, B], ["C"] * 24, ["A", "B"])


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)))
def test_found_cycles_are_hamiltonian(a, b):
    x, y = Perm(a), Perm(b)
    G = closure([x, y])
    if x == y or x.is_identity() or y.is_identity():
        return
    g = CayleyGraph(G, [x, y])
    res = hamiltonian_cycle(g)
    assert res.status in ("found", "none")
    if res.status == "found":
        assert verify_word(G, [x, y], res.word, g.names)


def test_longest_cycle_small():
    s3 = graph("(1 2);(2 3)", 3)
    res = longest_cycle(s3)
    assert res.length == 6 and res.optimal
    c3 = graph("(1 2 3)", 3)
    assert longest_cycle(c3).length == 3


def test_longest_agrees_with_hamiltonian_none():
    g = graph("(3 4);(1 2 3)", 4)
    res = longest_cycle(g)
    assert res.optimal and res.length < 24
    assert res.chain.check(g)


def test_girth():
    assert girth(graph("(1 2);(2 3)", 3)) == 2
    P, B = gens(QA)
    assert girth(CayleyGraph(closure([P, B]), [P, B])) == 3


# -- Q-sets ----------------------------------------------------------------

def qa():
    P, B = gens(QA)
    G = closure([P, B])
    return G, P, B


def test_question_a_cosets():
    G, P, B = qa()
    qs = qset_cosets(G, P, B)
    assert qs.gamma == parse_cycles("(2 3 4 6 7)", 7)
    assert qs.size == 5 and len(qs.cosets) == 72


def test_s4_cosets():
    P, B = gens("(1 2 3);(3 4)", 4)
    qs = qset_cosets(symmetric_group(4), P, B)
    assert qs.size == 4 and len(qs.cosets) == 6


def test_trivial_gamma():
    P = parse_cycles("(1 2 3)", 3)
    G = closure([P])
    qs = qset_cosets(G, P, P)
    assert qs.size == 1 and len(qs.cosets) == len(G)


def test_all_p_cover():
    G, P, B = qa()
    qs = qset_cosets(G, P, B)
    cover = ChainCover.all_p(qs)
    assert cover.n_chains() == 72
    assert all(coset_label(cover, c) == "P" for c in qs.cosets)


def test_single_chain_cover_labels_and_sigma():
    A, B = gens("(1 2 3);(1 2 3 4)", 4)
    G = symmetric_group(4)
    res = hamiltonian_cycle(CayleyGraph(G, [A, B]))
    qs = qset_cosets(G, A, B)
    cover = ChainCover.from_chains(qs, [res.chain])
    assert cover.n_chains() == 1
    labels = [coset_label(cover, c) for c in qs.cosets]
    assert set(labels) <= {"P", "B"}
    for c, lab in zip(qs.cosets, labels):
        if lab == "B":
            assert len(sigma_perm(cover, c).cycles()) == 1
            assert cycle_count(sigma_perm(cover, c)) == 1


def test_sigma_tau_fixture():
    # flipping one coset of the all-P cover gives k_i = i + 1
    G, P, B = qa()
    qs = qset_cosets(G, P, B)
    c = qs.cosets[0]
    cover = rearrange(ChainCover.all_p(qs), c)
    assert sigma_perm(cover, c) == parse_cycles("(1 2 3 4 5)", 5)
    assert tau_perm(cover, c) == identity(5)
    rot = Perm([2, 3, 4, 5, 1])
    assert rot * tau_perm(cover, c) == sigma_perm(cover, c)
    with pytest.raises(LabelError):
        sigma_perm(ChainCover.all_p(qs), c)


def test_rearrange_twice_restores():
    G, P, B = qa()
    qs = qset_cosets(G, P, B)
    start = ChainCover.all_p(qs)
    c = qs.cosets[7]
    assert rearrange(rearrange(start, c), c).labels == start.labels


def test_parity_audit_question_a():
    G, P, B = qa()
    trace = random_trace(G, P, B, 20, seed=1)
    report = parity_audit(G, P, B, trace)
    assert all(k % 2 == 0 for k in report.chain_counts)
    assert report.chain_counts[0] == 72
    assert report.parity_law_held and report.single_chain_unreachable
    assert parity_audit(G, P, B, []).chain_counts == [72]
    with pytest.raises(LabelError):
        parity_audit(G, P, B, [72])


def test_parity_audit_s4_flips():
    P, B = gens("(1 2 3);(3 4)", 4)
    G = symmetric_group(4)
    report = parity_audit(G, P, B, random_trace(G, P, B, 30, seed=3))
    counts = report.chain_counts
    assert all((a - b) % 2 == 1 for a, b in zip(counts, counts[1:]))
    assert not report.single_chain_unreachable


def test_order_helper_consistency():
    G, P, B = qa()
    assert order(B * ~P) == 5
