import pytest

from ringlab.leads import scheme_from_name
from ringlab.methods import (
    Method, ccdd_course, expand_leads, grandsire_course, plain_bob_course, plain_hunt, sjt_extent,
)
from ringlab.notation import parse_cycles
from ringlab.perm import identity
from ringlab.rules import is_extent, validate


def method(n, cycles, start=None):
    return Method(n, tuple(parse_cycles(c, n) for c in cycles), start)


def rules_broken(report):
    return {v.rule for v in report.violations}


@pytest.mark.parametrize("n", range(1, 7))
def test_sjt_passes_motel(n):
    r = validate(sjt_extent(n), "motel")
    assert r.passed and r.is_extent


def test_sjt_four_breaks_4r_only():
    r = validate(sjt_extent(4), "ringers")
    assert not r.passed
    assert rules_broken(r) == {"4R"}


def test_sjt_three_passes_ringers():
    assert validate(sjt_extent(3), "ringers").passed


def test_plain_bob_four_is_extent():
    r = validate(plain_bob_course(4), "ringers")
    assert r.passed and r.is_extent and r.rows == 25
    assert is_extent(plain_bob_course(4))


@pytest.mark.parametrize("m", [
    plain_bob_course(6), plain_bob_course(8), grandsire_course(5), grandsire_course(7),
    plain_hunt(5), plain_hunt(6),
], ids=lambda m: m.name)
def test_courses_pass_ringers(m):
    r = validate(m, "ringers")
    assert r.passed and not r.is_extent


def test_ccdd_lead_end_shares_fixed_place():
    # X=(1 2)(3 4), Z=(1 2) and the next X all fix fifths place
    r = validate(ccdd_course(), "ringers")
    assert rules_broken(r) == {"4R"}
    assert [v.row for v in r.violations][:4] == [8, 9, 18, 19]
    assert validate(ccdd_course(), "motel").violations  # (1 2)(3 4) is not a single swap


def test_truncated_fragment_breaks_rule_one():
    m = method(4, ["(1 2)(3 4)", "(2 3)"])
    r = validate(m, "ringers")
    assert "1" in rules_broken(r)


def test_repeated_row_breaks_rule_two():
    m = method(3, ["(1 2)", "(1 2)", "(2 3)", "(2 3)"])
    assert "2" in rules_broken(validate(m, "motel"))


def test_non_transition_breaks_rule_three():
    m = method(4, ["(1 3)", "(1 3)"])
    assert "3" in rules_broken(validate(m, "ringers"))


def test_double_swap_breaks_motel_only():
    m = plain_bob_course(4)
    assert "4M" in rules_broken(validate(m, "motel"))


def test_linear_4r_in_open_fragment():
    m = method(4, ["(1 2)", "(2 3)"])
    r = validate(m, "ringers")
    assert "4R" in rules_broken(r)


def test_4r_checked_across_the_wrap():
    word = ["(1 2)", "(1 2)(3 4)", "(2 3)", "(1 2)(3 4)", "(2 3)", "(1 2)(3 4)",
            "(1 2)", "(1 2)(3 4)", "(2 3)", "(1 2)(3 4)", "(2 3)"]
    r = validate(method(4, word), "ringers")
    assert rules_broken(r) == {"4R"}
    assert len(r.violations) == 1


def test_stage_one_identity_extent():
    m = Method(1, (identity(1),))
    for ruleset in ("motel", "ringers"):
        r = validate(m, ruleset)
        assert r.passed and r.is_extent


def test_report_json():
    d = validate(sjt_extent(3), "ringers").to_json()
    assert d == {"ruleset": "ringers", "passed": True, "is_extent": True, "rows": 7, "violations": []}


def test_plain_bob_six_thirty_leads():
    comp = list("BPPPBBPPPP") * 3
    m = expand_leads(scheme_from_name("plain-bob-6"), comp)
    r = validate(m, "ringers")
    assert r.passed and len(m.transitions) == 360
