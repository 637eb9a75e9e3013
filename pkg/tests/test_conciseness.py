import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import catalog_upto, grp
from wordlab.conciseness import (
    NotMultilinearCommutator,
    action_kernel,
    corollary_check,
    fam_bound_check,
    is_multilinear_commutator,
    lemma_concise_report,
    max_order_with_phi_at_most,
)
from wordlab.group import centralizer, euler_phi
from wordlab.words import parse_word, word_image


def _by_name(report):
    return {q.name: q for q in report.inequalities}


def test_s3_commutator_report(S3):
    r = lemma_concise_report(S3, parse_word("[x1,x2]"))
    assert (r.m, r.order_W, r.index_centralizer, r.m_factorial) == (3, 3, 2, 6)
    assert r.W_abelian and r.kernel_equals_centralizer and r.L_m == 6
    assert r.final_bound == 6 ** 3
    q = _by_name(r)
    assert q["max phi(|g|) over values <= m"].lhs == 2
    assert r.passed and r.weakly_rational


def test_q8_commutator_report(Q8):
    r = lemma_concise_report(Q8, parse_word("[x1,x2]"))
    assert (r.m, r.order_W, r.order_centralizer, r.index_centralizer) == (2, 2, 8, 1)
    assert _by_name(r)["max phi(|g|) over values <= m"].lhs == 1
    assert r.passed


def test_abelian_group_degenerate():
    r = lemma_concise_report(grp("C6"), parse_word("[x1,x2]"))
    assert (r.m, r.order_W, r.index_centralizer) == (1, 1, 1)
    assert r.passed and all(q.passed for q in r.inequalities)


def test_nonabelian_verbal_subgroup_phi_is_informational():
    # A5 commutators: W = A5, the phi check is recorded but not asserted
    r = lemma_concise_report(grp("A5"), parse_word("[x1,x2]"))
    assert not r.W_abelian and r.final_bound is None
    q = _by_name(r)["max phi(|g|) over values <= m"]
    assert q.asserted is False
    assert r.passed
    lines = r.table_lines()
    assert lines[0].startswith("A5") and any(line.rstrip().endswith("info") for line in lines)


@pytest.mark.parametrize("name", catalog_upto(60))
@pytest.mark.parametrize("text", ["[x1,x2]", "x1^2", "[x1,x2,x3]", "[x1^2,x2]"])
def test_lemma_reports_pass(name, text):
    G = grp(name)
    r = lemma_concise_report(G, parse_word(text), budget=10**7)
    assert r.passed
    assert r.index_centralizer * r.order_centralizer == G.order
    d = r.to_dict()
    assert d["passed"] is True and d["m"] == r.m


def test_action_kernel_matches_centralizer(A5, S3):
    for G in (A5, S3):
        T = G.classes
        for members in T.classes:
            assert action_kernel(G, members) == centralizer(G, members).members
    with pytest.raises(ValueError):
        action_kernel(S3, [1])


@pytest.mark.parametrize("m, L", [(1, 2), (2, 6), (3, 6), (4, 12), (5, 12), (6, 18), (8, 30)])
def test_L_values(m, L):
    assert max_order_with_phi_at_most(m) == L


@given(st.integers(1, 40))
def test_L_scan_is_exhaustive(m):
    L = max_order_with_phi_at_most(m)
    assert euler_phi(L) <= m
    # phi(n) >= sqrt(n/2), so nothing beyond the scan window qualifies
    assert all(euler_phi(n) > m for n in range(L + 1, 4 * m * m + 10))
    assert max_order_with_phi_at_most(m + 1) >= L


def test_L_rejects_nonpositive():
    with pytest.raises(ValueError):
        max_order_with_phi_at_most(0)


@pytest.mark.parametrize("text, expected", [
    ("[x1,x2]", True), ("[[x1,x2],[x3,x4]]", True), ("[x1,x2,x3]", True),
    ("[x1,x1]", False), ("x1^2", False), ("[x1^2,x2]", False), ("x1 x2", False),
])
def test_multilinear_classification(text, expected):
    assert is_multilinear_commutator(parse_word(text)) is expected


def test_fam_examples(S3, Q8):
    r = fam_bound_check(S3, parse_word("[x1,x2]"))
    assert (r.m, r.order_W, r.bound, r.holds) == (3, 3, 4, True)
    r = fam_bound_check(Q8, parse_word("[x1,x2]"))
    assert (r.m, r.order_W, r.bound, r.holds, r.degenerate) == (2, 2, 1, False, False)
    r = fam_bound_check(grp("A4"), parse_word("[[x1,x2],[x3,x4]]"))
    assert r.m == 1 and r.order_W == 1 and r.degenerate
    with pytest.raises(NotMultilinearCommutator):
        fam_bound_check(S3, parse_word("x1^2"))


def test_fam_matches_exhaustive_image():
    G = grp("S4")
    w = parse_word("[[x1,x2],[x3,x4]]")
    r = fam_bound_check(G, w)
    assert r.m == len(word_image(G, w))
    assert r.holds == (r.order_W <= (r.m - 1) ** (r.m - 1))


@pytest.mark.parametrize("exponents, groups", [
    ((1, 1), ["S3", "S4", "D4", "Q8"]),
    ((2,), ["C4"]),
    ((2, 1), ["S3"]),
])
def test_corollary_examples(exponents, groups):
    r = corollary_check(exponents, groups)
    assert r.holds and not r.skipped
    assert [v.group for v in r.verdicts] == groups
    assert r.to_dict()["scope"].startswith("evidence")


def test_corollary_skips_over_budget():
    r = corollary_check((1, 1, 1), ["S3", "A5"], budget=1000)
    assert [v.group for v in r.verdicts] == ["S3"]
    assert [g for g, _ in r.skipped] == ["A5"]
    assert r.holds


def test_corollary_accepts_group_objects(S3):
    r = corollary_check((1, 2), [S3])
    assert r.verdicts[0].group == "S3" and r.holds
    assert r.word == parse_word(r.word).text
