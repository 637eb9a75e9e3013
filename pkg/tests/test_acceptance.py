"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line."""

import functools
import itertools
import math
import time

import numpy as np

from conftest import ACCEPTANCE, catalog_upto
from wordlab.catalog import catalog_group
from wordlab.characters import (
    character_table,
    character_table_mod_p,
    complex_orthogonality,
    galois_check,
    mod_p_orthogonality,
    triple_count_brute,
    triple_count_formula,
)
from wordlab.conciseness import corollary_check, lemma_concise_report
from wordlab.rationality import (
    class_union,
    normalize_exponent,
    power_closed,
    rational_on,
    weakly_rational_by_definition,
    weakly_rational_on,
)
from wordlab.words import gamma_power_word, parse_word, solution_count, value_counts

UP_TO_60 = catalog_upto(60)


def grp(name):
    """A freshly built group, so no cached counts or tables leak into the timings."""
    return catalog_group(name)


CONCISE_WORDS = ["[x1,x2]", "x1^2", "[x1,x2,x3]", "[x1^2,x2]"]


def criterion(n, desc):
    """Record a PASS/FAIL line for criterion ``n`` whatever the outcome."""
    def wrap(fn):
        @functools.wraps(fn)
        def run(*a, **k):
            t0 = time.perf_counter()
            ok = False
            detail = ""
            try:
                detail = fn(*a, **k) or ""
                ok = True
            finally:
                detail = f"({time.perf_counter() - t0:.2f}s) {detail}".strip()
                ACCEPTANCE[n] = (ok, desc, detail)
                print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}  {detail}")
        return run
    return wrap


@criterion(1, "solution counts of [x1,x2] on S3 and Q8")
def test_criterion_1_solution_counts():
    t0 = time.perf_counter()
    w = parse_word("[x1,x2]")
    S3, Q8 = grp("S3"), grp("Q8")
    assert solution_count(S3, w, 0) == 18
    assert int(value_counts(S3, w).sum()) == 36
    assert solution_count(Q8, w, 0) == 40
    assert solution_count(Q8, w, Q8.parse_element("(0 1)(2 3)(4 5)(6 7)")) == 24
    assert time.perf_counter() - t0 < 1.0
    return "S3: 18/36, Q8: 40/24"


@criterion(2, "character degrees and orthogonality")
def test_criterion_2_character_tables():
    expected = {"S3": [1, 1, 2], "S4": [1, 1, 2, 3, 3], "Q8": [1, 1, 1, 1, 2], "A5": [1, 3, 3, 4, 5]}
    worst = 0.0
    for name, degs in expected.items():
        G = grp(name)
        t0 = time.perf_counter()
        t = character_table_mod_p(G)
        ct = character_table(G)
        assert sorted(t.degrees) == degs
        r = len(degs)
        assert np.array_equal(mod_p_orthogonality(t), (G.order % t.prime) * np.eye(r, dtype=np.int64))
        err = float(np.abs(complex_orthogonality(ct) - G.order * np.eye(r)).max())
        worst = max(worst, err)
        assert err < 1e-8
        assert sum(d * d for d in ct.degrees) == G.order
        assert time.perf_counter() - t0 < 5.0
    return f"max lifted residual {worst:.1e}"


@criterion(3, "triple-count formula equals brute force, orders <= 60")
def test_criterion_3_formula():
    S3 = grp("S3")
    T = S3.classes
    ct = character_table(S3)
    hand = [("1A", "3A", 2), ("3A", "3A", 2), ("2A", "3A", 0)]
    for d, c, n in hand:
        D, C = T.lookup(d), T.lookup(c)
        assert triple_count_brute(S3, T, D, C) == n
        f = triple_count_formula(ct, T, D, C)
        assert round(f) == n and abs(f - n) < 1e-6
    pairs = 0
    worst = 0.0
    for name in UP_TO_60:
        G = grp(name)
        T = G.classes
        ct = character_table(G)
        for D, C in itertools.product(range(len(T)), repeat=2):
            n = triple_count_brute(G, T, D, C)
            f = triple_count_formula(ct, T, D, C)
            rel = abs(f - n) / max(1, n)
            worst = max(worst, rel)
            assert round(f) == n and rel < 1e-6, (name, T.names[D], T.names[C], f, n)
            pairs += 1
    return f"{len(UP_TO_60)} groups, {pairs} class pairs, max relative residual {worst:.1e}"


@criterion(4, "Galois invariance of triple counts")
def test_criterion_4_galois():
    t0 = time.perf_counter()
    checked = 0
    for name in UP_TO_60:
        G = grp(name)
        T = G.classes
        ct = character_table(G)
        # the power map depends on e modulo exp(G), so these residues cover every e prime to |G|
        es = [e for e in range(1, G.exponent + 1) if math.gcd(e, G.order) == 1]
        for D, C, e in itertools.product(range(len(T)), range(len(T)), es):
            r = galois_check(G, D, C, e, ct)
            assert r.N_brute == r.N_brute_e and r.holds, r.to_dict()
            checked += 1
    A5 = grp("A5")
    T = A5.classes
    r = galois_check(A5, T.lookup("5A"), T.lookup("5B"), 2)
    assert r.holds and (r.D_e, r.C_e) == ("5B", "5A") and r.N_brute == r.N_brute_e
    assert time.perf_counter() - t0 < 30.0
    return f"{checked} (G, D, C, e) cases; A5 5A,5B e=2 -> 5B,5A with N = {r.N_brute}"


@criterion(5, "iterated power-commutator words rational on orders <= 24")
def test_criterion_5_power_commutator_words():
    t0 = time.perf_counter()
    groups = catalog_upto(24)
    total = 0
    for exps in itertools.product((1, 2), repeat=2):
        rep = corollary_check(exps, groups)
        assert not rep.skipped
        assert rep.holds, [v.to_dict() for v in rep.failures()]
        total += len(rep.verdicts)
    assert time.perf_counter() - t0 < 60.0
    return f"{total} verdicts over {len(groups)} groups"


@criterion(6, "value-count inequalities on orders <= 60")
def test_criterion_6_concise_inequalities():
    n = 0
    for name, text in itertools.product(UP_TO_60, CONCISE_WORDS):
        r = lemma_concise_report(grp(name), parse_word(text))
        assert r.kernel_equals_centralizer, (name, text)
        assert r.passed, (name, text, [q.to_dict() for q in r.inequalities])
        n += 1
    return f"{n} (G, w) reports"


@criterion(7, "weak-rationality routes agree; exponent normalization")
def test_criterion_7_weak_rationality():
    words = CONCISE_WORDS + ["x1^3", "x1^2 x2^2", "[x1,x2]^2", "x1 x2 x1^-1 x2^2"]
    agree = 0
    for name, text in itertools.product(UP_TO_60, words):
        G, w = grp(name), parse_word(text)
        assert weakly_rational_on(G, w).holds == weakly_rational_by_definition(G, w).holds, (name, text)
        agree += 1
    triples = 0
    for N in range(1, 61):
        for o in (d for d in range(1, N + 1) if N % d == 0):
            for e in range(1, 2 * N + 1):
                if math.gcd(e, o) != 1:
                    continue
                e1 = normalize_exponent(e, o, N)
                assert math.gcd(e1, N) == 1 and (e1 - e) % o == 0, (e, o, N)
                triples += 1
    return f"{agree} instances agree; {triples} (e, |g|, |G|) triples"


@criterion(8, "power closure of class unions in A5 and PSL(2,7)")
def test_criterion_8_power_closed():
    A5 = grp("A5")
    r = power_closed(A5, class_union(A5, ["1A", "3A"]))
    assert r.power_closed and r.conjugation_closed
    r = power_closed(A5, class_union(A5, ["1A", "5A"]))
    assert not r.power_closed and r.witness.e == 2
    G = grp("PSL(2,7)")
    T = G.classes
    fours = [T.names[k] for k in range(len(T)) if T.rep_orders[k] == 4]
    assert fours == ["4A"]
    r = power_closed(G, class_union(G, ["1A", "4A"]))
    assert r.power_closed and r.conjugation_closed
    return "PSL(2,7) {1}+4A power closed: true (flagged: p = 7 case)"


@criterion(9, "no word rational but not weakly rational")
def test_criterion_9_consistency():
    words = CONCISE_WORDS + ["x1^3", "x1^2 x2^2", "[x1,x2]^2", "x1 x2 x1^-1 x2^2", "[x1,x2,x1]"]
    words += [gamma_power_word(e).text for e in itertools.product((1, 2), repeat=2)]
    n = 0
    for name, text in itertools.product(UP_TO_60, words):
        G, w = grp(name), parse_word(text)
        full = rational_on(G, w)
        weak = weakly_rational_on(G, w)
        assert not (full.holds and not weak.holds), (name, text)
        n += 1
    return f"{n} (G, w) instances"
