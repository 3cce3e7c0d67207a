"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line; the lines are repeated in
the pytest terminal summary.  Runtime budgets are asserted alongside the
exact mathematical checks.
"""

import itertools
import random
import time

import pytest

from mackext.basis import all_words, count_basis
from mackext.group import make_context
from mackext.oracle import ext_dims
from mackext.rewrite import check_confluence, check_relations, is_admissible, multiply, normal_form, random_word
from mackext.series import poincare_coeffs, recurrence_check
from mackext.words import Element

RESULTS = []


def report(number, title, ok, detail, elapsed, budget):
    within = elapsed <= budget
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {number} ({title}): {detail}; {elapsed:.1f}s of {budget}s"
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_criterion_1_basis_series():
    t0 = time.perf_counter()
    bad = []
    for p, r in itertools.product((3, 5, 7), (1, 2, 3)):
        ctx = make_context(p, r)
        series = list(poincare_coeffs(ctx, 10))
        counts = [count_basis(ctx, n) for n in range(11)]
        if counts != series:
            bad.append((p, r))
    spot = list(poincare_coeffs(make_context(3, 2), 6)) == [1, 2, 5, 10, 21, 42, 85]
    ok = not bad and spot
    report(1, "basis-series agreement", ok, f"9 (p,r) pairs, n<=10, mismatches={bad}", time.perf_counter() - t0, 60)


def test_criterion_2_oracle():
    t0 = time.perf_counter()
    rows = []
    for p, r, n in [(3, 1, 8), (5, 1, 6), (3, 2, 4)]:
        ctx = make_context(p, r)
        dims = ext_dims(ctx, n)
        counts = [count_basis(ctx, k) for k in range(n + 1)]
        rows.append(((p, r), dims, dims == counts))
    ok = all(r[2] for r in rows) and rows[2][1] == [1, 2, 5, 10, 21]
    detail = ", ".join(f"{pr}:{d}" for pr, d, _ in rows)
    report(2, "oracle agreement", ok, detail, time.perf_counter() - t0, 600)


def test_criterion_3_relations():
    t0 = time.perf_counter()
    checked, failures = 0, []
    for p, r in itertools.product((3, 5), (1, 2, 3)):
        rep = check_relations(make_context(p, r))
        checked += rep.checked
        failures += [((p, r), f) for f in rep.failures]
    report(3, "relation soundness", not failures, f"{checked} instances, {len(failures)} nonzero", time.perf_counter() - t0, 60)


def test_criterion_4_well_defined():
    t0 = time.perf_counter()
    failures, checked = [], 0
    for k, (p, r) in enumerate([(3, 2), (5, 2), (3, 3)]):
        rep = check_confluence(make_context(p, r), sample_count=1000, max_degree=8, seed=1000 + k)
        checked += rep.checked
        failures += [((p, r), f) for f in rep.failures]
    ok = not failures and checked == 3000
    report(4, "normal-form well-definedness", ok, f"{checked} words x 3 strategies, {len(failures)} failures", time.perf_counter() - t0, 300)


def test_criterion_5_generation():
    t0 = time.perf_counter()
    ctx = make_context(3, 2)
    bad, total = [], 0
    for n in range(6):
        bound = count_basis(ctx, n)
        for w in all_words(ctx, n):
            total += 1
            nf = normal_form(Element.from_word(ctx, w))
            if not all(is_admissible(v) for v in nf.support()) or len(nf) > bound:
                bad.append(w)
    report(5, "generation", not bad, f"{total} words of degree <=5, {len(bad)} bad", time.perf_counter() - t0, 120)


def test_criterion_6_recurrence():
    t0 = time.perf_counter()
    bad = []
    for p, r in itertools.product((3, 5, 7), (2, 3, 4)):
        rep = recurrence_check(make_context(p, r), 30)
        if not rep.ok:
            bad.append((p, r, rep.first_failure))
    report(6, "recurrence", not bad, f"9 (p,r) pairs, n<=30, failures={bad}", time.perf_counter() - t0, 5)


def _random_element(ctx, rng, max_degree):
    e = Element.zero(ctx)
    for _ in range(rng.randint(1, 3)):
        e = e + Element.from_word(ctx, random_word(ctx, rng, max_degree), rng.randrange(1, ctx.p))
    return e


def test_criterion_7_algebra_laws():
    t0 = time.perf_counter()
    ctx = make_context(3, 2)
    rng = random.Random(7)
    bad = 0
    one = Element.one(ctx)
    for _ in range(200):
        a, b, c = (_random_element(ctx, rng, 4) for _ in range(3))
        if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
            bad += 1
        if not (multiply(one, a) == multiply(a, one) == normal_form(a)):
            bad += 1
    report(7, "associativity and unit", bad == 0, f"200 triples, {bad} failures", time.perf_counter() - t0, 120)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
