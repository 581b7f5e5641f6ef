"""Acceptance criteria, one test each.

Every test records a ``PASS``/``FAIL`` line with the measured numbers, the
pinned tolerance and the wall time; the lines are printed in pytest's
terminal summary (see conftest.py) and by ``python tests/test_acceptance.py``.
"""

import time

import pytest

from ncgrowth.core import Alphabet, MonomialOrder, NcPoly
from ncgrowth.growth import (
    DimensionSeries,
    brute_force_counts,
    classify_growth,
    cumulative,
    kobayashi_closed_form,
    normal_word_counts,
)
from ncgrowth.lie import build_L, graded_dims, jacobi_check, matrix_model_check
from ncgrowth.pbw import enveloping_series, exponent_fit
from ncgrowth.presentation import data_text, load_presentation, parse_poly
from ncgrowth.rewrite import RewriteSystem, complete, orient
from ncgrowth.veronese import (
    appendix_reconcile,
    eliminate_linear,
    parse_appendix,
    relation_rank,
    veronese_presentation,
    verify_quadraticity,
)

pytestmark = pytest.mark.acceptance

RESULTS = []


def record(n, ok, detail, elapsed, limit):
    ok = ok and elapsed < limit
    RESULTS.append(f"[{n:>2}] {'PASS' if ok else 'FAIL'}  {detail}  ({elapsed:.2f}s < {limit}s)")
    return ok


class timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def test_1_rule_orientation():
    with timer() as t:
        U = load_presentation("builtin:U")
        a = U.alphabet
        rules = [orient(f, U.order) for f in U.relators]
        want = [
            (a.word("yxxx"), parse_poly("x^3*y - 3*x^2*y*x + 3*x*y*x^2", a)),
            (a.word("yyyx"), parse_poly("x*y^3 - 3*y*x*y^2 + 3*y^2*x*y", a)),
        ]
        ok = [(r.lhs, r.rhs) for r in rules] == want
    assert record(1, ok, "f1, f2 orient to yx^3 -> ..., y^3x -> ... exactly", t.elapsed, 1)


def test_2_U_dimensions():
    with timer() as t:
        U = load_presentation("builtin:U")
        h = normal_word_counts(complete(U.rewrite_system(), 8), 8).values
        b = enveloping_series(graded_dims(build_L(8), 8), 8).coefficients
        want = (1, 2, 4, 8, 14, 24, 40, 64, 100)
        ok = h == b == want and h[4] == 14
    assert record(2, ok, f"normal words {h} == product formula {b}", t.elapsed, 10)


@pytest.fixture(scope="module")
def v4():
    return eliminate_linear(veronese_presentation(load_presentation("builtin:U"), 4))


def test_3_veronese_counts():
    with timer() as t:
        qp = eliminate_linear(veronese_presentation(load_presentation("builtin:U"), 4))
        rep = relation_rank(qp, 100)
        ok = (qp.g, rep.rank, rep.expected) == (14, 96, 96)
    assert record(3, ok, f"g = {qp.g}, rank = {rep.rank}, g^2 - h_8 = {rep.expected}", t.elapsed, 30)


def test_4_appendix_reconciliation(v4):
    with timer() as t:
        rep = appendix_reconcile(v4, parse_appendix(data_text("v4u_appendix.rel"), v4))
        quad = rep.quadratic
        verified = sum(v.ok for v in quad)
        failures = [f"({v.label}) {v.status}" for v in rep.failures]
        ok = len(quad) == 96 and verified >= 90
    detail = f"{verified}/{len(quad)} quadratic relations verify (need >= 90); flagged: {', '.join(failures) or 'none'}"
    assert record(4, ok, detail, t.elapsed, 30)


def test_5_kobayashi_completion():
    with timer() as t:
        A = load_presentation("builtin:A")
        a = A.alphabet
        sys = complete(A.rewrite_system(), 13)
        got = {(r.lhs, r.rhs) for r in sys.rules}
        base = {(a.word(l), parse_poly(r, a)) for l, r in
                [("bba", "a*b^2"), ("bbc", "a*c*a"), ("aba", "0"), ("abc", "0"), ("cba", "0"), ("cbc", "0")]}
        family = {(a.word("a" * n + "c" + "a" * (n - 1) + "c"), NcPoly.zero()) for n in range(1, 7)}
        ok = got == base | family
    assert record(5, ok, f"{len(got)} rules = 6 base + a^n c a^(n-1) c, n = 1..6", t.elapsed, 10)


def test_6_counting_oracles():
    with timer() as t:
        ok = True
        for key in ("A", "U"):
            sys = complete(load_presentation(f"builtin:{key}").rewrite_system(), 12)
            ok &= normal_word_counts(sys, 12) == brute_force_counts(sys, 12)
    assert record(6, ok, "automaton == brute force for A and U, degrees 0..12", t.elapsed, 60)


def test_7_closed_form_report():
    with timer() as t:
        sys = complete(load_presentation("builtin:A").rewrite_system(), 12)
        h = normal_word_counts(sys, 12)
        rows = [(n, kobayashi_closed_form(n), h[n]) for n in range(13)]
        deltas = [c - a for _, c, a in rows]
        ok = all(abs(d) <= 1 for d in deltas)
    table = " ".join(f"{n}:{c}/{a}" for n, c, a in rows)
    flagged = [n for n, d in enumerate(deltas) if d]
    detail = (f"n:closed/automaton {table}; delta in {sorted(set(deltas))}, |delta| <= 1; "
              f"flagged degrees {flagged[0]}..{flagged[-1]}" if flagged else "no discrepancy")
    assert record(7, ok, detail, t.elapsed, 30)


def test_8_lie_checks():
    with timer() as t:
        jac = jacobi_check(build_L(24), 24)
        mat = matrix_model_check(8)
        ok = jac.ok and mat.ok
    detail = f"Jacobi: {jac.checked} triples, {len(jac.violations)} violations; matrix model: {mat.checked} pairs, {len(mat.violations)} violations"
    assert record(8, ok, detail, t.elapsed, 10)


def test_9_growth_classification():
    with timer() as t:
        a = graded_dims(build_L(200), 200)
        U = classify_growth(cumulative(enveloping_series(a, 200).as_series()))
        poly = classify_growth(DimensionSeries(tuple((n + 1) ** 2 for n in range(65)), "cumulative"))
        free = RewriteSystem(MonomialOrder("deglex", Alphabet.of("a", "b", "c")), (), completed_to=40)
        expo = classify_growth(cumulative(normal_word_counts(free, 40)))
        ok = (U.label == "intermediate" and 0.4 <= U.alpha <= 0.6
              and poly.label == "polynomial" and expo.label == "exponential")
    detail = (f"U: {U.label}, alpha = {U.alpha:.3f} in [0.4, 0.6]; (n+1)^2: {poly.label} "
              f"(d = {poly.degree:.2f}); free 3 letters: {expo.label}")
    assert record(9, ok, detail, t.elapsed, 30)


def test_10_exponent_probe():
    with timer() as t:
        fits = [exponent_fit(d, 200) for d in (0, 1, 2)]
        ok = all(abs(f.alpha - f.target) <= 0.10 for f in fits)
    detail = "; ".join(f"d={f.d}: alpha = {f.alpha:.3f} vs {f.target:.3f} (+-0.10)" for f in fits)
    assert record(10, ok, detail, t.elapsed, 60)


def test_11_quadraticity_probe(v4):
    with timer() as t:
        U = load_presentation("builtin:U")
        hU = normal_word_counts(complete(U.rewrite_system(), 12), 12)
        rU = verify_quadraticity(v4, hU, 4, 3)
        A = load_presentation("builtin:A")
        hA = normal_word_counts(complete(A.rewrite_system(), 9), 9)
        qa = eliminate_linear(veronese_presentation(A, 3))
        rA = verify_quadraticity(qa, hA, 3, 3)
        ok = rU.ok and rA.ok and rU.expected[1:] == (14, 100, 504)
    detail = f"U d=4: {rU.observed} vs {rU.expected}; A d=3: {rA.observed} vs {rA.expected}"
    assert record(11, ok, detail, t.elapsed, 120)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
