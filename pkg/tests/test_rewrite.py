import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncgrowth.core import Alphabet, MonomialOrder, NcPoly, is_homogeneous, poly_mul_word
from ncgrowth.presentation import parse_poly
from ncgrowth.rewrite import (
    CompletionError,
    RewriteRule,
    RewriteSystem,
    ambiguities,
    complete,
    is_irreducible,
    orient,
    reduce,
)

from conftest import ideal_component

XY = Alphabet.of("x", "y")
ABC = Alphabet.of("a", "b", "c")
DL = MonomialOrder("deglex", XY)
SL = MonomialOrder("shortlex", ABC)


def P(text, alphabet=ABC):
    return parse_poly(text, alphabet)


def test_orient_f1_f2():
    r1 = orient(P("x^3*y - 3*x^2*y*x + 3*x*y*x^2 - y*x^3", XY), DL)
    assert r1.lhs == XY.word("yxxx")
    assert r1.rhs == P("x^3*y - 3*x^2*y*x + 3*x*y*x^2", XY)
    r2 = orient(P("y^3*x - 3*y^2*x*y + 3*y*x*y^2 - x*y^3", XY), DL)
    assert r2.lhs == XY.word("yyyx")
    assert r2.rhs == P("3*y^2*x*y - 3*y*x*y^2 + x*y^3", XY)


def test_orient_monomial_and_zero():
    r = orient(P("a*c*c"), SL)
    assert r.lhs == ABC.word("acc") and r.rhs == NcPoly.zero()
    with pytest.raises(ValueError):
        orient(NcPoly.zero(), SL)


def test_orient_normalizes_leading_coefficient():
    r = orient(P("2*b*b*a - 4*a*b*b"), SL)
    assert r.rhs == P("2*a*b*b")


def test_rule_invariant_rejects_bad_rhs():
    with pytest.raises(ValueError):
        RewriteSystem(SL, [RewriteRule(ABC.word("ab"), P("b*a"))])


def test_reduce_examples(A, A13):
    R = A.rewrite_system()
    assert reduce(P("b*b*a"), R) == P("a*b*b")
    assert reduce(P("b*b*a*c*c"), A13) == NcPoly.zero()
    # the bba-first path lands on aacac, which the raw system cannot reduce
    assert reduce(P("a*a*c*a*c"), R) == P("a*a*c*a*c")
    assert reduce(P("a*a*c*a*c"), A13) == NcPoly.zero()
    w = P("b*a*b")
    assert reduce(w, A13) == w


def test_ambiguity_examples():
    sys = RewriteSystem.from_relators([P("b*b*a - a*b*b"), P("a*c*c")], SL)
    words = {(a.kind, a.word) for a in ambiguities(sys, 5)}
    assert ("overlap", ABC.word("bbacc")) in words

    single = RewriteSystem.from_relators([P("x^3*y - 3*x^2*y*x + 3*x*y*x^2 - y*x^3", XY)], DL)
    assert ambiguities(single, 10) == []

    pair = RewriteSystem.from_relators([P("a*c*c"), P("a*a*c*a*c")], SL)
    assert not [a for a in ambiguities(pair, 10) if a.kind == "inclusion"]
    abcx = Alphabet.of("a", "b", "c", "x")
    o = MonomialOrder("shortlex", abcx)
    incl = RewriteSystem.from_relators([parse_poly("a*c*c", abcx), parse_poly("x*a*c*c*x", abcx)], o)
    found = [a for a in ambiguities(incl, 10) if a.kind == "inclusion"]
    assert [a.word for a in found] == [abcx.word("xaccx")]


def test_ambiguity_shape(A13):
    for amb in ambiguities(A13, 13):
        l1 = A13.rules[amb.rules[0]].lhs
        l2 = A13.rules[amb.rules[1]].lhs
        w = amb.word
        if amb.kind == "overlap":
            k = len(l1) + len(l2) - len(w)
            assert 0 < k < min(len(l1), len(l2))
            assert w[: len(l1)] == l1 and w[-len(l2):] == l2
        else:
            assert w == l1
            assert any(w[i:i + len(l2)] == l2 for i in range(len(w)))


def test_kobayashi_completion(A13):
    got = {(ABC.word("".join("abc"[i] for i in r.lhs)), r.rhs) for r in A13.rules}
    base = {
        (ABC.word("bba"), P("a*b*b")),
        (ABC.word("bbc"), P("a*c*a")),
        (ABC.word("aba"), NcPoly.zero()),
        (ABC.word("abc"), NcPoly.zero()),
        (ABC.word("cba"), NcPoly.zero()),
        (ABC.word("cbc"), NcPoly.zero()),
    }
    family = {(ABC.word("a" * n + "c" + "a" * (n - 1) + "c"), NcPoly.zero()) for n in range(1, 7)}
    assert got == base | family
    assert A13.completed_to == 13


def test_complete_fixed_point():
    sys = RewriteSystem.from_relators([P("a*b - b*a")], SL)
    done = complete(sys, 6)
    assert [r.lhs for r in done.rules] == [r.lhs for r in sys.rules]
    assert [r.rhs for r in done.rules] == [r.rhs for r in sys.rules]


def test_complete_errors():
    nonhom = RewriteSystem.from_relators([P("a*b - c")], SL)
    with pytest.raises(CompletionError):
        complete(nonhom, 5)
    sys = RewriteSystem.from_relators([P("a*c*c")], SL)
    with pytest.raises(CompletionError):
        complete(sys, 2)


def test_is_irreducible(A13):
    assert is_irreducible(ABC.word("bab"), A13)
    assert not is_irreducible(ABC.word("bbacab"), A13)
    assert is_irreducible((), A13)


def test_completed_system_is_interreduced(U12, A13):
    for sys in (U12, A13):
        lhss = [r.lhs for r in sys.rules]
        for i, l in enumerate(lhss):
            for j, m in enumerate(lhss):
                if i != j:
                    assert not any(l[k:k + len(m)] == m for k in range(len(l) - len(m) + 1))
        for r in sys.rules:
            for w in r.rhs:
                assert sys.order.compare(w, r.lhs) < 0
                assert is_irreducible(w, sys)


def test_local_confluence_at_bound(U12, A13):
    for sys, N in ((U12, 12), (A13, 13)):
        for amb in ambiguities(sys, N):
            assert reduce(amb.reducts[0], sys) == reduce(amb.reducts[1], sys)


@pytest.mark.parametrize("name,N", [("U", 8), ("A", 7)])
def test_ideal_membership_soundness(name, N, request):
    pres = request.getfixturevalue(name)
    sys = complete(pres.rewrite_system(), N)
    alphabet = pres.alphabet
    spans = {}
    for r in sys.rules:
        n = sys.degree(r.lhs)
        if n not in spans:
            spans[n] = ideal_component(pres.relators, alphabet, n)
        assert spans[n].contains(r.as_poly()), r.lhs


@pytest.mark.parametrize("name,N", [("U", 8), ("A", 7)])
def test_normal_words_complement_the_ideal(name, N, request):
    # number of irreducible words of degree n = n-th dimension of the quotient
    import itertools

    pres = request.getfixturevalue(name)
    sys = complete(pres.rewrite_system(), N)
    m = len(pres.alphabet)
    for n in range(N + 1):
        irr = sum(is_irreducible(w, sys) for w in itertools.product(range(m), repeat=n))
        assert irr == m ** n - ideal_component(pres.relators, pres.alphabet, n).rank


def test_determinism(U):
    a = complete(U.rewrite_system(), 9)
    b = complete(U.rewrite_system(), 9)
    assert a.format_rules() == b.format_rules()
    assert a.rules == b.rules


def test_rule_order_sorted(U12):
    keys = [(U12.degree(r.lhs), U12.order.key(r.lhs)) for r in U12.rules]
    assert keys == sorted(keys)


abc_words = st.lists(st.integers(0, 2), min_size=0, max_size=9).map(tuple)
abc_polys = st.dictionaries(abc_words, st.integers(-3, 3), max_size=6).map(NcPoly)
xy_words = st.lists(st.integers(0, 1), min_size=0, max_size=10).map(tuple)


@settings(deadline=None)
@given(abc_polys)
def test_reduce_idempotent(A13, p):
    q = reduce(p, A13)
    assert reduce(q, A13) == q
    assert all(is_irreducible(w, A13) for w in q)


@settings(deadline=None)
@given(st.integers(0, 10), st.data())
def test_reduce_preserves_homogeneity(U12, n, data):
    words = data.draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n).map(tuple), max_size=5))
    coefs = data.draw(st.lists(st.integers(-4, 4), min_size=len(words), max_size=len(words)))
    p = NcPoly(dict(zip(words, coefs)))
    q = reduce(p, U12)
    assert q == NcPoly.zero() or is_homogeneous(q, XY) == n


@settings(deadline=None, max_examples=50)
@given(xy_words, xy_words, xy_words)
def test_reduce_respects_ideal(U12, u, w, v):
    # u*w*v and u*NF(w)*v have the same normal form
    if len(u) + len(w) + len(v) > 12:
        return
    lhs = reduce(NcPoly.monomial(u + w + v), U12)
    rhs = reduce(poly_mul_word(u, reduce(NcPoly.monomial(w), U12), v), U12)
    assert lhs == rhs
