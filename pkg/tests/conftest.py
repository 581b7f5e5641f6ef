import itertools
from functools import lru_cache

import pytest

from ncgrowth.core import Alphabet, MonomialOrder, NcPoly, poly_mul_word, words_of_degree
from ncgrowth.linalg import Echelon
from ncgrowth.presentation import load_presentation
from ncgrowth.rewrite import complete


@pytest.fixture(scope="session")
def U():
    return load_presentation("builtin:U")


@pytest.fixture(scope="session")
def A():
    return load_presentation("builtin:A")


@pytest.fixture(scope="session")
def U12(U):
    return complete(U.rewrite_system(), 12)


@pytest.fixture(scope="session")
def A13(A):
    return complete(A.rewrite_system(), 13)


def ideal_component(relators, alphabet, n):
    """Echelon basis of the degree-n part of the two-sided ideal, built from
    every product u*f*v directly (no rewriting involved)."""
    e = Echelon()
    for f in relators:
        degs = {sum(alphabet.degrees[i] for i in w) for w in f}
        if not degs:
            continue
        (df,) = degs
        for a in range(n - df + 1):
            for u in words_of_degree(alphabet, a):
                for v in words_of_degree(alphabet, n - df - a):
                    e.add(poly_mul_word(u, f, v))
    return e


def partitions_brute(n, largest=None):
    """Number of partitions of n by explicit recursion over the largest part."""
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(partitions_brute(n - k, k) for k in range(1, min(n, largest) + 1))


def pbw_monomials_brute(degrees, n):
    """Multisets of basis elements (given by their degrees) of total degree n."""
    degrees = sorted(d for d in degrees if d <= n)

    @lru_cache(maxsize=None)
    def count(rest, start):
        if rest == 0:
            return 1
        return sum(count(rest - degrees[i], i) for i in range(start, len(degrees))
                   if degrees[i] <= rest)

    return count(n, 0)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s[1:3])):
            terminalreporter.write_line(line)
