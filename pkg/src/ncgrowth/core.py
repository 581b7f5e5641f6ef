"""Words over weighted alphabets, exact-rational noncommutative polynomials
and monomial orders.

Words are plain tuples of generator indices; the index doubles as the
generator's precedence in every order.  Polynomials are immutable mappings
from words to nonzero :class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

Word = Tuple[int, ...]
EMPTY: Word = ()


class MalformedWordError(ValueError):
    pass


class AlphabetMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int = 1

    def __post_init__(self):
        if not self.name:
            raise ValueError("generator name must be nonempty")
        if int(self.degree) != self.degree or self.degree < 1:
            raise ValueError(f"generator {self.name!r}: degree must be a positive integer")


@dataclass(frozen=True)
class Alphabet:
    """Ordered generators; list position is precedence (earlier is smaller)."""

    generators: Tuple[Generator, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")

    @classmethod
    def of(cls, *names: str, degrees: Sequence[int] | None = None) -> "Alphabet":
        degrees = degrees or [1] * len(names)
        return cls(tuple(Generator(n, d) for n, d in zip(names, degrees)))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    def word(self, text: str | Sequence[str]) -> Word:
        """Word from a string of one-character names or a sequence of names."""
        return tuple(self.index(n) for n in text)

    def format_word(self, w: Word, sep: str = "") -> str:
        if not w:
            return "1"
        return sep.join(self.generators[i].name for i in w)


def word_degree(w: Word, alphabet: Alphabet) -> int:
    degs = alphabet.degrees
    total = 0
    for i in w:
        if not 0 <= i < len(degs):
            raise MalformedWordError(f"letter index {i} outside alphabet of size {len(degs)}")
        total += degs[i]
    return total


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """deglex compares weighted degree first, shortlex compares length first;
    ties are broken lexicographically by generator precedence."""

    kind: str
    alphabet: Alphabet

    def __post_init__(self):
        if self.kind not in ("deglex", "shortlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")

    def key(self, w: Word):
        if self.kind == "shortlex":
            return (len(w), w)
        return (word_degree(w, self.alphabet), w)

    def heap_key(self, w: Word):
        """Ascending heap key that pops the order-largest word first.

        Negating letters reverses lex order; safe because two distinct
        words of equal length/degree are never proper prefixes of one another.
        """
        k = self.key(w)[0]
        return (-k, tuple(-i for i in w))

    def compare(self, w1: Word, w2: Word) -> int:
        k1, k2 = self.key(w1), self.key(w2)
        return (k1 > k2) - (k1 < k2)

    def max_word(self, words: Iterable[Word]) -> Word:
        return max(words, key=self.key)


def compare(order: MonomialOrder, w1: Word, w2: Word) -> int:
    """-1, 0 or 1 as w1 is less than, equal to or greater than w2."""
    n = len(order.alphabet)
    for w in (w1, w2):
        if any(not 0 <= i < n for i in w):
            raise AlphabetMismatchError("word contains letters outside the order's alphabet")
    return order.compare(w1, w2)


# ---------------------------------------------------------------------------
# polynomials


def _fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class NcPoly(Mapping[Word, Fraction]):
    """Noncommutative polynomial with rational coefficients.

    Behaves as a read-only mapping ``word -> coefficient`` holding only
    nonzero coefficients, so equality is equality of term mappings.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable[Tuple[Word, object]] = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            w = tuple(w)
            acc[w] = acc.get(w, 0) + _fraction(c)
        self._terms = {w: c for w, c in acc.items() if c != 0}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "NcPoly":
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, w: Word, c=1) -> "NcPoly":
        return cls({tuple(w): c})

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls._wrap({})

    def __getitem__(self, w):
        return self._terms[w]

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "NcPoly(0)"
        return f"NcPoly({self._terms!r})"

    def terms(self) -> dict:
        """A fresh mutable copy of the term dictionary."""
        return dict(self._terms)

    def __add__(self, other: "NcPoly") -> "NcPoly":
        return poly_add(self, other)

    def __neg__(self):
        return poly_scale(self, -1)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return poly_add(self, other, -1)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return poly_mul(self, other)
        return poly_scale(self, other)

    def __rmul__(self, c):
        return poly_scale(self, c)

    def words_sorted(self, order: MonomialOrder, reverse: bool = True):
        return sorted(self._terms, key=order.key, reverse=reverse)

    def leading(self, order: MonomialOrder) -> Tuple[Word, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        w = order.max_word(self._terms)
        return w, self._terms[w]

    def substitute(self, images: Mapping[int, "NcPoly"]) -> "NcPoly":
        """Replace letter i by images[i] (letters without an image stay)."""
        out: dict = {}
        for w, c in self._terms.items():
            prod = {EMPTY: c}
            for letter in w:
                img = images.get(letter)
                if img is None:
                    prod = {u + (letter,): d for u, d in prod.items()}
                    continue
                nxt: dict = {}
                for u, d in prod.items():
                    for v, e in img._terms.items():
                        k = u + v
                        nxt[k] = nxt.get(k, 0) + d * e
                prod = nxt
            for u, d in prod.items():
                out[u] = out.get(u, 0) + d
        return NcPoly._wrap({w: c for w, c in out.items() if c != 0})


def poly_add(p: NcPoly, q: NcPoly, scale=1) -> NcPoly:
    """p + scale*q."""
    scale = _fraction(scale)
    out = dict(p._terms)
    for w, c in q._terms.items():
        v = out.get(w, 0) + scale * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return NcPoly._wrap(out)


def poly_scale(p: NcPoly, c) -> NcPoly:
    c = _fraction(c)
    if c == 0:
        return NcPoly.zero()
    return NcPoly._wrap({w: c * v for w, v in p._terms.items()})


def poly_mul_word(left: Word, p: NcPoly, right: Word) -> NcPoly:
    left, right = tuple(left), tuple(right)
    return NcPoly._wrap({left + w + right: c for w, c in p._terms.items()})


def poly_mul(p: NcPoly, q: NcPoly) -> NcPoly:
    out: dict = {}
    for u, c in p._terms.items():
        for v, d in q._terms.items():
            w = u + v
            out[w] = out.get(w, 0) + c * d
    return NcPoly._wrap({w: c for w, c in out.items() if c != 0})


def is_homogeneous(p: NcPoly, alphabet: Alphabet) -> int | None:
    """Common weighted degree of all terms, 0 for the zero polynomial,
    ``None`` when the terms have mixed degrees."""
    degs = {word_degree(w, alphabet) for w in p}
    if not degs:
        return 0
    if len(degs) == 1:
        return degs.pop()
    return None


def words_of_degree(alphabet: Alphabet, n: int) -> list:
    """All words of weighted degree exactly n, in ascending lex order."""
    degs = alphabet.degrees
    table: list = [[EMPTY]] + [[] for _ in range(n)]
    for k in range(1, n + 1):
        for i, d in enumerate(degs):
            if d <= k:
                table[k].extend(w + (i,) for w in table[k - d])
    return sorted(table[n])
