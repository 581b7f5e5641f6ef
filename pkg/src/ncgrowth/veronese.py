"""Quadratic presentations of Veronese subalgebras.

For a presentation with degree-1 generators and homogeneous relators f_i of
degree d_i <= d, the d-th Veronese subalgebra is generated by the degree-d
words ("letters") subject to

* linear relations  v f_i w with |v| + |w| = d - d_i, and
* quadratic relations v f_i w with |v| + |w| = 2d - d_i, each degree-2d word
  read as (first d letters)(last d letters).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Alphabet, MonomialOrder, NcPoly, Word, is_homogeneous, poly_mul_word, words_of_degree
from .growth import DimensionSeries, normal_word_counts
from .linalg import Echelon
from .presentation import Presentation, parse_relation_lines
from .rewrite import RewriteSystem, complete


class UnsupportedPresentationError(ValueError):
    pass


@dataclass(frozen=True)
class VeroneseLetter:
    source: Word
    name: str


@dataclass(frozen=True)
class QuadPresentation:
    base: Alphabet
    d: int
    letters: Tuple[VeroneseLetter, ...]
    linear_relations: Tuple[NcPoly, ...]
    quadratic_relations: Tuple[NcPoly, ...]
    eliminated: Dict[str, NcPoly] = field(default_factory=dict)
    removed: Tuple[VeroneseLetter, ...] = ()

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet.of(*(l.name for l in self.letters))

    @property
    def full_letters(self) -> Tuple[VeroneseLetter, ...]:
        return tuple(sorted(self.letters + self.removed, key=lambda l: l.source))

    @property
    def full_alphabet(self) -> Alphabet:
        return Alphabet.of(*(l.name for l in self.full_letters))

    @property
    def g(self) -> int:
        return len(self.letters)

    def expand(self, p: NcPoly) -> NcPoly:
        """Rewrite a polynomial in letters as one in the base generators."""
        src = [l.source for l in self.letters]
        return NcPoly({tuple(itertools.chain.from_iterable(src[i] for i in w)): c for w, c in p.items()})

    def to_current(self, p: NcPoly) -> NcPoly:
        """Map a polynomial over ``full_alphabet`` into the current letters,
        substituting eliminated letters."""
        full = self.full_letters
        pos = {l.name: i for i, l in enumerate(self.letters)}
        images = {}
        for i, l in enumerate(full):
            if l.name in pos:
                images[i] = NcPoly.monomial((pos[l.name],))
            else:
                images[i] = self.eliminated[l.name]
        return p.substitute(images)


def letter_names(base: Alphabet, d: int, scheme: str = "auto") -> List[str]:
    """Names for the degree-d words of ``base`` in lex order.

    ``block`` scheme: uppercase first generator followed by the position
    counted down within the block of words sharing that first generator
    (for x < y and d = 4 this gives x^4 = X8, ..., x*y^3 = X1, y*x^3 = Y8,
    ..., y^4 = Y1).  ``word`` scheme: the concatenated generator names.
    """
    words = words_of_degree(base, d)
    names = base.names
    block_ok = (all(len(n) == 1 for n in names)
                and len({n.upper() for n in names}) == len(names)
                and all(n.upper().isalpha() for n in names))
    if scheme == "auto":
        scheme = "block" if block_ok else "word"
    if scheme == "block":
        if not block_ok:
            raise ValueError("block naming needs distinct one-letter generator names")
        size = len(names) ** (d - 1)
        return [names[w[0]].upper() + str(size - k % size) for k, w in enumerate(words)]
    sep = "" if all(len(n) == 1 for n in names) else "_"
    return [sep.join(names[i] for i in w) for w in words]


def veronese_dims(h: DimensionSeries, d: int, M: int) -> DimensionSeries:
    if d < 1:
        raise ValueError("d >= 1 required")
    if len(h) <= d * M:
        raise ValueError(f"series reaches degree {len(h) - 1}, need {d * M}")
    return DimensionSeries(tuple([1] + [h.values[d * m] for m in range(1, M + 1)]))


def _placements(base: Alphabet, relator: NcPoly, slack: int):
    for a in range(slack + 1):
        for v in words_of_degree(base, a):
            for w in words_of_degree(base, slack - a):
                yield poly_mul_word(v, relator, w)


def veronese_presentation(pres: Presentation, d: int, naming: str = "auto") -> QuadPresentation:
    base = pres.alphabet
    if any(g.degree != 1 for g in base):
        raise UnsupportedPresentationError("Veronese construction needs degree-1 generators")
    relators = [p for p in pres.relators if p]
    degs = []
    for p in relators:
        k = is_homogeneous(p, base)
        if k is None:
            raise UnsupportedPresentationError("relators must be homogeneous")
        degs.append(k)
    if degs and d < max(degs):
        raise ValueError(f"d = {d} is below the largest relator degree {max(degs)}")

    words = words_of_degree(base, d)
    letter_of = {w: i for i, w in enumerate(words)}
    names = letter_names(base, d, naming)
    letters = tuple(VeroneseLetter(w, n) for w, n in zip(words, names))

    linear, quadratic = [], []
    for f, df in zip(relators, degs):
        for p in _placements(base, f, d - df):
            linear.append(NcPoly({(letter_of[w],): c for w, c in p.items()}))
        for p in _placements(base, f, 2 * d - df):
            quadratic.append(NcPoly({(letter_of[w[:d]], letter_of[w[d:]]): c for w, c in p.items()}))
    return QuadPresentation(base, d, letters, tuple(linear), tuple(quadratic))


def eliminate_linear(qp: QuadPresentation) -> QuadPresentation:
    """Solve the linear relations for their largest letters and substitute.

    Letters killed by monomial relators map to zero.  The result carries no
    linear relations and only the surviving letters.
    """
    if not qp.linear_relations:
        return qp
    n = len(qp.letters)
    solved: Dict[int, Dict[int, Fraction]] = {}  # pivot letter -> combination of others
    for rel in qp.linear_relations:
        row: Dict[int, Fraction] = {}
        for (i,), c in rel.items():
            for j, e in (solved[i].items() if i in solved else [(i, Fraction(1))]):
                row[j] = row.get(j, 0) + c * e
        row = {k: v for k, v in row.items() if v}
        if not row:
            continue
        piv = max(row)
        inv = -1 / row.pop(piv)
        expr = {k: v * inv for k, v in row.items()}
        for other in solved.values():
            c = other.pop(piv, None)
            if c:
                for k, v in expr.items():
                    nv = other.get(k, 0) + c * v
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        solved[piv] = expr

    kept = [i for i in range(n) if i not in solved]
    new_index = {old: k for k, old in enumerate(kept)}
    images = {}
    for i in range(n):
        if i in solved:
            images[i] = NcPoly({(new_index[j],): c for j, c in solved[i].items()})
        else:
            images[i] = NcPoly.monomial((new_index[i],))
    quads, seen = [], set()
    for rel in qp.quadratic_relations:
        p = rel.substitute(images)
        if p and p not in seen:
            seen.add(p)
            quads.append(p)
    # earlier eliminations are expressed in qp.letters; re-express them
    eliminated = {name: p.substitute(images) for name, p in qp.eliminated.items()}
    for i in sorted(solved):
        eliminated[qp.letters[i].name] = images[i]
    return QuadPresentation(
        qp.base, qp.d,
        tuple(qp.letters[i] for i in kept),
        (),
        tuple(quads),
        eliminated,
        qp.removed + tuple(qp.letters[i] for i in sorted(solved)),
    )


@dataclass
class RankReport:
    g: int
    rank: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.rank == self.expected


def relation_space(qp: QuadPresentation) -> Echelon:
    e = Echelon()
    for p in qp.quadratic_relations:
        e.add(p)
    return e


def relation_rank(qp: QuadPresentation, h2d: int) -> RankReport:
    """Rank of the quadratic relations inside the g^2 letter pairs, against
    the count g^2 - h_{2d} the algebra's dimension in degree 2d demands."""
    bad = [p for p in qp.quadratic_relations if any(len(w) != 2 for w in p)]
    if bad:
        raise ValueError("quadratic relations must be homogeneous of letter-degree 2")
    g = qp.g
    return RankReport(g, relation_space(qp).rank, g * g - h2d)


@dataclass
class QuadraticityReport:
    expected: Tuple[int, ...]
    observed: Tuple[int, ...]
    rules: int

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


def letter_system(qp: QuadPresentation) -> RewriteSystem:
    order = MonomialOrder("deglex", qp.alphabet)
    relators = list(qp.linear_relations) + list(qp.quadratic_relations)
    return RewriteSystem.from_relators(relators, order)


def verify_quadraticity(qp: QuadPresentation, h: DimensionSeries, d: int, M: int) -> QuadraticityReport:
    """Complete the letter presentation to letter-degree M and compare its
    normal-word counts with h_0, h_d, ..., h_{dM}."""
    if M < 3:
        raise ValueError("M >= 3 required (degrees 1 and 2 hold by construction)")
    expected = veronese_dims(h, d, M).values
    system = complete(letter_system(qp), M)
    observed = normal_word_counts(system, M).values
    return QuadraticityReport(tuple(expected), tuple(observed), len(system.rules))


@dataclass
class Verdict:
    label: str
    status: str  # "member", "inconsistent", "not-member", "parse-error", "malformed"
    detail: str = ""
    degree: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "member"


@dataclass
class AppendixReport:
    verdicts: List[Verdict]

    @property
    def quadratic(self) -> List[Verdict]:
        return [v for v in self.verdicts if v.degree == 2]

    @property
    def verified(self) -> int:
        return sum(v.ok for v in self.verdicts)

    @property
    def failures(self) -> List[Verdict]:
        return [v for v in self.verdicts if not v.ok]


def appendix_reconcile(qp: QuadPresentation, listed) -> AppendixReport:
    """Check listed relations against the computed ones.

    ``listed`` holds ``(label, poly, error)`` triples over ``qp.full_alphabet``
    (as returned by :func:`parse_relation_lines`).  Linear relations must
    vanish after substituting the eliminated letters; quadratic ones must lie
    in the span of the computed quadratic relations.
    """
    space = relation_space(qp)
    names = qp.alphabet.names
    out = []
    for label, poly, err in listed:
        if err is not None:
            out.append(Verdict(label, "parse-error", str(err)))
            continue
        lengths = {len(w) for w in poly}
        reduced = qp.to_current(poly)
        if lengths == {1}:
            if reduced:
                out.append(Verdict(label, "inconsistent", _show(reduced, names), 1))
            else:
                out.append(Verdict(label, "member", degree=1))
        elif lengths == {2}:
            rem = space.reduce(reduced)
            if rem:
                out.append(Verdict(label, "not-member", "residue " + _show(NcPoly(rem), names), 2))
            else:
                out.append(Verdict(label, "member", degree=2))
        else:
            out.append(Verdict(label, "malformed", f"letter degrees {sorted(lengths)}"))
    return AppendixReport(out)


def _show(p: NcPoly, names: Sequence[str]) -> str:
    from .presentation import format_poly

    return format_poly(p, Alphabet.of(*names))


def parse_appendix(text: str, qp: QuadPresentation):
    return parse_relation_lines(text, qp.full_alphabet)
