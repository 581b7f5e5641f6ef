"""Oriented rewrite systems with polynomial right-hand sides.

Reduction to normal form, enumeration of overlap/inclusion ambiguities and
a degree-truncated completion procedure for homogeneous relators
(Buchberger / Knuth-Bendix style, ambiguities processed by ascending
superposition degree, FIFO within a degree).
"""

from __future__ import annotations

import heapq
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .core import (
    EMPTY,
    MonomialOrder,
    NcPoly,
    Word,
    is_homogeneous,
    word_degree,
)

log = logging.getLogger(__name__)


class CompletionError(ValueError):
    pass


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NcPoly

    def as_poly(self) -> NcPoly:
        """The relator ``lhs - rhs`` this rule encodes."""
        return NcPoly.monomial(self.lhs) - self.rhs


@dataclass(frozen=True)
class Ambiguity:
    kind: str  # "overlap" or "inclusion"
    rules: Tuple[int, int]
    word: Word
    reducts: Tuple[NcPoly, NcPoly]


def orient(relator: NcPoly, order: MonomialOrder) -> RewriteRule:
    """Solve a relator for its order-largest word."""
    if not relator:
        raise ValueError("cannot orient the zero relator")
    lhs, lc = relator.leading(order)
    inv = -1 / lc
    rhs = NcPoly._wrap({w: c * inv for w, c in relator.items() if w != lhs})
    return RewriteRule(lhs, rhs)


class _RuleIndex:
    """lhs lookup shared by reduction and irreducibility tests."""

    def __init__(self, rules: Iterable[Tuple[Word, NcPoly]] = ()):
        self.table: dict = {}
        self.lengths: List[int] = []
        for lhs, rhs in rules:
            self.add(lhs, rhs)

    def add(self, lhs: Word, rhs: NcPoly):
        if lhs in self.table:
            return
        self.table[lhs] = rhs
        if len(lhs) not in self.lengths:
            self.lengths.append(len(lhs))
            self.lengths.sort()

    def find(self, w: Word):
        """Leftmost (then shortest) lhs occurrence in w, or None."""
        table, n = self.table, len(w)
        for i in range(n):
            for L in self.lengths:
                if i + L > n:
                    break
                lhs = w[i:i + L]
                if lhs in table:
                    return i, lhs
        return None

    def normal_form(self, terms: dict, order: MonomialOrder) -> dict:
        """Full reduction of a term dict; consumes nothing, returns a new dict."""
        todo = {w: c for w, c in terms.items() if c}
        heap = [(order.heap_key(w), w) for w in todo]
        heapq.heapify(heap)
        out: dict = {}
        table = self.table
        while heap:
            _, w = heapq.heappop(heap)
            c = todo.pop(w, None)
            if c is None:
                continue
            hit = self.find(w)
            if hit is None:
                out[w] = c
                continue
            i, lhs = hit
            pre, post = w[:i], w[i + len(lhs):]
            for u, d in table[lhs].items():
                v = pre + u + post
                old = todo.get(v)
                if old is None:
                    todo[v] = c * d
                    heapq.heappush(heap, (order.heap_key(v), v))
                else:
                    nv = old + c * d
                    if nv:
                        todo[v] = nv
                    else:
                        del todo[v]
        return out


@dataclass(frozen=True)
class RewriteSystem:
    order: MonomialOrder
    rules: Tuple[RewriteRule, ...]
    completed_to: int = 0
    _index: _RuleIndex = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        for r in self.rules:
            if any(self.order.compare(w, r.lhs) >= 0 for w in r.rhs):
                raise ValueError(f"rule {r.lhs} -> ... has a term not below its lhs")
        object.__setattr__(self, "_index", _RuleIndex((r.lhs, r.rhs) for r in self.rules))

    @classmethod
    def from_relators(cls, relators: Iterable[NcPoly], order: MonomialOrder) -> "RewriteSystem":
        return cls(order, tuple(orient(p, order) for p in relators if p))

    @property
    def alphabet(self):
        return self.order.alphabet

    @property
    def lhs_words(self) -> List[Word]:
        return [r.lhs for r in self.rules]

    def degree(self, w: Word) -> int:
        return word_degree(w, self.alphabet)

    def reduce(self, p: NcPoly) -> NcPoly:
        return NcPoly._wrap(self._index.normal_form(dict(p.items()), self.order))

    def is_irreducible(self, w: Word) -> bool:
        return self._index.find(tuple(w)) is None

    def format_rules(self) -> List[str]:
        from .presentation import format_poly

        a = self.alphabet
        return [f"{format_poly(NcPoly.monomial(r.lhs), a)} -> {format_poly(r.rhs, a)}"
                for r in self.rules]


def reduce(p: NcPoly, system: RewriteSystem) -> NcPoly:
    return system.reduce(p)


def is_irreducible(w: Word, system: RewriteSystem) -> bool:
    return system.is_irreducible(w)


def _one_step(w: Word, pos: int, rule: RewriteRule) -> NcPoly:
    pre, post = w[:pos], w[pos + len(rule.lhs):]
    return NcPoly._wrap({pre + u + post: c for u, c in rule.rhs.items()})


def _overlaps(a: Word, b: Word):
    """Lengths k with 0 < k < min(|a|, |b|) and a[-k:] == b[:k]."""
    for k in range(1, min(len(a), len(b))):
        if a[-k:] == b[:k]:
            yield k


def _inclusions(big: Word, small: Word):
    n = len(small)
    for i in range(len(big) - n + 1):
        if big[i:i + n] == small:
            yield i


def ambiguities(system: RewriteSystem, max_degree: int) -> List[Ambiguity]:
    """All overlap and inclusion ambiguities of degree <= max_degree."""
    rules = system.rules
    out = []
    for i, r in enumerate(rules):
        for j, s in enumerate(rules):
            if i != j and len(s.lhs) <= len(r.lhs) and not (r.lhs == s.lhs and i > j):
                for pos in _inclusions(r.lhs, s.lhs):
                    w = r.lhs
                    if system.degree(w) <= max_degree:
                        out.append(Ambiguity("inclusion", (i, j), w,
                                             (_one_step(w, 0, r), _one_step(w, pos, s))))
            for k in _overlaps(r.lhs, s.lhs):
                w = r.lhs + s.lhs[k:]
                if system.degree(w) <= max_degree:
                    out.append(Ambiguity("overlap", (i, j), w,
                                         (_one_step(w, 0, r), _one_step(w, len(r.lhs) - k, s))))
    out.sort(key=lambda a: (system.degree(a.word), system.order.key(a.word), a.rules))
    return out


def complete(system: RewriteSystem, max_degree: int) -> RewriteSystem:
    """Complete a homogeneous system up to weighted degree ``max_degree``.

    Every ambiguity whose superposition has degree <= max_degree resolves in
    the result, so normal forms of elements of degree <= max_degree are
    unique.  Rules are never needed above the bound and none are produced.
    """
    order = system.order
    alphabet = order.alphabet
    deg = system.degree
    relators = [r.as_poly() for r in system.rules]
    for p in relators:
        if is_homogeneous(p, alphabet) is None:
            raise CompletionError("completion needs homogeneous relators; got a mixed-degree one")
    if system.rules and max_degree < max(deg(r.lhs) for r in system.rules):
        raise CompletionError(
            f"degree bound {max_degree} is below the largest lhs degree "
            f"{max(deg(r.lhs) for r in system.rules)}")

    index = _RuleIndex()
    rules: List[RewriteRule] = []
    by_first: dict = defaultdict(list)  # first letter -> rule positions
    pending: dict = defaultdict(list)  # degree -> FIFO of relators or ambiguity stubs

    for p in relators:
        d = is_homogeneous(p, alphabet)
        if p and d <= max_degree:
            pending[d].append(p)

    def s_poly(item) -> NcPoly:
        if isinstance(item, NcPoly):
            return item
        w, i, j, pos = item
        a = _one_step(w, 0, rules[i])
        b = _one_step(w, pos, rules[j])
        return a - b

    for D in range(0, max_degree + 1):
        queue = pending.pop(D, [])
        new: List[int] = []
        for item in queue:
            p = s_poly(item)
            r = index.normal_form(dict(p.items()), order)
            if not r:
                continue
            rule = orient(NcPoly._wrap(r), order)
            index.add(rule.lhs, rule.rhs)
            rules.append(rule)
            if rule.lhs:
                by_first[rule.lhs[0]].append(len(rules) - 1)
            new.append(len(rules) - 1)
        if not new:
            continue
        log.debug("degree %d: %d new rules (%d total)", D, len(new), len(rules))

        # right-hand sides may mention lhs's added in this degree
        new_lhs = {rules[k].lhs for k in new}
        lengths = sorted({len(l) for l in new_lhs})
        for k, rule in enumerate(rules):
            if any(w[i:i + L] in new_lhs for w in rule.rhs for L in lengths
                   for i in range(len(w) - L + 1)):
                rhs = NcPoly._wrap(index.normal_form(dict(rule.rhs.items()), order))
                rules[k] = RewriteRule(rule.lhs, rhs)
                index.table[rule.lhs] = rhs

        # overlaps where at least one participant is new
        newset = set(new)
        for i in range(len(rules)):
            a = rules[i].lhs
            for k in range(1, len(a)):
                for j in by_first.get(a[-k], ()):
                    if i not in newset and j not in newset:
                        continue
                    b = rules[j].lhs
                    if k >= len(b) or a[-k:] != b[:k]:
                        continue
                    w = a + b[k:]
                    dw = deg(w)
                    if dw <= max_degree:
                        pending[dw].append((w, i, j, len(a) - k))

    rules.sort(key=lambda r: (deg(r.lhs), order.key(r.lhs)))
    return RewriteSystem(order, tuple(rules), max_degree)
