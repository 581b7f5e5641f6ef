"""Graded Lie algebras given by structure constants, and the algebra L of
traceless 2x2 polynomial matrices whose entries on and below the diagonal
are divisible by t.

Basis: x_k, y_k in degree 2k-1 and z_k in degree 2k, with

    [x_i, y_j] = z_{i+j-1}      [x_i, z_j] = -2 x_{i+j}      [y_i, z_j] = 2 y_{i+j}
    [x_i, x_j] = [y_i, y_j] = [z_i, z_j] = 0

Matrix realisation: x_i = t^{i-1} E12, y_i = t^i E21, z_i = t^i (E11 - E22).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple

from .growth import DimensionSeries

# element: {BasisLabel: Fraction}
Element = Dict["BasisLabel", Fraction]


class TruncationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BasisLabel:
    family: str  # "X", "Y" or "Z"
    index: int

    def __post_init__(self):
        if self.family not in ("X", "Y", "Z") or self.index < 1:
            raise ValueError(f"bad basis label {self.family}{self.index}")

    @property
    def degree(self) -> int:
        return 2 * self.index if self.family == "Z" else 2 * self.index - 1

    def __str__(self):
        return f"{self.family.lower()}{self.index}"


def X(k):
    return BasisLabel("X", k)


def Y(k):
    return BasisLabel("Y", k)


def Z(k):
    return BasisLabel("Z", k)


@dataclass
class GradedLie:
    basis: List[BasisLabel]
    brackets: Dict[Tuple[BasisLabel, BasisLabel], Tuple[Tuple[BasisLabel, Fraction], ...]]
    max_degree: int

    def structure(self, a: BasisLabel, b: BasisLabel) -> Element:
        if a.degree + b.degree > self.max_degree:
            raise TruncationError(f"[{a},{b}] has degree {a.degree + b.degree} > {self.max_degree}")
        return dict(self.brackets.get((a, b), ()))


def _structure_constant(a: BasisLabel, b: BasisLabel):
    """[a, b] from the closed-form relations, as a (label, coef) tuple."""
    fa, fb, i, j = a.family, b.family, a.index, b.index
    if fa == fb:
        return ()
    pair = fa + fb
    if pair == "XY":
        return ((Z(i + j - 1), Fraction(1)),)
    if pair == "YX":
        return ((Z(i + j - 1), Fraction(-1)),)
    if pair == "XZ":
        return ((X(i + j), Fraction(-2)),)
    if pair == "ZX":
        return ((X(i + j), Fraction(2)),)
    if pair == "YZ":
        return ((Y(i + j), Fraction(2)),)
    return ((Y(i + j), Fraction(-2)),)  # ZY


def basis_up_to(N: int) -> List[BasisLabel]:
    labels = [BasisLabel(f, k) for k in range(1, N + 1) for f in ("X", "Y", "Z")]
    return sorted((b for b in labels if b.degree <= N), key=lambda b: (b.degree, b))


def build_L(N: int) -> GradedLie:
    if N < 1:
        raise ValueError("build_L needs N >= 1")
    basis = basis_up_to(N)
    brackets = {}
    for a, b in itertools.product(basis, repeat=2):
        if a.degree + b.degree <= N:
            val = _structure_constant(a, b)
            if val:
                brackets[(a, b)] = val
    return GradedLie(basis, brackets, N)


def element(*terms) -> Element:
    """element((c, label), ...) or element(label) for a basis vector."""
    out: Element = {}
    for t in terms:
        c, lab = (1, t) if isinstance(t, BasisLabel) else t
        out[lab] = out.get(lab, 0) + Fraction(c)
    return {k: v for k, v in out.items() if v}


def bracket(g: GradedLie, a: Mapping, b: Mapping) -> Element:
    out: Element = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            for lc, cc in g.structure(la, lb).items():
                out[lc] = out.get(lc, 0) + ca * cb * cc
    return {k: v for k, v in out.items() if v}


@dataclass
class CheckReport:
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def antisymmetry_check(g: GradedLie) -> CheckReport:
    rep = CheckReport()
    for (a, b), val in g.brackets.items():
        rep.checked += 1
        back = dict(g.brackets.get((b, a), ()))
        if {k: -v for k, v in dict(val).items()} != back:
            rep.violations.append(f"[{a},{b}] != -[{b},{a}]")
    for a in g.basis:
        if (a, a) in g.brackets:
            rep.violations.append(f"[{a},{a}] != 0")
    return rep


def grading_check(g: GradedLie) -> CheckReport:
    rep = CheckReport()
    for (a, b), val in g.brackets.items():
        rep.checked += 1
        for lab, _ in val:
            if lab.degree != a.degree + b.degree:
                rep.violations.append(f"[{a},{b}] lands in degree {lab.degree}")
    return rep


def jacobi_check(g: GradedLie, N: int) -> CheckReport:
    """[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 on basis triples of total degree <= N."""
    if N > g.max_degree:
        raise TruncationError(f"algebra built only to degree {g.max_degree}")
    rep = CheckReport()
    basis = [b for b in g.basis if b.degree <= N]
    for a, b, c in itertools.combinations_with_replacement(basis, 3):
        if a.degree + b.degree + c.degree > N:
            continue
        for p, q, r in {(a, b, c), (a, c, b)}:
            rep.checked += 1
            ea, eb, ec = element(p), element(q), element(r)
            total: Element = {}
            for u, v, w in ((ea, eb, ec), (eb, ec, ea), (ec, ea, eb)):
                for k, val in bracket(g, u, bracket(g, v, w)).items():
                    total[k] = total.get(k, 0) + val
            total = {k: v for k, v in total.items() if v}
            if total:
                rep.violations.append(f"Jacobi fails on ({p},{q},{r}): {total}")
    return rep


# ---------------------------------------------------------------------------
# 2x2 polynomial matrices; a polynomial is {power: Fraction}


def _pmul(p, q):
    out = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: v for k, v in out.items() if v}


def _padd(p, q, s=1):
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + s * v
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class PolyMatrix:
    entries: Tuple[Tuple[dict, dict], Tuple[dict, dict]]

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        a, b = self.entries, other.entries
        return PolyMatrix(tuple(
            tuple(_padd(_pmul(a[i][0], b[0][j]), _pmul(a[i][1], b[1][j])) for j in range(2))
            for i in range(2)))

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(tuple(
            tuple(_padd(self.entries[i][j], other.entries[i][j], -1) for j in range(2))
            for i in range(2)))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        return PolyMatrix(tuple(
            tuple(_padd(self.entries[i][j], other.entries[i][j]) for j in range(2))
            for i in range(2)))

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple({k: c * v for k, v in e.items() if c * v} for e in row)
                                for row in self.entries))

    def trace(self) -> dict:
        return _padd(self.entries[0][0], self.entries[1][1])

    def in_L(self) -> bool:
        """Traceless, and t divides every entry except the (1,2) one."""
        if self.trace():
            return False
        return all(0 not in self.entries[i][j] for i, j in ((0, 0), (1, 0), (1, 1)))


def commutator(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a @ b - b @ a


def matrix_of(label: BasisLabel) -> PolyMatrix:
    k = label.index
    one = Fraction(1)
    if label.family == "X":
        return PolyMatrix((({}, {k - 1: one}), ({}, {})))
    if label.family == "Y":
        return PolyMatrix((({}, {}), ({k: one}, {})))
    return PolyMatrix((({k: one}, {}), ({}, {k: -one})))


def matrix_of_element(e: Mapping) -> PolyMatrix:
    m = PolyMatrix((({}, {}), ({}, {})))
    for lab, c in e.items():
        m = m + matrix_of(lab).scale(c)
    return m


def decompose(m: PolyMatrix) -> Element:
    """Coordinates of a matrix of L in the x/y/z basis."""
    if not m.in_L():
        raise ValueError("matrix is not in L")
    (a11, a12), (a21, _) = m.entries
    out: Element = {}
    for p, c in a12.items():
        out[X(p + 1)] = c
    for p, c in a21.items():
        out[Y(p)] = c
    for p, c in a11.items():
        out[Z(p)] = c
    return out


def matrix_model_check(K: int) -> CheckReport:
    """Compare matrix commutators with the structure constants for indices <= K."""
    if K < 1:
        raise ValueError("K >= 1 required")
    labels = [BasisLabel(f, k) for k in range(1, K + 1) for f in ("X", "Y", "Z")]
    g = build_L(max(b.degree for b in labels) * 2)
    rep = CheckReport()
    for lab in labels:
        if not matrix_of(lab).in_L():
            rep.violations.append(f"{lab} matrix is not in L")
    for a, b in itertools.product(labels, repeat=2):
        rep.checked += 1
        got = decompose(commutator(matrix_of(a), matrix_of(b)))
        want = g.structure(a, b)
        if got != want:
            rep.violations.append(f"[{a},{b}]: matrices give {got}, constants give {want}")
    return rep


def graded_dims(g: GradedLie, N: int) -> DimensionSeries:
    if N > g.max_degree:
        raise TruncationError(f"algebra built only to degree {g.max_degree}")
    dims = [0] * (N + 1)
    for b in g.basis:
        if b.degree <= N:
            dims[b.degree] += 1
    return DimensionSeries(tuple(dims))
