"""Counting normal words, growth series and a finite-sample growth classifier."""

from __future__ import annotations

import itertools
import math
import statistics
import threading
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .core import Word
from .rewrite import RewriteSystem


class InsufficientCompletionError(ValueError):
    pass


@dataclass(frozen=True)
class DimensionSeries:
    """Dimensions h_start, h_start+1, ...; ``flavor`` is graded or cumulative."""

    values: Tuple[int, ...]
    flavor: str = "graded"
    start: int = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.flavor not in ("graded", "cumulative"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if any(v < 0 for v in self.values):
            raise ValueError("dimensions are nonnegative")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    @property
    def degrees(self) -> range:
        return range(self.start, self.start + len(self.values))

    def tail(self, k: int) -> "DimensionSeries":
        """Drop the first k samples, keeping absolute degrees."""
        return DimensionSeries(self.values[k:], self.flavor, self.start + k)


def cumulative(series: DimensionSeries) -> DimensionSeries:
    if series.flavor != "graded":
        raise ValueError("cumulative() expects a graded series")
    return DimensionSeries(tuple(itertools.accumulate(series.values)), "cumulative", series.start)


# ---------------------------------------------------------------------------
# factor-avoiding words


class ForbiddenFactorAutomaton:
    """Aho-Corasick automaton over a set of forbidden words."""

    def __init__(self, patterns, n_letters: int):
        self.n_letters = n_letters
        goto: List[Dict[int, int]] = [{}]
        bad = [False]
        for p in patterns:
            s = 0
            for a in p:
                nxt = goto[s].get(a)
                if nxt is None:
                    goto.append({})
                    bad.append(False)
                    nxt = goto[s][a] = len(goto) - 1
                s = nxt
            bad[s] = True
        fail = [0] * len(goto)
        delta = [[0] * n_letters for _ in goto]
        order = deque()
        for a in range(n_letters):
            t = goto[0].get(a)
            if t is not None:
                delta[0][a] = t
                order.append(t)
        while order:
            s = order.popleft()
            bad[s] = bad[s] or bad[fail[s]]
            for a in range(n_letters):
                t = goto[s].get(a)
                if t is None:
                    delta[s][a] = delta[fail[s]][a]
                else:
                    fail[t] = delta[fail[s]][a]
                    delta[s][a] = t
                    order.append(t)
        self.delta = delta
        self.bad = bad

    def __len__(self):
        return len(self.delta)

    def accepts(self, w: Word) -> bool:
        s = 0
        for a in w:
            s = self.delta[s][a]
            if self.bad[s]:
                return False
        return True

    def count(self, degrees: Sequence[int], N: int) -> List[int]:
        """Number of accepted words of each weighted degree 0..N."""
        delta, bad = self.delta, self.bad
        live = [s for s in range(len(delta)) if not bad[s]]
        table = [dict() for _ in range(N + 1)]
        table[0][0] = 1
        for d in range(N + 1):
            for s, c in table[d].items():
                row = delta[s]
                for a, da in enumerate(degrees):
                    e = d + da
                    if e > N:
                        continue
                    t = row[a]
                    if not bad[t]:
                        table[e][t] = table[e].get(t, 0) + c
        return [sum(t.values()) for t in table]


def normal_word_counts(system: RewriteSystem, N: int) -> DimensionSeries:
    if system.completed_to < N:
        raise InsufficientCompletionError(
            f"system completed only to degree {system.completed_to}, counts requested to {N}")
    aut = ForbiddenFactorAutomaton(system.lhs_words, len(system.alphabet))
    return DimensionSeries(tuple(aut.count(system.alphabet.degrees, N)))


BRUTE_FORCE_MAX_LETTERS = 4
BRUTE_FORCE_MAX_DEGREE = 14
BRUTE_FORCE_MAX_WORDS = 20_000_000


def brute_force_counts(system: RewriteSystem, N: int) -> DimensionSeries:
    """Enumerate every word of degree <= N and test each lhs as a substring."""
    alphabet = system.alphabet
    m = len(alphabet)
    if m > BRUTE_FORCE_MAX_LETTERS or N > BRUTE_FORCE_MAX_DEGREE:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX_LETTERS} letters and "
                         f"degree {BRUTE_FORCE_MAX_DEGREE}")
    if sum(m ** k for k in range(N + 1)) > BRUTE_FORCE_MAX_WORDS:
        raise ValueError("brute force enumeration too large")
    # one character per generator, so factor tests are str.__contains__
    chars = [chr(ord("a") + i) for i in range(m)]
    patterns = ["".join(chars[i] for i in lhs) for lhs in system.lhs_words]
    degs = alphabet.degrees
    by_degree: List[List[str]] = [[""]] + [[] for _ in range(N)]
    for d in range(1, N + 1):
        for i, da in enumerate(degs):
            if da <= d:
                by_degree[d].extend(w + chars[i] for w in by_degree[d - da])
    counts = [sum(1 for w in words if not any(p in w for p in patterns)) for words in by_degree]
    return DimensionSeries(tuple(counts))


# ---------------------------------------------------------------------------
# partitions

_partition_memo = [1]
_partition_lock = threading.Lock()


def partition_p(n: int) -> int:
    """Number of partitions of n (Euler's pentagonal recurrence)."""
    if n < 0:
        raise ValueError("partition_p needs n >= 0")
    with _partition_lock:
        memo = _partition_memo
        for m in range(len(memo), n + 1):
            total, k = 0, 1
            while True:
                g1 = k * (3 * k - 1) // 2
                if g1 > m:
                    break
                sign = 1 if k % 2 else -1
                total += sign * memo[m - g1]
                g2 = g1 + k
                if g2 <= m:
                    total += sign * memo[m - g2]
                k += 1
            memo.append(total)
        return memo[n]


def kobayashi_closed_form(n: int) -> int:
    """sum_{j=0}^{n} (2j+1) p(n-j)."""
    return sum((2 * j + 1) * partition_p(n - j) for j in range(n + 1))


# ---------------------------------------------------------------------------
# classification

EXP_RATIO = 1.05
EXP_MONOTONE_RTOL = 1e-6
POLY_MAX_SLOPE = 8.0
POLY_CURVATURE_TOL = 1e-2
MIN_SAMPLES = 16


@dataclass(frozen=True)
class GrowthClass:
    label: str
    alpha: Optional[float] = None  # intermediate: exponent inside exp(n^alpha)
    degree: Optional[float] = None  # polynomial: fitted degree
    diagnostics: Dict[str, float] = field(default_factory=dict)


def _slope(xs, ys) -> Tuple[float, float, float]:
    """Least-squares slope, intercept and RMS residual."""
    slope, icept = statistics.linear_regression(xs, ys)
    rms = math.sqrt(sum((y - slope * x - icept) ** 2 for x, y in zip(xs, ys)) / len(xs))
    return slope, icept, rms


def _log(v) -> float:
    # exact ints may exceed float range
    return math.log(v) if v < 1e300 else math.log(v >> 900) + 900 * math.log(2)


def classify_growth(series: DimensionSeries) -> GrowthClass:
    """Three-way growth label for a cumulative series.

    exponential: median of gamma(n+1)/gamma(n) over the top quarter exceeds
      1.05 and those ratios do not decrease (relative tolerance 1e-6);
    polynomial: log-log slope over the top half is below 8 and the local
      log-log slopes vary by less than 1e-2 between neighbours;
    intermediate otherwise, with alpha the slope of log log gamma against
      log n over the top half.
    """
    if series.flavor != "cumulative":
        raise ValueError("classify_growth expects a cumulative series")
    if len(series) < MIN_SAMPLES:
        raise ValueError(f"need at least {MIN_SAMPLES} samples, got {len(series)}")
    ns = list(series.degrees)
    vals = list(series.values)
    if any(v <= 0 for v in vals):
        raise ValueError("cumulative series must be positive")

    q = len(vals) - len(vals) // 4
    ratios = [vals[i + 1] / vals[i] for i in range(q - 1, len(vals) - 1)]
    median_ratio = statistics.median(ratios)
    monotone = all(b >= a * (1 - EXP_MONOTONE_RTOL) for a, b in zip(ratios, ratios[1:]))
    diag = {"median_ratio": median_ratio}
    if median_ratio > EXP_RATIO and monotone:
        return GrowthClass("exponential", diagnostics=diag)

    half = [i for i in range(len(vals) // 2, len(vals)) if ns[i] > 0]
    lx = [math.log(ns[i]) for i in half]
    ly = [_log(vals[i]) for i in half]
    slope, _, rms = _slope(lx, ly)
    local = [(ly[k + 1] - ly[k]) / (lx[k + 1] - lx[k]) for k in range(len(lx) - 1)]
    curvature = max((abs(b - a) for a, b in zip(local, local[1:])), default=0.0)
    diag.update(loglog_slope=slope, curvature=curvature)
    if slope < POLY_MAX_SLOPE and curvature < POLY_CURVATURE_TOL:
        return GrowthClass("polynomial", degree=slope, diagnostics=diag)

    pts = [(x, math.log(y)) for x, y in zip(lx, ly) if y > 0]
    alpha, _, rms = _slope([p[0] for p in pts], [p[1] for p in pts])
    diag.update(alpha_rms=rms)
    return GrowthClass("intermediate", alpha=alpha, diagnostics=diag)
