"""Enveloping-algebra dimensions from graded Lie dimensions:

    sum_n b_n t^n = prod_{n>=1} (1 - t^n)^(-a_n)

plus a numeric probe of the exponent in b_n ~ exp(n^((d+1)/(d+2))).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .growth import DimensionSeries, _log, _slope


@dataclass(frozen=True)
class PowerSeries:
    coefficients: Tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]

    def as_series(self) -> DimensionSeries:
        return DimensionSeries(self.coefficients)


def _geometric_factor(b: List[int], n: int, times: int):
    """Multiply b in place by (1 - t^n)^(-times)."""
    N = len(b) - 1
    for _ in range(times):
        for k in range(n, N + 1):
            b[k] += b[k - n]


def enveloping_series(a: DimensionSeries | Sequence[int], N: int, order: Sequence[int] | None = None) -> PowerSeries:
    """Truncated expansion of the product formula to degree N.

    ``order`` permutes the degrees in which factors are multiplied (the
    result does not depend on it).
    """
    vals = a.values if isinstance(a, DimensionSeries) else tuple(a)
    if vals and vals[0] != 0:
        raise ValueError("a_0 must be 0")
    if any(v < 0 for v in vals):
        raise ValueError("dimensions must be nonnegative")
    b = [1] + [0] * N
    degrees = order if order is not None else range(1, N + 1)
    for n in degrees:
        if 1 <= n < len(vals) and n <= N and vals[n]:
            _geometric_factor(b, n, vals[n])
    return PowerSeries(tuple(b))


@dataclass
class CrossCheck:
    expected: Tuple[int, ...]
    observed: Tuple[int, ...]
    mismatches: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def pbw_cross_check(lie_dims: DimensionSeries, env_counts: DimensionSeries, N: int) -> CrossCheck:
    if len(lie_dims) <= N or len(env_counts) <= N:
        raise ValueError(f"both series must reach degree {N}")
    expected = enveloping_series(lie_dims, N).coefficients
    observed = tuple(env_counts.values[: N + 1])
    bad = [n for n in range(N + 1) if expected[n] != observed[n]]
    return CrossCheck(expected, observed, bad)


@dataclass(frozen=True)
class ExponentFit:
    d: int
    N: int
    alpha: float
    target: float
    rms: float
    graded_alpha: float
    residuals: Tuple[float, ...] = ()


def _loglog_fit(values: Sequence[int], ns: Sequence[int]):
    xs = [math.log(n) for n in ns]
    ys = [math.log(_log(values[n])) for n in ns]
    slope, icept, rms = _slope(xs, ys)
    res = tuple(y - slope * x - icept for x, y in zip(xs, ys))
    return slope, rms, res


def exponent_fit(d: int, N: int) -> ExponentFit:
    """Fit alpha in B(n) ~ exp(n^alpha) for a_n = (n+1)^d.

    B is the cumulative sum of b; alpha is the least-squares slope of
    log log B(n) against log n for n in the top half [N//2, N].
    """
    if d not in (0, 1, 2):
        raise ValueError("d must be 0, 1 or 2")
    if N < 100:
        raise ValueError("N >= 100 required for a meaningful fit")
    a = [0] + [(n + 1) ** d for n in range(1, N + 1)]
    b = enveloping_series(a, N).coefficients
    B, run = [], 0
    for v in b:
        run += v
        B.append(run)
    ns = range(N // 2, N + 1)
    alpha, rms, res = _loglog_fit(B, ns)
    graded_alpha, _, _ = _loglog_fit(b, ns)
    return ExponentFit(d, N, alpha, (d + 1) / (d + 2), rms, graded_alpha, res)
