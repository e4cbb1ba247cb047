"""Hypothesis tests, correlations, regression, and power-law fitting.

Two-sample comparisons use Welch's unequal-variance t statistic with
Welch-Satterthwaite degrees of freedom (floored to an integer). Student-t
tail probabilities go through the regularized incomplete beta function.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.special import betainc

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class SampleSummary:
    """Sufficient statistics of one sample: mean, SD, size."""

    mean: float
    sd: float
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"sample size must be >= 1, got {self.n}")
        if self.sd < 0:
            raise DomainError(f"standard deviation must be >= 0, got {self.sd}")


@dataclass(frozen=True, slots=True)
class WelchResult:
    t: float
    dof: int
    p_two_tailed: float


@dataclass(frozen=True, slots=True)
class RegressionFit:
    slope: float
    intercept: float
    r_squared: float


def welch_t_test(a: SampleSummary, b: SampleSummary) -> WelchResult:
    """Unequal-variance two-sample t-test from sample summaries.

    t = (mean_a - mean_b) / sqrt(sd_a^2/n_a + sd_b^2/n_b), with
    Welch-Satterthwaite degrees of freedom rounded down.
    """
    if a.n < 2 or b.n < 2:
        raise DomainError("both samples need n >= 2")
    if a.sd == 0 and b.sd == 0:
        raise DomainError("degenerate variances: both samples have sd = 0")
    va = a.sd**2 / a.n
    vb = b.sd**2 / b.n
    t = (a.mean - b.mean) / math.sqrt(va + vb)
    dof = max(int((va + vb) ** 2 / (va**2 / (a.n - 1) + vb**2 / (b.n - 1))), 1)
    p = 2 * student_t_sf(abs(t), dof)
    return WelchResult(t=t, dof=dof, p_two_tailed=p)


def student_t_sf(t: float, dof: int) -> float:
    """Upper tail probability P(T > t) of Student's t with ``dof`` degrees."""
    if dof < 1:
        raise DomainError(f"degrees of freedom must be >= 1, got {dof}")
    if t < 0:
        return 1.0 - student_t_sf(-t, dof)
    x = dof / (dof + t * t)
    return 0.5 * float(betainc(dof / 2.0, 0.5, x))


def _as_float_array(values: Sequence[float], name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise DomainError(f"{name} must be one-dimensional")
    return arr


def pearson(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation coefficient of two equal-length sequences."""
    xa = _as_float_array(x, "x")
    ya = _as_float_array(y, "y")
    if len(xa) != len(ya):
        raise DomainError(f"length mismatch: {len(xa)} vs {len(ya)}")
    if len(xa) < 3:
        raise DomainError(f"need at least 3 points, got {len(xa)}")
    dx = xa - xa.mean()
    dy = ya - ya.mean()
    sxx = float(np.dot(dx, dx))
    syy = float(np.dot(dy, dy))
    if sxx == 0 or syy == 0:
        raise DomainError("correlation of a constant sequence is undefined")
    r = float(np.dot(dx, dy)) / math.sqrt(sxx * syy)
    return max(-1.0, min(1.0, r))


def fractional_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based ranks; tied values share the mean of their rank positions."""
    arr = _as_float_array(values, "values")
    order = np.argsort(arr, kind="stable")
    ranks = np.empty(len(arr), dtype=float)
    i = 0
    while i < len(arr):
        j = i
        while j + 1 < len(arr) and arr[order[j + 1]] == arr[order[i]]:
            j += 1
        # positions i..j (0-based) share mean rank of i+1..j+1
        mean_rank = (i + j + 2) / 2
        for k in range(i, j + 1):
            ranks[order[k]] = mean_rank
        i = j + 1
    return ranks


def spearman(x: Sequence[float], y: Sequence[float]) -> float:
    """Rank correlation: Pearson's r applied to fractional ranks."""
    xa = _as_float_array(x, "x")
    ya = _as_float_array(y, "y")
    if len(xa) != len(ya):
        raise DomainError(f"length mismatch: {len(xa)} vs {len(ya)}")
    if len(xa) < 3:
        raise DomainError(f"need at least 3 points, got {len(xa)}")
    return pearson(fractional_ranks(xa), fractional_ranks(ya))


def correlation_significant(r: float, n: int, level: float = 0.01) -> tuple[bool, float]:
    """Two-tailed t-test of r != 0 with n - 2 degrees of freedom.

    Returns (significant at ``level``, p-value). |r| = 1 is significant
    by convention with p = 0.
    """
    if n < 4:
        raise DomainError(f"need n >= 4 observations, got {n}")
    if abs(r) > 1:
        raise DomainError(f"correlation out of range: {r}")
    if abs(r) == 1:
        return True, 0.0
    t = r * math.sqrt((n - 2) / (1 - r * r))
    p = 2 * student_t_sf(abs(t), n - 2)
    return p < level, p


def ols_fit(x: Sequence[float], y: Sequence[float]) -> RegressionFit:
    """Least-squares line y = slope*x + intercept with coefficient of
    determination; R^2 of a constant response is defined as 0."""
    xa = _as_float_array(x, "x")
    ya = _as_float_array(y, "y")
    if len(xa) != len(ya):
        raise DomainError(f"length mismatch: {len(xa)} vs {len(ya)}")
    if len(xa) < 2:
        raise DomainError(f"need at least 2 points, got {len(xa)}")
    dx = xa - xa.mean()
    dy = ya - ya.mean()
    sxx = float(np.dot(dx, dx))
    if sxx == 0:
        raise DomainError("regression on a constant x is undefined")
    slope = float(np.dot(dx, dy)) / sxx
    intercept = float(ya.mean() - slope * xa.mean())
    ss_tot = float(np.dot(dy, dy))
    if ss_tot == 0:
        return RegressionFit(slope=slope, intercept=intercept, r_squared=0.0)
    residuals = ya - (slope * xa + intercept)
    ss_res = float(np.dot(residuals, residuals))
    r_squared = 1 - ss_res / ss_tot
    return RegressionFit(slope=slope, intercept=intercept, r_squared=min(max(r_squared, 0.0), 1.0))


def power_law_mle(values: Sequence[float], x_min: float) -> float:
    """Continuous maximum-likelihood power-law exponent for the tail
    values >= x_min: alpha = 1 + n / sum(ln(x_i / x_min)).

    Returns the positive exponent alpha of p(x) ~ x^-alpha; rank-frequency
    plots conventionally quote it negated.
    """
    if x_min <= 0:
        raise DomainError(f"x_min must be positive, got {x_min}")
    arr = _as_float_array(values, "values")
    if np.any(arr <= 0):
        raise DomainError("power-law values must be positive")
    tail = arr[arr >= x_min]
    if len(tail) < 10:
        raise DomainError(f"need at least 10 values >= x_min, got {len(tail)}")
    log_sum = float(np.sum(np.log(tail / x_min)))
    if log_sum == 0:
        raise DomainError("all values equal x_min: exponent estimate diverges")
    return 1 + len(tail) / log_sum
