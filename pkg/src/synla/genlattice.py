"""
Generalized infimum and supremum.

``ginf(a, b) = (a + b - |a - b|) / 2`` and ``gsup(a, b) = (a + b + |a - b|) / 2``
always exist. They are maximal lower and minimal upper bounds, and they are the
lattice operations exactly when ``a`` and ``b`` commute.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError, DimensionError
from .symmat import (
    DEFAULT_TOL,
    TolerancePolicy,
    is_close,
    is_psd,
    is_zero,
    jordan,
    lambda_min,
    loewner_leq,
    spectral_norm,
    symmetrize,
)
from .synaptic_ops import absolute


def _check(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a, b


def ginf(a, b) -> np.ndarray:
    a, b = _check(a, b)
    return symmetrize(0.5 * (a + b - absolute(a - b)))


def gsup(a, b) -> np.ndarray:
    a, b = _check(a, b)
    return symmetrize(0.5 * (a + b + absolute(a - b)))


@dataclass(frozen=True)
class DisjointVerdict:
    """Truth values of the four equivalent disjointness conditions.

    ``ginf_zero``: ``a ginf b = 0``; ``sum_is_abs_diff``: ``a + b = |a - b|``;
    ``psd_jordan_zero``: both positive and ``a o b = 0``; ``psd_product_zero``:
    both positive and ``ab = ba = 0``.
    """

    ginf_zero: bool
    sum_is_abs_diff: bool
    psd_jordan_zero: bool
    psd_product_zero: bool

    @property
    def values(self):
        return (self.ginf_zero, self.sum_is_abs_diff, self.psd_jordan_zero, self.psd_product_zero)

    @property
    def consistent(self) -> bool:
        return len(set(self.values)) == 1

    @property
    def disjoint(self) -> bool:
        """Majority-free reading: disjoint only if every condition holds."""
        return all(self.values)


def check_disjoint(a, b, tol: TolerancePolicy = DEFAULT_TOL) -> DisjointVerdict:
    a, b = _check(a, b)
    scale = max(spectral_norm(a), spectral_norm(b))
    both_psd = is_psd(a, tol) and is_psd(b, tol)
    prod_scale = max(scale, scale * scale)
    return DisjointVerdict(
        ginf_zero=is_zero(ginf(a, b), tol, scale),
        sum_is_abs_diff=is_close(a + b, absolute(a - b), tol),
        psd_jordan_zero=both_psd and is_zero(jordan(a, b), tol, prod_scale),
        psd_product_zero=both_psd
        and is_zero(a @ b, tol, prod_scale)
        and is_zero(b @ a, tol, prod_scale),
    )


@dataclass
class MaximalityReport:
    """Outcome of a randomized search for lower bounds strictly above ``ginf``.

    ``violations`` holds ``(t, d)`` pairs for which ``ginf + t d`` was found
    below both operands; the theorem says there are none.
    """

    trials: int
    seed: int
    steps: tuple
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_direction(rng, n):
    if rng.random() < 0.5:
        v = rng.standard_normal(n)
        d = np.outer(v, v)
    else:
        k = int(rng.integers(1, n + 1))
        g = rng.standard_normal((n, k))
        d = g @ g.T
    return d / spectral_norm(d)


def check_maximal_lower_bound(
    a, b, trials: int = 100, seed: int = 0, tol: TolerancePolicy = DEFAULT_TOL
) -> MaximalityReport:
    """Try to push ``ginf(a, b)`` upward by PSD bumps and stay below ``a`` and ``b``.

    Directions are unit-norm PSD matrices (rank one ``v v^T`` or random
    mixtures). Steps are ``10^-k * max(1, s)`` for ``k = 0..6``, with ``s`` the
    distance from ``ginf`` to the farther operand.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    a, b = _check(a, b)
    n = a.shape[0]
    m = ginf(a, b)
    s = max(spectral_norm(a - m), spectral_norm(b - m))
    steps = tuple(10.0 ** (-k) * max(1.0, s) for k in range(7))
    report = MaximalityReport(trials=trials, seed=seed, steps=steps)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        d = _random_direction(rng, n)
        for t in steps:
            c = m + t * d
            report.checked += 1
            if loewner_leq(c, a, tol) and loewner_leq(c, b, tol):
                report.violations.append((t, d))
    return report


def is_disjunctive(a, b, tol: TolerancePolicy = DEFAULT_TOL, self_check: bool = True) -> bool:
    """True iff ``|a - b| ginf (a ginf b) = 0``.

    When true, ``a``, ``b`` and ``a ginf b`` are positive and
    ``ab = ba = (a ginf b)^2``; with ``self_check`` these consequences are
    verified and a failure raises :class:`ConsistencyError`.
    """
    a, b = _check(a, b)
    m = ginf(a, b)
    scale = max(1.0, spectral_norm(a), spectral_norm(b))
    result = is_zero(ginf(absolute(a - b), m), tol, scale)
    if result and self_check:
        loose = TolerancePolicy(eq=min(0.5, 1e3 * tol.eq), psd=min(0.5, 1e3 * tol.psd))
        sq = m @ m
        ok = (
            is_psd(a, loose)
            and is_psd(b, loose)
            and is_psd(m, loose)
            and is_close(a @ b, sq, loose)
            and is_close(b @ a, sq, loose)
        )
        if not ok:
            raise ConsistencyError("disjunctive pair fails its positivity/product consequences")
    return result


def ginf_min_eigenvalue(a, b) -> float:
    return lambda_min(ginf(a, b))
