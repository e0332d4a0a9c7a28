"""
Spectral functions of a single symmetric matrix.

Everything here goes through one symmetric eigendecomposition
(:func:`synla.symmat.eigh`, ascending eigenvalues). The carrier and anything
built on it depends on the rank cutoff ``tol.rank_factor(n) * ||a||``:
eigenvalues at or below it in magnitude are treated as zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, NotInvertibleError, NotPositiveError
from .symmat import (
    DEFAULT_TOL,
    EPS,
    TolerancePolicy,
    commutes,
    eigh,
    loewner_leq,
    spectral_norm,
    symmetrize,
)

__all__ = [
    "SpectralResolution",
    "absolute",
    "carrier",
    "decompose",
    "invert",
    "neg_part",
    "pos_part",
    "rank_cutoff",
    "spectral_proj",
    "spectral_resolution",
    "sqrt",
]


SHIFT_ROUNDING = 4.0


def _rebuild(vecs, vals):
    return symmetrize((vecs * vals) @ vecs.T)


def rank_cutoff(a, tol: TolerancePolicy = DEFAULT_TOL, scale: float | None = None) -> float:
    """Magnitude at or below which an eigenvalue of ``a`` counts as zero."""
    a = np.asarray(a, dtype=float)
    if scale is None:
        scale = spectral_norm(a)
    return tol.rank_factor(a.shape[0]) * scale


def sqrt(a, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Positive square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol.psd * max(1, ||a||), 0)`` are clamped to zero;
    anything more negative raises :class:`NotPositiveError`. Eigenvalues at
    or below the rank cutoff are zeroed as well, since the square root would
    otherwise amplify rounding noise ``e`` to ``sqrt(e)``.
    """
    vals, vecs = eigh(a)
    norm = max(abs(vals[0]), abs(vals[-1]))
    scale = max(1.0, norm)
    if vals[0] < -tol.psd * scale:
        raise NotPositiveError(f"smallest eigenvalue {vals[0]:.3e} is negative")
    vals = np.where(vals <= tol.rank_factor(len(vals)) * norm, 0.0, vals)
    return _rebuild(vecs, np.sqrt(vals))


def absolute(a) -> np.ndarray:
    """``|a| = (a^2)^(1/2)``, computed as ``V |L| V^T``."""
    vals, vecs = eigh(a)
    return _rebuild(vecs, np.abs(vals))


def pos_part(a) -> np.ndarray:
    vals, vecs = eigh(a)
    return _rebuild(vecs, np.clip(vals, 0.0, None))


def neg_part(a) -> np.ndarray:
    vals, vecs = eigh(a)
    return _rebuild(vecs, np.clip(-vals, 0.0, None))


def decompose(a):
    """Return ``(a+, a-)`` with ``a = a+ - a-`` and ``a+ a- = 0``."""
    vals, vecs = eigh(a)
    return (
        _rebuild(vecs, np.clip(vals, 0.0, None)),
        _rebuild(vecs, np.clip(-vals, 0.0, None)),
    )


def carrier(a, tol: TolerancePolicy = DEFAULT_TOL, scale: float | None = None) -> np.ndarray:
    """Orthogonal projection onto the range of ``a``.

    ``scale`` overrides the norm the rank cutoff is measured against.
    """
    vals, vecs = eigh(a)
    if scale is None:
        scale = float(max(abs(vals[0]), abs(vals[-1])))
    cut = tol.rank_factor(len(vals)) * scale
    keep = vecs[:, np.abs(vals) > cut]
    return symmetrize(keep @ keep.T)


def _eigen_projection_below(vals, vecs, lam, slack):
    keep = vecs[:, vals - lam <= slack]
    return symmetrize(keep @ keep.T)


def spectral_proj(
    a, lam: float, tol: TolerancePolicy = DEFAULT_TOL, check: bool = True
) -> np.ndarray:
    """Projection onto the eigenvectors of ``a`` with eigenvalue ``<= lam``.

    Computed as ``1 - carrier((a - lam)+)``. With ``check`` the result is
    compared with the direct eigenprojection; a mismatch that cannot be blamed
    on an eigenvalue lying within rounding distance of ``lam`` raises
    :class:`ConsistencyError`.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    shifted_pos = pos_part(a - lam * np.eye(n))
    # Eigenvalues of a - lam carry rounding from the shift and from a second
    # eigendecomposition, both of size eps * max(||a||, |lam|); at lam equal
    # to an eigenvalue the cutoff must swallow that residue so the step
    # function stays right-continuous.
    scale = SHIFT_ROUNDING * max(spectral_norm(a), abs(lam), spectral_norm(shifted_pos))
    p = np.eye(n) - carrier(shifted_pos, tol, scale=scale)
    if check:
        vals, vecs = eigh(a)
        q = _eigen_projection_below(vals, vecs, lam, rank_cutoff(a, tol, scale=scale))
        if spectral_norm(p - q) > 1e-8:
            band = 1e3 * n * EPS * max(1.0, spectral_norm(a), abs(lam))
            if not np.any(np.abs(vals - lam) <= band):
                raise ConsistencyError(
                    "spectral projection formula disagrees with eigenprojection"
                )
    return p


@dataclass(frozen=True)
class SpectralResolution:
    """Spectral projections of a matrix sampled at its distinct eigenvalues.

    ``breakpoints[i] = (lam_i, p_i)`` with ``lam_i`` ascending and ``p_i`` the
    projection onto eigenvectors with eigenvalue ``<= lam_i``.
    """

    breakpoints: tuple
    source_norm: float

    @property
    def eigenvalues(self):
        return np.array([lam for lam, _ in self.breakpoints])

    @property
    def projections(self):
        return [p for _, p in self.breakpoints]

    def eigenprojections(self):
        """Differences ``p_i - p_{i-1}``: the projections onto each eigenspace."""
        out = []
        prev = np.zeros_like(self.breakpoints[0][1])
        for _, p in self.breakpoints:
            out.append(p - prev)
            prev = p
        return out

    def reconstruct(self) -> np.ndarray:
        total = np.zeros_like(self.breakpoints[0][1])
        for lam, e in zip(self.eigenvalues, self.eigenprojections()):
            total = total + lam * e
        return symmetrize(total)

    def projection_at(self, lam: float) -> np.ndarray:
        """The right-continuous step function ``lam -> p_{a, lam}``."""
        out = np.zeros_like(self.breakpoints[0][1])
        for mu, p in self.breakpoints:
            if mu <= lam:
                out = p
        return out


def _clusters(vals, cut):
    groups = [[0]]
    for i in range(1, len(vals)):
        if vals[i] - vals[groups[-1][-1]] <= cut:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def spectral_resolution(a, tol: TolerancePolicy = DEFAULT_TOL) -> SpectralResolution:
    """Sample the spectral family of ``a`` at its distinct eigenvalues.

    Eigenvalues closer than the rank cutoff are merged into one breakpoint.
    Each projection is produced by the complement-of-carrier formula,
    evaluated halfway to the next breakpoint where the step function is
    constant, and cross-checked against the summed eigenprojections.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    vals, vecs = eigh(a)
    norm = float(max(abs(vals[0]), abs(vals[-1])))
    groups = _clusters(vals, tol.rank_factor(n) * norm)
    points = []
    acc = np.zeros((n, n))
    for k, g in enumerate(groups):
        lam = float(np.mean(vals[g]))
        if k + 1 < len(groups):
            probe = 0.5 * (vals[g[-1]] + vals[groups[k + 1][0]])
        else:
            probe = vals[-1] + max(1.0, norm)
        p = spectral_proj(a, probe, tol, check=False)
        block = vecs[:, g]
        acc = acc + block @ block.T
        if spectral_norm(p - acc) > 1e-8:
            raise ConsistencyError("spectral resolution formula disagrees with eigenprojections")
        points.append((lam, p))
    return SpectralResolution(breakpoints=tuple(points), source_norm=norm)


def invert(a, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    vals, vecs = eigh(a)
    cut = tol.rank_factor(len(vals)) * max(abs(vals[0]), abs(vals[-1]))
    if np.min(np.abs(vals)) <= cut:
        raise NotInvertibleError("matrix has eigenvalues at or below the rank cutoff")
    return _rebuild(vecs, 1.0 / vals)


def commutes_with_resolution(a, b, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff every spectral projection of ``a`` commutes with ``b``."""
    return all(commutes(p, b, tol) for p in spectral_resolution(a, tol).projections)


def carrier_leq(a, b, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    return loewner_leq(carrier(a, tol), carrier(b, tol), tol)
