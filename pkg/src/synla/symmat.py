"""
Real symmetric matrices as a concrete ordered algebra.

Elements are plain ``numpy`` arrays of shape ``(n, n)``. :func:`as_sym` is the
single entry point that validates and symmetrizes input; everything else in the
package assumes its output. The order is the Loewner order, the unit is the
identity matrix, and every predicate is decided relative to a
:class:`TolerancePolicy`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .errors import DimensionError, NotSymmetricError, SynlaError

EPS = np.finfo(float).eps


@dataclass(frozen=True)
class TolerancePolicy:
    """Numerical thresholds used by every predicate in the package.

    All values are relative scales. ``eq`` governs equality of matrices,
    ``psd`` the slack allowed on the smallest eigenvalue in order tests,
    ``comm`` the commutator size below which two matrices commute. ``rank`` is
    the factor applied to the norm of a matrix to decide which eigenvalues or
    singular values count as zero; ``None`` means ``n * eps`` for an ``n x n``
    matrix.
    """

    eq: float = 1e-9
    psd: float = 1e-9
    comm: float = 1e-9
    rank: float | None = None

    def __post_init__(self):
        for field in ("eq", "psd", "comm", "rank"):
            value = getattr(self, field)
            if value is None and field == "rank":
                continue
            if not (isinstance(value, (int, float)) and 0.0 < value < 1.0):
                raise ValueError(f"tolerance {field}={value!r} must lie in (0, 1)")

    def rank_factor(self, size: int) -> float:
        if self.rank is not None:
            return self.rank
        return max(int(size), 1) * EPS

    def with_overrides(self, **kwargs) -> "TolerancePolicy":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


DEFAULT_TOL = TolerancePolicy()


def as_sym(a, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Validate ``a`` as a real symmetric matrix and return its symmetrization.

    Asymmetry up to ``tol.eq * max(1, max|a_ij|)`` is absorbed by averaging with
    the transpose; anything larger raises :class:`NotSymmetricError`.
    """
    m = np.array(a, dtype=float)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise DimensionError("matrix dimension must be positive")
    if not np.all(np.isfinite(m)):
        raise NotSymmetricError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(m))))
    if np.max(np.abs(m - m.T)) > tol.eq * scale:
        raise NotSymmetricError("matrix is not symmetric within tolerance")
    return 0.5 * (m + m.T)


def identity(n: int) -> np.ndarray:
    return np.eye(n)


def zeros(n: int) -> np.ndarray:
    return np.zeros((n, n))


def _pair(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a, b


def symmetrize(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    return 0.5 * (m + m.T)


def eigh(a):
    """Ascending eigenvalues and orthonormal eigenvectors of a symmetric matrix."""
    return np.linalg.eigh(symmetrize(a))


def eigvalsh(a) -> np.ndarray:
    return np.linalg.eigvalsh(symmetrize(a))


def lambda_min(a) -> float:
    return float(eigvalsh(a)[0])


def lambda_max(a) -> float:
    return float(eigvalsh(a)[-1])


def order_unit_norm(a) -> float:
    """Spectral radius, i.e. the least ``r >= 0`` with ``-r <= a <= r``."""
    ev = eigvalsh(a)
    return float(max(abs(ev[0]), abs(ev[-1])))


def spectral_norm(m) -> float:
    """Operator 2-norm of a not necessarily symmetric matrix."""
    m = np.asarray(m, dtype=float)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def loewner_leq(a, b, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff ``b - a`` is positive semidefinite up to ``tol.psd``."""
    a, b = _pair(a, b)
    d = symmetrize(b - a)
    ev = eigvalsh(d)
    scale = max(1.0, abs(ev[0]), abs(ev[-1]))
    return bool(ev[0] >= -tol.psd * scale)


def is_psd(a, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=float)
    return loewner_leq(np.zeros_like(a), a, tol)


def comparable(a, b, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    return loewner_leq(a, b, tol) or loewner_leq(b, a, tol)


def is_close(a, b, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Equality within ``tol.eq`` relative to the larger operand norm."""
    a, b = _pair(a, b)
    scale = max(1.0, spectral_norm(a), spectral_norm(b))
    return spectral_norm(a - b) <= tol.eq * scale


def is_zero(a, tol: TolerancePolicy = DEFAULT_TOL, scale: float = 1.0) -> bool:
    return spectral_norm(a) <= tol.eq * max(1.0, scale)


def jordan(a, b) -> np.ndarray:
    """Symmetrized product ``(ab + ba) / 2``."""
    a, b = _pair(a, b)
    return symmetrize(0.5 * (a @ b + b @ a))


def quad(a, b) -> np.ndarray:
    """The quadratic map ``b -> a b a``."""
    a, b = _pair(a, b)
    return symmetrize(a @ b @ a)


def commutator(a, b) -> np.ndarray:
    a, b = _pair(a, b)
    return a @ b - b @ a


def commutator_norm(a, b) -> float:
    return spectral_norm(commutator(a, b))


def commutes(a, b, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff ``||ab - ba|| <= tol.comm * max(1, ||a|| ||b||)``."""
    a, b = _pair(a, b)
    scale = max(1.0, spectral_norm(a) * spectral_norm(b))
    return commutator_norm(a, b) <= tol.comm * scale


# -- matrix files -------------------------------------------------------------


class MatrixFileError(SynlaError, ValueError):
    """A matrix file could not be parsed or failed validation."""


def parse_matrix_document(doc, tol: TolerancePolicy = DEFAULT_TOL):
    """Validate a decoded matrix document; return ``(n, [(name, matrix), ...])``."""
    if not isinstance(doc, dict) or "matrices" not in doc:
        raise MatrixFileError("expected an object with a 'matrices' list")
    entries = doc["matrices"]
    if not isinstance(entries, list):
        raise MatrixFileError("'matrices' must be a list")
    n = doc.get("n")
    named = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "rows" not in entry:
            raise MatrixFileError(f"matrix #{i} lacks 'rows'")
        name = str(entry.get("name", f"m{i}"))
        try:
            m = as_sym(entry["rows"], tol)
        except (SynlaError, ValueError, TypeError) as exc:
            raise MatrixFileError(f"matrix {name!r}: {exc}") from exc
        if n is None:
            n = m.shape[0]
        if m.shape != (n, n):
            raise MatrixFileError(f"matrix {name!r} has shape {m.shape}, expected n={n}")
        named.append((name, m))
    if n is None or not isinstance(n, int) or n < 1:
        raise MatrixFileError("missing or invalid dimension 'n'")
    return n, named


def read_matrix_file(path, tol: TolerancePolicy = DEFAULT_TOL):
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MatrixFileError(f"cannot read {path}: {exc}") from exc
    return parse_matrix_document(doc, tol)


def matrix_document(named, n: int | None = None) -> dict:
    named = list(named)
    if n is None:
        if not named:
            raise ValueError("cannot infer n from an empty list")
        n = int(np.asarray(named[0][1]).shape[0])
    return {
        "n": int(n),
        "matrices": [
            {"name": str(name), "rows": np.asarray(m, dtype=float).tolist()}
            for name, m in named
        ],
    }


def write_matrix_file(path, named, n: int | None = None) -> None:
    Path(path).write_text(json.dumps(matrix_document(named, n), indent=1))
