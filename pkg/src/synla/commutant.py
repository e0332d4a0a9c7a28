"""
Linear subspaces of symmetric matrices, commutants and C-blocks.

Symmetric matrices are handled in the isometric coordinates ``svec`` (diagonal
entries, then ``sqrt(2)`` times the upper off-diagonal entries), so the trace
inner product becomes the Euclidean one. Commutants are null spaces of the
stacked linear maps ``x -> xb - bx``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .errors import ConsistencyError, DimensionError, NonCommutativeError
from .symmat import (
    DEFAULT_TOL,
    TolerancePolicy,
    commutator_norm,
    commutes,
    eigh,
    symmetrize,
)

SQRT2 = np.sqrt(2.0)


@lru_cache(maxsize=None)
def _index(n):
    iu = np.triu_indices(n, 1)
    return iu


def svec(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    return np.concatenate([np.diag(x), SQRT2 * x[_index(n)]])


def smat(v, n: int) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    x = np.zeros((n, n))
    x[np.diag_indices(n)] = v[:n]
    iu = _index(n)
    x[iu] = v[n:] / SQRT2
    x.T[iu] = v[n:] / SQRT2
    return x


def sym_dim(n: int) -> int:
    return n * (n + 1) // 2


def sym_basis(n: int) -> list:
    """Trace-orthonormal basis of all ``n x n`` symmetric matrices."""
    return [smat(e, n) for e in np.eye(sym_dim(n))]


@dataclass(frozen=True, eq=False)
class Subspace:
    """A linear subspace of ``n x n`` symmetric matrices.

    ``coords`` has trace-orthonormal columns in ``svec`` coordinates; ``basis``
    is the same basis as a stack of matrices.
    """

    n: int
    coords: np.ndarray

    @classmethod
    def from_spanning(cls, matrices, n: int | None = None, tol: TolerancePolicy = DEFAULT_TOL):
        mats = [np.asarray(m, dtype=float) for m in matrices]
        if n is None:
            if not mats:
                raise ValueError("need n for an empty spanning set")
            n = mats[0].shape[0]
        for m in mats:
            if m.shape != (n, n):
                raise DimensionError(f"expected {n}x{n}, got {m.shape}")
        cols = []
        for m in mats:
            v = svec(symmetrize(m))
            norm = np.linalg.norm(v)
            for _ in range(2):
                for q in cols:
                    v = v - (q @ v) * q
            r = np.linalg.norm(v)
            if r > tol.eq * norm and r > 0:
                cols.append(v / r)
        coords = np.array(cols).T if cols else np.zeros((sym_dim(n), 0))
        return cls(n=n, coords=coords)

    @classmethod
    def full(cls, n: int):
        return cls(n=n, coords=np.eye(sym_dim(n)))

    @property
    def dim(self) -> int:
        return self.coords.shape[1]

    @property
    def basis(self) -> list:
        return [smat(c, self.n) for c in self.coords.T]

    def coordinates(self, x) -> np.ndarray:
        return self.coords.T @ svec(x)

    def element(self, coeffs) -> np.ndarray:
        return smat(self.coords @ np.asarray(coeffs, dtype=float), self.n)

    def project(self, x) -> np.ndarray:
        return self.element(self.coordinates(x))

    def residual(self, x) -> float:
        """Frobenius distance from ``x`` to the subspace."""
        v = svec(x)
        return float(np.linalg.norm(v - self.coords @ (self.coords.T @ v)))

    def contains(self, x, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
        x = np.asarray(x, dtype=float)
        return self.residual(x) <= tol.eq * max(1.0, float(np.linalg.norm(x)))

    def contains_subspace(self, other: "Subspace", tol: TolerancePolicy = DEFAULT_TOL) -> bool:
        return all(self.contains(b, tol) for b in other.basis)

    def same_as(self, other: "Subspace", tol: TolerancePolicy = DEFAULT_TOL) -> bool:
        return (
            self.n == other.n
            and self.dim == other.dim
            and self.contains_subspace(other, tol)
            and other.contains_subspace(self, tol)
        )

    def random_element(self, rng) -> np.ndarray:
        return self.element(rng.standard_normal(self.dim))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def _as_family(matrices):
    mats = [np.asarray(m, dtype=float) for m in matrices]
    if not mats:
        raise ValueError("need at least one matrix")
    shape = mats[0].shape
    if len(shape) != 2 or shape[0] != shape[1]:
        raise DimensionError(f"expected square matrices, got {shape}")
    for m in mats:
        if m.shape != shape:
            raise DimensionError("matrices differ in dimension")
    return mats, shape[0]


def commutator_operator(matrices) -> np.ndarray:
    """Matrix of ``x -> [xb_1 - b_1 x; xb_2 - b_2 x; ...]`` on ``svec`` coordinates."""
    mats, n = _as_family(matrices)
    cols = []
    for e in sym_basis(n):
        cols.append(np.concatenate([(e @ b - b @ e).ravel() for b in mats]))
    return np.array(cols).T


def _null_space(k, tol, scale=0.0):
    """Right null space of ``k``; singular values up to the rank cutoff of
    ``max(scale, s_max)`` count as zero."""
    m = k.shape[1]
    if k.size == 0:
        return np.eye(m)
    _, s, vh = np.linalg.svd(k, full_matrices=True)
    smax = s[0] if s.size else 0.0
    cut = tol.rank_factor(max(k.shape)) * max(scale, smax)
    rank = int(np.sum(s > cut)) if smax > 0 else 0
    return vh[rank:].T.copy()


def commutant(matrices, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    """All symmetric ``x`` commuting with every given matrix."""
    mats, n = _as_family(matrices)
    # ||x b - b x|| <= 2 ||b|| for unit x; a (near-)scalar b gives a K made of
    # rounding noise, which must not be mistaken for rank
    scale = 2.0 * max(float(np.linalg.norm(b, 2)) for b in mats)
    coords = _null_space(commutator_operator(mats), tol, scale)
    return Subspace(n=n, coords=coords)


def bicommutant(matrices, tol: TolerancePolicy = DEFAULT_TOL, self_check: bool = True) -> Subspace:
    """``C(C(B))``; checks ``B`` in ``CC(B)`` and ``C(CC(B)) = C(B)`` when asked."""
    mats, n = _as_family(matrices)
    c = commutant(mats, tol)
    cc = commutant(c.basis, tol)
    if self_check:
        loose = TolerancePolicy(eq=min(0.5, 1e3 * tol.eq))
        if not all(cc.contains(b, loose) for b in mats):
            raise ConsistencyError("generating set is not contained in its bicommutant")
        if not commutant(cc.basis, tol).same_as(c, loose):
            raise ConsistencyError("C(CC(B)) differs from C(B)")
    return cc


def center(n: int, tol: TolerancePolicy = DEFAULT_TOL) -> Subspace:
    return commutant(sym_basis(n), tol)


def noncommuting_pair(matrices, tol: TolerancePolicy = DEFAULT_TOL):
    """First index pair ``(i, j)``, ``i < j``, that fails to commute, or ``None``."""
    mats = [np.asarray(m, dtype=float) for m in matrices]
    for i, j in combinations(range(len(mats)), 2):
        if not commutes(mats[i], mats[j], tol):
            return i, j
    return None


def is_commutative_family(matrices, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    return noncommuting_pair(matrices, tol) is None


def is_cblock(matrices, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff the family commutes and its span equals its commutant."""
    mats, n = _as_family(matrices)
    if not is_commutative_family(mats, tol):
        return False
    span = Subspace.from_spanning(mats, n, tol)
    return span.same_as(commutant(mats, tol), tol)


def joint_eigenbasis(matrices, seed: int = 0, tol: TolerancePolicy = DEFAULT_TOL, attempts: int = 8):
    """Orthonormal basis diagonalizing every matrix of a commuting family."""
    mats, n = _as_family(matrices)
    rng = np.random.default_rng(seed)
    loose = TolerancePolicy(eq=min(0.5, 1e3 * tol.eq))
    for _ in range(attempts):
        g = sum(c * m for c, m in zip(rng.standard_normal(len(mats)), mats))
        _, vecs = eigh(g)
        ok = True
        for m in mats:
            d = vecs.T @ m @ vecs
            off = d - np.diag(np.diag(d))
            if np.linalg.norm(off) > loose.eq * max(1.0, np.linalg.norm(m)):
                ok = False
                break
        if ok:
            return vecs
    raise ConsistencyError("could not find a joint eigenbasis for the family")


def extend_to_cblock(
    matrices, n: int | None = None, seed: int = 0, tol: TolerancePolicy = DEFAULT_TOL
) -> Subspace:
    """Enlarge a commuting family to a maximal commutative subspace.

    The family is augmented by ``h = sum_k k v_k v_k^T`` for a joint eigenbasis
    ``v_1..v_n``; ``h`` commutes with the family and has simple spectrum, so
    ``C(B + {h})`` consists of the matrices diagonal in that basis.
    An empty family is treated as ``{1}`` and then ``n`` is required.
    """
    matrices = list(matrices)
    if not matrices:
        if n is None:
            raise ValueError("n is required for an empty family")
        matrices = [np.eye(n)]
    mats, n = _as_family(matrices)
    pair = noncommuting_pair(mats, tol)
    if pair is not None:
        i, j = pair
        raise NonCommutativeError(
            f"matrices #{i} and #{j} do not commute",
            pair=pair,
            commutator_norm=commutator_norm(mats[i], mats[j]),
        )
    vecs = joint_eigenbasis(mats, seed, tol)
    h = symmetrize((vecs * np.arange(1.0, n + 1.0)) @ vecs.T)
    block = commutant(mats + [h], tol)
    loose = TolerancePolicy(eq=min(0.5, 1e3 * tol.eq))
    if not all(block.contains(b, loose) for b in mats) or not is_cblock(block.basis, loose):
        raise ConsistencyError("extension is not a C-block containing the family")
    return block
