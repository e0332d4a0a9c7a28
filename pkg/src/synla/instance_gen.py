"""
Seeded random instances.

Every generator draws from ``numpy.random.default_rng(seed)``; the same
:class:`GenSpec` always yields bit-identical output. Structural properties
(ordering, commutation, zero products) hold by construction rather than by
rejection sampling.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .commutant import Subspace, sym_basis
from .symmat import symmetrize

KINDS = (
    "sym",
    "psd",
    "ordered-pair",
    "commuting-family",
    "zero-product-pair",
    "projection",
    "subspace-diagonal",
    "subspace-full",
    "subspace-span",
    "subspace-commutative",
    "subspace-blocks",
)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    count: int = 1
    seed: int = 0
    spectrum: tuple = (-1.0, 1.0)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if int(self.n) < 1:
            raise ValueError("n must be >= 1")
        if int(self.count) < 1:
            raise ValueError("count must be >= 1")
        lo, hi = self.spectrum
        if not lo <= hi:
            raise ValueError("spectrum must be an interval lo <= hi")


def random_orthogonal(rng, n: int) -> np.ndarray:
    """Haar-distributed orthogonal matrix (QR of a Gaussian matrix, sign-fixed)."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def from_spectrum(q, vals) -> np.ndarray:
    return symmetrize((q * vals) @ q.T)


def random_sym(rng, n: int, spectrum=(-1.0, 1.0)) -> np.ndarray:
    return from_spectrum(random_orthogonal(rng, n), rng.uniform(*spectrum, size=n))


def random_psd(rng, n: int, spectrum=(0.0, 1.0)) -> np.ndarray:
    lo, hi = spectrum
    return from_spectrum(random_orthogonal(rng, n), rng.uniform(max(lo, 0.0), max(hi, 0.0), size=n))


def ordered_pair(rng, n: int, spectrum=(0.0, 1.0)):
    """``(a, b)`` with ``0 <= a`` and ``b = a + bump`` for a PSD bump."""
    a = random_psd(rng, n, spectrum)
    return a, a + random_psd(rng, n, spectrum)


def commuting_family(rng, n: int, count: int, spectrum=(-1.0, 1.0)) -> list:
    q = random_orthogonal(rng, n)
    return [from_spectrum(q, rng.uniform(*spectrum, size=n)) for _ in range(count)]


def zero_product_pair(rng, n: int, spectrum=(0.0, 1.0)):
    """PSD ``(a, b)`` supported on complementary eigenvector sets, so ``ab = 0``."""
    lo, hi = max(spectrum[0], 0.0), max(spectrum[1], 0.0)
    q = random_orthogonal(rng, n)
    k = int(rng.integers(1, n)) if n > 1 else 1
    da = np.zeros(n)
    db = np.zeros(n)
    da[:k] = rng.uniform(lo, hi, size=k)
    db[k:] = rng.uniform(lo, hi, size=n - k)
    return from_spectrum(q, da), from_spectrum(q, db)


def random_projection(rng, n: int, rank: int | None = None) -> np.ndarray:
    if rank is None:
        rank = int(rng.integers(1, n)) if n > 1 else int(rng.integers(0, 2))
    q = random_orthogonal(rng, n)[:, :rank]
    return symmetrize(q @ q.T)


def random_partition(rng, n: int) -> list:
    sizes = []
    left = n
    while left:
        s = int(rng.integers(1, left + 1))
        sizes.append(s)
        left -= s
    return sizes


def commutative_subspace(rng, n: int) -> Subspace:
    """Span of the projections onto a random orthogonal decomposition of ``R^n``.

    This is closed under every spectral function and commutative.
    """
    q = random_orthogonal(rng, n)
    mats = []
    start = 0
    for s in random_partition(rng, n):
        block = q[:, start : start + s]
        mats.append(symmetrize(block @ block.T))
        start += s
    return Subspace.from_spanning(mats, n)


def block_subspace(rng, n: int, min_block: int = 2) -> Subspace:
    """Rotated direct sum of full symmetric blocks and scalar blocks.

    At least one full block of size ``>= min_block`` is present (when
    ``n >= min_block``), so the result is closed under spectral functions and
    noncommutative.
    """
    q = random_orthogonal(rng, n)
    sizes = random_partition(rng, n)
    if n >= min_block and max(sizes) < min_block:
        sizes = [min_block] + [1] * (n - min_block)
    mats = []
    start = 0
    for s in sizes:
        block = q[:, start : start + s]
        if s >= min_block or rng.random() < 0.5:
            for e in sym_basis(s):
                mats.append(symmetrize(block @ e @ block.T))
        else:
            mats.append(symmetrize(block @ block.T))
        start += s
    return Subspace.from_spanning(mats, n)


def generate(spec: GenSpec) -> list:
    """Produce ``spec.count`` objects of ``spec.kind``.

    Pair kinds yield tuples, ``commuting-family`` yields one list of
    ``spec.count`` matrices, subspace kinds yield :class:`Subspace` objects.
    """
    rng = np.random.default_rng(spec.seed)
    n, count, spectrum = int(spec.n), int(spec.count), tuple(spec.spectrum)
    kind = spec.kind
    if kind == "sym":
        return [random_sym(rng, n, spectrum) for _ in range(count)]
    if kind == "psd":
        return [random_psd(rng, n, spectrum) for _ in range(count)]
    if kind == "ordered-pair":
        return [ordered_pair(rng, n, spectrum) for _ in range(count)]
    if kind == "commuting-family":
        return commuting_family(rng, n, count, spectrum)
    if kind == "zero-product-pair":
        return [zero_product_pair(rng, n, spectrum) for _ in range(count)]
    if kind == "projection":
        return [random_projection(rng, n) for _ in range(count)]
    if kind == "subspace-diagonal":
        diag = [np.diag(e) for e in np.eye(n)]
        return [Subspace.from_spanning(diag, n) for _ in range(count)]
    if kind == "subspace-full":
        return [Subspace.full(n) for _ in range(count)]
    if kind == "subspace-span":
        out = []
        for _ in range(count):
            k = int(rng.integers(1, max(2, n)))
            mats = [np.eye(n)] + [random_sym(rng, n, spectrum) for _ in range(k)]
            out.append(Subspace.from_spanning(mats, n))
        return out
    if kind == "subspace-commutative":
        return [commutative_subspace(rng, n) for _ in range(count)]
    return [block_subspace(rng, n) for _ in range(count)]
