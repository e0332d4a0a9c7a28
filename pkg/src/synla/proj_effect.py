"""
Effects, projections and the classification of finite families of them.

An effect is a symmetric ``e`` with ``0 <= e <= 1``; a projection is an
idempotent symmetric ``p``. Projections form an orthomodular lattice with
``p v q = carrier(p + q)`` and ``p ^ q = 1 - carrier((1 - p) + (1 - q))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from .errors import (
    ConsistencyError,
    DimensionError,
    NonCommutativeError,
    NotEffectError,
    NotPositiveError,
    NotProjectionError,
)
from .genlattice import ginf, gsup
from .symmat import (
    DEFAULT_TOL,
    TolerancePolicy,
    as_sym,
    commutator_norm,
    commutes,
    is_close,
    is_psd,
    is_zero,
    jordan,
    lambda_max,
    loewner_leq,
    spectral_norm,
)
from .synaptic_ops import carrier

BOOLEAN = "Boolean"
MV_NOT_BOOLEAN = "MV-not-Boolean"
OML_NOT_BOOLEAN = "OML-not-Boolean"
LATTICE_ONLY = "lattice-only"
NOT_CLOSED = "not-closed"


def is_projection(a, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    if not np.allclose(a, a.T, atol=tol.eq * max(1.0, float(np.max(np.abs(a), initial=0)))):
        return False
    return is_close(a @ a, a, tol)


def is_effect(a, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """``0 <= a <= 1``, cross-checked against ``a^2 <= a``."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    by_order = is_psd(a, tol) and loewner_leq(a, np.eye(n), tol)
    by_square = loewner_leq(a @ a, a, tol)
    if by_order != by_square:
        # the two readings can only split when an eigenvalue sits at the tolerance edge
        ev = np.linalg.eigvalsh(a)
        edge = 10 * max(tol.psd, tol.eq) * max(1.0, float(np.max(np.abs(ev))))
        near = np.min(np.minimum(np.abs(ev), np.abs(ev - 1.0)))
        if near > edge:
            raise ConsistencyError("effect characterizations 0<=e<=1 and e^2<=e disagree")
    return by_order


def as_projection(p, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    p = as_sym(p, tol)
    if not is_projection(p, tol):
        raise NotProjectionError("matrix is not idempotent within tolerance")
    return p


def as_effect(e, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    e = as_sym(e, tol)
    if not is_effect(e, tol):
        raise NotEffectError("matrix does not satisfy 0 <= e <= 1")
    return e


def orthocomplement(p, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    p = as_projection(p, tol)
    return np.eye(p.shape[0]) - p


def _proj_pair(p, q, tol):
    p = as_projection(p, tol)
    q = as_projection(q, tol)
    if p.shape != q.shape:
        raise DimensionError(f"dimension mismatch: {p.shape} vs {q.shape}")
    return p, q


def _join(p, q, tol):
    # Inputs are accepted as projections up to tol.eq, so eigenvalues of p + q
    # below that level are indistinguishable from zero; the rank cutoff is
    # raised accordingly and measured against 1.
    n = p.shape[0]
    cut = max(tol.rank_factor(n), 2.0 * tol.eq)
    return carrier(p + q, tol.with_overrides(rank=min(cut, 0.5)), scale=max(1.0, spectral_norm(p + q)))


def _meet(p, q, tol):
    one = np.eye(p.shape[0])
    return one - _join(one - p, one - q, tol)


def proj_join(p, q, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Projection onto the sum of the ranges."""
    p, q = _proj_pair(p, q, tol)
    j = _join(p, q, tol)
    if commutes(p, q, tol) and not is_close(j, p + q - p @ q, _loose(tol)):
        raise ConsistencyError("join of commuting projections differs from p + q - pq")
    return j


def proj_meet(p, q, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Projection onto the intersection of the ranges."""
    p, q = _proj_pair(p, q, tol)
    m = _meet(p, q, tol)
    if commutes(p, q, tol) and not is_close(m, p @ q, _loose(tol)):
        raise ConsistencyError("meet of commuting projections differs from pq")
    return m


def _loose(tol):
    return TolerancePolicy(eq=min(0.5, 1e3 * tol.eq), psd=min(0.5, 1e3 * tol.psd))


def is_orthogonal(p, q, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """``p + q <= 1``, which for projections means ``pq = qp = 0``."""
    p = np.asarray(p, dtype=float)
    return loewner_leq(p + np.asarray(q, dtype=float), np.eye(p.shape[0]), tol)


@dataclass(frozen=True)
class CompatibilityWitness:
    """``p = e1 + d``, ``q = f1 + d`` with ``e1 + f1 + d <= 1``."""

    e1: np.ndarray
    f1: np.ndarray
    d: np.ndarray

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Incompatible:
    commutator_norm: float

    def __bool__(self):
        return False


def compatible(p, q, tol: TolerancePolicy = DEFAULT_TOL):
    """Decompose a commuting pair of projections, or report incompatibility.

    Returns a :class:`CompatibilityWitness` (truthy) when ``p`` and ``q``
    commute, else :class:`Incompatible` (falsy) carrying ``||pq - qp||``.
    """
    p, q = _proj_pair(p, q, tol)
    if not commutes(p, q, tol):
        return Incompatible(commutator_norm(p, q))
    d = 0.5 * (p @ q + q @ p)
    w = CompatibilityWitness(e1=p - d, f1=q - d, d=d)
    one = np.eye(p.shape[0])
    loose = _loose(tol)
    if not (
        loewner_leq(w.e1 + w.f1 + w.d, one, loose)
        and all(is_projection(x, loose) for x in (w.e1, w.f1, w.d))
    ):
        raise ConsistencyError("compatibility witness of commuting projections is invalid")
    return w


def jordan_positivity_commutation(p, a, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """For a projection ``p`` and positive ``a``: ``pa = ap`` iff ``p o a >= 0``."""
    p = as_projection(p, tol)
    a = as_sym(a, tol)
    if not is_psd(a, tol):
        raise NotPositiveError("second argument must be positive semidefinite")
    result = commutes(p, a, tol)
    if result != is_psd(jordan(p, a), tol):
        raise ConsistencyError("commutation and positivity of the Jordan product disagree")
    return result


@dataclass
class ClassificationVerdict:
    """Structure of a finite family together with the pairs that spoil it.

    Each witness is a dict with ``pair`` (indices), ``condition`` (name of the
    failed implication) and numeric ``evidence``.
    """

    structure: str
    witnesses: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "structure": self.structure,
            "witnesses": [
                {**w, "pair": list(w["pair"])} for w in self.witnesses
            ],
            "notes": list(self.notes),
        }


def _index_of(target, family, tol):
    for k, m in enumerate(family):
        if is_close(target, m, tol):
            return k
    return None


def _closure_notes(family, tol):
    n = family[0].shape[0]
    one, zero = np.eye(n), np.zeros((n, n))
    notes = []
    if _index_of(zero, family, tol) is None:
        notes.append("0 missing")
    if _index_of(one, family, tol) is None:
        notes.append("1 missing")
    for i, m in enumerate(family):
        if _index_of(one - m, family, tol) is None:
            notes.append(f"complement of #{i} missing")
    return notes


def _structure(mv_ok, oml_ok):
    if mv_ok and oml_ok:
        return BOOLEAN
    if mv_ok:
        return MV_NOT_BOOLEAN
    if oml_ok:
        return OML_NOT_BOOLEAN
    return LATTICE_ONLY


def _prepare(family, check, tol):
    family = [np.asarray(m, dtype=float) for m in family]
    if not family:
        raise ValueError("family must not be empty")
    shape = family[0].shape
    for m in family:
        if m.shape != shape:
            raise DimensionError("family members differ in dimension")
    return [check(m, tol) for m in family]


def classify_projection_set(family, tol: TolerancePolicy = DEFAULT_TOL) -> ClassificationVerdict:
    """Classify a finite family of projections containing 0, 1 and complements.

    Disjointness is decided with the meet computed in the lattice of all
    projections. The OML direction (orthogonal implies disjoint) and the MV
    direction (disjoint implies orthogonal) are checked over every pair
    ``i <= j`` in index order.
    """
    family = _prepare(family, as_projection, tol)
    notes = _closure_notes(family, tol)
    if notes:
        return ClassificationVerdict(NOT_CLOSED, [], notes)
    witnesses = []
    mv_ok = oml_ok = True
    for i, j in combinations_with_replacement(range(len(family)), 2):
        p, q = family[i], family[j]
        meet = _meet(p, q, tol)
        disjoint = is_zero(meet, tol)
        orthogonal = is_orthogonal(p, q, tol)
        evidence = {
            "meet_norm": spectral_norm(meet),
            "lambda_max_sum": lambda_max(p + q),
            "meet_in_family": _index_of(meet, family, tol) is not None,
        }
        if orthogonal and not disjoint:
            oml_ok = False
            witnesses.append({"pair": (i, j), "condition": "orthogonal=>disjoint", "evidence": evidence})
        if disjoint and not orthogonal:
            mv_ok = False
            witnesses.append({"pair": (i, j), "condition": "disjoint=>orthogonal", "evidence": evidence})
    return ClassificationVerdict(_structure(mv_ok, oml_ok), witnesses, [])


def classify_commutative_effect_set(
    family, tol: TolerancePolicy = DEFAULT_TOL
) -> ClassificationVerdict:
    """Classify a commuting family of effects as an effect algebra.

    Meets and joins are ``ginf`` and ``gsup``, which are the lattice
    operations for commuting effects. For every pair the four equivalent
    MV conditions are checked: ``(e v f) - e = f - (e ^ f)``; disjoint implies
    orthogonal; ``e - (e ^ f)`` is orthogonal to ``f``; and ``e``, ``f`` are
    compatible via ``e - ef``, ``f - ef``, ``ef``.
    """
    family = _prepare(family, as_effect, tol)
    for i, j in combinations_with_replacement(range(len(family)), 2):
        if not commutes(family[i], family[j], tol):
            raise NonCommutativeError(
                f"effects #{i} and #{j} do not commute",
                pair=(i, j),
                commutator_norm=commutator_norm(family[i], family[j]),
            )
    notes = _closure_notes(family, tol)
    if notes:
        return ClassificationVerdict(NOT_CLOSED, [], notes)
    n = family[0].shape[0]
    one = np.eye(n)
    witnesses = []
    mv_ok = oml_ok = True
    for i, j in combinations_with_replacement(range(len(family)), 2):
        e, f = family[i], family[j]
        meet, join = ginf(e, f), gsup(e, f)
        orthogonal = loewner_leq(e + f, one, tol)
        disjoint = is_zero(meet, tol)
        ef = 0.5 * (e @ f + f @ e)
        parts = (e - ef, f - ef, ef)
        checks = {
            "difference-law": is_close(join - e, f - meet, tol),
            "disjoint=>orthogonal": orthogonal or not disjoint,
            "remainder-orthogonal": loewner_leq(e - meet + f, one, tol),
            "compatible": all(is_effect(x, tol) for x in parts)
            and loewner_leq(sum(parts), one, tol),
        }
        for name, ok in checks.items():
            if not ok:
                mv_ok = False
                witnesses.append({"pair": (i, j), "condition": name, "evidence": {}})
        if orthogonal and not disjoint:
            oml_ok = False
            witnesses.append(
                {
                    "pair": (i, j),
                    "condition": "orthogonal=>disjoint",
                    "evidence": {"meet_norm": spectral_norm(meet)},
                }
            )
    return ClassificationVerdict(_structure(mv_ok, oml_ok), witnesses, [])
