"""
Vector-lattice certification for subspaces of symmetric matrices.

For a subspace ``V`` that contains the identity and is closed under absolute
values and carriers, ``V`` is a vector lattice exactly when its elements
commute pairwise. :func:`certify_vector_lattice` checks the closure hypotheses
by sampling, decides the verdict by the commutativity test, and then backs the
verdict with evidence for twelve equivalent conditions: sampled confirmations
when ``V`` is commutative, explicit counterexamples when it is not.

Counterexamples are built from a noncommuting pair of projections ``p, q`` in
``V``. The Jordan product ``p o q`` is then not positive, which refutes the
product conditions (J, SQ, O, J+). Twisting by ``h = 1 + q`` gives a lower
bound ``c`` of ``p`` and ``1 - p`` inside ``V`` that is not below ``0``,
which refutes the order conditions (L, disjoint-meet, pos-part-sup, RDP, P,
T, abs-order).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .commutant import Subspace
from .errors import NonCommutativeError, NotMemberError, PreconditionError, SynlaError
from .genlattice import ginf, gsup
from .symmat import (
    DEFAULT_TOL,
    TolerancePolicy,
    commutator_norm,
    commutes,
    is_close,
    is_psd,
    jordan,
    lambda_max,
    lambda_min,
    loewner_leq,
    spectral_norm,
    symmetrize,
)
from .synaptic_ops import absolute, carrier, decompose, invert, spectral_resolution, sqrt

VECTOR_LATTICE = "VectorLattice"
NOT_VECTOR_LATTICE = "NotVectorLattice"
HYPOTHESES_NOT_MET = "HypothesesNotMet"

HOLDS = "holds-on-samples"
VIOLATED = "violated"
NOT_FOUND = "no-witness-found"

CONDITIONS = (
    "L",
    "commutativity",
    "disjoint-meet",
    "pos-part-sup",
    "RDP",
    "J",
    "SQ",
    "T",
    "abs-order",
    "P",
    "O",
    "J+",
)


# -- closure ----------------------------------------------------------------


@dataclass
class ClosureReport:
    """Sampled evidence for ``1 in V`` and closure under ``|.|`` and carriers.

    Residuals are Frobenius distances to ``V`` divided by ``max(1, ||x||_F)``.
    ``conclusive`` is set when the joint-eigenbasis test for commutative ``V``
    settles closure exactly.
    """

    contains_unit: bool
    abs_closed: bool
    abs_residual: float
    carrier_closed: bool
    carrier_residual: float
    derived_residuals: dict
    derived_consistent: bool
    samples_used: int
    seed: int
    conclusive: bool = False

    @property
    def hypotheses_met(self) -> bool:
        return self.contains_unit and self.abs_closed and self.carrier_closed

    def to_dict(self):
        return {
            "contains_unit": self.contains_unit,
            "abs_closed": self.abs_closed,
            "abs_residual": self.abs_residual,
            "carrier_closed": self.carrier_closed,
            "carrier_residual": self.carrier_residual,
            "derived_residuals": dict(self.derived_residuals),
            "derived_consistent": self.derived_consistent,
            "samples_used": self.samples_used,
            "seed": self.seed,
            "conclusive": self.conclusive,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


def _rel_residual(V, x):
    return V.residual(x) / max(1.0, float(np.linalg.norm(x)))


def _joint_eigenbasis_closed(V, rng, tol):
    g = V.random_element(rng)
    res = spectral_resolution(g, tol)
    projections = res.eigenprojections()
    if len(projections) != V.dim:
        return False
    return all(V.contains(e, tol) for e in projections)


def check_closure(
    V: Subspace, samples: int = 64, seed: int = 0, tol: TolerancePolicy = DEFAULT_TOL
) -> ClosureReport:
    """Test ``1 in V`` and closure of ``V`` under absolute values and carriers.

    Every basis element and ``samples`` random combinations are tested. The
    equivalent closures under positive and negative parts and under the
    generalized infimum and supremum are measured on consecutive pairs of
    those elements; ``derived_consistent`` is false if they disagree with
    the absolute-value verdict.
    """
    if V.dim == 0:
        raise SynlaError("empty subspace")
    if samples < V.dim:
        raise ValueError(f"samples={samples} must be at least dim(V)={V.dim}")
    rng = np.random.default_rng(seed)
    n = V.n
    elements = list(V.basis) + [V.random_element(rng) for _ in range(samples)]
    abs_res = car_res = 0.0
    derived = {"pos": 0.0, "neg": 0.0, "ginf": 0.0, "gsup": 0.0}
    for i, x in enumerate(elements):
        pos, neg = decompose(x)
        abs_res = max(abs_res, _rel_residual(V, pos + neg))
        # parts of x can be numerically zero; measure rank against x itself
        scale = spectral_norm(x)
        for y in (x, pos, neg):
            car_res = max(car_res, _rel_residual(V, carrier(y, tol, scale)))
        derived["pos"] = max(derived["pos"], _rel_residual(V, pos))
        derived["neg"] = max(derived["neg"], _rel_residual(V, neg))
        if i + 1 < len(elements):
            y = elements[i + 1]
            derived["ginf"] = max(derived["ginf"], _rel_residual(V, ginf(x, y)))
            derived["gsup"] = max(derived["gsup"], _rel_residual(V, gsup(x, y)))
    limit = tol.eq
    abs_closed = abs_res <= limit
    report = ClosureReport(
        contains_unit=V.contains(np.eye(n), tol),
        abs_closed=abs_closed,
        abs_residual=abs_res,
        carrier_closed=car_res <= limit,
        carrier_residual=car_res,
        derived_residuals=derived,
        derived_consistent=all((r <= limit) == abs_closed for r in derived.values()),
        samples_used=len(elements),
        seed=seed,
    )
    if is_commutative(V, tol)[0]:
        report.conclusive = _joint_eigenbasis_closed(V, rng, tol)
    return report


# -- commutativity ------------------------------------------------------------


@dataclass(frozen=True)
class CommutativityWitness:
    i: int
    j: int
    commutator_norm: float


def is_commutative(V: Subspace, tol: TolerancePolicy = DEFAULT_TOL):
    """Pairwise commutation of basis elements, which suffices by bilinearity.

    Returns ``(True, None)`` or ``(False, CommutativityWitness)`` for the first
    failing basis pair.
    """
    basis = V.basis
    for i, j in combinations(range(len(basis)), 2):
        if not commutes(basis[i], basis[j], tol):
            return False, CommutativityWitness(i, j, commutator_norm(basis[i], basis[j]))
    return True, None


# -- report types -----------------------------------------------------------


@dataclass
class ConditionResult:
    status: str
    samples: int = 0
    witness: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self):
        return {
            "status": self.status,
            "samples": self.samples,
            "witness": {k: np.asarray(v).tolist() for k, v in self.witness.items()},
            "evidence": dict(self.evidence),
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            status=d["status"],
            samples=d.get("samples", 0),
            witness={k: np.array(v, dtype=float) for k, v in d.get("witness", {}).items()},
            evidence=dict(d.get("evidence", {})),
            note=d.get("note", ""),
        )


@dataclass
class CertReport:
    closure: ClosureReport
    commutative: bool
    commutativity_witness: CommutativityWitness | None
    verdict: str
    conditions: dict
    config: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def witnesses(self):
        """All witness matrices as ``(condition.name, matrix)`` pairs."""
        out = []
        for label in CONDITIONS:
            cond = self.conditions.get(label)
            if cond is None:
                continue
            for name, m in cond.witness.items():
                out.append((f"{label}.{name}", m))
        return out

    def check_invariants(self) -> bool:
        statuses = [c.status for c in self.conditions.values()]
        if self.verdict == VECTOR_LATTICE:
            return VIOLATED not in statuses
        if self.verdict == NOT_VECTOR_LATTICE:
            return VIOLATED in statuses and not self.commutative
        return True

    def to_dict(self):
        w = self.commutativity_witness
        return {
            "verdict": self.verdict,
            "commutative": self.commutative,
            "commutativity_witness": None
            if w is None
            else {"i": w.i, "j": w.j, "commutator_norm": w.commutator_norm},
            "closure": self.closure.to_dict(),
            "conditions": {k: v.to_dict() for k, v in self.conditions.items()},
            "config": dict(self.config),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d):
        w = d.get("commutativity_witness")
        return cls(
            closure=ClosureReport.from_dict(d["closure"]),
            commutative=d["commutative"],
            commutativity_witness=None if w is None else CommutativityWitness(**w),
            verdict=d["verdict"],
            conditions={k: ConditionResult.from_dict(v) for k, v in d["conditions"].items()},
            config=dict(d.get("config", {})),
            notes=list(d.get("notes", [])),
        )


# -- commutative case: sampled confirmation -----------------------------------


class _Sampler:
    def __init__(self, V, rng, tol):
        self.V, self.rng, self.tol = V, rng, tol

    def element(self):
        return self.V.random_element(self.rng)

    def positive(self):
        return decompose(self.element())[0]


def _leq(a, b, tol):
    return loewner_leq(a, b, tol)


def _sampled_conditions(V, budget, rng, tol):
    s = _Sampler(V, rng, tol)
    results = {}

    def run(label, trial):
        for k in range(budget):
            failure = trial()
            if failure is not None:
                results[label] = ConditionResult(
                    VIOLATED, k + 1, failure, note="sampled failure in a commutative subspace"
                )
                return
        results[label] = ConditionResult(HOLDS, budget)

    def lattice():
        a, b = s.element(), s.element()
        m, u = lattice_ops(V, a, b, tol, samples=1, seed=int(rng.integers(2**31)))
        c = ginf(a - s.positive(), b - s.positive())
        d = gsup(a + s.positive(), b + s.positive())
        if not (_leq(c, m, tol) and _leq(u, d, tol)):
            return {"a": a, "b": b, "lower": c, "upper": d}
        return None

    def disjoint_meet():
        a, b = decompose(s.element())
        m = ginf(a, b)
        c = ginf(a - s.positive(), b - s.positive())
        if not (is_close(m, 0 * m, tol) and V.contains(m, tol) and _leq(c, 0 * c, tol)):
            return {"a": a, "b": b, "lower": c}
        return None

    def pos_part_sup():
        a = s.element()
        pos = decompose(a)[0]
        ub = gsup(a + s.positive(), s.positive())
        if not (is_close(gsup(a, 0 * a), pos, tol) and _leq(pos, ub, tol)):
            return {"a": a, "upper": ub}
        return None

    def rdp():
        a, b, z = s.positive(), s.positive(), s.positive()
        c = ginf(a + b, z)
        try:
            riesz_decompose(V, a, b, c, tol)
        except (PreconditionError, SynlaError):
            return {"a": a, "b": b, "c": c}
        return None

    def prop_j():
        a, b = s.positive(), s.positive()
        return None if is_psd(jordan(a, b), tol) else {"a": a, "b": b}

    def prop_sq():
        b = s.positive()
        a = b - 2.0 * ginf(b, s.positive())
        return None if _leq(a @ a, b @ b, tol) else {"a": a, "b": b}

    def prop_t():
        a, b = s.element(), s.element()
        return None if _leq(absolute(a + b), absolute(a) + absolute(b), tol) else {"a": a, "b": b}

    def abs_order():
        a = s.positive()
        b = a - 2.0 * ginf(a, s.positive())
        return None if _leq(absolute(b), a, tol) else {"a": a, "b": b}

    def prop_p():
        a, b = s.positive(), s.positive()
        return None if is_psd(ginf(a, b), tol) else {"a": a, "b": b}

    def prop_o():
        a = s.positive()
        b = a + s.positive()
        return None if _leq(a @ a, b @ b, tol) else {"a": a, "b": b}

    def prop_jplus():
        a = s.positive()
        b = a + s.positive()
        return None if is_psd(jordan(a, b), tol) else {"a": a, "b": b}

    results["commutativity"] = ConditionResult(HOLDS, V.dim * (V.dim - 1) // 2)
    run("L", lattice)
    run("disjoint-meet", disjoint_meet)
    run("pos-part-sup", pos_part_sup)
    run("RDP", rdp)
    run("J", prop_j)
    run("SQ", prop_sq)
    run("T", prop_t)
    run("abs-order", abs_order)
    run("P", prop_p)
    run("O", prop_o)
    run("J+", prop_jplus)
    return {label: results[label] for label in CONDITIONS}


# -- noncommutative case: explicit counterexamples ---------------------------


def _projection_pool(V, budget, rng, tol):
    pool = []
    for b in V.basis:
        pool.extend(spectral_resolution(b, tol).projections[:-1])
    for _ in range(max(0, budget)):
        if len(pool) >= 2 and _noncommuting_projections(pool, tol) is not None:
            break
        pool.extend(spectral_resolution(V.random_element(rng), tol).projections[:-1])
    return pool


def _noncommuting_projections(pool, tol):
    best, best_norm = None, 0.0
    for i, j in combinations(range(len(pool)), 2):
        if not commutes(pool[i], pool[j], tol):
            nrm = commutator_norm(pool[i], pool[j])
            if nrm > best_norm:
                best, best_norm = (i, j), nrm
    return best


def _twisted_lower_bound(p, q, V, tol):
    """Lower bound of ``p`` and ``1 - p`` in ``V`` that is not below zero.

    With ``h = 1 + s q``, the congruence ``x -> h^(1/2) x h^(1/2)`` preserves the
    order and ``V``; pulling ``p`` and ``1 - p`` back through it gives two
    positive elements with nonzero product, whose generalized infimum has a
    positive eigenvalue. Returns ``(c, s)`` for the scale with the largest
    positive eigenvalue.
    """
    n = p.shape[0]
    one = np.eye(n)
    best = None
    for s in (1.0, 3.0, 10.0):
        h = one + s * q
        hs = sqrt(h, tol)
        his = invert(hs, tol)
        a1 = symmetrize(his @ p @ his)
        b1 = symmetrize(his @ (one - p) @ his)
        c = symmetrize(hs @ ginf(a1, b1) @ hs)
        top = lambda_max(c)
        if best is None or top > best[2]:
            best = (c, s, top)
    return best


def _witness_search(V, budget, rng, tol):
    n = V.n
    one = np.eye(n)
    results = {label: ConditionResult(NOT_FOUND) for label in CONDITIONS}
    comm, cw = is_commutative(V, tol)
    basis = V.basis
    results["commutativity"] = ConditionResult(
        VIOLATED,
        witness={"a": basis[cw.i], "b": basis[cw.j]},
        evidence={"commutator_norm": cw.commutator_norm},
    )

    pool = _projection_pool(V, budget, rng, tol)
    pair = _noncommuting_projections(pool, tol)
    if pair is None:
        return results
    p, q = pool[pair[0]], pool[pair[1]]

    # product conditions from the Jordan product of a noncommuting pair
    jmin = lambda_min(jordan(p, q))
    if jmin < -tol.psd:
        results["J"] = ConditionResult(
            VIOLATED, witness={"a": p, "b": q}, evidence={"jordan_min_eig": jmin}
        )
        a, b = p - q, p + q
        results["SQ"] = ConditionResult(
            VIOLATED,
            witness={"a": a, "b": b},
            evidence={"min_eig_b2_minus_a2": lambda_min(b @ b - a @ a)},
            note="-b <= a <= b but a^2 is not below b^2",
        )
        best = None
        for k in range(1, 17):
            t = 10.0 ** (-k / 4)
            b = p + t * q
            gap = lambda_min(symmetrize(b @ b - p @ p))
            if gap < -tol.psd * max(1.0, spectral_norm(b @ b - p @ p)):
                if best is None or gap < best[2]:
                    best = (b, t, gap)
        if best is not None:
            b, t, _ = best
            results["O"] = ConditionResult(
                VIOLATED,
                witness={"a": p, "b": b},
                evidence={"t": t, "min_eig_b2_minus_a2": lambda_min(symmetrize(b @ b - p @ p))},
                note="0 <= a <= b but a^2 is not below b^2",
            )
            a2, b2 = b - p, b + p
            results["J+"] = ConditionResult(
                VIOLATED,
                witness={"a": a2, "b": b2},
                evidence={"jordan_min_eig": lambda_min(jordan(a2, b2))},
                note="0 <= a <= b but a o b is not positive",
            )

    # order conditions from the twisted lower bound
    c, s, top = _twisted_lower_bound(p, q, V, tol)
    if top > tol.psd * max(1.0, spectral_norm(c)):
        evidence = {"lower_bound_max_eig": top, "twist_scale": s, "residual": V.residual(c)}
        comp = one - p
        results["L"] = ConditionResult(
            VIOLATED,
            witness={"a": p, "b": comp, "lower": c},
            evidence=evidence,
            note="ginf(a, b) = 0 is a maximal lower bound in V, yet lower is not below it; no infimum",
        )
        results["disjoint-meet"] = ConditionResult(
            VIOLATED,
            witness={"a": p, "b": comp, "lower": c},
            evidence=evidence,
            note="ab = 0 but a lower bound of a and b is not below 0",
        )
        x, B = 2.0 * p - one, p - c
        results["pos-part-sup"] = ConditionResult(
            VIOLATED,
            witness={"a": x, "upper": B},
            evidence={"min_eig_upper_minus_pos": lambda_min(B - p)},
            note="upper >= 0 and upper >= a, yet a+ is not below upper",
        )
        results["RDP"] = ConditionResult(
            VIOLATED,
            witness={"a": p - c, "b": comp, "c": p},
            evidence=evidence,
            note="c <= a + b with a, b, c >= 0 admits no split c = a1 + b1, a1 <= a, b1 <= b in V",
        )
        u, v = p - c, comp - c
        results["P"] = ConditionResult(
            VIOLATED,
            witness={"a": u, "b": v},
            evidence={"ginf_min_eig": lambda_min(ginf(u, v))},
        )
        results["T"] = ConditionResult(
            VIOLATED,
            witness={"a": u, "b": x - u},
            evidence={"min_eig": lambda_min(absolute(u) + absolute(x - u) - absolute(x))},
            note="|a + b| is not below |a| + |b|",
        )
        results["abs-order"] = ConditionResult(
            VIOLATED,
            witness={"a": one - 2.0 * c, "b": x},
            evidence={"min_eig": lambda_min(one - 2.0 * c - absolute(x))},
            note="-a <= b <= a but |b| is not below a",
        )

    # the projection pair itself is the simplest P witness when it works
    pmin = lambda_min(ginf(p, q))
    if pmin < -tol.psd:
        results["P"] = ConditionResult(VIOLATED, witness={"a": p, "b": q}, evidence={"ginf_min_eig": pmin})
        results["abs-order"] = ConditionResult(
            VIOLATED,
            witness={"a": p + q, "b": p - q},
            evidence={"min_eig": lambda_min(p + q - absolute(p - q))},
            note="-a <= b <= a but |b| is not below a",
        )
    return results


def verify_witness(V: Subspace, label: str, result: ConditionResult, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Re-check that a reported counterexample satisfies its hypotheses and
    violates its conclusion, and that its matrices lie in ``V``."""
    if result.status != VIOLATED:
        return False
    w = result.witness
    loose = TolerancePolicy(eq=min(0.5, 1e3 * tol.eq), psd=tol.psd)
    if not all(V.contains(m, loose) for m in w.values()):
        return False
    one = np.eye(V.n)
    zero = 0 * one
    if label == "commutativity":
        return not commutes(w["a"], w["b"], tol)
    if label in ("J", "J+", "P", "O"):
        a, b = w["a"], w["b"]
        if not (is_psd(a, tol) and is_psd(b, tol)):
            return False
        if label == "J":
            return not is_psd(jordan(a, b), tol)
        if label == "P":
            return not is_psd(ginf(a, b), tol)
        if not _leq(a, b, tol):
            return False
        if label == "O":
            return not _leq(a @ a, b @ b, tol)
        return not is_psd(jordan(a, b), tol)
    if label == "SQ":
        a, b = w["a"], w["b"]
        return _leq(-b, a, tol) and _leq(a, b, tol) and not _leq(a @ a, b @ b, tol)
    if label == "abs-order":
        a, b = w["a"], w["b"]
        return _leq(-a, b, tol) and _leq(b, a, tol) and not _leq(absolute(b), a, tol)
    if label == "T":
        a, b = w["a"], w["b"]
        return not _leq(absolute(a + b), absolute(a) + absolute(b), tol)
    if label in ("L", "disjoint-meet"):
        a, b, c = w["a"], w["b"], w["lower"]
        return (
            is_psd(a, tol)
            and is_psd(b, tol)
            and spectral_norm(a @ b) <= tol.eq * max(1.0, spectral_norm(a) * spectral_norm(b))
            and _leq(c, a, tol)
            and _leq(c, b, tol)
            and not _leq(c, zero, tol)
        )
    if label == "pos-part-sup":
        a, u = w["a"], w["upper"]
        return is_psd(u, tol) and _leq(a, u, tol) and not _leq(decompose(a)[0], u, tol)
    if label == "RDP":
        # the split would yield an interpolant between {0, c0} and {a + c0, b}
        a, b, c = w["a"], w["b"], w["c"]
        return (
            is_psd(a, tol)
            and is_psd(b, tol)
            and is_psd(c, tol)
            and _leq(c, a + b, tol)
            and not _leq(c - a, zero, tol)
            and _leq(c - a, b, tol)
            and spectral_norm(c @ b) <= tol.eq * max(1.0, spectral_norm(c) * spectral_norm(b))
        )
    return False


# -- public entry points -----------------------------------------------------


def certify_vector_lattice(
    V: Subspace, budget: int = 500, seed: int = 0, tol: TolerancePolicy = DEFAULT_TOL
) -> CertReport:
    """Decide whether ``V`` is a vector lattice and collect evidence.

    The verdict is ``HypothesesNotMet`` when sampled closure fails, otherwise
    ``VectorLattice`` iff ``V`` is commutative. ``budget`` bounds the samples
    per condition in the commutative case and the search effort otherwise.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    rng = np.random.default_rng(seed)
    closure = check_closure(V, samples=max(V.dim, min(budget, 64)), seed=seed, tol=tol)
    comm, cw = is_commutative(V, tol)
    config = {"budget": budget, "seed": seed, "tol": {"eq": tol.eq, "psd": tol.psd, "comm": tol.comm, "rank": tol.rank}, "n": V.n, "dim": V.dim}
    notes = []
    if not closure.derived_consistent:
        notes.append("closure under |.| disagrees with closure under +/-, ginf, gsup on samples")
    if not closure.hypotheses_met:
        return CertReport(closure, comm, cw, HYPOTHESES_NOT_MET, {}, config, notes)
    if comm:
        conditions = _sampled_conditions(V, budget, rng, tol)
        verdict = VECTOR_LATTICE
        if any(c.status == VIOLATED for c in conditions.values()):
            notes.append("sampled condition failed in a commutative subspace; tolerance too tight?")
    else:
        conditions = _witness_search(V, budget, rng, tol)
        verdict = NOT_VECTOR_LATTICE
    return CertReport(closure, comm, cw, verdict, conditions, config, notes)


def _require_member(V, x, name, tol):
    if not V.contains(x, tol):
        raise NotMemberError(f"{name} is not in V (residual {V.residual(x):.3e})")


def lattice_ops(V: Subspace, a, b, tol: TolerancePolicy = DEFAULT_TOL, samples: int = 8, seed: int = 0):
    """Infimum and supremum of ``a, b`` inside a commutative closed ``V``.

    They are ``ginf(a, b)`` and ``gsup(a, b)``; the result is checked for
    membership and against ``samples`` random lower and upper bounds in ``V``.
    """
    comm, cw = is_commutative(V, tol)
    if not comm:
        raise NonCommutativeError(
            "V is not commutative", pair=(cw.i, cw.j), commutator_norm=cw.commutator_norm
        )
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _require_member(V, a, "a", tol)
    _require_member(V, b, "b", tol)
    m, u = ginf(a, b), gsup(a, b)
    loose = TolerancePolicy(eq=min(0.5, 1e3 * tol.eq), psd=tol.psd)
    if not (V.contains(m, loose) and V.contains(u, loose)):
        raise NotMemberError("ginf/gsup left V; is V closed under absolute values?")
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        w1 = decompose(V.random_element(rng))[0]
        w2 = decompose(V.random_element(rng))[0]
        lower = ginf(a - w1, b - w2)
        upper = gsup(a + w1, b + w2)
        if not (_leq(lower, m, tol) and _leq(u, upper, tol)):
            raise SynlaError("sampled bound beats ginf/gsup; V is not a lattice at these points")
    return m, u


def riesz_decompose(V: Subspace, a, b, c, tol: TolerancePolicy = DEFAULT_TOL):
    """Split ``c <= a + b`` as ``c = a1 + b1`` with ``0 <= a1 <= a``, ``0 <= b1 <= b``.

    Uses ``a1 = ginf(c, a)`` and ``b1 = c - a1``; requires ``V`` commutative
    and ``a, b, c`` positive members of ``V``.
    """
    comm, cw = is_commutative(V, tol)
    if not comm:
        raise NonCommutativeError(
            "V is not commutative", pair=(cw.i, cw.j), commutator_norm=cw.commutator_norm
        )
    a, b, c = (np.asarray(x, dtype=float) for x in (a, b, c))
    for name, x in (("a", a), ("b", b), ("c", c)):
        _require_member(V, x, name, tol)
        if not is_psd(x, tol):
            raise PreconditionError(f"0 <= {name} fails")
    if not _leq(c, a + b, tol):
        raise PreconditionError("c <= a + b fails")
    a1 = ginf(c, a)
    b1 = c - a1
    checks = (
        ("0 <= a1", is_psd(a1, tol)),
        ("a1 <= a", _leq(a1, a, tol)),
        ("0 <= b1", is_psd(b1, tol)),
        ("b1 <= b", _leq(b1, b, tol)),
    )
    for name, ok in checks:
        if not ok:
            raise SynlaError(f"Riesz split postcondition {name} fails")
    return a1, b1


def render_text(report: CertReport) -> str:
    lines = [f"verdict: {report.verdict}"]
    cl = report.closure
    lines.append(
        f"closure: unit={cl.contains_unit} abs={cl.abs_closed} ({cl.abs_residual:.2e}) "
        f"carrier={cl.carrier_closed} ({cl.carrier_residual:.2e}) samples={cl.samples_used}"
        + (" conclusive" if cl.conclusive else "")
    )
    lines.append(f"commutative: {report.commutative}")
    if report.commutativity_witness is not None:
        w = report.commutativity_witness
        lines.append(f"  basis pair ({w.i}, {w.j}) commutator norm {w.commutator_norm:.4g}")
    for label in CONDITIONS:
        cond = report.conditions.get(label)
        if cond is None:
            continue
        ev = ", ".join(f"{k}={v:.6g}" for k, v in cond.evidence.items() if isinstance(v, (int, float)))
        lines.append(f"  {label:14s} {cond.status}" + (f"  [{ev}]" if ev else ""))
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)
