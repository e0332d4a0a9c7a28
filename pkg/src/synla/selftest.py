"""Desk-scale invariant suite behind ``synla selftest``.

Each check draws seeded instances and returns the number of violations; the
suite reports pass/fail per check and totals.
"""

from __future__ import annotations

import time

import numpy as np

from . import genlattice as gl
from . import proj_effect as pe
from . import synaptic_ops as so
from .commutant import bicommutant, commutant, extend_to_cblock, is_cblock, sym_dim
from .instance_gen import (
    block_subspace,
    commutative_subspace,
    commuting_family,
    ordered_pair,
    random_projection,
    random_sym,
    zero_product_pair,
)
from .symmat import DEFAULT_TOL, is_close, is_psd, loewner_leq
from .vlcert import VECTOR_LATTICE, certify_vector_lattice, is_commutative, riesz_decompose

TOL = DEFAULT_TOL


def _dims(rng, k, lo=2, hi=6):
    return [int(d) for d in rng.integers(lo, hi + 1, size=k)]


def check_abs_square(rng):
    bad = 0
    for n in _dims(rng, 40):
        a = random_sym(rng, n)
        x = so.absolute(a)
        bad += not (is_psd(x, TOL) and is_close(x @ x, a @ a, TOL))
    return bad


def check_decomposition(rng):
    bad = 0
    for n in _dims(rng, 40):
        a = random_sym(rng, n)
        p, m = so.decompose(a)
        bad += not (is_close(p - m, a, TOL) and np.linalg.norm(p @ m) < 1e-9)
    return bad


def check_carrier(rng):
    bad = 0
    for n in _dims(rng, 40):
        a, _ = zero_product_pair(rng, n)
        c = so.carrier(a, TOL)
        bad += not (is_close(c @ c, c, TOL) and is_close(a @ c, a, TOL))
    return bad


def check_spectral_resolution(rng):
    bad = 0
    for n in _dims(rng, 30):
        a = random_sym(rng, n)
        res = so.spectral_resolution(a, TOL)
        bad += not is_close(res.reconstruct(), a, TOL)
    return bad


def check_sqrt_monotone(rng):
    bad = 0
    for n in _dims(rng, 40):
        a, b = ordered_pair(rng, n)
        bad += not loewner_leq(so.sqrt(a, TOL), so.sqrt(b, TOL), TOL)
    return bad


def check_ginf_identities(rng):
    bad = 0
    for n in _dims(rng, 40):
        a, b = random_sym(rng, n), random_sym(rng, n)
        lo, hi = gl.ginf(a, b), gl.gsup(a, b)
        ok = is_close(lo + hi, a + b, TOL) and loewner_leq(lo, a, TOL) and loewner_leq(a, hi, TOL)
        bad += not ok
    return bad


def check_commuting_minmax(rng):
    bad = 0
    for n in _dims(rng, 40):
        a, b = commuting_family(rng, n, 2)
        _, q = np.linalg.eigh(a + np.pi * b)
        da, db = np.diag(q.T @ a @ q), np.diag(q.T @ b @ q)
        bad += not is_close(gl.ginf(a, b), (q * np.minimum(da, db)) @ q.T, TOL)
    return bad


def check_disjointness(rng):
    bad = 0
    for n in _dims(rng, 30):
        a, b = zero_product_pair(rng, n)
        v = gl.check_disjoint(a, b, TOL)
        bad += not (v.consistent and v.disjoint)
    return bad


def check_maximality(rng):
    bad = 0
    for n in _dims(rng, 5):
        a, b = random_sym(rng, n), random_sym(rng, n)
        bad += not gl.check_maximal_lower_bound(a, b, trials=20, seed=int(rng.integers(1 << 30))).ok
    return bad


def check_projection_lattice(rng):
    bad = 0
    for n in _dims(rng, 20):
        p, q = random_projection(rng, n), random_projection(rng, n)
        j, m = pe.proj_join(p, q, TOL), pe.proj_meet(p, q, TOL)
        ok = loewner_leq(m, p, TOL) and loewner_leq(p, j, TOL) and pe.is_projection(j, TOL)
        bad += not ok
    return bad


def check_boolean_diagonal(rng):
    n = 3
    family = [np.diag(bits) for bits in np.ndindex(*(2,) * n)]
    return int(pe.classify_projection_set([f.astype(float) for f in family]).structure != pe.BOOLEAN)


def check_commutant_dims(rng):
    bad = 0
    for n in _dims(rng, 10):
        a = random_sym(rng, n)
        bad += commutant([a]).dim != n
        bad += commutant([np.eye(n)]).dim != sym_dim(n)
        cc = bicommutant([a])
        bad += not cc.contains(so.absolute(a), TOL)
    return bad


def check_cblock(rng):
    bad = 0
    for n in _dims(rng, 10):
        fam = commuting_family(rng, n, 2)
        block = extend_to_cblock(fam, seed=int(rng.integers(1 << 30)))
        bad += not is_cblock(block.basis, TOL)
    return bad


def check_certifier(rng):
    bad = 0
    for n in _dims(rng, 6, 2, 4):
        V = commutative_subspace(rng, n) if rng.random() < 0.5 else block_subspace(rng, n)
        report = certify_vector_lattice(V, budget=20, seed=int(rng.integers(1 << 30)))
        bad += (report.verdict == VECTOR_LATTICE) != is_commutative(V)[0]
        bad += not report.check_invariants()
    return bad


def check_riesz(rng):
    bad = 0
    for n in _dims(rng, 20):
        V = commutative_subspace(rng, n)
        a, b = (so.pos_part(V.random_element(rng)) for _ in range(2))
        c = gl.ginf(a + b, so.pos_part(V.random_element(rng)))
        a1, b1 = riesz_decompose(V, a, b, c)
        bad += not is_close(a1 + b1, c, TOL)
    return bad


CHECKS = (
    ("symmat/synaptic_ops: |a| >= 0 and |a|^2 = a^2", check_abs_square),
    ("synaptic_ops: a = a+ - a-, a+ a- = 0", check_decomposition),
    ("synaptic_ops: carrier is idempotent and a c = a", check_carrier),
    ("synaptic_ops: spectral resolution reconstructs a", check_spectral_resolution),
    ("synaptic_ops: square root is monotone", check_sqrt_monotone),
    ("genlattice: ginf + gsup = a + b, bounds", check_ginf_identities),
    ("genlattice: commuting ginf is the joint-eigenbasis minimum", check_commuting_minmax),
    ("genlattice: zero-product pairs are disjoint", check_disjointness),
    ("genlattice: ginf is a maximal lower bound", check_maximality),
    ("proj_effect: join/meet bounds", check_projection_lattice),
    ("proj_effect: diagonal projections are Boolean", check_boolean_diagonal),
    ("commutant: dimensions and bicommutant membership", check_commutant_dims),
    ("commutant: extension yields a C-block", check_cblock),
    ("vlcert: verdict matches commutativity", check_certifier),
    ("vlcert: Riesz decomposition sums to c", check_riesz),
)


def run_selftest(seed: int = 0) -> dict:
    results = []
    for name, fn in CHECKS:
        rng = np.random.default_rng([seed, len(results)])
        start = time.perf_counter()
        try:
            violations = int(fn(rng))
            error = None
        except Exception as exc:  # a crash counts as a failed check
            violations, error = -1, f"{type(exc).__name__}: {exc}"
        results.append(
            {
                "check": name,
                "passed": violations == 0,
                "violations": violations,
                "seconds": round(time.perf_counter() - start, 4),
                "error": error,
            }
        )
    passed = sum(r["passed"] for r in results)
    return {
        "verdict": "pass" if passed == len(results) else "fail",
        "passed": passed,
        "failed": len(results) - passed,
        "checks": results,
        "config": {"seed": seed},
    }
