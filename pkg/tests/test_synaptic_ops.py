import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import abs_polar, range_projection, sqrtm_ref
from synla.errors import ConsistencyError, NotInvertibleError, NotPositiveError
from synla.instance_gen import (
    commuting_family,
    ordered_pair,
    random_psd,
    random_sym,
    zero_product_pair,
)
from synla.symmat import commutes, is_close, is_psd, loewner_leq
from synla.synaptic_ops import (
    absolute,
    carrier,
    carrier_leq,
    commutes_with_resolution,
    decompose,
    invert,
    neg_part,
    pos_part,
    spectral_proj,
    spectral_resolution,
    sqrt,
)

SWAP = np.array([[0.0, 1.0], [1.0, 0.0]])
P = np.diag([1.0, 0.0])
Q = 0.5 * np.ones((2, 2))


def test_sqrt_examples():
    assert np.allclose(sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))
    assert np.allclose(sqrt(np.zeros((3, 3))), 0)
    assert np.allclose(sqrt(np.eye(3)), np.eye(3))
    r3 = np.sqrt(3.0)
    expected = 0.5 * np.array([[r3 + 1, r3 - 1], [r3 - 1, r3 + 1]])
    got = sqrt(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert np.allclose(got, expected, atol=1e-14)
    assert np.allclose(got, [[1.36603, 0.36603], [0.36603, 1.36603]], atol=1e-5)


def test_sqrt_clamps_drift_and_rejects_negative():
    a = np.diag([1.0, -1e-12])
    assert np.allclose(sqrt(a), np.diag([1.0, 0.0]))
    with pytest.raises(NotPositiveError):
        sqrt(np.diag([1.0, -1e-3]))


def test_abs_examples():
    assert np.allclose(absolute(np.diag([3.0, -4.0])), np.diag([3.0, 4.0]))
    a = random_psd(np.random.default_rng(0), 4)
    assert np.allclose(absolute(a), a)
    assert np.allclose(absolute(np.array([[0.0, 2.0], [2.0, 0.0]])), 2 * np.eye(2))


def test_decompose_examples():
    pos, neg = decompose(np.diag([3.0, -4.0]))
    assert np.allclose(pos, np.diag([3.0, 0.0])) and np.allclose(neg, np.diag([0.0, 4.0]))
    a = random_psd(np.random.default_rng(1), 3)
    pos, neg = decompose(a)
    assert np.allclose(pos, a) and np.allclose(neg, 0)
    pos, neg = decompose(SWAP)
    assert np.allclose(pos, 0.5 * np.array([[1, 1], [1, 1]]))
    assert np.allclose(neg, 0.5 * np.array([[1, -1], [-1, 1]]))


def test_carrier_examples():
    assert np.allclose(carrier(np.diag([5.0, 0.0, -1.0])), np.diag([1.0, 0.0, 1.0]))
    assert np.allclose(carrier(np.zeros((2, 2))), 0)
    assert np.allclose(carrier(np.array([[2.0, 1.0], [1.0, 2.0]])), np.eye(2))
    assert np.allclose(carrier(np.ones((2, 2))), Q)


def test_spectral_proj_examples():
    a = np.diag([1.0, 2.0, 3.0])
    assert np.allclose(spectral_proj(a, 2.0), np.diag([1.0, 1.0, 0.0]))
    assert np.allclose(spectral_proj(a, 0.5), 0)
    assert np.allclose(spectral_proj(a, 3.0), np.eye(3))
    assert np.allclose(spectral_proj(a, 7.0), np.eye(3))
    assert np.allclose(spectral_proj(SWAP, 0.0), 0.5 * np.array([[1, -1], [-1, 1]]))


def test_spectral_resolution_examples():
    res = spectral_resolution(np.diag([1.0, 1.0, 2.0]))
    assert np.allclose(res.eigenvalues, [1.0, 2.0])
    assert np.allclose(res.projections[0], np.diag([1.0, 1.0, 0.0]))
    assert np.allclose(res.projections[1], np.eye(3))
    res = spectral_resolution(np.eye(4))
    assert len(res.breakpoints) == 1 and np.allclose(res.projections[0], np.eye(4))
    res = spectral_resolution(SWAP)
    assert np.allclose(res.eigenvalues, [-1.0, 1.0])
    assert np.allclose(res.projections[0], 0.5 * np.array([[1, -1], [-1, 1]]))
    assert np.allclose(res.projection_at(0.0), res.projections[0])
    assert np.allclose(res.projection_at(-2.0), 0)


def test_invert_examples():
    assert np.allclose(invert(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))
    assert np.allclose(invert(np.eye(3)), np.eye(3))
    assert np.allclose(invert(np.array([[2.0, 1.0], [1.0, 2.0]])), np.array([[2, -1], [-1, 2]]) / 3)
    with pytest.raises(NotInvertibleError):
        invert(np.diag([1.0, 0.0]))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 7))
def test_spectral_function_identities(seed, n):
    rng = np.random.default_rng(seed)
    a = random_sym(rng, n, (-2, 2))
    x = absolute(a)
    assert is_psd(x) and is_close(x @ x, a @ a) and is_close(absolute(-a), x)
    assert loewner_leq(-x, a) and loewner_leq(a, x)
    assert np.allclose(x, abs_polar(a), atol=1e-10)
    pos, neg = decompose(a)
    assert is_close(pos - neg, a) and is_close(pos + neg, x)
    assert np.linalg.norm(pos @ neg) < 1e-12
    assert is_close(pos_part(a), pos) and is_close(neg_part(a), neg)
    c = carrier(a)
    assert is_close(c @ c, c) and is_close(a @ c, a) and is_close(c @ a, a)
    assert is_close(carrier(a @ a), c) and is_close(carrier(x), c)
    s = sqrt(x)
    assert is_close(s @ s, x) and np.allclose(s, sqrtm_ref(x), atol=1e-7)


def test_carrier_is_smallest_projection(rng):
    for n in range(2, 7):
        a, _ = zero_product_pair(rng, n)
        c = carrier(a)
        assert np.allclose(c, range_projection(a), atol=1e-10)
        # any projection p with a = a p dominates the carrier
        p = range_projection(np.hstack([c, rng.standard_normal((n, 1))]))
        assert is_close(a @ p, a) and loewner_leq(c, p)


def test_sqrt_and_inverse_commute_with_source(rng):
    for n in range(2, 7):
        a = random_psd(rng, n, (0.5, 2.0))
        q = np.linalg.eigh(a)[1]
        b = (q * rng.standard_normal(n)) @ q.T
        assert commutes(sqrt(a), a) and commutes(invert(a), a)
        assert commutes(sqrt(a), b) and commutes(invert(a), b)
        assert is_close(a @ invert(a), np.eye(n))


def test_monotone_square_root(rng):
    for _ in range(200):
        n = int(rng.integers(2, 8))
        a, b = ordered_pair(rng, n)
        assert loewner_leq(sqrt(a), sqrt(b))


def test_square_root_order_equivalences_on_commuting_pairs(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        a, b = (absolute(m) for m in commuting_family(rng, n, 2))
        le = loewner_leq(a, b)
        assert le == loewner_leq(a @ a, b @ b) == loewner_leq(sqrt(a), sqrt(b))


def test_squares_need_not_be_monotone():
    # 0 <= P <= P + Q but P^2 is not below (P + Q)^2
    b = P + Q
    assert loewner_leq(P, b) and not loewner_leq(P @ P, b @ b)


def test_abs_triangle_and_order_interval(rng):
    for _ in range(100):
        n = int(rng.integers(2, 7))
        a, b = commuting_family(rng, n, 2)
        assert loewner_leq(absolute(a + b), absolute(a) + absolute(b))
        inside = loewner_leq(-b, a) and loewner_leq(a, b)
        assert inside == loewner_leq(absolute(a), b)


def test_carrier_inequalities(rng):
    for _ in range(60):
        n = int(rng.integers(2, 7))
        a, b = random_psd(rng, n), random_psd(rng, n)
        # make b - a rank deficient sometimes
        if rng.random() < 0.5:
            a, b = zero_product_pair(rng, n)
        assert carrier_leq(b - a, b + a)
        lo, hi = ordered_pair(rng, n)
        t = rng.uniform(-1, 1)
        assert carrier_leq(t * lo, hi + lo) or not loewner_leq(-(hi + lo), t * lo)


def _below(rng, c):
    # c^(1/2) k c^(1/2) with 0 <= k <= 1 lies in [0, c]
    r = sqrt(c)
    return r @ random_psd(rng, c.shape[0]) @ r


def test_elements_below_disjoint_pair(rng):
    for n in range(2, 7):
        c, d = zero_product_pair(rng, n)
        a, b = _below(rng, c), _below(rng, d)
        assert loewner_leq(a, c) and loewner_leq(b, d)
        # square roots of numerically zero eigenvalues leak at the 1e-8 level
        assert np.linalg.norm(a @ b) < 1e-8
        for _ in range(20):
            x = 1e-3 * random_psd(rng, n)
            assert not (loewner_leq(x, c) and loewner_leq(x, d))


def test_commutation_via_spectral_projections(rng):
    for _ in range(60):
        n = int(rng.integers(2, 6))
        if rng.random() < 0.5:
            a, b = commuting_family(rng, n, 2)
        else:
            a, b = random_sym(rng, n), random_sym(rng, n)
        assert commutes(a, b) == commutes_with_resolution(a, b)


def test_spectral_proj_agrees_with_eigenprojection(rng):
    for _ in range(200):
        n = int(rng.integers(1, 8))
        a = random_sym(rng, n)
        lam = rng.uniform(-1.2, 1.2)
        vals, vecs = np.linalg.eigh(a)
        keep = vecs[:, vals <= lam]
        assert np.linalg.norm(spectral_proj(a, lam) - keep @ keep.T) <= 1e-8


def test_spectral_proj_at_an_eigenvalue():
    # the step function is right-continuous: lam equal to an eigenvalue includes it
    a = np.diag([0.0, 1.0, 1.0, 3.0])
    assert np.allclose(spectral_proj(a, 1.0), np.diag([1.0, 1.0, 1.0, 0.0]))


def test_spectral_resolution_invariants(rng):
    for _ in range(50):
        n = int(rng.integers(1, 8))
        a = random_sym(rng, n)
        res = spectral_resolution(a)
        lams = res.eigenvalues
        assert np.all(np.diff(lams) > 0)
        ps = res.projections
        for p0, p1 in zip(ps, ps[1:]):
            assert loewner_leq(p0, p1) and is_close(p0 @ p1, p0)
        assert np.allclose(ps[-1], np.eye(n))
        assert all(commutes(p, a) for p in ps)
        assert np.linalg.norm(res.reconstruct() - a) <= 1e-8


def test_repeated_eigenvalues_are_merged(rng):
    q = np.linalg.qr(rng.standard_normal((5, 5)))[0]
    a = (q * np.array([1.0, 1.0, 1.0, -2.0, -2.0])) @ q.T
    res = spectral_resolution(a)
    assert len(res.breakpoints) == 2
    assert np.allclose(res.eigenvalues, [-2.0, 1.0])


def test_consistency_error_type_is_runtime():
    assert issubclass(ConsistencyError, RuntimeError)


def test_spectral_proj_exactly_at_eigenvalues(rng):
    for _ in range(300):
        n = int(rng.integers(1, 9))
        a = random_sym(rng, n) * 10 ** rng.uniform(-3, 3)
        vals, vecs = np.linalg.eigh(a)
        for i, lam in enumerate(vals):
            ref = vecs[:, : i + 1] @ vecs[:, : i + 1].T
            assert np.linalg.norm(spectral_proj(a, lam) - ref) <= 1e-8
