"""
Generalized infimum and supremum
================================

``ginf(a, b) = (a + b - |a - b|) / 2`` is always a lower bound of ``a`` and
``b``. For commuting matrices it is the entrywise minimum in a joint
eigenbasis; otherwise it is only a maximal lower bound, not the greatest one.
"""

# %%
import numpy as np

from synla import genlattice as gl
from synla.instance_gen import commuting_family
from synla.symmat import loewner_leq

rng = np.random.default_rng(0)

# %% Commuting pair: the joint-eigenbasis minimum
a, b = commuting_family(rng, 4, 2)
_, q = np.linalg.eigh(a + np.pi * b)
da, db = np.diag(q.T @ a @ q), np.diag(q.T @ b @ q)
print("ginf equals joint min:", np.allclose(gl.ginf(a, b), (q * np.minimum(da, db)) @ q.T))

# %% A noncommuting pair of projections
p = np.array([[1.0, 0.0], [0.0, 0.0]])
q = np.full((2, 2), 0.5)
lo = gl.ginf(p, q)
print("ginf(p, q) =\n", lo)
print("lower bound:", loewner_leq(lo, p), loewner_leq(lo, q))
print("smallest eigenvalue (1/2 - 1/sqrt 2):", np.linalg.eigvalsh(lo)[0], 0.5 - 1 / np.sqrt(2))

# %% Maximality: no perturbation stays below both and sits above ginf
report = gl.check_maximal_lower_bound(p, q, trials=200, seed=1)
print("maximal lower bound on 200 trials:", report.ok)

# %% Disjointness: four equivalent formulations agree
u, v = np.diag([1.0, 0.0, 0.0]), np.diag([0.0, 2.0, 0.0])
print(gl.check_disjoint(u, v))
