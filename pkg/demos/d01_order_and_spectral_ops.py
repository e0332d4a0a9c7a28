"""
Symmetric matrices, the Loewner order and spectral operations
==============================================================

A symmetric matrix is "positive" when its eigenvalues are nonnegative. The
square root, absolute value, positive/negative parts and carrier are all
computed from one eigendecomposition.
"""

# %%
import numpy as np

import synla
from synla import synaptic_ops as so
from synla.symmat import is_psd, loewner_leq

a = np.array([[2.0, 1.0], [1.0, -1.0]])
print("eigenvalues of a:", np.linalg.eigvalsh(a))

# %% Absolute value and the positive/negative decomposition
x = so.absolute(a)
pos, neg = so.decompose(a)
print("|a| =\n", x)
print("|a|^2 == a^2:", np.allclose(x @ x, a @ a))
print("a = a+ - a-:", np.allclose(pos - neg, a), " a+ a- = 0:", np.allclose(pos @ neg, 0))

# %% Carrier: the projection onto the range
c = so.carrier(pos)
print("carrier(a+) is a rank-one projection:", np.allclose(c @ c, c), int(round(np.trace(c))))

# %% The square root is monotone, the square is not
b = a @ a + np.eye(2)
small = np.array([[1.0, 0.0], [0.0, 0.0]])
big = np.array([[2.0, 1.0], [1.0, 1.0]])
print("small <= big:", loewner_leq(small, big))
print("sqrt(small) <= sqrt(big):", loewner_leq(so.sqrt(small), so.sqrt(big)))
print("small^2 <= big^2:", loewner_leq(small @ small, big @ big))

# %% Spectral resolution: projections p_lam onto eigenvalues <= lam
res = so.spectral_resolution(np.diag([1.0, 1.0, 3.0]))
for lam, p in res.breakpoints:
    print(f"lam={lam:+.1f}  rank p_lam = {int(round(np.trace(p)))}")
print("reconstructs:", np.allclose(res.reconstruct(), np.diag([1.0, 1.0, 3.0])))
print("is_psd(|a|):", is_psd(x), " version", synla.__version__)
