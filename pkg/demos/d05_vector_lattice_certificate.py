"""
Deciding whether a subspace is a vector lattice
===============================================

For a subspace containing 1 and closed under absolute values and carriers,
being a vector lattice is the same as being commutative. The certifier
checks the closure hypotheses, decides commutativity and, for noncommutative
subspaces, produces explicit counterexamples to twelve lattice conditions.
"""

# %%
import numpy as np

from synla import certify_vector_lattice, riesz_decompose
from synla.commutant import Subspace
from synla.vlcert import render_text

# %% Diagonal matrices: a vector lattice
diag = Subspace.from_spanning([np.diag(e) for e in np.eye(3)], 3)
print(render_text(certify_vector_lattice(diag, budget=100, seed=0)))

# %% All of Sym(2): closed, noncommutative, not a lattice
full = Subspace.full(2)
report = certify_vector_lattice(full, budget=100, seed=0)
print(report.verdict)
for label, result in report.conditions.items():
    print(f"{label:14s} {result.status}")

# %% Riesz decomposition inside a commutative subspace
a, b = np.diag([1.0, 0.0, 2.0]), np.diag([0.5, 1.0, 0.0])
c = np.diag([1.2, 0.5, 1.0])
a1, b1 = riesz_decompose(diag, a, b, c)
print("a1 =", np.diag(a1), " b1 =", np.diag(b1), " sum == c:", np.allclose(a1 + b1, c))
