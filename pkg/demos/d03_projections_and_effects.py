"""
Projection lattices and effect algebras
=======================================

A family of projections closed under complements is Boolean when every pair
commutes. Noncommuting pairs break the implication "disjoint => orthogonal"
and the family is only an orthomodular lattice.
"""

# %%
import numpy as np

from synla import proj_effect as pe

np.set_printoptions(precision=6, suppress=True)

# %% Diagonal projections in dimension 3 form a Boolean algebra
family = [np.diag(np.array(bits, dtype=float)) for bits in np.ndindex(2, 2, 2)]
print(pe.classify_projection_set(family).structure)

# %% Two noncommuting lines in the plane
zero, one = np.zeros((2, 2)), np.eye(2)
p = np.array([[1.0, 0.0], [0.0, 0.0]])
q = np.full((2, 2), 0.5)
verdict = pe.classify_projection_set([zero, one, p, one - p, q, one - q])
print(verdict.structure)
for w in verdict.witnesses[:2]:
    print(w["pair"], w["condition"], round(w["evidence"]["lambda_max_sum"], 5))

# %% Join and meet: range sum and range intersection
print("p v q =\n", pe.proj_join(p, q))
print("p ^ q =\n", pe.proj_meet(p, q))
print("compatible(p, q):", bool(pe.compatible(p, q)))

# %% Commuting effects form an MV-algebra
effects = [np.diag(d) for d in ([0.0, 0.0], [1.0, 1.0], [0.3, 0.8], [0.7, 0.2])]
print(pe.classify_commutative_effect_set(effects).structure)
