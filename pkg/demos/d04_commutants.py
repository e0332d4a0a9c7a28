"""
Commutants and bicommutants
===========================

The commutant of a family is the set of symmetric matrices commuting with
every member. It is computed as a null space in symmetric-vector coordinates.
"""

# %%
import numpy as np

from synla.commutant import bicommutant, commutant, extend_to_cblock, is_cblock, sym_dim
from synla.instance_gen import commuting_family, random_sym
from synla import synaptic_ops as so

rng = np.random.default_rng(3)
n = 4

# %% Dimensions
a = random_sym(rng, n)
print("dim C(a) for simple spectrum:", commutant([a]).dim, "(n =", n, ")")
print("dim C(1):", commutant([np.eye(n)]).dim, "= n(n+1)/2 =", sym_dim(n))
print("dim C(diag(1,1,2,2)):", commutant([np.diag([1.0, 1.0, 2.0, 2.0])]).dim)

# %% The bicommutant contains every spectral function of a
cc = bicommutant([a])
print("|a| in CC(a):", cc.contains(so.absolute(a)), " carrier(a+) in CC(a):", cc.contains(so.carrier(so.pos_part(a))))

# %% Extending a commuting family to a maximal commutative block
fam = commuting_family(rng, n, 2)
block = extend_to_cblock(fam, seed=0)
print("block dimension:", block.dim, " is a C-block:", is_cblock(block.basis))
