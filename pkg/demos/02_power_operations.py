"""
Power operations
================

P^m sends a G-set X to X^m with its wreath action; it extends to virtual
elements through the sum formula.
"""

# %%
import math

import numpy as np

from burnside_beta import BurnsideElement, power, symmetric_group, wreath_product
from burnside_beta.global_ops import exp_sequence, power_symmetric
from burnside_beta.gset import GSet, power_set
from burnside_beta.burnside import decompose

E, S2 = symmetric_group(1), symmetric_group(2)

# n points squared: n fixed diagonal pairs, binomial(n, 2) swapped pairs
for n in range(5):
    print(n, power_symmetric(BurnsideElement.one(E).scale(n), 2))

# %%
# negative input: P^2(-1) = t - 1
print(power_symmetric(-BurnsideElement.one(E), 2))

# %%
# free-class coefficient of P^p(n) is binomial(n, p)
from burnside_beta.obstructions import free_class_coefficient

for p in (2, 3, 5):
    row = [free_class_coefficient(power(BurnsideElement.one(E).scale(n), p)) for n in range(1, 11)]
    print(p, row, row == [math.comb(n, p) for n in range(1, 11)])

# %%
# the recursion agrees with counting orbits of X^3 under Sigma_3 wr S2
t = BurnsideElement.basis(S2.trivial_subgroup())
X = GSet(S2, [np.array([1, 0, 2])], 3)   # S2 swaps two points, fixes a third
print(decompose(X))
W = wreath_product(3, S2)
print(W, W.order, power(t + BurnsideElement.one(S2), 3) == decompose(power_set(X, 3)))

# %%
seq = exp_sequence(t - BurnsideElement.one(S2), 3)
print(seq.check_exponential().summary())
