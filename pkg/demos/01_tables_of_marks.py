"""
Tables of marks and the Burnside ring
=====================================

Subgroup classes, marks, and the two ways of multiplying G-sets.
"""

# %%
import numpy as np

from burnside_beta import BurnsideElement, subgroup_classes, symmetric_group
from burnside_beta.burnside import basis_elements, mul_via_sets

S3 = symmetric_group(3)
tab = subgroup_classes(S3)
for label, order, gens in tab.legend():
    print(label, order, gens)

# rows = subgroups K, columns = G-sets G/H: |(G/H)^K|
print(tab.marks)

# %%
# multiplication by double cosets, checked against actual product sets
e, c2, c3, s3 = basis_elements(S3)
print("[S3/C2]^2 =", c2 * c2)
print("same via sets:", mul_via_sets(c2, c2))

# %%
# the mark map turns products into pointwise products
x = c2.scale(2) - e
y = c3 + s3
print(x.marks(), y.marks(), (x * y).marks())
assert (x * y).marks() == list(np.multiply(x.marks(), y.marks()))

# %%
S4 = symmetric_group(4)
print(len(subgroup_classes(S4)), "classes of subgroups in S4")
print(BurnsideElement.one(S4).marks())
