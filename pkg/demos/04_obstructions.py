"""
Where the power operations stop
===============================

Reduction mod n and adjoining i both break the power structure.
"""

# %%
from burnside_beta import obstruction_gaussian, obstruction_zmodn

for n in range(2, 7):
    print(n, obstruction_zmodn(n).verdict)

# %%
print(obstruction_zmodn(6).summary())

# %%
# (a t + b)^2 = 2a(a+b) t + b^2 forces b = +-i and 2a(a+b) = 1
rep = obstruction_gaussian()
print(rep.summary())

# %%
from burnside_beta.obstructions import quadratic_law
from burnside_beta.rings import QI, Gaussian

lhs, rhs = quadratic_law(Gaussian(1, -1) / 2, Gaussian(0, 1), QI)
print(lhs, "=", rhs)
