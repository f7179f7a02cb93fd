"""
Beta-operations
===============

An operator x in A(Sigma_n) acts on A(G) by pairing powers against it;
on honest G-sets theta([Sigma_n/H])(X) = X^n/H.
"""

# %%
from burnside_beta import BurnsideElement, OperatorElement, symmetric_group, theta
from burnside_beta.beta import basis_operators, check_beta_axioms, plethysm, transfer_product

S2, S3 = symmetric_group(2), symmetric_group(3)
t = BurnsideElement.basis(S2.trivial_subgroup())
sym2 = OperatorElement.basis(S2.whole())
free2 = OperatorElement.basis(S2.trivial_subgroup())

print(theta(free2, t))   # X x X
print(theta(sym2, t))    # unordered pairs

# %%
# the three routes agree
for x in basis_operators(3):
    a = BurnsideElement.basis(S3.subgroup([1]))
    vals = {m: theta(x, a, method=m) for m in ("restricted", "full", "closed")}
    print(x, vals["restricted"], len(set(map(str, vals.values()))) == 1)

# %%
# composition in the operator ring is plethysm
print(plethysm(sym2, sym2))
print(theta(plethysm(sym2, sym2), t) == theta(sym2, theta(sym2, t)))
print(transfer_product(sym2, free2))

# %%
rep = check_beta_axioms(S2)
print(rep.summary())
