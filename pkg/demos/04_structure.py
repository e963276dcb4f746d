# %% [markdown]
# # Strictly maximal bundles from width multiplicities
#
# A strictly maximal bundle is a sum of ladders S^i twisted to the right
# weight. Hodge numbers determine the multiplicities and back.

# %%
from hodgemax.arakelov import audit
from hodgemax.core import BaseCurve
from hodgemax.structure import (
    assemble,
    decompose_bundle,
    feasibility,
    invariant_bidegree_check,
    width_multiplicities_from_hodge_numbers,
)

d = width_multiplicities_from_hodge_numbers(3, [1, 3])
print(d.as_dict(), d.to_rep())

# %%
base = BaseCurve(0, 4)
b = assemble(d, base)
for c in b.components:
    print((c.p, c.q), c.rank, c.degree, c.kernel_rank)
print(audit(b).verdict.value, decompose_bundle(b) == d)

# %% Flat tensors only appear at the middle bidegree.
for m, mp in [(1, 1), (2, 0), (2, 2)]:
    r = invariant_bidegree_check(d.to_rep(), m, mp, 3)
    print(m, mp, r.width_zero_terms, r.expected_bidegree, r.ok)

# %%
for k, g, s in [(3, 2, 0), (1, 0, 4), (4, 2, 0), (3, 0, 5)]:
    v = feasibility(k, BaseCurve(g, s))
    print(k, (g, s), v.status.value, v.rule)
