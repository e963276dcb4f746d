# %% [markdown]
# # Families that realise the bound
#
# Borcea-type Calabi-Yau families carry the n-th tensor power of the weight-1
# modular variation. Kummer-type data records fibre dimensions and
# endomorphism algebras.

# %%
from hodgemax.arakelov import audit
from hodgemax.constructions import borcea_vhs, involution_quotient_vhs, kummer_table
from hodgemax.core import BaseCurve
from hodgemax.sl2 import hodge_numbers, tensor_power_decompose
from hodgemax.structure import WidthDecomposition, assemble

for n in range(1, 6):
    b = borcea_vhs(n)
    h = [r for _, _, r in hodge_numbers(b.anti_invariant, n)]
    print(n, b.anti_invariant, h, b.invariant_note)

# %%
x = borcea_vhs(3).anti_invariant
print(audit(assemble(WidthDecomposition.from_rep(x, 3), BaseCurve(0, 4))).verdict.value)

# %%
print(involution_quotient_vhs(4, tensor_power_decompose(4)))
print(involution_quotient_vhs(3, tensor_power_decompose(3)).is_zero())

# %%
for d, case in [(3, "i"), (5, "i"), (1, "ii.a"), (2, "ii.b")]:
    print(kummer_table(d, case))
