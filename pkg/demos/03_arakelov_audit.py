# %% [markdown]
# # Auditing the Arakelov inequalities
#
# Each level nu compares deg E^{k-nu,nu} with (k-2nu)/2 times the Higgs rank
# times the log-canonical degree. Equality everywhere means strictly maximal.

# %%
from hodgemax.arakelov import audit, render_text
from hodgemax.core import BaseCurve
from hodgemax.structure import build_pure_component

b = build_pure_component(3, 3, BaseCurve(2, 0))
print(render_text(audit(b)))

# %% Move one unit of degree from the top piece to the bottom piece.
lowered = b.with_degree(3, b.degree(3) - 1).with_degree(0, b.degree(0) + 1)
r = audit(lowered)
print(render_text(r))
print("witnesses:", r.witness_levels)

# %% A single unbalanced change is caught on the dual side as well.
r = audit(b.with_degree(0, b.degree(0) - 1, self_dual=False))
print(r.verdict.value, r.dual_witness_levels, r.diagnostics)
