# %% [markdown]
# # Graded Higgs bundles as numbers
#
# A bundle here is only its numerical shadow: for every bidegree (p, q) a rank,
# an exact degree and the rank of the Higgs kernel. Everything is a Fraction.

# %%
from fractions import Fraction

from hodgemax import BaseCurve, GradedHiggsBundle, HodgeComponent, validate
from hodgemax.core import dual_bundle, theta_characteristic_degree

base = BaseCurve(genus=1, punctures=2)
print("deg Omega(log S) =", base.log_canonical_degree)
print("theta characteristic:", theta_characteristic_degree(base))

# %%
b = GradedHiggsBundle(1, base, (
    HodgeComponent(1, 0, 1, Fraction(1), 0),
    HodgeComponent(0, 1, 1, Fraction(-1), 1),
))
print(b.hodge_numbers(), "total degree", b.total_degree)
print("problems:", validate(b))

# %% [markdown]
# Validation collects every problem instead of stopping at the first one.

# %%
broken = GradedHiggsBundle(2, base, (HodgeComponent(2, 1, 1, Fraction(1, 3), 2),))
for line in validate(broken):
    print(" -", line)

# %%
print(dual_bundle(b) == b)
