# %% [markdown]
# # Twisted SL2 calculus
#
# `S^i(-t)` is the width-i ladder shifted by the Tate twist t, so its weight is
# i + 2t. Tensor products follow Clebsch-Gordan with the twist picking up m.

# %%
from hodgemax.sl2 import (
    IntegerMatrix2,
    ballot_number,
    clebsch_gordan,
    dual,
    hodge_numbers,
    sym_power,
    sym_power_trace_oracle,
    tensor,
    tensor_power_decompose,
    trace_polynomial,
)

print(clebsch_gordan(3, 3))
print(tensor(sym_power(2), sym_power(1)))
print(dual(sym_power(1)))

# %% Tensor powers of the standard ladder carry ballot-number multiplicities.
for n in range(7):
    x = tensor_power_decompose(n)
    print(n, x, [ballot_number(n, j) for j in range(n // 2 + 1)])

# %%
print(hodge_numbers(tensor_power_decompose(4), 4))

# %% Trace polynomials: tr Sym^n(M) depends only on tr M.
m = IntegerMatrix2(3, 2, 4, 3)
for n in range(6):
    p = trace_polynomial(n)
    print(f"p_{n}(t) = {p}", p(m.trace), sym_power_trace_oracle(m, n))
