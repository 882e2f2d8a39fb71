# %% [markdown]
# # The modified Smirnov operator, by hand and by machine
#
# `modified_smirnov(P, a, n)` is `(1 + a z) P'(z) - n a P(z)`.  The z^n terms
# cancel, so the result always drops a degree.

# %%
import numpy as np

from modsmirnov import ComplexPolynomial, modified_smirnov, composite_transform, kappa
from modsmirnov.smirnov import corollary_limit_lhs, reduction_a_inv_z

p = ComplexPolynomial([1, 0, 1])          # z^2 + 1
print(modified_smirnov(p, 0.5, 2))        # 2z - 1

# %%
# For the monomial the result does not depend on a at all.
for a in (0, 0.5, 1j, -1):
    print(a, modified_smirnov(ComplexPolynomial.monomial(5), a, 5).coeffs)

# %% [markdown]
# The degree class matters: treating `z + 1` as a member of a degree-3 family
# changes the output.

# %%
q = ComplexPolynomial([1, 1])
print(modified_smirnov(q, 0.5, 1), modified_smirnov(q, 0.5, 3))

# %% [markdown]
# ## The composite expression
#
# `S[P_R] - alpha S[P] + kappa S[P]` with `P_R(z) = P(Rz)`.  On the monomial
# it collapses to a multiple of `n z^(n-1)`.

# %%
lam, n, alpha, beta, R = 2.0, 3, 0.4 + 0.3j, -0.5, 2.0
k = kappa(alpha, beta, R, n)
out = composite_transform(ComplexPolynomial.monomial(n, lam), 0.3, alpha, beta, R)
print(out.coeffs, lam * n * (R**n - alpha + k))

# %%
# kappa only sees |alpha|, so rotating alpha leaves it fixed
print(kappa(0.6j, 0.5, 2, 3), kappa(-0.6, 0.5, 2, 3))

# %% [markdown]
# ## The R -> 1 limit
#
# Divide the alpha = 1 composite by R - 1 and let R shrink; the quotient
# approaches `corollary_limit_lhs`, with error proportional to R - 1.

# %%
rng = np.random.default_rng(0)
p = ComplexPolynomial(rng.standard_normal(6) + 1j * rng.standard_normal(6))
a, beta, z = 0.3 + 0.5j, 0.2j, 1.2
target = corollary_limit_lhs(p, a, beta)(z)
for h in (1e-2, 1e-3, 1e-4, 1e-5):
    approx = composite_transform(p, a, 1.0, beta, 1 + h)(z) / h
    print(f"h={h:.0e}  rel err={abs(approx - target) / abs(target):.2e}")

# %%
# at a = -1/z the factor 1 + az vanishes and only -naP survives
print(reduction_a_inv_z(ComplexPolynomial([1, 0, 1]), 2), 2 * 5 / 2)
