"""An (n+1)-positive curvature operator of the second kind with a negative
Ricci curvature, found by perturbing S^1 x S^{n-1} with a small negative
constant-curvature tensor.  At n = 14 the degree-5 threshold C_5 exceeds
n+1, so the Betti-number certificate can apply where no Ricci lower bound
is available.
"""

import numpy as np

import curvkind as ck

n = 14
base = ck.product_sphere(n)
base_eigs = ck.spectrum(ck.second_kind_matrix(base))
print(f"--- S^1 x S^{n-1} perturbed by kappa/2 (g o g), n = {n} ---")
print("unperturbed partial sum at k = n+1:", ck.k_partial_sum(base_eigs, n + 1.0))

print("\ngrid search over kappa < 0 (spectrum shifts by kappa, R_11 = (n-1) kappa):")
found = None
for j in range(1, 15):
    kappa = -0.001 * j
    psum = ck.k_partial_sum(base_eigs + kappa, n + 1.0)
    r11 = (n - 1) * kappa
    status = "ok" if (psum > 0 and r11 < 0) else "--"
    if psum > 0 and r11 < 0:
        found = kappa
    print(f"  kappa = {kappa:+.3f}   partial sum(n+1) = {psum:+.4f}   R_11 = {r11:+.4f}  {status}")

R = ck.perturb_constant(base, found)
ck.validate_curvature(R)
eigs = ck.spectrum(ck.second_kind_matrix(R))
summary = ck.ricci_scalar(R)
print(f"\nverified at kappa = {found}:")
print("  (n+1) partial sum =", ck.k_partial_sum(eigs, n + 1.0), "> 0")
print("  R_11 =", summary.ricci[0, 0], "< 0")

c5 = ck.constants(n, 5)
print(f"\nC_5({n}) = {c5.c_p:.4f} >= 15n/14 = {15 * n / 14}: a degree-5 certificate")
print("can hold on operators like this one even though the Ricci curvature")
print("has a negative direction.")
