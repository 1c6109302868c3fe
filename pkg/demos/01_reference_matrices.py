"""
Sharpened bounds on two small matrices
======================================

The Schur inequalities bound the sum of the r smallest eigenvalues of a
Hermitian matrix by the sum of its r smallest diagonal entries.  Two
sharpened versions subtract a correction built from off-diagonal entries:
one from a whole (r+1)x(r+1) principal submatrix (Theorem 2), one from a
single 2x2 block (Theorem 3).  Neither dominates the other; these two
matrices show it.
"""

import math

import numpy as np

from schurbounds import best_bounds, jacobi_eigenvalues, theorem2_bound, theorem3_bound, validate_hermitian
from schurbounds.reference import MATRICES

# %%
# Validation symmetrizes, zeroes the imaginary part of the diagonal and sorts
# the diagonal ascending.  Both matrices are already in that order.
A = validate_hermitian(MATRICES["paper-A"])
B = validate_hermitian(MATRICES["paper-B"])
print(A)
print(B)

# %%
# The sum of the two smallest eigenvalues, bounded three ways.
for name, h in (("A", A), ("B", B)):
    lam = jacobi_eigenvalues(h).values
    t2 = theorem2_bound(h, r=2, t=3).value
    t3 = min(theorem3_bound(h, r=2, k=k, t=3).value for k in (1, 2))
    print(f"{name}: lambda_1 + lambda_2 = {lam[:2].sum():+.6f}")
    print(f"   schur  {h.diagonal[:2].sum():+.6f}")
    print(f"   thm 2  {t2:+.6f}")
    print(f"   thm 3  {t3:+.6f}")

print("exact values: 10/3 =", 10 / 3, " (9 - sqrt 5)/2 =", (9 - math.sqrt(5)) / 2, " -11/7 =", -11 / 7)

# %%
# ``best_bounds`` evaluates every (t, k) and keeps the winner per r.
for name, h in (("A", A), ("B", B)):
    rep = best_bounds(h)
    for b in rep.per_r_best:
        print(name, f"r={b.r}", b.source.value, f"t={b.t}", f"k={b.k}", f"{b.value:.6f}")

# %%
# The single-eigenvalue bounds tighten a_11 >= lambda_1 and a_nn <= lambda_n.
rep = best_bounds(A)
lam = jacobi_eigenvalues(A).values
print(f"lambda_1 = {lam[0]:.4f} <= {rep.lambda_min_upper.value:.4f} <= a_11 = {A.diagonal[0]}")
print(f"lambda_n = {lam[-1]:.4f} >= {rep.lambda_max_lower.value:.4f} >= a_nn = {A.diagonal[-1]}")
print("Gershgorin interval", rep.gershgorin, "contains", np.round(lam, 4))
