"""
The inequalities behind the bounds
==================================

Two classical facts drive the sharpened bounds: a variance inequality for
the functional A -> a_ii, and Cauchy interlacing for principal submatrices.
Both can be checked numerically.
"""

import numpy as np

from schurbounds import jacobi_eigenvalues, principal_submatrix, row_quantities, validate_hermitian
from schurbounds.oracle import interlacing_check
from schurbounds.sampling import make_rng, random_hermitian
from schurbounds.verify import bhatia_davis_diagnostic

rng = make_rng(7)
h = validate_hermitian(random_hermitian(rng, 5, 1.0))
spectrum = jacobi_eigenvalues(h)

# %%
# For each i the off-diagonal mass q_i (the "variance" of a_ii) is at most
# (lambda_max - a_ii)(a_ii - lambda_min).
for i, term in enumerate(bhatia_davis_diagnostic(h, spectrum).per_i, 1):
    print(f"i={i}  q_i={term.variance:.4f}  envelope={term.envelope:.4f}  slack={term.slack:.4f}")

# %%
# Row quantities used throughout.
rq = row_quantities(h)
print("r_i:", np.round(rq.r, 4))
print("q_i:", np.round(rq.q, 4))

# %%
# Interlacing: the j-th smallest eigenvalue of any principal submatrix sits
# above the j-th smallest eigenvalue of the whole matrix.
for idx in ([1, 2], [1, 3, 5], [2, 3, 4, 5]):
    sub = jacobi_eigenvalues(principal_submatrix(h, idx)).values
    print(idx, np.round(sub, 4), ">=", np.round(spectrum.values[: len(idx)], 4), interlacing_check(h, idx, spectrum))
