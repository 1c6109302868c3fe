"""The two 3x3 matrices used to show that neither sharpened bound dominates.

For ``paper-A`` the submatrix bound (Theorem 2) is the sharper one at
``r = 2``; for ``paper-B`` the 2x2 bound (Theorem 3) is.
"""

import math

import numpy as np

MATRICES = {
    "paper-A": np.array([[2, 1, 1], [1, 2, 1], [1, 1, 3]], dtype=float),
    "paper-B": np.array([[1, 2, 3], [2, 1, 4], [3, 4, 1]], dtype=float),
}

# (theorem2_bound(., r=2, t=3), min over k of theorem3_bound(., r=2, k, t=3))
EXPECTED = {
    "paper-A": (10 / 3, (9 - math.sqrt(5)) / 2),
    "paper-B": (-11 / 7, -2.0),
}
