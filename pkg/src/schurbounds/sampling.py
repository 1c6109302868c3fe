"""Seeded random Hermitian matrices.

Generators are ``numpy.random.Generator(PCG64(seed))``; PCG64 streams and
``Generator.uniform`` are reproducible across platforms for a fixed seed and
numpy version.
"""

from __future__ import annotations

import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_hermitian(rng: np.random.Generator, n: int, scale: float = 1.0, complex_entries: bool = True) -> np.ndarray:
    """Dense array with ``re, im ~ U(-scale, scale)``, symmetrized to be Hermitian.

    With ``complex_entries=False`` the imaginary parts are zero.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    x = rng.uniform(-scale, scale, size=(n, n))
    if complex_entries:
        x = x + 1j * rng.uniform(-scale, scale, size=(n, n))
    h = (x + np.conj(x).T) / 2
    np.fill_diagonal(h, h.diagonal().real)
    return h
