import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurbounds.bounds import (
    Source,
    best_bounds,
    gershgorin_interval,
    schur_bounds,
    theorem1_lambda_max_lower,
    theorem1_lambda_min_upper,
    theorem2_bound,
    theorem3_bound,
    two_by_two_extremes,
)
from schurbounds.errors import InvalidIndices
from schurbounds.hermitian import HermitianMatrix, principal_submatrix, validate_hermitian
from schurbounds.oracle import jacobi_eigenvalues
from schurbounds.sampling import make_rng, random_hermitian

from .conftest import brute_eigvalsh


def theorem2_oracle(h, r, t):
    """Last-row bound applied to the explicitly extracted submatrix on {1..r, t}."""
    p = np.asarray(principal_submatrix(h, list(range(1, r + 1)) + [t]))
    m = p.shape[0]
    radii = [sum(abs(p[i, s]) for s in range(m) if s != i) for i in range(m)]
    low = min(p[i, i].real - radii[i] for i in range(m))
    q_last = sum(abs(p[m - 1, s]) ** 2 for s in range(m - 1))
    return sum(p[i, i].real for i in range(r)) - q_last / (p[m - 1, m - 1].real - low)


def theorem3_oracle(h, r, k, t):
    """Excess of the top eigenvalue of the {k, t} block over a_tt."""
    pair = np.asarray(principal_submatrix(h, [k, t]))
    return float(np.sum(h.diagonal[:r]) - (brute_eigvalsh(pair)[-1] - pair[1, 1].real))


def test_schur_bounds(A, B):
    assert schur_bounds(A).tolist() == [2, 4, 7]
    assert schur_bounds(B).tolist() == [1, 2, 3]
    assert schur_bounds(validate_hermitian(np.eye(3))).tolist() == [1, 2, 3]


def test_gershgorin_interval(A, B):
    assert gershgorin_interval(A) == (0.0, 5.0)
    assert gershgorin_interval(B) == (-6.0, 8.0)
    assert gershgorin_interval(validate_hermitian(np.diag([1.0, 2.0, 3.0]))) == (1.0, 3.0)


def test_theorem1_example_a(A):
    low = theorem1_lambda_min_upper(A)
    high = theorem1_lambda_max_lower(A)
    assert low.value == pytest.approx(4 / 3, abs=1e-15) and not low.degenerate
    assert high.value == pytest.approx(11 / 3, abs=1e-15) and not high.degenerate
    lam = jacobi_eigenvalues(A).values
    assert lam[0] <= low.value and lam[-1] >= high.value


@pytest.mark.parametrize("c", [-2.5, 0.0, 7.0])
def test_theorem1_scalar_is_degenerate(c):
    h = validate_hermitian(c * np.eye(4))
    low, high = theorem1_lambda_min_upper(h), theorem1_lambda_max_lower(h)
    assert low.degenerate and low.value == c
    assert high.degenerate and high.value == c


def test_theorem1_diagonal_has_no_correction():
    h = validate_hermitian(np.diag([1.0, 2.0]))
    assert theorem1_lambda_min_upper(h).value == 1.0
    assert theorem1_lambda_max_lower(h).value == 2.0


def test_theorem2_reference_values(A, B):
    assert abs(theorem2_bound(A, 2, 3).value - 10 / 3) <= 1e-12
    assert abs(theorem2_bound(B, 2, 3).value + 11 / 7) <= 1e-12
    b = theorem2_bound(validate_hermitian(np.diag([1.0, 2.0, 3.0])), 1, 2)
    assert b.value == 1.0 and b.denominator == 1.0


def test_theorem3_reference_values(A, B):
    assert abs(theorem3_bound(A, 2, 1, 3).value - (9 - math.sqrt(5)) / 2) <= 1e-12
    assert abs(theorem3_bound(B, 2, 2, 3).value + 2) <= 1e-12
    assert theorem3_bound(B, 2, 1, 3).value == pytest.approx(-1.0, abs=1e-14)


def test_theorem3_zero_coupling_is_schur():
    h = validate_hermitian([[1, 0.5, 0], [0.5, 2, 0.3], [0, 0.3, 4]])
    assert theorem3_bound(h, 1, 1, 3).value == 1.0


@pytest.mark.parametrize("r, t", [(0, 1), (3, 4), (2, 2), (1, 4)])
def test_theorem2_invalid_indices(A, r, t):
    with pytest.raises(InvalidIndices):
        theorem2_bound(A, r, t)


@pytest.mark.parametrize("r, k, t", [(2, 0, 3), (2, 3, 3), (1, 2, 3), (3, 1, 3)])
def test_theorem3_invalid_indices(A, r, k, t):
    with pytest.raises(InvalidIndices):
        theorem3_bound(A, r, k, t)


def test_non_canonical_input_rejected():
    h = HermitianMatrix(np.diag([2.0, 1.0]), (1, 2))
    with pytest.raises(ValueError):
        theorem2_bound(h, 1, 2)


@pytest.mark.parametrize(
    "a, d, b, expected",
    [
        (0.0, 0.0, 1.0, (-1.0, 1.0)),
        (2.0, -3.0, 0.0, (-3.0, 2.0)),
        (2.0, 3.0, 1.0, ((5 - math.sqrt(5)) / 2, (5 + math.sqrt(5)) / 2)),
    ],
)
def test_two_by_two_extremes(a, d, b, expected):
    assert two_by_two_extremes(a, d, b) == pytest.approx(expected, abs=1e-15)


def test_two_by_two_matches_jacobi():
    rng = make_rng(11)
    for _ in range(200):
        a, d = rng.uniform(-5, 5, 2)
        b = complex(*rng.uniform(-5, 5, 2))
        h = validate_hermitian([[a, b], [b.conjugate(), d]])
        lo, hi = two_by_two_extremes(a, d, b)
        lam = jacobi_eigenvalues(h).values
        assert abs(lam[0] - lo) <= 1e-10 and abs(lam[1] - hi) <= 1e-10


def test_best_bounds_example_a(A):
    rep = best_bounds(A)
    best = rep.best(2)
    assert best.source is Source.THEOREM2 and best.t == 3
    assert best.value == pytest.approx(10 / 3, abs=1e-12)


def test_best_bounds_example_b(B):
    best = best_bounds(B).best(2)
    assert (best.source, best.k, best.t) == (Source.THEOREM3, 2, 3)
    assert best.value == pytest.approx(-2.0, abs=1e-12)


def test_best_bounds_diagonal_equals_schur():
    rep = best_bounds(validate_hermitian(np.diag([1.0, 2.0, 3.0])))
    assert [b.value for b in rep.per_r_best] == [1.0, 3.0]
    assert all(b.source is Source.SCHUR for b in rep.per_r_best)
    assert rep.all_corrections_zero


def test_best_bounds_tie_break_prefers_lowest_t():
    # rows 2 and 3 couple identically to row 1, so t=2 and t=3 tie for r=1
    h = validate_hermitian([[0, 1, 1], [1, 1, 0], [1, 0, 1]])
    b2, b3 = theorem2_bound(h, 1, 2), theorem2_bound(h, 1, 3)
    assert b2.value == b3.value
    best = best_bounds(h).best(1)
    assert best.t == 2


def test_best_bounds_n_one():
    rep = best_bounds(validate_hermitian([[5.0]]))
    assert rep.per_r_best == [] and rep.schur.tolist() == [5.0]
    assert rep.lambda_min_upper.degenerate and rep.lambda_min_upper.value == 5.0


def test_candidates_match_independent_oracles():
    rng = make_rng(5)
    for n in range(2, 8):
        for _ in range(10):
            h = validate_hermitian(random_hermitian(rng, n, 3.0))
            for c in best_bounds(h).candidates:
                if c.source is Source.THEOREM2:
                    assert c.value == pytest.approx(theorem2_oracle(h, c.r, c.t), rel=1e-12, abs=1e-12)
                else:
                    assert c.value == pytest.approx(theorem3_oracle(h, c.r, c.k, c.t), rel=1e-12, abs=1e-12)


def test_candidate_enumeration_is_exhaustive():
    n = 6
    rep = best_bounds(validate_hermitian(random_hermitian(make_rng(1), n)))
    t2 = {(c.r, c.t) for c in rep.candidates if c.source is Source.THEOREM2}
    t3 = {(c.r, c.k, c.t) for c in rep.candidates if c.source is Source.THEOREM3}
    assert t2 == {(r, t) for r in range(1, n) for t in range(r + 1, n + 1)}
    assert t3 == {(r, k, t) for r in range(1, n) for k in range(1, r + 1) for t in range(r + 1, n + 1)}


def _all_values(rep):
    return np.array(
        list(rep.schur)
        + [b.value for b in rep.per_r_best]
        + [c.value for c in rep.candidates]
        + [rep.lambda_min_upper.value, rep.lambda_max_lower.value, *rep.gershgorin]
    )


matrices = st.builds(
    lambda seed, n, scale, cplx: random_hermitian(make_rng(seed), n, scale, cplx),
    st.integers(0, 2**32 - 1),
    st.integers(1, 10),
    st.sampled_from([0.1, 1.0, 100.0]),
    st.booleans(),
)


@settings(max_examples=150, deadline=None)
@given(raw=matrices)
def test_soundness_against_oracle(raw):
    h = validate_hermitian(raw)
    rep = best_bounds(h)
    lam = brute_eigvalsh(h)
    sums = np.cumsum(lam)
    for c in rep.candidates + rep.per_r_best:
        assert sums[c.r - 1] <= c.value + 1e-8
    assert np.all(sums <= rep.schur + 1e-8)
    assert lam[0] <= rep.lambda_min_upper.value + 1e-8
    assert lam[-1] >= rep.lambda_max_lower.value - 1e-8
    lo, hi = rep.gershgorin
    assert lo - 1e-8 <= lam[0] and lam[-1] <= hi + 1e-8


@settings(max_examples=150, deadline=None)
@given(raw=matrices)
def test_dominance(raw):
    h = validate_hermitian(raw)
    rep = best_bounds(h)
    for c in rep.candidates:
        assert c.value <= rep.schur[c.r - 1] + 1e-10
    assert rep.lambda_min_upper.value <= h.diagonal[0]
    assert rep.lambda_max_lower.value >= h.diagonal[-1]


@settings(max_examples=80, deadline=None)
@given(raw=matrices, c=st.floats(-50, 50), s=st.floats(0.01, 100))
def test_shift_and_scale_equivariance(raw, c, s):
    h = validate_hermitian(raw)
    n = h.n
    base = best_bounds(h)
    shifted = best_bounds(validate_hermitian(raw + c * np.eye(n)))
    scaled = best_bounds(validate_hermitian(s * raw))
    ranks = np.array(
        list(range(1, n + 1))
        + [b.r for b in base.per_r_best]
        + [b.r for b in base.candidates]
        + [1, 1, 1, 1]
    )
    v = _all_values(base)
    mag = max(1.0, np.abs(raw).sum(), abs(c) * n)
    assert np.allclose(_all_values(shifted), v + ranks * c, rtol=0, atol=1e-8 * mag)
    assert np.allclose(_all_values(scaled), s * v, rtol=1e-8, atol=1e-8 * s * mag)


def test_theorem3_monotone_in_coupling():
    base = np.array([[0.0, 0, 0], [0, 1.0, 0], [0, 0, 2.5]], dtype=complex)
    prev = math.inf
    for mag in np.linspace(0, 3, 31):
        raw = base.copy()
        raw[2, 0] = mag * np.exp(0.7j)
        raw[0, 2] = np.conj(raw[2, 0])
        value = theorem3_bound(validate_hermitian(raw), 1, 1, 3).value
        assert value <= prev
        prev = value


@settings(max_examples=60, deadline=None)
@given(d=st.lists(st.floats(-100, 100), min_size=1, max_size=10))
def test_reduction_on_diagonal(d):
    h = validate_hermitian(np.diag(d))
    rep = best_bounds(h)
    for c in rep.candidates:
        assert c.value == rep.schur[c.r - 1]
    assert [b.value for b in rep.per_r_best] == rep.schur[:-1].tolist()
    assert rep.lambda_min_upper.value == h.diagonal[0]
    assert rep.lambda_max_lower.value == h.diagonal[-1]
