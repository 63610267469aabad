import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from graphent import (
    AlphaNonPositiveError,
    NonSkewError,
    NonSymmetricError,
    Spectrum,
    comparison_tolerance,
    determinant,
    singular_values,
    skew_absolute_eigenvalues,
    spectral_moment,
    sqrt_spectrum,
    symmetric_eigenvalues,
    within_tolerance,
)


def _symmetric(entries, n):
    a = np.zeros((n, n))
    k = 0
    for i in range(n):
        for j in range(i, n):
            a[i, j] = a[j, i] = entries[k]
            k += 1
    return a


sym_matrices = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.lists(
        st.floats(min_value=-10, max_value=10, allow_nan=False),
        min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2,
    ).map(lambda entries: _symmetric(entries, n))
)


@given(sym_matrices)
@settings(max_examples=60, deadline=None)
def test_eigenvalues_descending_and_trace_preserving(a):
    spec = symmetric_eigenvalues(a)
    vals = spec.values
    assert len(vals) == a.shape[0]
    assert all(vals[i] >= vals[i + 1] for i in range(len(vals) - 1))
    assert math.isclose(vals.sum(), float(np.trace(a)), abs_tol=1e-8 * max(1, abs(np.trace(a))))


@given(sym_matrices)
@settings(max_examples=60, deadline=None)
def test_eigenvalue_squares_match_frobenius(a):
    spec = symmetric_eigenvalues(a)
    frob = float((a * a).sum())
    assert math.isclose(spectral_moment(spec, 2), frob, rel_tol=1e-9, abs_tol=1e-8)


def test_non_symmetric_rejected():
    with pytest.raises(NonSymmetricError):
        symmetric_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_known_eigenvalues():
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    spec = symmetric_eigenvalues(a)
    assert np.allclose(spec.values, [3.0, 1.0])
    assert spec.kind == "eigenvalues"


def test_singular_values_of_rectangular():
    m = np.array([[1.0, 0.0, 0.0], [0.0, 2.0, 0.0]])
    spec = singular_values(m)
    assert np.allclose(spec.values, [2.0, 1.0])
    assert spec.kind == "singular-values"


def test_singular_values_padding():
    m = np.array([[3.0, 0.0], [0.0, 0.0], [0.0, 0.0]])
    spec = singular_values(m, pad_to=3)
    assert np.allclose(spec.values, [3.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        singular_values(np.eye(3), pad_to=2)


@given(st.integers(2, 6), st.integers(2, 6), st.integers(0, 10 ** 9))
@settings(max_examples=40, deadline=None)
def test_singular_squares_match_frobenius(rows, cols, seed):
    rng = np.random.default_rng(seed)
    m = rng.uniform(-3, 3, size=(rows, cols))
    spec = singular_values(m)
    assert math.isclose(spectral_moment(spec, 2), float((m * m).sum()),
                        rel_tol=1e-9, abs_tol=1e-9)


def test_skew_absolute_eigenvalues_pair_up():
    s = np.array([[0.0, 1.0], [-1.0, 0.0]])
    spec = skew_absolute_eigenvalues(s)
    assert np.allclose(spec.values, [1.0, 1.0])
    assert spec.kind == "absolute-eigenvalues"


def test_skew_check_rejects_symmetric_part():
    with pytest.raises(NonSkewError):
        skew_absolute_eigenvalues(np.array([[0.0, 1.0], [1.0, 0.0]]))


@given(st.integers(2, 7), st.integers(0, 10 ** 9))
@settings(max_examples=40, deadline=None)
def test_skew_absolute_squares_match_frobenius(n, seed):
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.uniform(-2, 2, size=(n, n)), 1)
    s = upper - upper.T
    spec = skew_absolute_eigenvalues(s)
    assert math.isclose(spectral_moment(spec, 2), float((s * s).sum()),
                        rel_tol=1e-8, abs_tol=1e-9)


def test_sqrt_spectrum_of_gram():
    q = np.array([[2.0, 1.0], [1.0, 2.0]])
    roots = sqrt_spectrum(symmetric_eigenvalues(q))
    assert np.allclose(roots.values, [math.sqrt(3.0), 1.0])
    assert roots.kind == "singular-values"


def test_spectral_moment_rejects_nonpositive_order():
    spec = Spectrum(np.array([1.0, 2.0]), "eigenvalues")
    with pytest.raises(AlphaNonPositiveError):
        spectral_moment(spec, 0.0)
    with pytest.raises(AlphaNonPositiveError):
        spectral_moment(spec, -1.0)


def test_fractional_moment_uses_absolute_values():
    spec = Spectrum(np.array([4.0, -4.0]), "eigenvalues")
    assert spectral_moment(spec, 0.5) == pytest.approx(4.0)


def test_determinant():
    assert determinant(np.array([[0.0, 1.0], [-1.0, 0.0]])) == pytest.approx(1.0)


def test_tolerance_helpers():
    assert within_tolerance(1.0, 1.0 + 1e-10)
    assert not within_tolerance(1.0, 1.0 + 1e-6)
    assert comparison_tolerance(1e6, 0.0) > comparison_tolerance(1.0, 0.0)
