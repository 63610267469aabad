"""Dense spectral routines and the package-wide numerical conventions.

All solvers return a :class:`Spectrum` sorted in descending order.  The
conventions used everywhere else in the package live here:

* dual comparison tolerance ``|a - b| <= 1e-9 + 1e-8 * max(|a|, |b|)``;
* symmetry / skew-symmetry admission at 1e-12 absolute;
* Gram eigenvalues in [-1e-10, 0) clamp to zero, anything lower is an error;
* Gram eigenvalues below 1e-12 of the largest snap to exact zero before a
  square root is taken, so that numerically-null singular values do not get
  amplified by fractional powers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AlphaNonPositiveError,
    NegativeEigenvalueError,
    NoConvergenceError,
    NonSkewError,
    NonSymmetricError,
)

ABS_TOL = 1e-9
REL_TOL = 1e-8
EQUALITY_BAND = 1e-8
SYMMETRY_TOL = 1e-12
NEGATIVE_CLAMP = -1e-10
NULLSPACE_REL = 1e-12

EIGENVALUES = "eigenvalues"
SINGULAR_VALUES = "singular-values"
ABSOLUTE_EIGENVALUES = "absolute-eigenvalues"


def comparison_tolerance(a: float, b: float) -> float:
    """The dual absolute/relative tolerance for comparing two reals."""
    return ABS_TOL + REL_TOL * max(abs(a), abs(b))


def within_tolerance(a: float, b: float) -> bool:
    return abs(a - b) <= comparison_tolerance(a, b)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """An ordered list of spectral values with origin metadata.

    ``values`` is a descending float array; ``kind`` is one of
    ``eigenvalues``, ``singular-values``, ``absolute-eigenvalues``;
    ``source`` names the matrix family the values came from.
    """

    values: np.ndarray
    kind: str
    source: str = "custom"

    @property
    def size(self) -> int:
        return int(self.values.size)

    def sum(self) -> float:
        return float(np.sum(self.values))

    def abs_sum(self) -> float:
        return float(np.sum(np.abs(self.values)))


def symmetric_eigenvalues(matrix, source: str = "custom") -> Spectrum:
    """Eigenvalues of a real symmetric matrix, descending.

    Rejects matrices that are not symmetric within 1e-12 absolute.
    """
    a = _as_square(matrix)
    if float(np.max(np.abs(a - a.T), initial=0.0)) > SYMMETRY_TOL:
        raise NonSymmetricError("matrix is not symmetric within 1e-12")
    try:
        vals = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver failed: {exc}") from exc
    return Spectrum(np.ascontiguousarray(vals[::-1]), EIGENVALUES, source)


def singular_values(matrix, pad_to: int | None = None, source: str = "custom") -> Spectrum:
    """Singular values of a real matrix, descending, zero-padded to ``pad_to``.

    Computed as square roots of the Gram eigenvalues on the smaller side.
    The default padding length is the row count.
    """
    m = np.atleast_2d(np.asarray(matrix, dtype=float))
    rows, cols = m.shape
    if pad_to is None:
        pad_to = rows
    gram = m @ m.T if rows <= cols else m.T @ m
    svals = _sqrt_of_gram_eigenvalues(_eigvalsh(gram))
    if pad_to < svals.size:
        if np.any(svals[pad_to:] > 0.0):
            raise ValueError(f"cannot pad {svals.size} nonzero singular values into {pad_to}")
        svals = svals[:pad_to]
    out = np.zeros(pad_to)
    out[:svals.size] = svals
    return Spectrum(out, SINGULAR_VALUES, source)


def skew_absolute_eigenvalues(matrix, source: str = "custom") -> Spectrum:
    """Absolute eigenvalues of a real skew-symmetric matrix, descending.

    These are the singular values of the matrix, computed through the
    positive semidefinite product M Mt = -M^2.
    """
    a = _as_square(matrix)
    if float(np.max(np.abs(a + a.T), initial=0.0)) > SYMMETRY_TOL:
        raise NonSkewError("matrix is not skew-symmetric within 1e-12")
    vals = _sqrt_of_gram_eigenvalues(_eigvalsh(a @ a.T))
    return Spectrum(vals, ABSOLUTE_EIGENVALUES, source)


def sqrt_spectrum(spectrum: Spectrum, source: str | None = None) -> Spectrum:
    """Entrywise square root of a positive-semidefinite eigenvalue spectrum.

    Applies the same clamp and null-space snap as the singular-value path,
    so both routes to the same quantity agree on exact zeros.
    """
    vals = _sqrt_of_gram_eigenvalues(np.sort(spectrum.values))
    return Spectrum(vals, SINGULAR_VALUES, source if source is not None else spectrum.source)


def spectral_moment(spectrum: Spectrum, alpha: float) -> float:
    """Sum of |value|^alpha over the spectrum, with 0^alpha taken as 0."""
    if alpha <= 0:
        raise AlphaNonPositiveError(f"moment order must be positive, got {alpha}")
    return float(np.sum(np.abs(spectrum.values) ** alpha))


def determinant(matrix) -> float:
    """Determinant via pivoted LU factorization; sign is exact."""
    return float(np.linalg.det(_as_square(matrix)))


def _as_square(matrix) -> np.ndarray:
    a = np.atleast_2d(np.asarray(matrix, dtype=float))
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _eigvalsh(gram: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(gram)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver failed: {exc}") from exc


def _sqrt_of_gram_eigenvalues(vals_ascending: np.ndarray) -> np.ndarray:
    """Clamp, snap, and square-root ascending PSD eigenvalues; returns descending."""
    if vals_ascending.size == 0:
        return vals_ascending.astype(float)
    low = float(vals_ascending[0])
    if low < NEGATIVE_CLAMP:
        raise NegativeEigenvalueError(
            f"Gram eigenvalue {low} below the clamp threshold {NEGATIVE_CLAMP}"
        )
    vals = np.clip(vals_ascending, 0.0, None)
    top = float(vals[-1])
    if top > 0.0:
        vals[vals < NULLSPACE_REL * top] = 0.0
    return np.sqrt(vals)[::-1].copy()
