"""Degree-based and distance-based graph indices, and matrix energies.

Distance-sum convention: the k-th distance moment here is HALF the sum
of d(u, v)^k over unordered pairs (a quarter of the ordered sum).  This
is half the textbook Wiener normalization; the closed entropy forms and
the trace identity trace(D^2) = 4 * W_2 both assume it, so it is the
package-wide convention.  The hyper-Wiener index is (W_1 + W_2) / 2
under the same convention, again half its textbook value.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph, OrientedGraph, distances
from .matrices import MatrixKind, as_kind, signless_laplacian, spectrum_of
from .spectra import Spectrum, sqrt_spectrum, symmetric_eigenvalues


def first_zagreb(g: Graph) -> float:
    """Sum of squared vertex degrees."""
    return float(sum(d * d for d in g.degrees))


def general_randic_index(g: Graph, beta: float) -> float:
    """Sum of (d_u d_v)^beta over edges.

    beta = -1/2 gives the classic branching index; beta = -1 and
    beta = 1 appear in the closed entropy forms for the degree-weighted
    adjacency families.
    """
    if g.m == 0:
        return 0.0
    d = np.asarray(g.degrees, dtype=float)
    ea = g.edge_array
    return float(np.sum((d[ea[:, 0]] * d[ea[:, 1]]) ** beta))


def distance_moment(g: Graph, k: int) -> float:
    """Half the sum of d(u,v)^k over unordered vertex pairs; connected only."""
    dm = distances(g)
    return 0.5 * float(np.sum(np.triu(dm, 1).astype(float) ** k))


def distance_moments(g: Graph, ks: tuple[int, ...] = (1, 2)) -> tuple[float, ...]:
    """Several distance moments from a single BFS sweep."""
    dm = np.triu(distances(g), 1).astype(float)
    return tuple(0.5 * float(np.sum(dm ** k)) for k in ks)


def wiener_index(g: Graph) -> float:
    return distance_moment(g, 1)


def hyper_wiener_index(g: Graph) -> float:
    w1, w2 = distance_moments(g, (1, 2))
    return 0.5 * (w1 + w2)


def energy_from_spectrum(spectrum: Spectrum) -> float:
    """Sum of absolute spectral values."""
    return spectrum.abs_sum()


def incidence_energy(g: Graph) -> float:
    """Sum of incidence singular values, via the signless Laplacian.

    The direct route (singular values of the incidence matrix) is kept
    separate in the verifier so the two computations stay independent.
    """
    q = symmetric_eigenvalues(signless_laplacian(g), source="q")
    return sqrt_spectrum(q, source="incidence").sum()


def energy(kind: MatrixKind | str, g: Graph | OrientedGraph) -> float:
    """The energy of a graph with respect to a matrix kind.

    For the plain incidence kind this takes the signless Laplacian
    route; every other kind sums the absolute values of the spectrum
    reported by :func:`graphent.matrices.spectrum_of`.
    """
    kind = as_kind(kind)
    if kind.tag == "incidence":
        plain = g.underlying if isinstance(g, OrientedGraph) else g
        return incidence_energy(plain)
    return energy_from_spectrum(spectrum_of(kind, g))
