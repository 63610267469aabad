"""Machine verification of the spectral-entropy identities over graph corpora.

Three claim families are checked per graph:

* ``identity.*``: the closed entropy expressions agree with the direct
  spectral route, for the quadratic entropy and for the Renyi and Daroczy
  entropies at every requested order;
* ``trace.*``: the power-sum identities that feed those closed forms
  (sum of signless Laplacian eigenvalues is 2m, and so on);
* ``bound.*``: the published upper and lower bounds, with their equality
  characterizations cross-checked in both directions where stated.

Every claim produces a :class:`ClaimResult` with status ``pass``, ``fail``,
``not-applicable`` (hypothesis unmet), or ``equality-attained`` (the bound
is met within the equality band).  The cross-entropy order inequalities are
handled separately by :func:`audit_theorem10`: they are audited and
reported, never asserted, because desk evaluation produces explicit
counterexamples to one of them as stated.

Corpora are described by compact strings: ``all:<n>`` sweeps every labeled
graph on 1..n vertices, ``trees:<n>`` every labeled tree on exactly n, and
``gnp:<n>,<p>,<count>`` draws seeded random graphs.  Reports are
deterministic: reruns, and runs with different worker counts, produce
byte-identical serializations.
"""

from __future__ import annotations

import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .entropy import (
    ClosedFormParts,
    ProbabilityVector,
    closed_form_parts,
    daroczy_entropy,
    probabilities_from_spectrum,
    quadratic_entropy,
    renyi_entropy,
)
from .enumeration import (
    labeled_graph_count,
    labeled_graph_from_mask,
    labeled_tree_count,
    labeled_tree_from_index,
)
from .errors import (
    AlphaNonPositiveError,
    NegativeEigenvalueError,
    NoConvergenceError,
)
from .formats import encode_graph6
from .graphs import (
    Graph,
    OrientedGraph,
    canonical_orientation,
    random_gnp,
    random_orientation,
)
from .matrices import MatrixKind, as_kind, build, spectrum_of
from .measures import (
    distance_moment,
    energy,
    first_zagreb,
    general_randic_index,
    hyper_wiener_index,
    wiener_index,
)
from .spectra import (
    EQUALITY_BAND,
    Spectrum,
    comparison_tolerance,
    determinant,
    spectral_moment,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
EQUALITY = "equality-attained"
STATUSES = (PASS, FAIL, NOT_APPLICABLE, EQUALITY)

DEFAULT_ALPHAS = (0.5, 2.0, 3.0)
DEFAULT_AUDIT_GRID = (0.5, 1.5, 2.0, 3.0)
CHECK_NAMES = ("equalities", "traces", "bounds")

TRACE_REL_TOL = 1e-9
TIE_TOL = 1e-9
AUDIT_RETAIN_LIMIT = 1000

_ORIENTATION_LABELS = ("canonical", "random")


@dataclass(frozen=True)
class ClaimResult:
    """Outcome of one claim on one graph.

    ``residual`` is the measured margin: worst route disagreement for
    identities and traces, signed slack for bounds (negative means
    violated), signed inequality margin for audits.  ``witness`` carries
    the offending values when the status needs explaining.
    """

    claim_id: str
    graph: str
    status: str
    residual: float | None = None
    witness: dict | None = None


class GraphBundle:
    """Per-graph cache shared by the claim checkers.

    Holds the graph6 descriptor, both orientations, and every spectrum
    computed so far, so a combined equality/trace/bound sweep touches the
    eigensolver once per matrix.  Passing an :class:`OrientedGraph` seats
    its orientation in the ``canonical`` slot.
    """

    def __init__(self, g: Graph | OrientedGraph, seed: int = 0):
        self._oriented: dict[str, OrientedGraph] = {}
        if isinstance(g, OrientedGraph):
            self.graph = g.underlying
            self._oriented["canonical"] = g
        else:
            self.graph = g
        self.seed = seed
        self.descriptor = encode_graph6(self.graph).decode("ascii")
        self._spectra: dict[tuple[str, str | None], Spectrum] = {}
        self._closed: dict[tuple[str, str | None], ClosedFormParts] = {}

    def oriented(self, label: str) -> OrientedGraph:
        og = self._oriented.get(label)
        if og is None:
            if label == "canonical":
                og = canonical_orientation(self.graph)
            elif label == "random":
                mix = zlib.crc32(self.descriptor.encode("ascii")) ^ (self.seed & 0xFFFFFFFF)
                og = random_orientation(self.graph, mix)
            else:
                raise ValueError(f"unknown orientation label {label!r}")
            self._oriented[label] = og
        return og

    def _target(self, kind: MatrixKind, orientation: str | None) -> Graph | OrientedGraph:
        if kind.needs_orientation:
            return self.oriented(orientation if orientation is not None else "canonical")
        return self.graph

    def spectrum(self, kind: MatrixKind | str, orientation: str | None = None) -> Spectrum:
        kind = as_kind(kind)
        key = (str(kind), orientation)
        spec = self._spectra.get(key)
        if spec is None:
            spec = spectrum_of(kind, self._target(kind, orientation))
            self._spectra[key] = spec
        return spec

    def closed(self, kind: MatrixKind | str, orientation: str | None = None) -> ClosedFormParts:
        kind = as_kind(kind)
        key = (str(kind), orientation)
        parts = self._closed.get(key)
        if parts is None:
            target = self._target(kind, orientation)
            if kind.tag == "incidence":
                parts = closed_form_parts(kind, target, q_spectrum=self.spectrum("q"))
            else:
                parts = closed_form_parts(
                    kind, target, spectrum=self.spectrum(kind, orientation)
                )
            self._closed[key] = parts
        return parts

    def quadratic(self, kind: MatrixKind | str, orientation: str | None = None) -> float:
        return quadratic_entropy(probabilities_from_spectrum(self.spectrum(kind, orientation)))


def _ensure_bundle(g: Graph | OrientedGraph, seed: int, bundle: GraphBundle | None) -> GraphBundle:
    return bundle if bundle is not None else GraphBundle(g, seed)


def check_equalities(
    g: Graph | OrientedGraph,
    alphas: Sequence[float] = DEFAULT_ALPHAS,
    *,
    betas: Sequence[float] = (),
    seed: int = 0,
    log_base: float = 2.0,
    bundle: GraphBundle | None = None,
) -> list[ClaimResult]:
    """Compare direct-route and closed-route entropies for every kind.

    One claim per identity family: the two normalized kinds aggregate
    into ``identity.normalized``, the two orientations of each skew kind
    aggregate into their family, and each requested exponent adds an
    ``identity.general-randic:<b>`` claim.  Hypotheses that fail (no
    edges, isolated vertices, disconnected) yield not-applicable.
    """
    bundle = _ensure_bundle(g, seed, bundle)
    graph = bundle.graph
    has_edges = graph.m >= 1
    full_degree = graph.non_isolated_count == graph.n and graph.m >= 1

    blocks: list[tuple[str, list[tuple[MatrixKind, str | None]], bool]] = [
        ("identity.q", [(MatrixKind("q"), None)], has_edges),
        ("identity.normalized",
         [(MatrixKind("norm-l"), None), (MatrixKind("norm-q"), None)], full_degree),
        ("identity.incidence", [(MatrixKind("incidence"), None)], has_edges),
        ("identity.distance", [(MatrixKind("distance"), None)],
         graph.is_connected and graph.n >= 2),
        ("identity.skew",
         [(MatrixKind("skew"), o) for o in _ORIENTATION_LABELS], has_edges),
        ("identity.randic", [(MatrixKind("randic"), None)], has_edges),
        ("identity.randic-incidence", [(MatrixKind("randic-incidence"), None)], has_edges),
    ]
    for b in betas:
        kind = MatrixKind("general-randic", float(b))
        blocks.append((f"identity.{kind}", [(kind, None)], has_edges))
    blocks.append(("identity.skew-randic",
                   [(MatrixKind("skew-randic"), o) for o in _ORIENTATION_LABELS], has_edges))

    results: list[ClaimResult] = []
    for claim_id, parts_list, applicable in blocks:
        if not applicable:
            results.append(ClaimResult(claim_id, bundle.descriptor, NOT_APPLICABLE))
            continue
        results.append(_equality_claim(bundle, claim_id, parts_list, alphas, log_base))
    return results


def _equality_claim(
    bundle: GraphBundle,
    claim_id: str,
    parts_list: list[tuple[MatrixKind, str | None]],
    alphas: Sequence[float],
    log_base: float,
) -> ClaimResult:
    worst = 0.0
    fail_diff = -1.0
    witness: dict | None = None
    try:
        for kind, orientation in parts_list:
            spec = bundle.spectrum(kind, orientation)
            closed = bundle.closed(kind, orientation)
            pv = probabilities_from_spectrum(spec, log_base)
            comparisons: list[tuple[str, float | None, float, float]] = [
                ("quadratic", None, quadratic_entropy(pv), closed.quadratic_value)
            ]
            for a in alphas:
                comparisons.append(("renyi", a, renyi_entropy(pv, a), closed.renyi(a, log_base)))
                comparisons.append(("daroczy", a, daroczy_entropy(pv, a), closed.daroczy(a)))
            for functional, a, direct, closed_value in comparisons:
                diff = abs(direct - closed_value)
                worst = max(worst, diff)
                if diff > comparison_tolerance(direct, closed_value) and diff > fail_diff:
                    fail_diff = diff
                    witness = {
                        "matrix": str(kind),
                        "orientation": orientation,
                        "functional": functional,
                        "alpha": a,
                        "direct": direct,
                        "closed": closed_value,
                    }
    except (NoConvergenceError, NegativeEigenvalueError) as exc:
        return ClaimResult(claim_id, bundle.descriptor, FAIL, None, {"error": str(exc)})
    status = FAIL if witness is not None else PASS
    return ClaimResult(claim_id, bundle.descriptor, status, worst, witness)


def check_traces(
    g: Graph | OrientedGraph,
    *,
    betas: Sequence[float] = (),
    seed: int = 0,
    bundle: GraphBundle | None = None,
) -> list[ClaimResult]:
    """Verify the power-sum identities behind the closed entropy forms.

    Uses a tighter relative tolerance than the entropy comparisons since
    both sides are plain sums of squares.
    """
    bundle = _ensure_bundle(g, seed, bundle)
    graph = bundle.graph
    m2 = 2.0 * graph.m
    r = float(graph.non_isolated_count)
    r_minus_1 = general_randic_index(graph, -1.0)

    def square_sum(kind: str, orientation: str | None = None) -> float:
        return spectral_moment(bundle.spectrum(kind, orientation), 2.0)

    claims: list[tuple[str, bool, list[tuple[float, float]]]] = [
        ("trace.q.sum", True, [(bundle.spectrum("q").sum(), m2)]),
        ("trace.q.square", True, [(square_sum("q"), first_zagreb(graph) + m2)]),
        ("trace.normalized.square", True,
         [(square_sum("norm-l"), r + 2.0 * r_minus_1),
          (square_sum("norm-q"), r + 2.0 * r_minus_1)]),
        ("trace.skew.square", True,
         [(square_sum("skew", o), m2) for o in _ORIENTATION_LABELS]),
        ("trace.randic.square", True, [(square_sum("randic"), 2.0 * r_minus_1)]),
        ("trace.randic-incidence.square", graph.m >= 1,
         [(square_sum("randic-incidence"), r)] if graph.m >= 1 else []),
    ]
    for b in betas:
        kind = MatrixKind("general-randic", float(b))
        claims.append((f"trace.{kind}.square", True,
                       [(spectral_moment(bundle.spectrum(kind), 2.0),
                         2.0 * general_randic_index(graph, 2.0 * float(b)))]))
    claims.append(("trace.distance.square", graph.is_connected,
                   [(square_sum("distance"), 4.0 * distance_moment(graph, 2))]
                   if graph.is_connected else []))

    results: list[ClaimResult] = []
    for claim_id, applicable, pairs in claims:
        if not applicable:
            results.append(ClaimResult(claim_id, bundle.descriptor, NOT_APPLICABLE))
            continue
        worst = 0.0
        fail_diff = -1.0
        witness: dict | None = None
        for observed, expected in pairs:
            diff = abs(observed - expected)
            worst = max(worst, diff)
            tol = TRACE_REL_TOL * max(1.0, abs(observed), abs(expected))
            if diff > tol and diff > fail_diff:
                fail_diff = diff
                witness = {"observed": observed, "expected": expected}
        status = FAIL if witness is not None else PASS
        results.append(ClaimResult(claim_id, bundle.descriptor, status, worst, witness))
    return results


def check_bounds(
    g: Graph | OrientedGraph,
    *,
    seed: int = 0,
    bundle: GraphBundle | None = None,
) -> list[ClaimResult]:
    """Evaluate the published entropy bounds under their hypotheses.

    Residual is the slack (distance into the feasible side); a slack below
    minus the comparison tolerance is a violation.  Where the source
    states an equality characterization, the check is bidirectional:
    graphs with the structural property must land inside the equality
    band, and graphs inside the band must have the property.
    """
    bundle = _ensure_bundle(g, seed, bundle)
    graph = bundle.graph
    n, m = graph.n, graph.m
    degs = graph.degrees
    delta, big_delta = (min(degs), max(degs)) if n else (0, 0)
    r = graph.non_isolated_count
    has_edges = m >= 1
    positive_degrees = delta >= 1
    regular = positive_degrees and delta == big_delta
    complete = n >= 2 and m == n * (n - 1) // 2
    connected = graph.is_connected

    results: list[ClaimResult] = []

    def emit(claim_id: str, applicable: bool,
             pairs: list[tuple[float, float, str]],
             condition: bool | None) -> None:
        if not applicable:
            results.append(ClaimResult(claim_id, bundle.descriptor, NOT_APPLICABLE))
            return
        min_slack = math.inf
        at_value = at_bound = 0.0
        for value, rhs, direction in pairs:
            slack = value - rhs if direction == "lower" else rhs - value
            if slack < min_slack:
                min_slack, at_value, at_bound = slack, value, rhs
        witness: dict | None = None
        if min_slack < -comparison_tolerance(at_value, at_bound):
            status = FAIL
            witness = {"value": at_value, "bound": at_bound}
        else:
            in_band = abs(min_slack) <= EQUALITY_BAND
            if condition is not None and condition and not in_band:
                status = FAIL
                witness = {"value": at_value, "bound": at_bound,
                           "note": "characterized graph misses equality"}
            elif condition is not None and in_band and not condition:
                status = FAIL
                witness = {"value": at_value, "bound": at_bound,
                           "note": "equality attained off the characterized family"}
            else:
                status = EQUALITY if in_band else PASS
        results.append(ClaimResult(claim_id, bundle.descriptor, status, min_slack, witness))

    def component_shape() -> tuple[int, int, int]:
        # counts of (K2 components, P3 components, anything else)
        k2 = p3 = other = 0
        for comp in graph.components:
            ec = graph.edge_count_within(comp)
            if len(comp) == 2 and ec == 1:
                k2 += 1
            elif len(comp) == 3 and ec == 2:
                p3 += 1
            else:
                other += 1
        return k2, p3, other

    # degree-diagonal plus adjacency
    if has_edges:
        i_q = bundle.quadratic("q")
        emit("bound.q.upper", True,
             [(i_q, 1.0 - 1.0 / (2.0 * m) - 1.0 / n, "upper")], None)
        if positive_degrees:
            rhs = (1.0 - 1.0 / (2.0 * m) - 1.0 / (2.0 * n)
                   - (big_delta ** 2 + delta ** 2) / (4.0 * n * big_delta * delta))
            bidegreed = False
            if len(set(degs)) == 2:
                p_count = sum(1 for d in degs if d == big_delta)
                bidegreed = ((delta * n) % (delta + big_delta) == 0
                             and p_count == delta * n // (delta + big_delta))
            emit("bound.q.lower", True, [(i_q, rhs, "lower")], regular or bidegreed)
        else:
            emit("bound.q.lower", False, [], None)
    else:
        emit("bound.q.upper", False, [], None)
        emit("bound.q.lower", False, [], None)

    # normalized kinds; hypotheses need every degree positive
    if positive_degrees:
        norm_values = [bundle.quadratic("norm-l"), bundle.quadratic("norm-q")]
        low_rhs = 1.0 - 2.0 / n + (1.0 / (n * n) if n % 2 else 0.0)
        k2_comps, p3_comps, other_comps = component_shape()
        if n % 2:
            matched = other_comps == 0 and p3_comps == 1
        else:
            matched = other_comps == 0 and p3_comps == 0
        emit("bound.normalized.lower", True,
             [(v, low_rhs, "lower") for v in norm_values], matched)
        emit("bound.normalized.upper", True,
             [(v, 1.0 - 1.0 / (n - 1.0), "upper") for v in norm_values], complete)
        emit("bound.normalized.degree-lower", True,
             [(v, 1.0 - 1.0 / n - 1.0 / (n * delta), "lower") for v in norm_values], regular)
        emit("bound.normalized.degree-upper", True,
             [(v, 1.0 - 1.0 / n - 1.0 / (n * big_delta), "upper") for v in norm_values], regular)
    else:
        for claim_id in ("bound.normalized.lower", "bound.normalized.upper",
                         "bound.normalized.degree-lower", "bound.normalized.degree-upper"):
            emit(claim_id, False, [], None)

    # incidence; the upper equality case sits outside the domain, so the
    # characterization is the empty family
    if has_edges:
        i_inc = bundle.quadratic("incidence")
        emit("bound.incidence.lower", True, [(i_inc, 0.0, "lower")], m == 1)
        emit("bound.incidence.upper", True, [(i_inc, 1.0 - 1.0 / n, "upper")], False)
    else:
        emit("bound.incidence.lower", False, [], None)
        emit("bound.incidence.upper", False, [], None)

    # distance
    dist_ok = connected and n >= 2
    if dist_ok:
        i_dist = bundle.quadratic("distance")
        emit("bound.distance.lower", True, [(i_dist, 0.0, "lower")], None)
        emit("bound.distance.upper", True, [(i_dist, 1.0 - 1.0 / n, "upper")], None)
    else:
        emit("bound.distance.lower", False, [], None)
        emit("bound.distance.upper", False, [], None)

    # skew family: determinant-based lower bound per orientation, shared
    # upper bound, and the degree link between the two upper expressions
    if has_edges:
        det_pairs = []
        upper_pairs = []
        for label in _ORIENTATION_LABELS:
            value = bundle.quadratic("skew", label)
            det = abs(determinant(build(MatrixKind("skew"), bundle.oriented(label))))
            rhs = 1.0 - 2.0 * m / (2.0 * m + n * (n - 1.0) * det ** (2.0 / n))
            det_pairs.append((value, rhs, "lower"))
            upper_pairs.append((value, 1.0 - 1.0 / n, "upper"))
        emit("bound.skew.det-lower", True, det_pairs, None)
        emit("bound.skew.upper", True, upper_pairs, None)
        emit("bound.skew.degree-chain", True,
             [(1.0 - 2.0 * m / (n * n * big_delta), 1.0 - 1.0 / n, "lower")], None)
    else:
        emit("bound.skew.det-lower", False, [], None)
        emit("bound.skew.upper", False, [], None)
        emit("bound.skew.degree-chain", False, [], None)

    # degree-scaled adjacency
    if has_edges:
        emit("bound.randic.upper", True,
             [(bundle.quadratic("randic"), 1.0 - 1.0 / n, "upper")],
             all(d == 1 for d in degs))
    else:
        emit("bound.randic.upper", False, [], None)

    # degree-scaled incidence; the lower bound needs every vertex covered
    if has_edges:
        i_ri = bundle.quadratic("randic-incidence")
        emit("bound.randic-incidence.lower", r == n,
             [(i_ri, 1.0 - r / n, "lower")] if r == n else [],
             n == 2 and m == 1)
        denom = n * n - 3.0 * n + 4.0 + 2.0 * math.sqrt(2.0 * (n - 1.0) * (n - 2.0))
        emit("bound.randic-incidence.upper", True, [(i_ri, 1.0 - r / denom, "upper")], complete)
    else:
        emit("bound.randic-incidence.lower", False, [], None)
        emit("bound.randic-incidence.upper", False, [], None)

    # degree-scaled skew adjacency
    if has_edges:
        emit("bound.skew-randic.upper", True,
             [(bundle.quadratic("skew-randic", o), 1.0 - 1.0 / n, "upper")
              for o in _ORIENTATION_LABELS], None)
    else:
        emit("bound.skew-randic.upper", False, [], None)

    return results


def audit_theorem10(
    p: ProbabilityVector,
    alpha_grid: Sequence[float],
    log_base: float = 2.0,
) -> list[ClaimResult]:
    """Audit the cross-entropy order inequalities on one distribution.

    Three claims per grid point, each comparing the two sides the stated
    inequality relates (Renyi vs Daroczy, Daroczy vs quadratic, Renyi vs
    quadratic), with the branch chosen by where alpha falls.  The margin
    is left-hand side minus right-hand side; a negative margin beyond
    tolerance means the stated inequality fails on this distribution, and
    that is reported, not raised: these claims are audited as published,
    not assumed true.
    """
    quad = quadratic_entropy(p)
    ln2 = math.log(2.0)
    results: list[ClaimResult] = []
    for alpha in alpha_grid:
        if alpha <= 0:
            raise AlphaNonPositiveError(f"audit grid must be positive, got {alpha}")
        if alpha == 1.0:
            for claim_id in ("inequality.renyi-daroczy", "inequality.daroczy-quadratic",
                             "inequality.renyi-quadratic"):
                results.append(ClaimResult(claim_id, p.origin, NOT_APPLICABLE,
                                           None, {"alpha": alpha}))
            continue
        ren = renyi_entropy(p, alpha, log_base)
        dar = daroczy_entropy(p, alpha)
        c = 1.0 - 2.0 ** (1.0 - alpha)
        if alpha < 1.0:
            part_i = (dar * ln2, ren)
        else:
            part_i = (ren, (c * ln2 / (alpha - 1.0)) * dar)
        if alpha < 1.0 or alpha >= 2.0:
            part_ii = (dar, quad)
        else:
            part_ii = (quad, c * dar)
        if alpha >= 2.0:
            part_iii = (ren, (c * ln2 / (alpha - 1.0)) * quad)
        elif alpha > 1.0:
            part_iii = (ren, (c * c * ln2 / (alpha - 1.0)) * quad)
        else:
            part_iii = (ren, quad)
        for claim_id, (lhs, rhs) in (
            ("inequality.renyi-daroczy", part_i),
            ("inequality.daroczy-quadratic", part_ii),
            ("inequality.renyi-quadratic", part_iii),
        ):
            margin = lhs - rhs
            band = comparison_tolerance(lhs, rhs)
            if margin < -band:
                status = FAIL
            elif abs(margin) <= band:
                status = EQUALITY
            else:
                status = PASS
            results.append(ClaimResult(claim_id, p.origin, status, margin,
                                       {"alpha": alpha, "lhs": lhs, "rhs": rhs}))
    return results


@dataclass(frozen=True)
class CorpusSpec:
    """A parsed corpus description; see :func:`parse_corpus`."""

    text: str
    family: str
    order: int
    edge_probability: float = 0.0
    count: int = 0

    @property
    def total(self) -> int:
        if self.family == "all":
            return sum(labeled_graph_count(k) for k in range(1, self.order + 1))
        if self.family == "trees":
            return labeled_tree_count(self.order)
        return self.count

    def graph_at(self, index: int, seed: int = 0) -> Graph:
        if not 0 <= index < self.total:
            raise ValueError(f"corpus index {index} out of range")
        if self.family == "all":
            for k in range(1, self.order + 1):
                cnt = labeled_graph_count(k)
                if index < cnt:
                    return labeled_graph_from_mask(k, index)
                index -= cnt
        if self.family == "trees":
            return labeled_tree_from_index(self.order, index)
        return random_gnp(self.order, self.edge_probability, self._sample_seed(seed, index))

    def iterate(self, start: int, stop: int, seed: int = 0) -> Iterator[Graph]:
        stop = min(stop, self.total)
        if self.family == "all":
            base = 0
            for k in range(1, self.order + 1):
                cnt = labeled_graph_count(k)
                lo, hi = max(start - base, 0), min(stop - base, cnt)
                for mask in range(lo, hi):
                    yield labeled_graph_from_mask(k, mask)
                base += cnt
        elif self.family == "trees":
            for index in range(max(start, 0), stop):
                yield labeled_tree_from_index(self.order, index)
        else:
            for index in range(max(start, 0), stop):
                yield random_gnp(self.order, self.edge_probability,
                                 self._sample_seed(seed, index))

    def _sample_seed(self, seed: int, index: int) -> int:
        return zlib.crc32(f"{self.text}#{index}".encode("ascii")) ^ (seed & 0xFFFFFFFF)


def parse_corpus(text: str) -> CorpusSpec:
    """Parse ``all:<n>``, ``trees:<n>``, or ``gnp:<n>,<p>,<count>``."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"corpus {text!r} needs a family prefix like all: or trees:")
    if head == "all":
        order = _parse_int(rest, "order")
        if not 1 <= order <= 7:
            raise ValueError(f"all:<n> supports 1 <= n <= 7, got {order}")
        return CorpusSpec(text, "all", order)
    if head == "trees":
        order = _parse_int(rest, "order")
        if not 2 <= order <= 9:
            raise ValueError(f"trees:<n> supports 2 <= n <= 9, got {order}")
        return CorpusSpec(text, "trees", order)
    if head == "gnp":
        fields = rest.split(",")
        if len(fields) != 3:
            raise ValueError(f"gnp corpus needs <n>,<p>,<count>, got {rest!r}")
        order = _parse_int(fields[0], "order")
        try:
            prob = float(fields[1])
        except ValueError:
            raise ValueError(f"bad edge probability {fields[1]!r}") from None
        count = _parse_int(fields[2], "count")
        if order < 1:
            raise ValueError(f"gnp order must be positive, got {order}")
        if not 0.0 <= prob <= 1.0:
            raise ValueError(f"edge probability must lie in [0, 1], got {prob}")
        if count < 1:
            raise ValueError(f"gnp count must be positive, got {count}")
        return CorpusSpec(text, "gnp", order, prob, count)
    raise ValueError(f"unknown corpus family {head!r}")


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise ValueError(f"bad {what} {text!r}") from None


@dataclass(eq=False)
class VerificationReport:
    """Aggregated claim outcomes over a corpus.

    ``claims`` retains only the records worth reading back (failures and
    equality-attained cases) in corpus order; ``summary`` counts every
    evaluation.  ``runtime_seconds`` is informational and excluded from
    serialized output so reports stay byte-stable.
    """

    corpus: str
    checks: tuple[str, ...]
    alphas: tuple[float, ...]
    betas: tuple[float, ...]
    seed: int
    log_base: float
    total_graphs: int
    claims: tuple[ClaimResult, ...]
    summary: dict[str, dict[str, int]]
    runtime_seconds: float = 0.0

    @property
    def failure_count(self) -> int:
        return sum(by_status.get(FAIL, 0) for by_status in self.summary.values())

    @property
    def ok(self) -> bool:
        return self.failure_count == 0


def _evaluate_graph(
    g: Graph,
    checks: Sequence[str],
    alphas: Sequence[float],
    betas: Sequence[float],
    seed: int,
    log_base: float,
) -> list[ClaimResult]:
    bundle = GraphBundle(g, seed)
    out: list[ClaimResult] = []
    if "equalities" in checks:
        out.extend(check_equalities(g, alphas, betas=betas, seed=seed,
                                    log_base=log_base, bundle=bundle))
    if "traces" in checks:
        out.extend(check_traces(g, betas=betas, seed=seed, bundle=bundle))
    if "bounds" in checks:
        out.extend(check_bounds(g, seed=seed, bundle=bundle))
    return out


def _verify_chunk(args: tuple) -> tuple[int, dict[str, dict[str, int]], list[ClaimResult]]:
    text, start, stop, checks, alphas, betas, seed, log_base = args
    spec = parse_corpus(text)
    counts: dict[str, dict[str, int]] = {}
    retained: list[ClaimResult] = []
    graphs = 0
    for g in spec.iterate(start, stop, seed):
        graphs += 1
        for res in _evaluate_graph(g, checks, alphas, betas, seed, log_base):
            by_status = counts.setdefault(res.claim_id, {})
            by_status[res.status] = by_status.get(res.status, 0) + 1
            if res.status in (FAIL, EQUALITY):
                retained.append(res)
    return graphs, counts, retained


def verify_corpus(
    corpus: str | CorpusSpec,
    *,
    checks: Sequence[str] = CHECK_NAMES,
    alphas: Sequence[float] = DEFAULT_ALPHAS,
    betas: Sequence[float] = (),
    seed: int = 0,
    log_base: float = 2.0,
    workers: int = 1,
) -> VerificationReport:
    """Run the selected claim checkers over every graph of a corpus.

    With ``workers > 1`` the corpus is split into contiguous chunks
    evaluated in separate processes; chunk results merge in corpus order,
    so the report is byte-identical to a single-worker run.
    """
    spec = corpus if isinstance(corpus, CorpusSpec) else parse_corpus(corpus)
    for name in checks:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check {name!r}; expected one of {CHECK_NAMES}")
    started = time.perf_counter()
    total = spec.total
    chunk_args = []
    chunk = total if workers <= 1 else max(512, -(-total // (workers * 4)))
    for start in range(0, total, chunk):
        chunk_args.append((spec.text, start, min(start + chunk, total),
                           tuple(checks), tuple(float(a) for a in alphas),
                           tuple(float(b) for b in betas), seed, float(log_base)))

    merged_counts: dict[str, dict[str, int]] = {}
    retained: list[ClaimResult] = []
    graphs = 0
    if workers <= 1 or len(chunk_args) <= 1:
        chunk_results = map(_verify_chunk, chunk_args)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        chunk_results = pool.map(_verify_chunk, chunk_args)
    for chunk_graphs, counts, chunk_retained in chunk_results:
        graphs += chunk_graphs
        for claim_id, by_status in counts.items():
            into = merged_counts.setdefault(claim_id, {})
            for status, k in by_status.items():
                into[status] = into.get(status, 0) + k
        retained.extend(chunk_retained)
    if workers > 1 and len(chunk_args) > 1:
        pool.shutdown()

    summary = {claim_id: {status: by_status.get(status, 0) for status in STATUSES}
               for claim_id, by_status in merged_counts.items()}
    return VerificationReport(
        corpus=spec.text,
        checks=tuple(checks),
        alphas=tuple(float(a) for a in alphas),
        betas=tuple(float(b) for b in betas),
        seed=seed,
        log_base=float(log_base),
        total_graphs=graphs,
        claims=tuple(retained),
        summary=summary,
        runtime_seconds=time.perf_counter() - started,
    )


@dataclass(eq=False)
class AuditReport:
    """Inequality audit over spectrum-derived distributions of a corpus."""

    corpus: str
    kinds: tuple[str, ...]
    alpha_grid: tuple[float, ...]
    seed: int
    log_base: float
    total_graphs: int
    total_claims: int
    claims: tuple[ClaimResult, ...]
    summary: dict[str, dict[str, int]]
    runtime_seconds: float = 0.0


def default_audit_kinds() -> tuple[MatrixKind, ...]:
    """The matrix families audited by default: all simple kinds plus the
    degree-product weighting with exponent one."""
    return (
        MatrixKind("q"), MatrixKind("norm-l"), MatrixKind("norm-q"),
        MatrixKind("incidence"), MatrixKind("distance"), MatrixKind("skew"),
        MatrixKind("randic"), MatrixKind("randic-incidence"),
        MatrixKind("general-randic", 1.0), MatrixKind("skew-randic"),
    )


def audit_corpus(
    corpus: str | CorpusSpec,
    *,
    kinds: Sequence[MatrixKind | str] | None = None,
    alpha_grid: Sequence[float] = DEFAULT_AUDIT_GRID,
    seed: int = 0,
    log_base: float = 2.0,
) -> AuditReport:
    """Audit the order inequalities on every spectrum the corpus yields.

    Kinds whose hypotheses a graph fails are skipped silently (the audit
    is about distributions, not graph coverage).  Retains at most
    :data:`AUDIT_RETAIN_LIMIT` violation/equality records, in corpus order.
    """
    spec = corpus if isinstance(corpus, CorpusSpec) else parse_corpus(corpus)
    use_kinds = tuple(as_kind(k) for k in (kinds if kinds is not None else default_audit_kinds()))
    started = time.perf_counter()
    counts: dict[str, dict[str, int]] = {}
    retained: list[ClaimResult] = []
    graphs = 0
    total_claims = 0
    for g in spec.iterate(0, spec.total, seed):
        graphs += 1
        bundle = GraphBundle(g, seed)
        for kind in use_kinds:
            p = _spectrum_distribution(bundle, kind, log_base)
            if p is None:
                continue
            for res in audit_theorem10(p, alpha_grid, log_base):
                witness = dict(res.witness or {})
                witness["matrix"] = str(kind)
                rec = ClaimResult(res.claim_id, bundle.descriptor, res.status,
                                  res.residual, witness)
                total_claims += 1
                by_status = counts.setdefault(rec.claim_id, {})
                by_status[rec.status] = by_status.get(rec.status, 0) + 1
                if rec.status in (FAIL, EQUALITY) and len(retained) < AUDIT_RETAIN_LIMIT:
                    retained.append(rec)
    summary = {claim_id: {status: by_status.get(status, 0) for status in STATUSES}
               for claim_id, by_status in counts.items()}
    return AuditReport(
        corpus=spec.text,
        kinds=tuple(str(k) for k in use_kinds),
        alpha_grid=tuple(float(a) for a in alpha_grid),
        seed=seed,
        log_base=float(log_base),
        total_graphs=graphs,
        total_claims=total_claims,
        claims=tuple(retained),
        summary=summary,
        runtime_seconds=time.perf_counter() - started,
    )


def _spectrum_distribution(
    bundle: GraphBundle, kind: MatrixKind, log_base: float
) -> ProbabilityVector | None:
    graph = bundle.graph
    if kind.tag == "distance" and not (graph.is_connected and graph.n >= 2):
        return None
    if kind.tag != "distance" and graph.m == 0:
        return None
    spec = bundle.spectrum(kind, "canonical" if kind.needs_orientation else None)
    return probabilities_from_spectrum(spec, log_base)


@dataclass(eq=False)
class ExtremalScan:
    """Result of sweeping a measure over an enumerated family."""

    family: str
    order: int
    measure: str
    count: int
    min_value: float
    max_value: float
    min_witnesses: tuple[str, ...]
    max_witnesses: tuple[str, ...]
    ranking: tuple[tuple[str, float], ...] | None = None


SCAN_FAMILIES = ("trees", "oriented-trees", "all-graphs")


def scan_extremal(
    family: str,
    order: int,
    measure: str,
    *,
    log_base: float = 2.0,
    keep_ranking: bool = False,
) -> ExtremalScan:
    """Evaluate a measure on every member of a family and find its extremes.

    Members within 1e-9 of an extreme value form its witness tie set,
    reported as graph6 descriptors in enumeration order.  With
    ``keep_ranking`` the full (descriptor, value) list is retained,
    sorted by descending value then descriptor.
    """
    fn = resolve_measure(measure, log_base=log_base)
    if family == "all-graphs":
        members: Iterator[Graph] = (labeled_graph_from_mask(order, mask)
                                    for mask in range(labeled_graph_count(order)))
    elif family in ("trees", "oriented-trees"):
        members = (labeled_tree_from_index(order, i)
                   for i in range(labeled_tree_count(order)))
    else:
        raise ValueError(f"unknown family {family!r}; expected one of {SCAN_FAMILIES}")

    values: list[tuple[str, float]] = []
    for g in members:
        target: Graph | OrientedGraph = (
            canonical_orientation(g) if family == "oriented-trees" else g
        )
        values.append((encode_graph6(g).decode("ascii"), fn(target)))
    if not values:
        raise ValueError(f"family {family}:{order} is empty")

    min_value = min(v for _, v in values)
    max_value = max(v for _, v in values)
    min_witnesses = tuple(d for d, v in values if abs(v - min_value) <= TIE_TOL)
    max_witnesses = tuple(d for d, v in values if abs(v - max_value) <= TIE_TOL)
    ranking = None
    if keep_ranking:
        ranking = tuple(sorted(values, key=lambda item: (-item[1], item[0])))
    return ExtremalScan(family, order, measure, len(values), min_value, max_value,
                        min_witnesses, max_witnesses, ranking)


def resolve_measure(text: str, *, log_base: float = 2.0) -> Callable[[Graph | OrientedGraph], float]:
    """Turn a measure id into a callable on graphs.

    Grammar: ``m1``, ``randic-index:<b>``, ``wiener``, ``hyper-wiener``,
    ``wk:<k>``, ``energy:<kind>``, ``quadratic:<kind>``,
    ``renyi:<kind>:<a>``, ``daroczy:<kind>:<a>``.  Orientation-requiring
    kinds applied to a plain graph use the smaller-to-larger orientation.
    """
    def plain(g: Graph | OrientedGraph) -> Graph:
        return g.underlying if isinstance(g, OrientedGraph) else g

    if text == "m1":
        return lambda g: first_zagreb(plain(g))
    if text == "wiener":
        return lambda g: wiener_index(plain(g))
    if text == "hyper-wiener":
        return lambda g: hyper_wiener_index(plain(g))
    if text.startswith("randic-index:"):
        beta = _parse_float(text.split(":", 1)[1], "exponent")
        return lambda g: general_randic_index(plain(g), beta)
    if text.startswith("wk:"):
        k = _parse_int(text.split(":", 1)[1], "moment order")
        return lambda g: distance_moment(plain(g), k)
    if text.startswith("energy:"):
        kind = as_kind(text.split(":", 1)[1])
        return lambda g: energy(kind, _oriented_target(kind, g))
    for prefix in ("quadratic:", "renyi:", "daroczy:"):
        if text.startswith(prefix):
            rest = text[len(prefix):]
            if prefix == "quadratic:":
                kind = as_kind(rest)
                return lambda g: quadratic_entropy(_distribution(kind, g, log_base))
            kind_text, sep, alpha_text = rest.rpartition(":")
            if not sep:
                raise ValueError(f"measure {text!r} needs an order, like {prefix}q:2")
            kind = as_kind(kind_text)
            alpha = _parse_float(alpha_text, "entropy order")
            if prefix == "renyi:":
                return lambda g: renyi_entropy(_distribution(kind, g, log_base), alpha)
            return lambda g: daroczy_entropy(_distribution(kind, g, log_base), alpha)
    raise ValueError(f"unknown measure {text!r}")


def _oriented_target(kind: MatrixKind, g: Graph | OrientedGraph) -> Graph | OrientedGraph:
    if kind.needs_orientation and not isinstance(g, OrientedGraph):
        return canonical_orientation(g)
    return g


def _distribution(kind: MatrixKind, g: Graph | OrientedGraph, log_base: float) -> ProbabilityVector:
    return probabilities_from_spectrum(spectrum_of(kind, _oriented_target(kind, g)), log_base)


def _parse_float(text: str, what: str) -> float:
    try:
        return float(text.strip())
    except ValueError:
        raise ValueError(f"bad {what} {text!r}") from None
