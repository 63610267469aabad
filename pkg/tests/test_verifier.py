import math

import pytest

from graphent import (
    AlphaNonPositiveError,
    Graph,
    GraphBundle,
    audit_corpus,
    audit_theorem10,
    canonical_orientation,
    check_bounds,
    check_equalities,
    check_traces,
    complete_graph,
    matching_graph,
    parse_corpus,
    path_graph,
    probability_vector,
    random_gnp,
    random_orientation,
    resolve_measure,
    scan_extremal,
    spectrum_of,
    star_graph,
    verify_corpus,
)
from graphent.report import render_json, verification_to_object


def _by_id(results):
    return {r.claim_id: r for r in results}


def test_triangle_has_eight_applicable_identity_claims():
    res = check_equalities(complete_graph(3), alphas=(2.0,))
    assert len(res) == 8
    assert all(r.status == "pass" for r in res)


def test_beta_exponents_add_identity_claims():
    res = check_equalities(complete_graph(3), alphas=(2.0,), betas=(-1.0, 1.0))
    ids = [r.claim_id for r in res]
    assert "identity.general-randic:-1" in ids
    assert "identity.general-randic:1" in ids
    assert len(res) == 10


def test_disconnected_graph_skips_distance_claims():
    res = _by_id(check_equalities(matching_graph(4), alphas=(2.0,)))
    assert res["identity.distance"].status == "not-applicable"
    assert res["identity.q"].status == "pass"


def test_edgeless_graph_skips_everything():
    res = check_equalities(Graph.from_edges(3, []), alphas=(2.0,))
    assert all(r.status == "not-applicable" for r in res)


def test_isolated_vertex_skips_normalized_claims_only():
    res = _by_id(check_equalities(Graph.from_edges(3, [(0, 1)]), alphas=(2.0,)))
    assert res["identity.normalized"].status == "not-applicable"
    assert res["identity.q"].status == "pass"
    assert res["identity.randic-incidence"].status == "pass"


def test_claim_records_carry_graph_descriptors():
    res = check_equalities(complete_graph(3), alphas=(2.0,))
    assert all(r.graph == "Bw" for r in res)


def test_trace_claims_on_assorted_graphs():
    for g in (complete_graph(5), path_graph(6), star_graph(6),
              Graph.from_edges(4, [(0, 1)]), matching_graph(6)):
        res = check_traces(g, betas=(-1.0, -0.5, 1.0))
        assert not [r for r in res if r.status == "fail"], g.edges


def test_trace_distance_needs_connectivity():
    res = _by_id(check_traces(matching_graph(4)))
    assert res["trace.distance.square"].status == "not-applicable"
    assert res["trace.skew.square"].status == "pass"


def test_bounds_hold_on_assorted_graphs():
    for g in (complete_graph(5), path_graph(6), star_graph(6),
              matching_graph(6), Graph.from_edges(5, [(0, 1), (1, 2), (0, 2)])):
        res = check_bounds(g)
        assert not [r for r in res if r.status == "fail"], g.edges


def test_bound_equalities_for_characterized_families():
    # complete graph: both normalized degree bounds and the clique bound
    res = _by_id(check_bounds(complete_graph(5)))
    assert res["bound.normalized.upper"].status == "equality-attained"
    assert res["bound.normalized.degree-lower"].status == "equality-attained"
    assert res["bound.normalized.degree-upper"].status == "equality-attained"
    assert res["bound.randic-incidence.upper"].status == "equality-attained"

    # perfect matching: normalized lower bound, degree-one scaled bound
    res = _by_id(check_bounds(matching_graph(6)))
    assert res["bound.normalized.lower"].status == "equality-attained"
    assert res["bound.randic.upper"].status == "equality-attained"

    # near-matching on odd order: matching plus one 2-edge path
    odd = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    res = _by_id(check_bounds(odd))
    assert res["bound.normalized.lower"].status == "equality-attained"

    # single edge: scaled incidence entropy hits zero
    res = _by_id(check_bounds(complete_graph(2)))
    assert res["bound.incidence.lower"].status == "equality-attained"
    assert res["bound.randic-incidence.lower"].status == "equality-attained"

    # bidegreed family for the lower degree-diagonal bound
    res = _by_id(check_bounds(path_graph(3)))
    assert res["bound.q.lower"].status == "equality-attained"


def test_bound_hypotheses_gate_applicability():
    res = _by_id(check_bounds(Graph.from_edges(3, [(0, 1)])))
    assert res["bound.normalized.lower"].status == "not-applicable"
    assert res["bound.randic-incidence.lower"].status == "not-applicable"
    assert res["bound.randic-incidence.upper"].status != "not-applicable"
    res = _by_id(check_bounds(Graph.from_edges(2, [])))
    assert all(r.status == "not-applicable" for r in res.values())


def test_skew_determinant_bound_attained_by_oriented_edge():
    res = _by_id(check_bounds(complete_graph(2)))
    claim = res["bound.skew.det-lower"]
    assert claim.status == "equality-attained"
    assert claim.residual == pytest.approx(0.0, abs=1e-12)


def test_bundle_caches_spectra():
    bundle = GraphBundle(complete_graph(4))
    first = bundle.spectrum("q")
    again = bundle.spectrum("q")
    assert first is again
    check_equalities(complete_graph(4), alphas=(2.0,), bundle=bundle)
    check_bounds(complete_graph(4), bundle=bundle)


def test_oriented_input_is_respected():
    og = canonical_orientation(path_graph(4))
    bundle = GraphBundle(og)
    assert bundle.oriented("canonical") is og


# cross-order inequality audit


def test_audit_boundary_case_uniform_two_atoms():
    pv = probability_vector((1.0, 1.0), origin="uniform-2", log_base=math.e)
    res = _by_id(audit_theorem10(pv, (0.5,), log_base=math.e))
    assert res["inequality.renyi-daroczy"].status == "equality-attained"
    assert abs(res["inequality.renyi-daroczy"].residual) < 1e-12
    assert res["inequality.daroczy-quadratic"].status == "pass"
    assert res["inequality.renyi-quadratic"].status == "pass"


def test_audit_reports_published_counterexample_without_raising():
    pv = probability_vector((0.9, 0.1), origin="stated", log_base=math.e)
    res = _by_id(audit_theorem10(pv, (0.5,), log_base=math.e))
    claim = res["inequality.renyi-daroczy"]
    assert claim.status == "fail"
    assert claim.residual == pytest.approx(-0.0267, abs=5e-4)


def test_audit_full_grid_statuses():
    pv = probability_vector((0.6, 0.3, 0.1), log_base=math.e)
    res = audit_theorem10(pv, (0.5, 1.0, 1.5, 2.0, 3.0), log_base=math.e)
    assert len(res) == 15
    at_one = [r for r in res if r.witness and r.witness.get("alpha") == 1.0]
    assert len(at_one) == 3
    assert all(r.status == "not-applicable" for r in at_one)


def test_audit_rejects_nonpositive_orders():
    pv = probability_vector((0.5, 0.5))
    with pytest.raises(AlphaNonPositiveError):
        audit_theorem10(pv, (0.5, -1.0))


def test_audit_corpus_is_deterministic():
    a = audit_corpus("all:3", log_base=math.e)
    b = audit_corpus("all:3", log_base=math.e)
    assert a.total_claims == b.total_claims
    assert [c.residual for c in a.claims] == [c.residual for c in b.claims]
    assert a.summary == b.summary


# corpora


def test_parse_corpus_totals():
    assert parse_corpus("all:3").total == 11
    assert parse_corpus("all:5").total == 1099
    assert parse_corpus("trees:4").total == 16
    assert parse_corpus("gnp:6,0.5,20").total == 20


def test_parse_corpus_rejects_bad_text():
    for bad in ("all:", "all:9", "trees:1", "trees:10", "gnp:5,0.5",
                "gnp:5,1.5,10", "gnp:0,0.5,10", "gnp:5,0.5,0", "mystery:4", "all"):
        with pytest.raises(ValueError):
            parse_corpus(bad)


def test_corpus_random_access_matches_iteration():
    spec = parse_corpus("all:4")
    streamed = [g.edges for g in spec.iterate(0, spec.total)]
    direct = [spec.graph_at(i).edges for i in range(spec.total)]
    assert streamed == direct
    spec = parse_corpus("gnp:6,0.4,12")
    streamed = [g.edges for g in spec.iterate(0, 12, seed=9)]
    direct = [spec.graph_at(i, seed=9).edges for i in range(12)]
    assert streamed == direct


def test_gnp_corpus_seed_changes_samples():
    spec = parse_corpus("gnp:8,0.5,6")
    a = [g.edges for g in spec.iterate(0, 6, seed=1)]
    b = [g.edges for g in spec.iterate(0, 6, seed=2)]
    assert a != b


def test_verify_corpus_small_sweep_counts():
    report = verify_corpus("all:3", alphas=(2.0,))
    assert report.total_graphs == 11
    assert report.failure_count == 0
    assert report.ok
    assert report.summary["identity.q"]["pass"] + \
        report.summary["identity.q"]["not-applicable"] == 11


def test_verify_corpus_rejects_unknown_check():
    with pytest.raises(ValueError):
        verify_corpus("all:3", checks=("equalities", "spectra"))


def test_verify_corpus_worker_reports_are_byte_identical():
    kwargs = dict(alphas=(0.5, 2.0), betas=(-1.0,), seed=3)
    solo = verify_corpus("all:4", workers=1, **kwargs)
    duo = verify_corpus("all:4", workers=2, **kwargs)
    assert render_json(verification_to_object(solo)) == \
        render_json(verification_to_object(duo))


def test_random_graph_sweep_has_no_failures():
    """200 seeded random graphs on 7..16 vertices, three entropy orders."""
    checked = 0
    for i in range(200):
        n = 7 + i % 10
        p = (0.25, 0.5, 0.75)[i % 3]
        g = random_gnp(n, p, seed=1000 + i)
        for res in (check_equalities(g, alphas=(0.5, 2.0, 3.0), seed=i),
                    check_traces(g, seed=i), check_bounds(g, seed=i)):
            bad = [r for r in res if r.status == "fail"]
            assert not bad, (n, p, i, [(r.claim_id, r.witness) for r in bad])
        checked += 1
    assert checked == 200


def test_tree_skew_entropy_ignores_orientation():
    """All orientations of a tree share one skew spectrum."""
    from graphent import probabilities_from_spectrum, quadratic_entropy

    tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    reference = quadratic_entropy(
        probabilities_from_spectrum(spectrum_of("skew", canonical_orientation(tree))))
    for seed in range(20):
        og = random_orientation(tree, seed)
        value = quadratic_entropy(
            probabilities_from_spectrum(spectrum_of("skew", og)))
        assert value == pytest.approx(reference, abs=1e-12)


# extremal scans


def test_scan_tree_zagreb_extremes():
    from graphent import encode_graph6

    scan = scan_extremal("trees", 5, "m1")
    # among trees the star maximizes and the path minimizes the degree square sum
    assert scan.max_value == pytest.approx(20.0)  # S5 degrees 4,1,1,1,1
    assert scan.min_value == pytest.approx(14.0)  # P5 degrees 1,2,2,2,1
    assert len(scan.max_witnesses) == 5
    assert encode_graph6(star_graph(5)).decode() in scan.max_witnesses


def test_scan_wiener_extremes_swap():
    scan = scan_extremal("trees", 5, "wiener")
    assert scan.min_witnesses == scan_extremal("trees", 5, "m1").max_witnesses
    assert scan.max_value == pytest.approx(10.0)  # P5 half-pair distance sum


def test_scan_entropy_measure_and_ranking():
    scan = scan_extremal("trees", 5, "quadratic:incidence", keep_ranking=True)
    assert scan.count == 125
    assert len(scan.ranking) == 125
    values = [v for _, v in scan.ranking]
    assert values == sorted(values, reverse=True)
    assert len(scan.min_witnesses) == 5   # the labeled stars
    assert len(scan.max_witnesses) == 60  # the labeled paths


def test_scan_oriented_trees_skew_measure():
    scan = scan_extremal("oriented-trees", 5, "energy:skew")
    assert scan.count == 125
    assert scan.min_value > 0


def test_scan_all_graphs_family():
    scan = scan_extremal("all-graphs", 3, "m1")
    assert scan.count == 8
    assert scan.min_value == 0.0
    assert scan.max_value == pytest.approx(12.0)


def test_resolve_measure_grammar():
    fn = resolve_measure("renyi:q:2")
    assert fn(complete_graph(3)) == pytest.approx(1.0, abs=1e-9)
    # K3 general-randic:1 spectrum is (8,-4,-4) -> p=(1/2,1/4,1/4)
    fn = resolve_measure("daroczy:general-randic:1:2")
    assert fn(complete_graph(3)) == pytest.approx(1.25, abs=1e-9)
    fn = resolve_measure("randic-index:-1")
    assert fn(path_graph(4)) == pytest.approx(1.25)
    fn = resolve_measure("wk:2")
    assert fn(path_graph(3)) == pytest.approx(3.0)
    for bad in ("renyi:q", "wk:x", "nope", "energy:laplacian"):
        with pytest.raises(ValueError):
            resolve_measure(bad)


def test_scan_rejects_unknown_family():
    with pytest.raises(ValueError):
        scan_extremal("forests", 4, "m1")
