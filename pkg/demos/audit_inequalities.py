"""Audit the cross-entropy order inequalities, including where they break.

Three published inequality families relate the Renyi, Daroczy, and
quadratic entropies of one probability vector. Their constants embed
ln 2, which calibrates them to natural-log Renyi entropy, so this demo
audits in base e. The two-point uniform distribution at alpha = 1/2
lands exactly on the equality band of the first family; tilt the
distribution to (0.9, 0.1) and the same claim fails by a visible
margin. Failures are reported, never raised: the point of the audit is
to map where the claims hold, not to assume they do.
"""

import math

from graphent import audit_corpus, audit_theorem10, probability_vector


def show(tag, results):
    print(tag)
    for r in results:
        margin = "" if r.residual is None else f"  margin={r.residual:+.6f}"
        print(f"  {r.claim_id:<30} alpha={r.witness['alpha']:<4} {r.status}{margin}")
    print()


def main():
    grid = (0.5, 1.5, 2.0, 3.0)

    uniform = probability_vector((1.0, 1.0), origin="uniform-2", log_base=math.e)
    show("uniform two-point distribution", audit_theorem10(uniform, grid, log_base=math.e))

    tilted = probability_vector((0.9, 0.1), origin="tilted", log_base=math.e)
    show("tilted (0.9, 0.1) distribution", audit_theorem10(tilted, grid, log_base=math.e))

    # every spectrum of every graph on up to 4 vertices is a test point
    report = audit_corpus("all:4", log_base=math.e)
    print(f"corpus all:4, {report.total_graphs} graphs, "
          f"{len(report.claims)} retained records")
    counts = {}
    for claim_id, by in report.summary.items():
        for status, k in by.items():
            counts[status] = counts.get(status, 0) + k
    for status in ("pass", "fail", "equality-attained", "not-applicable"):
        print(f"  {status:<18} {counts.get(status, 0)}")


if __name__ == "__main__":
    main()
