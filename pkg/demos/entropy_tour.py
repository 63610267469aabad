"""A tour of the three spectral entropies on small graphs.

Every symmetric matrix attached to a graph has a spectrum; normalizing
the squared spectrum gives a probability vector, and that vector feeds
three functionals: a quadratic entropy, a Renyi family, and a Daroczy
family. For several matrix kinds those values also have closed forms in
classical graph invariants, which is what makes them cheap to verify.
This script computes both routes side by side.
"""

from graphent import (
    closed_form,
    complete_graph,
    daroczy_entropy,
    path_graph,
    probabilities_from_spectrum,
    quadratic_entropy,
    renyi_entropy,
    spectrum_of,
    star_graph,
)

ALPHAS = (0.5, 2.0, 3.0)


def show(name, g, kind):
    p = probabilities_from_spectrum(spectrum_of(kind, g))
    quad, _, _ = closed_form(kind, g, 2.0)
    print(f"{name}  matrix={kind}")
    print(f"  quadratic  direct={quadratic_entropy(p):.12f}  closed={quad:.12f}")
    for alpha in ALPHAS:
        _, renyi, daroczy = closed_form(kind, g, alpha)
        print(f"  alpha={alpha:<4} renyi   direct={renyi_entropy(p, alpha):.12f}  closed={renyi:.12f}")
        print(f"            daroczy direct={daroczy_entropy(p, alpha):.12f}  closed={daroczy:.12f}")
    print()


def main():
    show("K3  (triangle)", complete_graph(3), "q")
    show("S4  (star)", star_graph(4), "norm-l")
    show("P3  (path)", path_graph(3), "distance")
    show("K2  (one edge)", complete_graph(2), "incidence")

    # the closed forms depend only on degree sums and distance moments,
    # never on the eigenvalues themselves: that is the point
    g = star_graph(6)
    for kind in ("q", "randic", "randic-incidence", "general-randic:-1"):
        p = probabilities_from_spectrum(spectrum_of(kind, g))
        direct = quadratic_entropy(p)
        quad, _, _ = closed_form(kind, g, 2.0)
        print(f"S6 {kind:>18}: direct {direct:.12f}  closed {quad:.12f}  "
              f"gap {abs(direct - quad):.2e}")


if __name__ == "__main__":
    main()
