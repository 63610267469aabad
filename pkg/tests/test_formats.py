import pytest

from graphent import (
    ContradictoryArcsError,
    MalformedTokenError,
    TrailingBytesError,
    TruncatedStreamError,
    encode_graph6,
    enumerate_labeled_graphs,
    parse_arc_list,
    parse_edge_list,
    parse_graph6,
)
from graphent.errors import ByteOutOfRangeError, LoopEdgeError


def test_edge_list_with_header():
    g = parse_edge_list("n 5\n0 1\n2 3\n")
    assert g.n == 5 and g.edges == ((0, 1), (2, 3))


def test_edge_list_without_header_uses_max_index():
    g = parse_edge_list("0 1\n1 4\n")
    assert g.n == 5


def test_edge_list_header_alone_gives_edgeless():
    g = parse_edge_list("n 3\n")
    assert g.n == 3 and g.m == 0


def test_edge_list_rejects_garbage():
    with pytest.raises(MalformedTokenError):
        parse_edge_list("0 x\n")
    with pytest.raises(MalformedTokenError):
        parse_edge_list("0 1 2\n")
    with pytest.raises(LoopEdgeError):
        parse_edge_list("2 2\n")


def test_arc_list_keeps_direction():
    og = parse_arc_list("1 0\n1 2\n")
    assert og.arcs == ((1, 0), (1, 2))
    assert og.underlying.edges == ((0, 1), (1, 2))


def test_arc_list_rejects_both_directions():
    with pytest.raises(ContradictoryArcsError):
        parse_arc_list("0 1\n1 0\n")


def test_graph6_known_two_vertex_records():
    # 'A' encodes order 2; the payload bit decides the single possible edge
    g = parse_graph6(b"A_")
    assert (g.n, g.edges) == (2, ((0, 1),))
    g = parse_graph6(b"A?")
    assert (g.n, g.edges) == (2, ())


def test_graph6_accepts_str_and_one_newline():
    assert parse_graph6("A_").edges == ((0, 1),)
    assert parse_graph6(b"A_\n").edges == ((0, 1),)


def test_graph6_trailing_bytes_rejected():
    from graphent import GraphInputError

    with pytest.raises(TrailingBytesError):
        parse_graph6(b"A_X")
    with pytest.raises(GraphInputError):
        parse_graph6(b"A_\n\n")


def test_graph6_truncated_rejected():
    with pytest.raises(TruncatedStreamError):
        parse_graph6(b"D")


def test_graph6_byte_range_checked():
    with pytest.raises(ByteOutOfRangeError):
        parse_graph6(b"A\x1f")


def test_graph6_round_trip_all_graphs_up_to_five():
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            back = parse_graph6(encode_graph6(g))
            assert back.n == g.n and back.edges == g.edges


def test_encode_rejects_large_orders():
    from graphent import Graph

    with pytest.raises(ValueError):
        encode_graph6(Graph.from_edges(63, []))
