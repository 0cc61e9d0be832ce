import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import to_nx
from extraconn import families as fam
from extraconn.graph import build_graph
from extraconn.serialize import (
    ParseError,
    format_graph,
    from_edge_list,
    from_graph6,
    parse_graph,
    read_graph,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
    write_graph,
)
from test_graph import graphs


def nx_g6(g):
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@pytest.mark.parametrize("spec", ["K4", "petersen", "hypercube:4", "cartesian:K2,K3,K3",
                                  "ring:Q3*4:identity", "hypercube:7"])
def test_graph6_matches_networkx(spec):
    g = fam.generate(spec)
    assert to_graph6(g) == nx_g6(g)
    assert from_graph6(to_graph6(g)).edges == g.edges


def test_known_graph6_strings(q4):
    assert to_graph6(fam.complete(4)) == "C~"
    assert to_graph6(q4) == "Or`HOm?OH@ABAG@C_POAJ"


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<C~").m == 6


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=12))
def test_round_trips(g):
    assert to_graph6(g) == nx_g6(g)
    assert from_graph6(to_graph6(g)).edges == g.edges
    assert from_edge_list(to_edge_list(g)).edges == g.edges
    assert parse_graph(format_graph(g, "el")).edges == g.edges
    assert parse_graph(format_graph(g, "g6")).edges == g.edges


def test_large_order_header():
    g = fam.cycle(100)
    code = to_graph6(g)
    assert code.startswith("~") and code == nx_g6(g)
    assert from_graph6(code).edges == g.edges


@pytest.mark.parametrize("text", ["", "C~~", "C\x01", "~~??"])
def test_bad_graph6(text):
    with pytest.raises(ParseError):
        from_graph6(text)


@pytest.mark.parametrize("text", ["", "3 2\n0 1\n", "3 1\n0 x\n", "3 1\n0 1 2\n"])
def test_bad_edge_list(text):
    with pytest.raises(ParseError):
        from_edge_list(text)


def test_edge_list_comments():
    g = from_edge_list("# triangle\n3 3\n0 1\n1 2 # inner\n0 2\n")
    assert g.m == 3


def test_multiple_graph6_lines_rejected_for_single_graph():
    with pytest.raises(ParseError):
        parse_graph("C~\nC~\n")
    assert len(read_graph6_lines(["C~", "", "# note", "Bw"])) == 2


def test_file_round_trip(tmp_path, petersen):
    for fmt in ("el", "g6"):
        path = tmp_path / f"p.{fmt}"
        write_graph(petersen, path, fmt)
        assert read_graph(path).edges == petersen.edges
    with pytest.raises(ValueError):
        format_graph(petersen, "dot")


def test_single_vertex():
    g = build_graph(1, [])
    assert from_graph6(to_graph6(g)).n == 1
