import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx
from extraconn import families as fam
from extraconn.budget import BudgetExceeded
from extraconn.corpus import connected_graphs_upto
from extraconn.engine import (
    DisconnectedInput,
    NotExtraConnected,
    full_report,
    has_extra_cut,
    is_lambda_h_optimal,
    is_super_lambda_h_def,
    is_super_lambda_h_fast,
    lambda_h,
    lambda_h_bipartition,
    lambda_h_oracle,
    lambda_value,
    report_level,
)
from extraconn.graph import boundary, build_graph, components_within, is_connected_induced, xi, xi_h
from test_graph import graphs

SMALL = connected_graphs_upto(7)


def _minus(g, edges):
    h = to_nx(g)
    h.remove_edges_from(edges)
    return h


# -- worked examples ------------------------------------------------------------------------


def test_q4_levels(q4):
    assert [lambda_value(q4, h) for h in range(3)] == [4, 6, 8]
    assert xi_h(q4, 2) == 8 and is_lambda_h_optimal(q4, 2)
    assert not is_super_lambda_h_def(q4, 2)
    assert not is_super_lambda_h_fast(q4, 2)


def test_q4_violation_is_a_genuine_minimum_cut(q4):
    r = report_level(q4, 2)
    assert r.optimal and not r.super and r.violation is not None
    x = r.violation.vertices
    cut = boundary(q4, x)
    assert len(cut) == 8
    comps = [len(c) for c in nx.connected_components(_minus(q4, cut))]
    assert len(comps) >= 2 and min(comps) > 2 and 3 not in comps


def test_q4_half_cube_is_a_minimum_two_extra_cut(q4):
    x = [v for v in range(16) if not v & 8]
    assert is_connected_induced(q4, x) and len(boundary(q4, x)) == lambda_value(q4, 2)


def test_petersen_and_k33():
    p = fam.petersen()
    assert lambda_value(p, 2) == 5
    k33 = fam.complete_bipartite(3, 3)
    assert lambda_value(k33, 2) == 5 and is_super_lambda_h_def(k33, 2)


def test_h_graph(h_graph):
    assert lambda_value(h_graph, 2) == 9 and xi(h_graph) == 8
    assert is_super_lambda_h_def(h_graph, 1)


def test_figure_graph_levels(ten_vertex):
    assert is_super_lambda_h_def(ten_vertex, 1)
    assert (lambda_value(ten_vertex, 2), xi_h(ten_vertex, 2)) == (4, 5)
    g = fam.remark27_graph(3)
    assert [lambda_value(g, h) for h in range(3)] == [3, 4, 7]


def test_long_cycle_not_super():
    c8 = fam.cycle(8)
    check = is_super_lambda_h_def(c8, 1)
    assert not check and check.reason == "not_isolating"
    assert check.certificate.boundary_size == 2


def test_star_composite_has_no_level():
    g = fam.star_composite(3, 2)
    assert lambda_h(g, 2) is None
    r = report_level(g, 2)
    assert not r.exists and r.all_min_fragments_count == 0
    with pytest.raises(NotExtraConnected):
        is_super_lambda_h_def(g, 2)
    with pytest.raises(NotExtraConnected):
        is_super_lambda_h_fast(g, 2)


def test_disconnected_input_reports_components():
    g = build_graph(5, [(0, 1), (2, 3), (3, 4)])
    with pytest.raises(DisconnectedInput) as info:
        lambda_h(g, 1)
    assert sorted(info.value.component_sizes) == [2, 3]


def test_witness_certifies_value(q4, h_graph, petersen):
    for g in (q4, h_graph, petersen):
        for h in range(3):
            d, frag = lambda_h(g, h)
            assert frag.boundary_size == d == len(boundary(g, frag.vertices))
            comps = [len(c) for c in nx.connected_components(_minus(g, frag.boundary))]
            assert len(comps) >= 2 and min(comps) > h


def test_min_cut_counts():
    assert report_level(fam.cycle(6), 0).all_min_fragments_count == 15
    assert report_level(fam.complete(4), 0).all_min_fragments_count == 4


def test_oracle_budget(q4):
    with pytest.raises(BudgetExceeded):
        lambda_h_oracle(q4, 2, max_subsets=100)


# -- oracle agreement ------------------------------------------------------------------------


@pytest.mark.parametrize("h", [0, 1, 2])
def test_engine_matches_bipartition_oracle(h):
    for g in SMALL:
        assert lambda_value(g, h) == lambda_h_bipartition(g, h)


@pytest.mark.parametrize("h", [0, 1, 2])
def test_engine_matches_subset_oracle_up_to_six(h):
    for g in SMALL:
        if g.n <= 6:
            assert lambda_value(g, h) == lambda_h_oracle(g, h)


def test_level_zero_is_edge_connectivity():
    for g in SMALL[1:]:
        assert lambda_value(g, 0) == nx.edge_connectivity(to_nx(g))


# -- structural properties -------------------------------------------------------------------


def connected_graphs(max_n=8):
    return graphs(min_n=2, max_n=max_n, connected=True)


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_levels_non_decreasing_and_whitney(g):
    reports = full_report(g, 2)
    values = [r.lambda_h for r in reports if r.exists]
    assert values == sorted(values)
    assert nx.node_connectivity(to_nx(g)) <= lambda_value(g, 0) <= g.min_degree


def _is_star_composite(g, k):
    if k < 1 or (g.n - 1) % k:
        return False
    return nx.is_isomorphic(to_nx(g), to_nx(fam.star_composite((g.n - 1) // k, k)))


@settings(max_examples=80, deadline=None)
@given(connected_graphs(), st.integers(0, 3))
def test_existence_bound(g, h):
    delta = g.min_degree
    if h > delta or g.n < 2 * (delta + 1) or _is_star_composite(g, delta):
        return
    assert has_extra_cut(g, h)
    assert lambda_value(g, h) <= xi_h(g, h)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.integers(0, 2))
def test_fast_and_definition_agree_when_bounded(g, h):
    if not has_extra_cut(g, h) or lambda_value(g, h) > xi_h(g, h):
        return
    assert is_super_lambda_h_fast(g, h) == bool(is_super_lambda_h_def(g, h))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.integers(0, 2))
def test_report_consistency(g, h):
    r = report_level(g, h)
    assert r.exists == has_extra_cut(g, h)
    if r.exists:
        assert r.super == bool(is_super_lambda_h_def(g, h))
        assert r.all_min_fragments_count >= 1
        assert (r.violation is None) or not r.super


def test_fast_and_definition_agree_on_small_graphs():
    for g in SMALL:
        for h in range(3):
            if has_extra_cut(g, h) and lambda_value(g, h) <= xi_h(g, h):
                assert is_super_lambda_h_fast(g, h) == bool(is_super_lambda_h_def(g, h))


def test_components_of_witness_complement(q4):
    d, frag = lambda_h(q4, 2)
    rest = [v for v in range(16) if v not in frag.vertices]
    assert sorted(len(c) for c in components_within(q4, rest)) == sorted(frag.comp_sizes_complement)
