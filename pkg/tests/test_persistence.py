import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extraconn import families as fam
from extraconn.budget import BudgetExceeded
from extraconn.corpus import connected_graphs_upto
from extraconn.engine import DisconnectedInput, is_super_lambda_h_def, lambda_value
from extraconn.graph import xi
from extraconn.persistence import (
    SHORTCUT_BOUND,
    SHORTCUT_NO_NEXT_CUT,
    NotSuper,
    PersistenceResult,
    cut_table,
    rho_at_least,
    rho_h,
    rho_h_bruteforce,
    super_after_faults,
)
from test_graph import graphs


def super_small(h, max_n=7):
    out = []
    for g in connected_graphs_upto(max_n):
        try:
            if is_super_lambda_h_def(g, h):
                out.append(g)
        except Exception:
            continue
    return out


# -- worked values -------------------------------------------------------------------------


@pytest.mark.parametrize(
    "spec, rho",
    [("K4", 2), ("K3_3", 2), ("C4", 1), ("C5", 1), ("petersen", 1), ("hypercube:4", 2),
     ("remark25", 0), ("remark27:2", 1), ("remark27:3", 2), ("cartesian:K2,K3,K3", 1),
     ("torus:4,4", 2)],
)
def test_rho_values(spec, rho):
    assert rho_h(fam.generate(spec), 1).rho == rho


def test_q4_witness(q4):
    res = rho_h(q4, 1)
    assert res.witness == ((0, 1), (6, 7), (10, 11))
    assert not res.ceiling_reached and res.shortcut_used == SHORTCUT_BOUND
    assert not is_super_lambda_h_def(q4.without_edges(res.witness), 1)


def test_q4_dimension_faults(q4):
    fault = [(1, 9), (2, 10), (4, 12)]
    gf = q4.without_edges(fault)
    assert lambda_value(gf, 2) == 5 == xi(gf)
    assert not super_after_faults(q4, fault, 1)


def test_h_graph_two_edge_fault(h_graph):
    res = rho_h(h_graph, 1)
    assert res.rho == 1 and len(res.witness) == 2
    gf = h_graph.without_edges(res.witness)
    assert lambda_value(gf, 2) == 7 == xi(gf)


def test_single_edge_breaks_ten_vertex_graph(ten_vertex):
    res = rho_h(ten_vertex, 1)
    assert res.witness == ((8, 9),)


def test_ceiling_with_shortcut():
    # K4 has no 2-extra cut, so the bound delta - 1 is immediate
    res = rho_h(fam.complete(4), 1)
    assert res.ceiling_reached and res.witness is None
    assert res.shortcut_used == SHORTCUT_NO_NEXT_CUT and res.stats["fault_sets"] == 0


def test_min_degree_one_flag():
    path = fam.generate("star:2,1")  # hub plus two leaves
    res = rho_h(path, 0)
    assert res.rho == 0 and "min_degree_one" in res.flags


def test_not_super_rejected():
    with pytest.raises(NotSuper):
        rho_h(fam.cycle(8), 1)
    with pytest.raises(NotSuper):
        rho_h(fam.star_composite(3, 2), 2)
    with pytest.raises(NotSuper):
        rho_h_bruteforce(fam.cycle(8), 1)


def test_disconnected_rejected():
    g = fam.matching_join(fam.cycle(3), fam.cycle(3)).without_edges([(0, 3), (1, 4), (2, 5)])
    with pytest.raises(DisconnectedInput):
        rho_h(g, 1)


def test_result_invariants():
    with pytest.raises(ValueError):
        PersistenceResult(1, 1, ((0, 1),), False)
    with pytest.raises(ValueError):
        PersistenceResult(1, 1, None, False)
    d = PersistenceResult(1, 0, ((0, 1),), False).as_dict()
    assert d["witness"] == [[0, 1]] and d["rho"] == 0


def test_bruteforce_cap(q4):
    with pytest.raises(BudgetExceeded):
        rho_h_bruteforce(q4, 1, max_fault_sets=10)


# -- variants agree ---------------------------------------------------------------------------


@pytest.mark.parametrize("spec", ["hypercube:4", "cartesian:K2,K3,K3", "torus:4,4", "remark27:3"])
def test_variants_agree(spec):
    g = fam.generate(spec)
    base = rho_h(g, 1)
    for kw in ({"prune": False}, {"use_table": False}, {"workers": 2}):
        other = rho_h(g, 1, **kw)
        assert (other.rho, other.witness) == (base.rho, base.witness)


def test_pruning_skips_most_fault_sets(q4):
    pruned = rho_h(q4, 1).stats
    plain = rho_h(q4, 1, prune=False).stats
    assert pruned["full_checks"] < plain["full_checks"]


def test_cut_table_entries_are_cuts(q4):
    table = cut_table(q4)
    assert table
    for entry in table[:20]:
        assert entry[0] >= lambda_value(q4, 2)


@pytest.mark.parametrize("h", [0, 1, 2])
def test_matches_bruteforce_on_small_graphs(h):
    for g in super_small(h, 6):
        fast, slow = rho_h(g, h), rho_h_bruteforce(g, h)
        assert (fast.rho, fast.witness) == (slow.rho, slow.witness)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 4]), st.integers(0, 10_000))
def test_matches_bruteforce_on_random_regular(k, seed):
    g = fam.random_regular(8, k, seed)
    if not is_super_lambda_h_def(g, 1):
        return
    fast, slow = rho_h(g, 1), rho_h_bruteforce(g, 1)
    assert (fast.rho, fast.witness) == (slow.rho, slow.witness)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=4, max_n=8, connected=True), st.data())
def test_super_after_faults_matches_definition(g, data):
    if g.min_degree < 2 or not is_super_lambda_h_def(g, 1):
        return
    size = data.draw(st.integers(1, g.min_degree - 1))
    idx = data.draw(st.lists(st.integers(0, g.m - 1), min_size=size, max_size=size, unique=True))
    fault = [g.edges[i] for i in idx]
    gf = g.without_edges(fault)
    try:
        expected = bool(is_super_lambda_h_def(gf, 1))
    except Exception:
        expected = False
    assert super_after_faults(g, fault, 1) == expected


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=4, max_n=8, connected=True), st.integers(0, 2))
def test_rho_below_min_degree(g, h):
    try:
        ok = is_super_lambda_h_def(g, h)
    except Exception:
        return
    if ok:
        res = rho_h(g, h)
        assert 0 <= res.rho <= max(g.min_degree - 1, 0)


def test_bounded_search_is_a_lower_bound(q4):
    partial = rho_h(q4, 1, max_size=1)
    assert partial.rho == 1 and partial.witness is None and "lower_bound" in partial.flags
    assert not partial.ceiling_reached
    assert rho_h(q4, 1, max_size=3).witness == rho_h(q4, 1).witness


@pytest.mark.parametrize("spec", ["hypercube:4", "remark25", "torus:4,4", "K4"])
def test_rho_at_least_matches_exact_value(spec):
    g = fam.generate(spec)
    exact = rho_h(g, 1).rho
    for m in range(0, g.min_degree + 1):
        assert rho_at_least(g, 1, m) == (exact >= m)
