from collections import Counter

import networkx as nx
import pytest

from conftest import to_nx
from extraconn.corpus import (
    BUILTIN_TAGS,
    CONNECTED_COUNTS,
    builtin_corpus,
    connected_graphs_upto,
    cubic_specs,
    load_corpus_file,
    load_small8,
    random_regular_specs,
)
from extraconn.engine import is_super_lambda_h_def
from extraconn.families import generate, parse_spec
from extraconn.serialize import to_graph6


@pytest.fixture(scope="module")
def small8():
    return load_small8()


def test_shipped_counts(small8):
    counts = Counter(g.n for g in small8)
    assert tuple(counts[n] for n in range(1, 9)) == CONNECTED_COUNTS


def test_shipped_graphs_connected_and_distinct(small8):
    assert all(g.is_connected() for g in small8)
    codes = [to_graph6(g) for g in small8]
    assert len(set(codes)) == len(codes)


def test_order_eight_pairwise_non_isomorphic(small8):
    buckets = {}
    for g in small8:
        if g.n == 8:
            h = to_nx(g)
            key = (g.m, tuple(sorted(g.degrees)), nx.weisfeiler_lehman_graph_hash(h))
            buckets.setdefault(key, []).append(h)
    for group in buckets.values():
        for i, a in enumerate(group):
            assert not any(nx.is_isomorphic(a, b) for b in group[i + 1:])


def test_atlas_regeneration_matches_shipped(small8):
    fresh = sorted(to_graph6(g) for g in connected_graphs_upto(6))
    shipped = sorted(to_graph6(g) for g in small8 if g.n <= 6)
    assert fresh == shipped


def test_max_order_filter():
    assert len(load_small8(5)) == sum(CONNECTED_COUNTS[:5])


def test_seeded_spec_lists():
    regs = random_regular_specs()
    assert len(regs) == 200 and regs == random_regular_specs()
    for text in regs:
        n, k = parse_spec(text).params
        assert k in (3, 4, 5) and n <= 14
    cubic = cubic_specs()
    assert len(cubic) == 50
    assert all(10 <= parse_spec(t).params[0] <= 16 and parse_spec(t).params[1] == 3 for t in cubic)
    assert all(is_super_lambda_h_def(generate(t), 1) for t in cubic)
    assert len(cubic_specs(20, super_only=False)) == 20


@pytest.mark.parametrize("tag", ["paper-exact", "torus", "cubic"])
def test_builtin_corpora_build(tag):
    entries = builtin_corpus(tag)
    assert entries and all(e.graph.is_connected() for e in entries)


def test_unknown_tag():
    assert "small8" in BUILTIN_TAGS
    with pytest.raises(KeyError):
        builtin_corpus("nope")


def test_corpus_files(tmp_path):
    g6 = tmp_path / "list.g6"
    g6.write_text("C~\nBw\n")
    assert [e.graph.m for e in load_corpus_file(g6)] == [6, 3]
    el = tmp_path / "tri.el"
    el.write_text("3 3\n0 1\n1 2\n0 2\n")
    assert load_corpus_file(el)[0].graph.m == 3
    specs = tmp_path / "specs.txt"
    specs.write_text("# families\nhypercube:3\n\npetersen  # cubic\n")
    entries = load_corpus_file(specs)
    assert [e.graph.n for e in entries] == [8, 10]
    assert all(e.transitive for e in entries)
