"""Graph corpora: the exhaustive small-graph list and the builtin named sets.

The list of all connected graphs on at most 8 vertices ships as
``data/small8.g6`` (one graph6 line per isomorphism class).  It can be
rebuilt with :func:`connected_graphs_upto`, which starts from the networkx
graph atlas (every graph on up to 7 vertices) and obtains the 8-vertex
classes by attaching a new vertex to each connected 7-vertex graph in all
possible ways; every connected graph has a vertex whose removal leaves it
connected, so nothing is missed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .families import FamilySpec, generate, parse_spec
from .graph import Graph
from .serialize import from_edge_list, read_graph6_lines

# number of connected graphs on n = 1..8 vertices, up to isomorphism
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


def _to_nx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def connected_graphs_upto(n_max: int = 8) -> list[Graph]:
    """All connected graphs with ``1 <= n <= n_max`` (``n_max <= 8``), one per
    isomorphism class, ordered by (order, size, graph6)."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    from .serialize import to_graph6

    if not 1 <= n_max <= 8:
        raise ValueError("n_max must be in 1..8")
    out: dict[int, list[Graph]] = {n: [] for n in range(1, n_max + 1)}
    for a in graph_atlas_g():
        k = a.number_of_nodes()
        if 1 <= k <= min(n_max, 7) and nx.is_connected(a):
            out[k].append(Graph(k, a.edges()))
    if n_max == 8:
        buckets: dict[tuple, list] = {}
        for base in out[7]:
            for nb in range(1, 1 << 7):
                g = Graph(8, list(base.edges) + [(u, 7) for u in range(7) if nb >> u & 1])
                h = _to_nx(g)
                key = (g.m, tuple(sorted(g.degrees)), nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                group = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, other) for other in group):
                    group.append(h)
                    out[8].append(g)
    result = []
    for n in range(1, n_max + 1):
        result.extend(sorted(out[n], key=lambda g: (g.m, to_graph6(g))))
    return result


def load_small8(max_order: int = 8) -> list[Graph]:
    """The shipped exhaustive list, optionally restricted to small orders."""
    text = resources.files("extraconn").joinpath("data/small8.g6").read_text()
    graphs = read_graph6_lines(text.splitlines())
    return [g for g in graphs if g.n <= max_order]


# -- named corpora ----------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    """A graph plus the text that names it in reports."""

    name: str
    graph: Graph
    spec: FamilySpec | None = None

    @property
    def transitive(self) -> bool:
        return self.spec is not None and self.spec.transitive


PAPER_EXACT = (
    "K4", "K3_3", "C4", "C5", "petersen", "hypercube:4", "cartesian:K2,K3,K3",
    "remark25", "remark27:2", "remark27:3", "cartesian:K4,K4", "torus:4,4",
    "star:3,2", "cycle:8", "hypercube:3", "circulant:8,2",
)

TORUS = ("torus:3,3", "torus:3,4", "torus:4,4", "torus:3,5", "torus:4,5", "torus:3,3,3")


def _spec_entries(texts) -> list[CorpusEntry]:
    entries = []
    for t in texts:
        spec = parse_spec(t)
        entries.append(CorpusEntry(spec.to_text(), generate(spec), spec))
    return entries


def random_regular_specs(count: int = 200, seed: int = 2024) -> list[str]:
    """Seeded random regular graphs with degree 3, 4 or 5 on at most 14 vertices."""
    import random

    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        k = rng.choice((3, 4, 5))
        n = rng.choice([v for v in range(k + 1, 15) if (v * k) % 2 == 0])
        specs.append(f"randreg:{n},{k},seed={rng.randrange(10**6)}")
    return specs


@lru_cache(maxsize=None)
def _cubic_specs(count: int, seed: int, super_only: bool) -> tuple[str, ...]:
    import random

    from .engine import is_super_lambda_h_def

    rng = random.Random(seed)
    specs = []
    while len(specs) < count:
        text = f"randreg:{rng.choice((10, 12, 14, 16))},3,seed={rng.randrange(10**6)}"
        if not super_only or is_super_lambda_h_def(generate(text), 1):
            specs.append(text)
    return tuple(specs)


def cubic_specs(count: int = 50, seed: int = 7, super_only: bool = True) -> list[str]:
    """Seeded random 3-regular graphs of order 10..16.

    With ``super_only`` the draws are filtered to the super-lambda' ones
    (girth at least 5 is necessary, so only a few percent qualify) until
    ``count`` have been collected."""
    return list(_cubic_specs(count, seed, super_only))


def builtin_corpus(tag: str, max_order: int = 8) -> list[CorpusEntry]:
    if tag == "paper-exact":
        return _spec_entries(PAPER_EXACT)
    if tag == "torus":
        return _spec_entries(TORUS)
    if tag == "cubic":
        return _spec_entries(cubic_specs())
    if tag == "small8":
        from .serialize import to_graph6

        small = [CorpusEntry("g6:" + to_graph6(g), g) for g in load_small8(max_order)]
        return small + _spec_entries(random_regular_specs())
    raise KeyError(tag)


BUILTIN_TAGS = ("paper-exact", "small8", "cubic", "torus")


def load_corpus_file(path: str | Path) -> list[CorpusEntry]:
    """``.g6`` files hold one graph6 line per graph, ``.el`` files a single
    edge list; any other file is read as one family spec per line."""
    from .serialize import to_graph6

    path = Path(path)
    text = path.read_text()
    if path.suffix == ".g6":
        return [CorpusEntry("g6:" + to_graph6(g), g) for g in read_graph6_lines(text.splitlines())]
    if path.suffix == ".el":
        return [CorpusEntry(path.name, from_edge_list(text))]
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    return _spec_entries([ln for ln in lines if ln])
