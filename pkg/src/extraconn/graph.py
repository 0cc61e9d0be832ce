"""Immutable simple graphs over bit rows, plus the set/boundary/connectivity
primitives the searches are built on.

Vertex sets are plain Python ints used as bitsets (bit ``v`` set means vertex
``v`` is a member).  :class:`VertexSet` is the public, typed wrapper; the hot
loops work on raw masks.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 128

Edge = tuple[int, int]
EdgeSet = tuple[Edge, ...]


class GraphError(ValueError):
    """Base class for graph-core errors."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class TooLarge(GraphError):
    pass


class EmptySide(GraphError):
    pass


class NotAnEdge(GraphError):
    pass


class NoEdges(GraphError):
    pass


class BadRange(GraphError):
    pass


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is the canonical sorted tuple of pairs ``(u, v)`` with ``u < v``;
    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask.
    """

    __slots__ = ("n", "edges", "adj", "_deg", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 1:
            raise VertexOutOfRange(f"graph needs at least one vertex, got n={n}")
        if n > MAX_VERTICES:
            raise TooLarge(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
        adj = [0] * n
        seen = set()
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise DuplicateEdge(f"edge ({u}, {v}) listed twice")
            seen.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(n, tuple(sorted(seen)), tuple(adj))

    def _init(self, n: int, edges: EdgeSet, adj: tuple[int, ...]) -> None:
        self.n = n
        self.edges = edges
        self.adj = adj
        self._deg = tuple(a.bit_count() for a in adj)
        self._index = None

    @classmethod
    def _trusted(cls, n: int, edges: EdgeSet, adj: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g._init(n, edges, adj)
        return g

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def degree(self, v: int) -> int:
        return self._deg[v]

    @property
    def min_degree(self) -> int:
        return min(self._deg)

    @property
    def max_degree(self) -> int:
        return max(self._deg)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edge_index(self, e: Sequence[int]) -> int:
        if self._index is None:
            self._index = {edge: i for i, edge in enumerate(self.edges)}
        u, v = e
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise NotAnEdge(f"{tuple(e)} is not an edge") from None

    def regularity(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        d = self._deg[0]
        return d if all(x == d for x in self._deg) else None

    def is_connected(self) -> bool:
        return _component_of(self.adj, 0, self.full_mask) == self.full_mask

    def without_edges(self, fault: Iterable[Sequence[int]]) -> "Graph":
        """``G - F``.  Every member of ``fault`` must be an edge."""
        adj = list(self.adj)
        drop = set()
        for e in fault:
            u, v = e
            if u > v:
                u, v = v, u
            if not self.has_edge(u, v):
                raise NotAnEdge(f"({u}, {v}) is not an edge")
            drop.add((u, v))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        edges = tuple(e for e in self.edges if e not in drop)
        return Graph._trusted(self.n, edges, tuple(adj))

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edges)


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``0..n-1`` stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise VertexOutOfRange(f"bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vs = list(vertices)
        for v in vs:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"vertex {v} outside 0..{n - 1}")
        return cls(mask_of(vs), n)

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __repr__(self) -> str:
        return f"VertexSet({list(self.members)})"


@dataclass(frozen=True)
class Fragment:
    """A vertex set ``x`` with its boundary ``E_G(x)`` and the component
    orders of ``G[complement of x]`` (sorted ascending)."""

    x: VertexSet
    boundary: EdgeSet
    boundary_size: int
    comp_sizes_complement: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.x.members


def _as_mask(g: Graph, x: "VertexSet | int | Iterable[int]") -> int:
    if isinstance(x, VertexSet):
        if x.n != g.n:
            raise VertexOutOfRange(f"vertex set over {x.n} vertices used with graph on {g.n}")
        return x.bits
    if isinstance(x, int):
        if x < 0 or x >> g.n:
            raise VertexOutOfRange("mask has bits outside the vertex range")
        return x
    return VertexSet.of(g.n, x).bits


# -- boundary and components -------------------------------------------


def boundary_mask_size(adj: Sequence[int], x: int, full: int) -> int:
    out = full & ~x
    return sum((adj[v] & out).bit_count() for v in iter_bits(x))


def boundary(g: Graph, x) -> EdgeSet:
    """``E_G(X)``: edges with exactly one end in ``x``."""
    xm = _as_mask(g, x)
    if xm == 0 or xm == g.full_mask:
        raise EmptySide("boundary needs a proper nonempty vertex set")
    return tuple((u, v) for u, v in g.edges if (xm >> u & 1) != (xm >> v & 1))


def _component_of(adj: Sequence[int], v: int, within: int) -> int:
    comp = frontier = 1 << v
    while frontier:
        nb = 0
        for u in iter_bits(frontier):
            nb |= adj[u]
        frontier = nb & within & ~comp
        comp |= frontier
    return comp


def component_masks(adj: Sequence[int], within: int) -> list[int]:
    comps = []
    rest = within
    while rest:
        low = rest & -rest
        comp = _component_of(adj, low.bit_length() - 1, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def components_within(g: Graph, x) -> list[VertexSet]:
    """Components of ``G[x]``, ordered by smallest vertex."""
    xm = _as_mask(g, x)
    return [VertexSet(c, g.n) for c in component_masks(g.adj, xm)]


def is_connected_induced(g: Graph, x) -> bool:
    xm = _as_mask(g, x)
    if xm == 0:
        raise EmptySide("connectivity of an empty vertex set is undefined")
    low = xm & -xm
    return _component_of(g.adj, low.bit_length() - 1, xm) == xm


def make_fragment(g: Graph, x) -> Fragment:
    xm = _as_mask(g, x)
    edges = boundary(g, xm)
    sizes = sorted(c.bit_count() for c in component_masks(g.adj, g.full_mask & ~xm))
    return Fragment(VertexSet(xm, g.n), edges, len(edges), tuple(sizes))


# -- cycles and degrees ---------------------------------------------------


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    adj = [g.neighbors(v) for v in range(g.n)]
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def has_four_cycle(g: Graph) -> bool:
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (adj[u] & adj[v]).bit_count() >= 2:
                return True
    return False


def edge_degree(g: Graph, e: Sequence[int]) -> int:
    u, v = e
    if not g.has_edge(u, v):
        raise NotAnEdge(f"{tuple(e)} is not an edge")
    return g.degree(u) + g.degree(v) - 2


def _edge_degrees(g: Graph) -> list[int]:
    deg = g.degrees
    return [deg[u] + deg[v] - 2 for u, v in g.edges]


def xi(g: Graph) -> int:
    """Minimum edge-degree."""
    if not g.edges:
        raise NoEdges("minimum edge-degree needs at least one edge")
    return min(_edge_degrees(g))


def eta(g: Graph) -> int:
    """Number of edges whose edge-degree equals the minimum."""
    ds = _edge_degrees(g)
    if not ds:
        raise NoEdges("minimum edge-degree needs at least one edge")
    return ds.count(min(ds))


def is_edge_regular(g: Graph) -> bool:
    return eta(g) == g.m


# -- connected subset enumeration ------------------------------------------


def connected_sets(
    adj: Sequence[int],
    deg: Sequence[int],
    min_size: int,
    max_size: int,
    bound: list[int] | None = None,
) -> Iterator[tuple[int, int, int]]:
    """Yield ``(mask, size, boundary_size)`` for every connected vertex set
    with ``min_size <= size <= max_size``, each exactly once.

    Sets are grown from their smallest vertex; a branch never adds vertices
    from its excluded set (vertices below the anchor plus frontier vertices
    already tried by an elder sibling).  Edges from the current set into the
    excluded set stay on the boundary of every descendant, so when ``bound``
    (a one-element list the consumer may lower between yields) is given,
    branches whose excluded-edge count exceeds ``bound[0]`` are skipped.
    """
    n = len(adj)
    for v in range(n):
        excl = (1 << v) - 1
        lb = (adj[v] & excl).bit_count()
        if bound is not None and lb > bound[0]:
            continue
        s = 1 << v
        if min_size <= 1:
            yield s, 1, deg[v]
        if max_size <= 1:
            continue
        # frame: [set, size, boundary, neighbourhood, excluded, excluded-edge count, candidates]
        stack = [[s, 1, deg[v], adj[v], excl, lb, adj[v] & ~excl]]
        while stack:
            fr = stack[-1]
            s, size, d, nbr, excl, lb, cand = fr
            if not cand or (bound is not None and lb > bound[0]):
                stack.pop()
                continue
            low = cand & -cand
            w = low.bit_length() - 1
            aw = adj[w]
            inner = (aw & s).bit_count()
            fr[6] = cand ^ low
            fr[4] = excl | low
            fr[5] = lb + inner
            clb = lb + (aw & excl).bit_count()
            if bound is not None and clb > bound[0]:
                continue
            cs = s | low
            csize = size + 1
            cd = d + deg[w] - 2 * inner
            if csize >= min_size:
                yield cs, csize, cd
            if csize < max_size:
                cnbr = nbr | aw
                stack.append([cs, csize, cd, cnbr, excl, clb, cnbr & ~excl & ~cs])


def enumerate_connected_subsets(g: Graph, min_size: int, max_size: int) -> Iterator[VertexSet]:
    """Every connected induced subset with size in ``[min_size, max_size]``,
    once each, in a deterministic order.  Lazy."""
    if not 1 <= min_size <= max_size <= g.n:
        raise BadRange(f"need 1 <= min_size <= max_size <= {g.n}, got {min_size}, {max_size}")
    n = g.n
    return (VertexSet(s, n) for s, _, _ in connected_sets(g.adj, g.degrees, min_size, max_size))


def xi_h(g: Graph, h: int) -> int | None:
    """Minimum ``d_G(X)`` over connected ``X`` with ``|X| = h + 1``;
    ``None`` when no such set exists."""
    if h < 0:
        raise BadRange("h must be non-negative")
    if h + 1 > g.n:
        return None
    best = [math.inf]
    found = False
    for _, _, d in connected_sets(g.adj, g.degrees, h + 1, h + 1, best):
        if d < best[0]:
            best[0] = d
        found = True
    return int(best[0]) if found else None


# -- flows ------------------------------------------------------------------


def set_cut_size(adj: Sequence[int], sources: int, sinks: int, limit: int | None = None) -> int:
    """Minimum number of edges separating vertex set ``sources`` from vertex
    set ``sinks`` (disjoint, nonempty), by unit-capacity augmenting paths.
    Stops early once the flow exceeds ``limit``."""
    n = len(adj)
    # residual capacity on directed arcs; an undirected edge starts with 1 each way
    flow: dict[tuple[int, int], int] = {}
    total = 0
    inner_src = sources
    while True:
        parent = {}
        queue = deque()
        for v in iter_bits(inner_src):
            parent[v] = -1
            queue.append(v)
        hit = -1
        while queue and hit < 0:
            u = queue.popleft()
            for w in iter_bits(adj[u]):
                if w in parent:
                    continue
                if flow.get((u, w), 0) >= 1:
                    continue
                parent[w] = u
                if sinks >> w & 1:
                    hit = w
                    break
                queue.append(w)
        if hit < 0:
            return total
        w = hit
        while parent[w] >= 0:
            u = parent[w]
            if flow.get((w, u), 0) > 0:
                flow[(w, u)] -= 1
            else:
                flow[(u, w)] = flow.get((u, w), 0) + 1
            w = u
        total += 1
        if limit is not None and total > limit:
            return total
        if total > n * n:  # pragma: no cover - defensive
            raise RuntimeError("flow did not terminate")


def edge_connectivity(g: Graph) -> int:
    """``lambda(G)``; 0 for disconnected graphs (and for ``n = 1``)."""
    if g.n < 2 or not g.is_connected():
        return 0
    best = g.min_degree
    for v in range(1, g.n):
        best = min(best, set_cut_size(g.adj, 1, 1 << v, best))
    return best


def _local_vertex_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    # vertex splitting: v_in = 2v, v_out = 2v + 1, unit capacity on internal arcs
    cap: dict[int, dict[int, int]] = {i: {} for i in range(2 * g.n)}
    big = g.n
    for v in range(g.n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
    for u, v in g.edges:
        cap[2 * u + 1][2 * v] = big
        cap[2 * v + 1][2 * u] = big
    for u in list(cap):
        for w in list(cap[u]):
            cap[w].setdefault(u, 0)
    src, dst = 2 * s + 1, 2 * t
    total = 0
    while total <= limit:
        parent = {src: None}
        queue = deque([src])
        while queue and dst not in parent:
            u = queue.popleft()
            for w, c in cap[u].items():
                if c > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if dst not in parent:
            break
        w = dst
        while parent[w] is not None:
            u = parent[w]
            cap[u][w] -= 1
            cap[w][u] += 1
            w = u
        total += 1
    return total


def vertex_connectivity(g: Graph) -> int:
    """``kappa(G)``: ``n - 1`` for complete graphs, 0 when disconnected."""
    n = g.n
    if n < 2 or not g.is_connected():
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    best = g.min_degree
    for i in range(n):
        if i > best:
            break
        for j in range(i + 1, n):
            if not g.has_edge(i, j):
                best = min(best, _local_vertex_connectivity(g, i, j, best))
    return best


# -- matchings on a boundary --------------------------------------------------


def max_independent_boundary_edges(g: Graph, x) -> int:
    """Size of a maximum matching inside ``E_G(X)``."""
    xm = _as_mask(g, x)
    if xm == 0 or xm == g.full_mask:
        raise EmptySide("boundary needs a proper nonempty vertex set")
    out = g.full_mask & ~xm
    left = list(iter_bits(xm))
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for w in iter_bits(g.adj[u] & out):
            if w in seen:
                continue
            seen.add(w)
            if w not in match_right or augment(match_right[w], seen):
                match_right[w] = u
                return True
        return False

    return sum(1 for u in left if augment(u, set()))
