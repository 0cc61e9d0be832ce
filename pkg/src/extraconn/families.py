"""Deterministic generators for the graph families and hand-built examples.

Every generator returns a canonical :class:`~extraconn.graph.Graph`.  The
:class:`FamilySpec` text form (``hypercube:4``, ``cartesian:K4,K4``,
``ring:Q3*4:identity`` ...) names a generator plus its parameters and is what
the CLI ``gen`` command and the corpus files use.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import MAX_VERTICES, Graph, GraphError, TooLarge


class BadParam(GraphError):
    pass


class SizeMismatch(GraphError):
    pass


class NotAMatching(GraphError):
    pass


class TooFewParts(GraphError):
    pass


class Infeasible(GraphError):
    pass


class RetriesExhausted(GraphError):
    pass


class BadSpec(GraphError):
    pass


# -- basic graphs ----------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParam("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParam("complete bipartite graph needs a, b >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParam("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def hypercube(n: int) -> Graph:
    """``Q_n``: vertex ids are the integer values of the n-bit strings, the
    leftmost character being the most significant bit."""
    if not 1 <= n <= 7:
        raise BadParam("hypercube dimension must be in 1..7")
    return Graph(1 << n, [(v, v | 1 << i) for v in range(1 << n) for i in range(n) if not v >> i & 1])


def star_composite(n: int, h: int) -> Graph:
    """``n`` disjoint copies of ``K_h`` plus a hub (vertex 0) joined to all of them."""
    if not n >= h >= 1:
        raise BadParam("star_composite needs n >= h >= 1")
    edges = []
    for c in range(n):
        block = [1 + c * h + i for i in range(h)]
        edges += [(0, v) for v in block]
        edges += list(combinations(block, 2))
    return Graph(n * h + 1, edges)


REMARK25_LABELS = "abcdefghij"
REMARK25_EDGES = (
    "ab cd ef gh ij "
    "ac ad ag bc bd bh ce df "
    "ge gf gi he hf hj"
).split()


def remark25_graph() -> Graph:
    """The ten-vertex graph whose only minimum-edge-degree edge is ``ij``.

    Vertices ``a..j`` are numbered ``0..9``."""
    idx = {c: i for i, c in enumerate(REMARK25_LABELS)}
    return Graph(10, [(idx[p[0]], idx[p[1]]) for p in REMARK25_EDGES])


def remark27_layout(t: int) -> dict[str, list[int]]:
    """Vertex numbering used by :func:`remark27_graph`.

    ``X`` and ``Y`` are the two cliques of order ``3t-2`` (``X[i]`` matched to
    ``Y[i]``), ``Z`` is the first ``t-1`` vertices of ``Y`` and ``x``/``y``
    are the ``t`` extra pairs."""
    if t < 2:
        raise BadParam("remark27 graph needs t >= 2")
    s = 3 * t - 2
    xs = list(range(s))
    ys = list(range(s, 2 * s))
    px = [2 * s + 2 * i for i in range(t)]
    py = [2 * s + 2 * i + 1 for i in range(t)]
    return {"X": xs, "Y": ys, "Z": ys[: t - 1], "x": px, "y": py}


def remark27_graph(t: int) -> Graph:
    lay = remark27_layout(t)
    edges = set()
    edges.update(combinations(lay["X"], 2))
    edges.update(combinations(lay["Y"], 2))
    edges.update(zip(lay["X"], lay["Y"]))
    for a, b in zip(lay["x"], lay["y"]):
        edges.update(tuple(sorted(p)) for p in combinations(lay["Z"] + [a, b], 2))
    return Graph(8 * t - 4, edges)


# -- products and compositions ----------------------------------------------


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """``G1 x G2`` with vertex ``(a, b)`` numbered ``a * |G2| + b``."""
    n1, n2 = g1.n, g2.n
    if n1 * n2 > MAX_VERTICES:
        raise TooLarge(f"product order {n1 * n2} exceeds {MAX_VERTICES}")
    edges = [(a * n2 + u, a * n2 + v) for a in range(n1) for u, v in g2.edges]
    edges += [(u * n2 + b, v * n2 + b) for u, v in g1.edges for b in range(n2)]
    return Graph(n1 * n2, edges)


def _check_matching(pairs: Sequence[Sequence[int]], n: int) -> list[int]:
    """Turn a list of ``(left, right)`` pairs into a permutation; both sides
    must be covered exactly once."""
    perm = [-1] * n
    used = set()
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise NotAMatching(f"pair ({a}, {b}) outside 0..{n - 1}")
        if perm[a] >= 0 or b in used:
            raise NotAMatching(f"vertex repeated in pair ({a}, {b})")
        perm[a] = b
        used.add(b)
    if len(used) != n:
        raise NotAMatching("matching is not perfect")
    return perm


def _matching_perm(n: int, m, rng_seed: int | None = None) -> list[int]:
    if m is None or m == "identity":
        return list(range(n))
    if isinstance(m, int) and not isinstance(m, bool):
        perm = list(range(n))
        random.Random(m).shuffle(perm)
        return perm
    return _check_matching(m, n)


def matching_join(g0: Graph, g1: Graph, m=None) -> Graph:
    """``G(G0, G1; M)``.  ``m`` is ``None``/``"identity"``, an int seed for a
    pseudorandom perfect matching, or explicit ``(u0, u1)`` pairs.  Vertex
    ``u`` of ``G1`` becomes ``|G0| + u``."""
    if g0.n != g1.n:
        raise SizeMismatch(f"parts have orders {g0.n} and {g1.n}")
    n = g0.n
    if 2 * n > MAX_VERTICES:
        raise TooLarge(f"order {2 * n} exceeds {MAX_VERTICES}")
    perm = _matching_perm(n, m)
    edges = list(g0.edges) + [(u + n, v + n) for u, v in g1.edges]
    edges += [(u, n + perm[u]) for u in range(n)]
    return Graph(2 * n, edges)


def ring_join(parts: Sequence[Graph], matchings=None) -> Graph:
    """``G(G0, ..., G_{m-1}; M)``: part ``i`` occupies ids ``i*n .. i*n+n-1``
    and consecutive parts (cyclically) are joined by a perfect matching.

    ``matchings`` is ``None``/``"identity"``, an int seed, or a list with one
    entry per consecutive pair (each entry in the form accepted by
    :func:`matching_join`)."""
    k = len(parts)
    if k < 3:
        raise TooFewParts("ring composition needs at least 3 parts")
    n = parts[0].n
    if any(p.n != n for p in parts):
        raise SizeMismatch("ring parts must have equal orders")
    if k * n > MAX_VERTICES:
        raise TooLarge(f"order {k * n} exceeds {MAX_VERTICES}")
    if matchings is None or matchings == "identity":
        perms = [list(range(n))] * k
    elif isinstance(matchings, int) and not isinstance(matchings, bool):
        rng = random.Random(matchings)
        perms = []
        for _ in range(k):
            p = list(range(n))
            rng.shuffle(p)
            perms.append(p)
    else:
        if len(matchings) != k:
            raise NotAMatching(f"need {k} matchings, got {len(matchings)}")
        perms = [_matching_perm(n, mm) for mm in matchings]
    edges = []
    for i, p in enumerate(parts):
        edges += [(i * n + u, i * n + v) for u, v in p.edges]
    for i in range(k):
        j = (i + 1) % k
        edges += [(i * n + u, j * n + perms[i][u]) for u in range(n)]
    try:
        return Graph(k * n, edges)
    except GraphError as exc:
        # three parts with clashing matchings can produce parallel ring edges
        raise NotAMatching(str(exc)) from exc


def circulant(n: int, d: int) -> Graph:
    """``G(n, d)``: ``u ~ v`` iff ``u - v = +-d^i (mod n)`` for
    ``0 <= i <= ceil(log_d n) - 1``."""
    if n < 3 or d < 2:
        raise BadParam("circulant needs n >= 3 and d >= 2")
    if n > MAX_VERTICES:
        raise TooLarge(f"n={n} exceeds {MAX_VERTICES}")
    top = 0
    while d**top < n:
        top += 1
    jumps = set()
    for i in range(top):
        j = d**i % n
        if j:
            jumps.add(j)
            jumps.add(n - j)
    edges = {tuple(sorted((u, (u + j) % n))) for u in range(n) for j in jumps}
    return Graph(n, edges)


def toroidal_mesh(dims: Sequence[int]) -> Graph:
    """``C(d1, ..., dn)`` as the iterated Cartesian product of cycles."""
    dims = list(dims)
    if len(dims) < 2 or any(d < 3 for d in dims):
        raise BadParam("toroidal mesh needs at least two dimensions, each >= 3")
    order = 1
    for d in dims:
        order *= d
    if order > MAX_VERTICES:
        raise TooLarge(f"order {order} exceeds {MAX_VERTICES}")
    g = cycle(dims[0])
    for d in dims[1:]:
        g = cartesian_product(g, cycle(d))
    return g


def random_regular(n: int, k: int, seed: int, max_retries: int = 20000) -> Graph:
    """Connected simple ``k``-regular graph from the pairing model, retrying
    (deterministically for a given seed) until the pairing is simple and the
    result connected."""
    if n < 1 or k < 0 or k >= n or (n * k) % 2:
        raise Infeasible(f"no {k}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_retries):
        points = [v for v in range(n) for _ in range(k)]
        rng.shuffle(points)
        pairs = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            if a == b:
                ok = False
                break
            e = (a, b) if a < b else (b, a)
            if e in pairs:
                ok = False
                break
            pairs.add(e)
        if not ok:
            continue
        g = Graph(n, pairs)
        if g.is_connected():
            return g
    raise RetriesExhausted(f"no simple connected pairing after {max_retries} tries")


# -- family specs ------------------------------------------------------------

TRANSITIVE_KINDS = {"complete", "cycle", "hypercube", "petersen", "circulant", "torus"}


@dataclass(frozen=True)
class FamilySpec:
    """A generator tag plus parameters, e.g. ``FamilySpec("hypercube", (4,))``.

    ``parts`` holds nested specs for products and compositions and
    ``matching`` the matching description (``"identity"`` or ``"seed=N"``).
    """

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()
    matching: str = ""
    seed: int | None = None
    extra: dict = field(default_factory=dict, compare=False, hash=False)

    def to_text(self) -> str:
        k, p = self.kind, self.params
        if k == "atom":
            return self.extra["name"]
        if k in ("petersen", "remark25"):
            return k
        if k == "cartesian":
            return "cartesian:" + ",".join(s.to_text() for s in self.parts)
        if k in ("join", "ring"):
            base = self.parts[0].to_text()
            if k == "ring":
                body = f"{base}*{len(self.parts)}"
            else:
                body = ",".join(s.to_text() for s in self.parts)
            return f"{k}:{body}:{self.matching or 'identity'}"
        if k == "randreg":
            return f"randreg:{p[0]},{p[1]},seed={self.seed}"
        return f"{k}:" + ",".join(str(x) for x in p)

    def __str__(self) -> str:
        return self.to_text()

    def build(self) -> Graph:
        return generate(self)

    @property
    def transitive(self) -> bool:
        """Vertex-transitivity known by construction."""
        if self.kind == "atom":
            return self.extra["inner"].transitive
        if self.kind == "bipartite":
            return self.params[0] == self.params[1]
        if self.kind == "cartesian":
            return all(s.transitive for s in self.parts)
        return self.kind in TRANSITIVE_KINDS


_ATOM = re.compile(r"^(K|C|Q)(\d+)$|^K(\d+)_(\d+)$|^P$")


def _parse_atom(text: str) -> FamilySpec:
    m = _ATOM.match(text)
    if not m:
        raise BadSpec(f"unknown graph name {text!r}")
    if text == "P":
        inner = FamilySpec("petersen")
    elif m.group(3):
        inner = FamilySpec("bipartite", (int(m.group(3)), int(m.group(4))))
    else:
        kind = {"K": "complete", "C": "cycle", "Q": "hypercube"}[m.group(1)]
        inner = FamilySpec(kind, (int(m.group(2)),))
    return FamilySpec("atom", inner.params, (inner,), extra={"name": text, "inner": inner})


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise BadSpec(f"expected comma-separated integers, got {text!r}") from None


def _parse_matching(text: str) -> str:
    if text in ("", "identity"):
        return "identity"
    if re.fullmatch(r"seed=\d+", text):
        return text
    raise BadSpec(f"matching must be 'identity' or 'seed=N', got {text!r}")


def parse_spec(text: str) -> FamilySpec:
    """Parse the text form of a family spec."""
    text = text.strip()
    if not text:
        raise BadSpec("empty spec")
    if ":" not in text:
        if text in ("petersen", "remark25"):
            return FamilySpec(text)
        return _parse_atom(text)
    kind, _, rest = text.partition(":")
    if kind in ("complete", "cycle", "hypercube", "remark27", "circulant", "torus", "star", "bipartite"):
        return FamilySpec(kind, _ints(rest))
    if kind == "randreg":
        fields = rest.split(",")
        if len(fields) != 3 or not fields[2].startswith("seed="):
            raise BadSpec("randreg spec is randreg:n,k,seed=S")
        n, k = _ints(",".join(fields[:2]))
        return FamilySpec("randreg", (n, k), seed=int(fields[2][5:]))
    if kind == "cartesian":
        parts = tuple(_parse_atom(x) for x in rest.split(","))
        if len(parts) < 2:
            raise BadSpec("cartesian needs at least two factors")
        return FamilySpec("cartesian", parts=parts)
    if kind in ("join", "ring"):
        body, _, match = rest.partition(":")
        if kind == "ring":
            base, _, count = body.partition("*")
            if not count.isdigit():
                raise BadSpec("ring spec is ring:<part>*<count>:<matching>")
            parts = (_parse_atom(base),) * int(count)
        else:
            parts = tuple(_parse_atom(x) for x in body.split(","))
            if len(parts) != 2:
                raise BadSpec("join needs exactly two parts")
        return FamilySpec(kind, parts=parts, matching=_parse_matching(match))
    raise BadSpec(f"unknown family {kind!r}")


def _matching_arg(spec: FamilySpec):
    if spec.matching.startswith("seed="):
        return int(spec.matching[5:])
    return None


def generate(spec: "FamilySpec | str") -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params

    def need(count: int) -> None:
        if len(p) != count:
            raise BadSpec(f"{k} takes {count} parameter(s), got {len(p)}")

    if k == "atom":
        return generate(spec.extra["inner"])
    if k == "complete":
        need(1)
        return complete(p[0])
    if k == "bipartite":
        need(2)
        return complete_bipartite(*p)
    if k == "cycle":
        need(1)
        return cycle(p[0])
    if k == "petersen":
        return petersen()
    if k == "hypercube":
        need(1)
        return hypercube(p[0])
    if k == "star":
        need(2)
        return star_composite(*p)
    if k == "remark25":
        return remark25_graph()
    if k == "remark27":
        need(1)
        return remark27_graph(p[0])
    if k == "circulant":
        need(2)
        return circulant(*p)
    if k == "torus":
        return toroidal_mesh(p)
    if k == "randreg":
        need(2)
        return random_regular(p[0], p[1], spec.seed)
    if k == "cartesian":
        g = generate(spec.parts[0])
        for s in spec.parts[1:]:
            g = cartesian_product(g, generate(s))
        return g
    if k == "join":
        return matching_join(generate(spec.parts[0]), generate(spec.parts[1]), _matching_arg(spec))
    if k == "ring":
        return ring_join([generate(s) for s in spec.parts], _matching_arg(spec))
    raise BadSpec(f"unknown family {k!r}")
