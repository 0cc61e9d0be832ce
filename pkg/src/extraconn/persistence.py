"""Persistence of super-lambda^(h) graphs under edge faults.

``rho^(h)(G)`` is the largest ``m`` such that ``G - F`` stays super-lambda^(h)
for every ``F`` with ``|F| <= m``.  It never exceeds ``delta - 1`` (deleting
the edges at a minimum-degree vertex breaks the property), so the search
walks fault sizes ``1 .. delta-1`` and stops at the first failure.

For ``h = 1`` two shortcuts avoid most definition-based checks:

* if ``G`` has no 2-extra cut, no fault set of size ``<= delta-1`` can create
  one, and every ``G - F`` is super-lambda'.
* otherwise, with ``L = lambda''(G)``, any 2-extra cut of ``G - F`` has at
  least ``L - |F|`` edges; so ``xi(G - F) < L - |F|`` already certifies
  ``G - F`` as super-lambda'.  Because edge-degrees only drop as ``F``
  grows, a whole subtree of the lexicographic fault-set walk can be
  certified at once from edges that the walk has already passed over.
* when that bound is too weak, the same argument is applied per cut: a
  2-extra cut ``E_{G-F}(X)`` of size at most ``xi(G - F)`` comes from a side
  ``X`` of a 2-extra cut of ``G`` with ``d_G(X) <= xi(G - F) + |F|``, and
  ``xi(G - F)`` is at most the ``delta``-th smallest edge-degree of ``G``.
  Those sides are tabulated once, and ``G - F`` is super-lambda' exactly
  when no tabulated side keeps a genuine 2-extra cut of size
  ``<= xi(G - F)`` after the faults.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .budget import BudgetExceeded, check_budget
from .engine import (
    DisconnectedInput,
    InternalInconsistency,
    _candidates,
    NotExtraConnected,
    has_extra_cut,
    is_super_lambda_h_def,
    lambda_value,
    require_connected,
)
from .graph import Graph, _edge_degrees, component_masks


class NotSuper(ValueError):
    """``rho`` is only defined for super-lambda^(h) graphs."""


SHORTCUT_NO_NEXT_CUT = "not_lambda2_connected"
SHORTCUT_BOUND = "lambda2_bound"


@dataclass
class PersistenceResult:
    h: int
    rho: int
    witness: tuple[tuple[int, int], ...] | None
    ceiling_reached: bool
    shortcut_used: str | None = None
    stats: dict = field(default_factory=dict)
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        partial = "lower_bound" in self.flags
        if (self.witness is None) != (self.ceiling_reached or partial):
            raise ValueError("a witness is present exactly when the search ended on a failure")
        if self.witness is not None and len(self.witness) != self.rho + 1:
            raise ValueError("witness size must be rho + 1")

    def as_dict(self) -> dict:
        return {
            "h": self.h,
            "rho": self.rho,
            "witness": None if self.witness is None else [list(e) for e in self.witness],
            "ceiling_reached": self.ceiling_reached,
            "shortcut_used": self.shortcut_used,
            "stats": dict(self.stats),
            "flags": list(self.flags),
        }


def _is_super_safe(g: Graph, h: int) -> bool:
    try:
        return bool(is_super_lambda_h_def(g, h))
    except (DisconnectedInput, NotExtraConnected):
        return False


def _require_super(g: Graph, h: int) -> None:
    require_connected(g)
    try:
        check = is_super_lambda_h_def(g, h)
    except NotExtraConnected:
        raise NotSuper(f"graph has no {h}-extra edge-cut") from None
    if not check:
        raise NotSuper(f"graph is not super-lambda^({h}) ({check.reason})")


def not_lambda2_shortcut(g: Graph) -> int | None:
    """``delta - 1`` when the (super-lambda') graph has no 2-extra cut, else ``None``."""
    if has_extra_cut(g, 2):
        return None
    return g.min_degree - 1


def super_after_faults(g: Graph, fault, h: int, *, assume_super: bool | None = None,
                       lambda_next: int | None = None) -> bool:
    """Whether ``G - fault`` is super-lambda^(h).

    For ``h = 1`` and a super-lambda' ``G`` with ``|fault| <= delta-1`` the
    answer comes from the 2-extra-cut bound when it applies; otherwise the
    definition is checked on ``G - fault``.  ``assume_super`` and
    ``lambda_next`` let callers pass facts about ``G`` they already know."""
    fault = [tuple(e) for e in fault]
    gf = g.without_edges(fault)
    if h == 1 and 0 < len(fault) <= g.min_degree - 1:
        if assume_super is None:
            assume_super = _is_super_safe(g, 1)
        if assume_super:
            if lambda_next is None:
                lambda_next = lambda_value(g, 2)
            if lambda_next is None:
                return True
            if gf.m and min(_edge_degrees(gf)) < lambda_next - len(fault):
                return True
    return _is_super_safe(gf, h)


# -- the layered search ------------------------------------------------------


def _edge_adjacency(g: Graph) -> list[list[int]]:
    at = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        at[u].append(i)
        at[v].append(i)
    out = []
    for i, (u, v) in enumerate(g.edges):
        out.append([j for j in at[u] + at[v] if j != i])
    return out


def cut_table(g: Graph) -> list[tuple[int, int, int]]:
    """Sides ``X`` (``|X| <= n/2``) of 2-extra cuts of ``G`` small enough to
    matter after at most ``delta - 1`` faults, as
    ``(d_G(X), boundary edge-index mask, X mask)`` sorted by boundary size."""
    delta = g.min_degree
    limit = sorted(_edge_degrees(g))[min(delta, g.m) - 1] + delta - 1
    index = {e: i for i, e in enumerate(g.edges)}
    table = []
    for x, d, _ in _candidates(g, 2, [limit]):
        bmask = 0
        for u, v in g.edges:
            if (x >> u & 1) != (x >> v & 1):
                bmask |= 1 << index[(u, v)]
        table.append((d, bmask, x))
    table.sort()
    return table


class _Walker:
    """Lexicographic walk over fault sets of one size with subtree pruning."""

    def __init__(self, g: Graph, h: int, bound: int | None, table=None):
        self.g = g
        self.h = h
        self.bound = bound  # lambda''(G) when the shortcuts are on
        self.table = table
        self.ed = _edge_degrees(g)
        self.adj = _edge_adjacency(g)
        self.drop = [0] * g.m
        self.in_f = [False] * g.m
        self.fmask = 0
        self.stats = {"fault_sets": 0, "bound_pruned": 0, "cut_table": 0, "full_checks": 0}

    def _choose(self, i: int, sign: int) -> None:
        self.in_f[i] = sign > 0
        self.fmask ^= 1 << i
        for j in self.adj[i]:
            self.drop[j] += sign

    def _min_edge_degree(self, upto: int) -> int:
        ed, drop, in_f = self.ed, self.drop, self.in_f
        best = None
        for j in range(upto):
            if not in_f[j]:
                val = ed[j] - drop[j]
                if best is None or val < best:
                    best = val
        return best if best is not None else 1 << 30

    def _table_fails(self, chosen: list[int], size: int, x: int) -> bool:
        """Exact super test of ``G - F`` from the cut table (``x = xi(G - F)``)."""
        fmask = self.fmask
        adj = None
        for d, bmask, side in self.table:
            if d > x + size:
                break
            if d - (bmask & fmask).bit_count() > x:
                continue
            if adj is None:
                adj = list(self.g.adj)
                for i in chosen:
                    u, v = self.g.edges[i]
                    adj[u] &= ~(1 << v)
                    adj[v] &= ~(1 << u)
            rest = self.g.full_mask & ~side
            if all(c.bit_count() > 2 for c in component_masks(adj, side)) and all(
                c.bit_count() > 2 for c in component_masks(adj, rest)
            ):
                return True
        return False

    def _leaf_fails(self, chosen: list[int], size: int) -> bool:
        self.stats["fault_sets"] += 1
        if self.bound is not None:
            x = self._min_edge_degree(self.g.m)
            if x < self.bound - size:
                self.stats["bound_pruned"] += 1
                return False
            if self.table is not None:
                self.stats["cut_table"] += 1
                return self._table_fails(chosen, size, x)
        self.stats["full_checks"] += 1
        gf = self.g.without_edges([self.g.edges[i] for i in chosen])
        return not _is_super_safe(gf, self.h)

    def first_failure(self, size: int, first: int | None = None) -> tuple[int, ...] | None:
        """Lexicographically first failing fault set of ``size`` edges,
        optionally restricted to sets whose smallest edge index is ``first``."""
        m = self.g.m
        chosen: list[int] = []
        starts = range(m - size + 1) if first is None else [first]

        def walk(start: int) -> tuple[int, ...] | None:
            k = len(chosen)
            if k == size:
                return tuple(chosen) if self._leaf_fails(chosen, size) else None
            check_budget(256)
            if self.bound is not None and k:
                last = chosen[-1]
                if self._min_edge_degree(last) < self.bound - size:
                    count = comb(m - 1 - last, size - k)
                    self.stats["fault_sets"] += count
                    self.stats["bound_pruned"] += count
                    return None
            for i in range(start, m - (size - k) + 1):
                chosen.append(i)
                self._choose(i, 1)
                hit = walk(i + 1)
                self._choose(i, -1)
                chosen.pop()
                if hit is not None:
                    return hit
            return None

        for s in starts:
            if s > m - size:
                break
            chosen.append(s)
            self._choose(s, 1)
            hit = walk(s + 1)
            self._choose(s, -1)
            chosen.pop()
            if hit is not None:
                return hit
        return None


def _shard(args):
    g, h, bound, table, size, first = args
    w = _Walker(g, h, bound, table)
    hit = w.first_failure(size, first)
    return hit, w.stats


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("EXTRACONN_THREADS", "1")))
    except ValueError:
        return 1


def rho_h(g: Graph, h: int, *, prune: bool = True, use_table: bool = True,
          workers: int | None = None, max_size: int | None = None) -> PersistenceResult:
    """Exact ``rho^(h)(G)`` of a super-lambda^(h) graph.

    ``prune=False`` runs the same walk with every shortcut disabled;
    ``use_table=False`` keeps only the whole-fault-set bound.
    ``workers > 1`` shards each fault size by its first edge across
    processes; the reduction keeps the smallest failing set, so the answer
    does not depend on the worker count.

    ``max_size`` stops the search after fault sets of that size.  If none
    of them fails the result carries the flag ``"lower_bound"`` and
    ``rho = max_size`` only means ``rho >= max_size``."""
    _require_super(g, h)
    delta = g.min_degree
    stats = {"fault_sets": 0, "bound_pruned": 0, "cut_table": 0, "full_checks": 0}
    if delta <= 1:
        return PersistenceResult(h, 0, None, True, None, stats, ("min_degree_one",))
    bound = table = None
    if prune and h == 1:
        if not has_extra_cut(g, 2):
            return PersistenceResult(h, delta - 1, None, True, SHORTCUT_NO_NEXT_CUT, stats)
        bound = lambda_value(g, 2)
        table = cut_table(g) if use_table else None
    workers = default_workers() if workers is None else max(1, workers)
    shortcut = SHORTCUT_BOUND if bound is not None else None
    top = delta - 1 if max_size is None else min(max_size, delta - 1)
    for size in range(1, top + 1):
        if workers == 1:
            w = _Walker(g, h, bound, table)
            hit = w.first_failure(size)
            for k, v in w.stats.items():
                stats[k] += v
        else:
            tasks = [(g, h, bound, table, size, first) for first in range(g.m - size + 1)]
            hit = None
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for res, st in pool.map(_shard, tasks):
                    for k, v in st.items():
                        stats[k] += v
                    if res is not None and hit is None:
                        hit = res
        if hit is not None:
            witness = tuple(g.edges[i] for i in hit)
            if bound is not None:
                # confirm a shortcut-decided failure from the definition
                stats["full_checks"] += 1
                if _is_super_safe(g.without_edges(witness), h):
                    raise InternalInconsistency(f"fault set {witness} misclassified")
            return PersistenceResult(h, size - 1, witness, False, shortcut, stats)
    if top < delta - 1:
        return PersistenceResult(h, top, None, False, shortcut, stats, ("lower_bound",))
    return PersistenceResult(h, delta - 1, None, True, shortcut, stats)


def rho_at_least(g: Graph, h: int, m: int, **kw) -> bool:
    """Whether ``rho^(h)(G) >= m``: no fault set of at most ``m`` edges
    breaks super-lambda^(h).  Only sizes up to ``m`` are searched."""
    if m <= 0:
        _require_super(g, h)
        return True
    return rho_h(g, h, max_size=m, **kw).rho >= m


def rho_h_bruteforce(g: Graph, h: int, max_fault_sets: int | None = None) -> PersistenceResult:
    """``rho^(h)`` straight from the definition: every fault set of each size
    is checked with the definition-based super test."""
    _require_super(g, h)
    delta = g.min_degree
    stats = {"fault_sets": 0, "bound_pruned": 0, "cut_table": 0, "full_checks": 0}
    if delta <= 1:
        return PersistenceResult(h, 0, None, True, None, stats, ("min_degree_one",))
    for size in range(1, delta):
        for fault in combinations(g.edges, size):
            stats["fault_sets"] += 1
            stats["full_checks"] += 1
            if max_fault_sets is not None and stats["fault_sets"] > max_fault_sets:
                raise BudgetExceeded(f"more than {max_fault_sets} fault sets")
            if not _is_super_safe(g.without_edges(fault), h):
                return PersistenceResult(h, size - 1, tuple(fault), False, None, stats)
    return PersistenceResult(h, delta - 1, None, True, None, stats)
