"""Exact h-extra edge-connectivity, optimality and super status.

Every minimum h-extra edge-cut ``F`` equals ``E_G(D)`` for each component
``D`` of ``G - F`` (otherwise ``E_G(D)`` would be a strictly smaller h-extra
cut).  So the minimum can be taken over connected sets ``X`` whose
complement splits into components of order ``> h``, and it suffices to look
at ``|X| <= n/2`` because the smallest component of a minimum cut always
qualifies.  The searches below stream such sets from
:func:`extraconn.graph.connected_sets` with a sound lower bound for pruning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .budget import BudgetExceeded, check_budget
from .graph import (
    BadRange,
    Fragment,
    Graph,
    component_masks,
    connected_sets,
    iter_bits,
    make_fragment,
    xi_h,
)


class ExtraConnError(ValueError):
    pass


class DisconnectedInput(ExtraConnError):
    def __init__(self, sizes: list[int]):
        self.component_sizes = sorted(sizes)
        super().__init__(f"input graph is disconnected; component orders {self.component_sizes}")


class NotExtraConnected(ExtraConnError):
    """No h-extra edge-cut exists, so the level-h invariants are undefined."""


class InternalInconsistency(RuntimeError):
    pass


def require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedInput([c.bit_count() for c in component_masks(g.adj, g.full_mask)])


def _check_level(h: int) -> None:
    if h < 0:
        raise BadRange("h must be non-negative")


def _candidates(g: Graph, h: int, bound: list | None, level_sizes: int | None = None):
    """Connected ``X`` with ``h+1 <= |X| <= n/2`` whose complement components
    all have more than ``h`` vertices, as ``(mask, d(X), complement comps)``.

    Sets with ``d(X) > bound[0]`` are skipped (and pruned where sound)."""
    adj, full = g.adj, g.full_mask
    top = g.n // 2 if level_sizes is None else level_sizes
    for x, _, d in connected_sets(adj, g.degrees, h + 1, top, bound):
        check_budget()
        if bound is not None and d > bound[0]:
            continue
        comps = component_masks(adj, full & ~x)
        if all(c.bit_count() > h for c in comps):
            yield x, d, comps


def _members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def _isolates(x: int, comps: list[int], h: int) -> bool:
    return x.bit_count() == h + 1 or any(c.bit_count() == h + 1 for c in comps)


def _cut_key(x: int, comps: list[int]) -> tuple[int, ...]:
    return tuple(sorted([x, *comps]))


def _minimum(g: Graph, h: int, start: float):
    best = [start]
    found = None
    for x, d, _ in _candidates(g, h, best):
        key = (d, _members(x))
        if found is None or key < found:
            found = key
            best[0] = d
    return found


def lambda_h(g: Graph, h: int) -> tuple[int, Fragment] | None:
    """``(lambda^(h)(G), witness)`` or ``None`` when ``G`` has no h-extra cut.

    The witness is the minimizing side with ``|X| <= n/2`` that is smallest
    in (boundary size, sorted vertex tuple) order."""
    _check_level(h)
    require_connected(g)
    if g.n < 2 * (h + 1):
        return None
    xi = xi_h(g, h)
    found = _minimum(g, h, math.inf if xi is None else xi)
    if found is None and xi is not None:
        # lambda^(h) may exceed xi_h (or not exist): search without a ceiling
        found = _minimum(g, h, math.inf)
    if found is None:
        return None
    d, members = found
    return d, make_fragment(g, members)


def lambda_value(g: Graph, h: int) -> int | None:
    res = lambda_h(g, h)
    return None if res is None else res[0]


def has_extra_cut(g: Graph, h: int) -> bool:
    """Whether ``G`` is lambda^(h)-connected (stops at the first cut found)."""
    _check_level(h)
    require_connected(g)
    if g.n < 2 * (h + 1):
        return False
    return next(_candidates(g, h, None), None) is not None


def is_lambda_h_optimal(g: Graph, h: int) -> bool:
    res = lambda_h(g, h)
    return res is not None and res[0] == xi_h(g, h)


# -- oracles -----------------------------------------------------------------


def _is_extra_cut(g: Graph, fault: tuple[int, ...], h: int) -> bool:
    adj = list(g.adj)
    for i in fault:
        u, v = g.edges[i]
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    comps = component_masks(adj, g.full_mask)
    return len(comps) > 1 and all(c.bit_count() > h for c in comps)


def lambda_h_oracle(g: Graph, h: int, max_subsets: int | None = 2_000_000) -> int | None:
    """Smallest ``|F|`` such that ``G - F`` is disconnected with every
    component of order ``> h``, by trying edge subsets in increasing size.

    Returns ``None`` when no such ``F`` exists.  Raises
    :class:`BudgetExceeded` after ``max_subsets`` subsets."""
    _check_level(h)
    if g.n < 2 * (h + 1):
        return None
    tried = 0
    for size in range(g.m + 1):
        for fault in combinations(range(g.m), size):
            tried += 1
            if max_subsets is not None and tried > max_subsets:
                raise BudgetExceeded(f"edge-subset oracle exceeded {max_subsets} subsets")
            if _is_extra_cut(g, fault, h):
                return size
    return None


def lambda_h_bipartition(g: Graph, h: int) -> int | None:
    """Same value as :func:`lambda_h_oracle`, minimised over all vertex
    bipartitions ``(A, B)`` whose two sides induce components of order
    ``> h`` only.  Exponential in ``n`` rather than ``m``; meant for
    ``n <= 16``.

    Any h-extra cut contains ``[D, V - D]`` for a component ``D`` of
    ``G - F``, and that bipartition qualifies; conversely every qualifying
    bipartition's crossing edges form an h-extra cut."""
    _check_level(h)
    n, adj = g.n, g.adj
    if n < 2 * (h + 1):
        return None
    best = None
    full = g.full_mask
    # vertex n-1 always on side B so each bipartition is seen once
    for a in range(1, 1 << (n - 1)):
        b = full & ~a
        if a.bit_count() <= h or b.bit_count() <= h:
            continue
        if any(c.bit_count() <= h for c in component_masks(adj, a)):
            continue
        if any(c.bit_count() <= h for c in component_masks(adj, b)):
            continue
        d = sum((adj[v] & b).bit_count() for v in iter_bits(a))
        if best is None or d < best:
            best = d
    return best


# -- super status ------------------------------------------------------------


@dataclass(frozen=True)
class SuperCheck:
    """Outcome of the definition-based super test.

    ``reason`` is ``"super"``, ``"below_xi"`` (a cut smaller than xi_h),
    ``"not_isolating"`` (a minimum cut with no component of order h+1) or
    ``"above_xi"`` (every cut exceeds xi_h).  ``certificate`` is the side
    of an offending cut."""

    is_super: bool
    reason: str
    certificate: Fragment | None = None

    def __bool__(self) -> bool:
        return self.is_super


def is_super_lambda_h_def(g: Graph, h: int) -> SuperCheck:
    """Super-lambda^(h) by definition: optimal, and every minimum cut isolates
    a component of order exactly ``h + 1``."""
    _check_level(h)
    require_connected(g)
    if g.n < 2 * (h + 1):
        raise NotExtraConnected(f"graph has no {h}-extra edge-cut")
    xi = xi_h(g, h)
    seen = False
    for x, d, comps in _candidates(g, h, [xi]):
        if d < xi:
            return SuperCheck(False, "below_xi", make_fragment(g, x))
        if not _isolates(x, comps, h):
            return SuperCheck(False, "not_isolating", make_fragment(g, x))
        seen = True
    if seen:
        return SuperCheck(True, "super")
    res = lambda_h(g, h)
    if res is None:
        raise NotExtraConnected(f"graph has no {h}-extra edge-cut")
    return SuperCheck(False, "above_xi", res[1])


def is_super_lambda_h_fast(g: Graph, h: int) -> bool:
    """Super test through the (h+1)-level criterion: true iff ``G`` has no
    (h+1)-extra cut of size ``<= xi_h``.  Needs an h-extra cut to exist."""
    if not has_extra_cut(g, h):
        raise NotExtraConnected(f"graph has no {h}-extra edge-cut")
    xi = xi_h(g, h)
    if g.n < 2 * (h + 2):
        return True
    return next(_candidates(g, h + 1, [xi]), None) is None


# -- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class ExtraConnReport:
    h: int
    exists: bool
    lambda_h: int | None
    xi_h: int | None
    optimal: bool
    super: bool
    witness: Fragment | None
    all_min_fragments_count: int
    violation: Fragment | None = None
    beyond_delta: bool = False

    def __post_init__(self):
        if self.optimal and not (self.exists and self.lambda_h == self.xi_h):
            raise InternalInconsistency("optimal report without lambda_h == xi_h")
        if self.super and not self.optimal:
            raise InternalInconsistency("super report that is not optimal")


def report_level(g: Graph, h: int) -> ExtraConnReport:
    """All level-h invariants, including the number of distinct minimum cuts."""
    res = lambda_h(g, h)
    xi = xi_h(g, h)
    beyond = h > g.min_degree
    if res is None:
        return ExtraConnReport(h, False, None, xi, False, False, None, 0, beyond_delta=beyond)
    lam, witness = res
    cuts = {}
    bad = None
    for x, d, comps in _candidates(g, h, [lam]):
        if d != lam:
            continue
        cuts[_cut_key(x, comps)] = True
        if not _isolates(x, comps, h):
            key = _members(x)
            if bad is None or key < bad:
                bad = key
    optimal = lam == xi
    is_super = optimal and bad is None
    violation = make_fragment(g, bad) if bad is not None else None
    return ExtraConnReport(h, True, lam, xi, optimal, is_super, witness, len(cuts), violation, beyond)


def full_report(g: Graph, h_max: int) -> list[ExtraConnReport]:
    """Reports for ``h = 0..h_max``; the lambda values must be non-decreasing
    in ``h`` wherever they exist."""
    _check_level(h_max)
    require_connected(g)
    reports = [report_level(g, h) for h in range(h_max + 1)]
    prev = None
    for r in reports:
        if r.exists:
            if prev is not None and r.lambda_h < prev:
                raise InternalInconsistency(f"lambda values decrease at h={r.h}")
            prev = r.lambda_h
    return reports
