"""Machine-checkable encodings of the numbered results, run over corpora.

Each :class:`TheoremCheck` pairs a hypothesis with a conclusion, both
evaluated against a :class:`Invariants` cache for one graph.  A cell's
verdict is ``pass``, ``vacuous`` (hypothesis false), ``fail`` (conclusion
false, reproduced on a fresh cache) or ``budget`` (ran out of time).
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .budget import BudgetExceeded, time_budget
from .corpus import CorpusEntry
from .engine import (
    NotExtraConnected,
    has_extra_cut,
    is_super_lambda_h_def,
    is_super_lambda_h_fast,
    lambda_h,
    xi_h,
)
from .families import FamilySpec, generate
from .graph import (
    Graph,
    edge_connectivity,
    eta,
    girth,
    has_four_cycle,
    iter_bits,
    max_independent_boundary_edges,
    vertex_connectivity,
    xi,
)
from .persistence import rho_at_least, rho_h

SCHEMA = "extraconn.corpus/1"


class BadCheckId(KeyError):
    pass


class Invariants:
    """Lazily computed, cached invariants of one graph."""

    def __init__(self, g: Graph, spec: FamilySpec | None = None, seed: int = 0, samples: int = 8, name: str = ""):
        self.g = g
        self.spec = spec
        self.seed = seed
        self.samples = samples
        self.name = name
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def delta(self) -> int:
        return self.g.min_degree

    @property
    def k(self) -> int | None:
        return self.g.regularity()

    @property
    def girth(self) -> float:
        return self._memo("girth", lambda: girth(self.g))

    @property
    def xi(self) -> int:
        return self._memo("xi", lambda: xi(self.g))

    @property
    def eta(self) -> int:
        return self._memo("eta", lambda: eta(self.g))

    @property
    def kappa(self) -> int:
        return self._memo("kappa", lambda: vertex_connectivity(self.g))

    @property
    def lam0(self) -> int:
        return self._memo("lam0", lambda: edge_connectivity(self.g))

    def lam(self, h: int) -> int | None:
        res = self._memo(("lam", h), lambda: lambda_h(self.g, h))
        return None if res is None else res[0]

    def xi_h(self, h: int) -> int | None:
        return self._memo(("xi_h", h), lambda: xi_h(self.g, h))

    def connected_at(self, h: int) -> bool:
        return self._memo(("conn", h), lambda: has_extra_cut(self.g, h))

    def optimal(self, h: int) -> bool:
        return self.connected_at(h) and self.lam(h) == self.xi_h(h)

    def super_check(self, h: int):
        def run():
            try:
                return is_super_lambda_h_def(self.g, h)
            except NotExtraConnected:
                return None

        return self._memo(("super", h), run)

    def super(self, h: int) -> bool:
        return bool(self.super_check(h))

    def super_fast(self, h: int) -> bool:
        return self._memo(("fast", h), lambda: is_super_lambda_h_fast(self.g, h))

    def rho(self, h: int = 1, prune: bool = True):
        return self._memo(("rho", h, prune), lambda: rho_h(self.g, h, prune=prune))

    def rho_at_least(self, m: int, h: int = 1) -> bool:
        """``rho^(h) >= m``, reusing a full rho when one is cached."""
        full = self._cache.get(("rho", h, True))
        if full is not None:
            return full.rho >= m
        return self._memo(("rho_at_least", h, m), lambda: rho_at_least(self.g, h, m))

    def rng(self, tag: str) -> random.Random:
        return random.Random(f"{self.seed}:{self.name}:{tag}")

    @property
    def transitive(self) -> bool:
        return self.spec is not None and self.spec.transitive


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    citation: str
    hypothesis: Callable[[Invariants], bool]
    conclusion: Callable[[Invariants], tuple[bool, object]]
    note: Callable[[Invariants], object] | None = None

    def evaluate(self, inv: Invariants) -> tuple[str, object]:
        """``(verdict, certificate)``; for vacuous cells the certificate slot
        carries the optional note instead."""
        if not self.hypothesis(inv):
            return "vacuous", (self.note(inv) if self.note else None)
        ok, cert = self.conclusion(inv)
        return ("pass", None) if ok else ("fail", cert)


def _ok(flag: bool, cert=None) -> tuple[bool, object]:
    return bool(flag), (None if flag else cert)


# -- individual encodings --------------------------------------------------------


def _is_hub_of_cliques(g: Graph, size: int) -> bool:
    """Whether ``g`` is a hub joined to every vertex of disjoint ``K_size`` copies."""
    n = g.n
    if size < 1 or (n - 1) % size:
        return False
    for hub in range(n):
        if g.degree(hub) != n - 1:
            continue
        rest = g.full_mask & ~(1 << hub)
        ok = True
        for v in iter_bits(rest):
            block = (g.adj[v] & rest) | 1 << v
            if block.bit_count() != size:
                ok = False
                break
            if any((g.adj[u] & rest) | 1 << u != block for u in iter_bits(block)):
                ok = False
                break
        if ok:
            return True
    return False


def _t12_hyp(inv: Invariants) -> bool:
    g = inv.g
    return g.n >= 2 * (inv.delta + 1) and not _is_hub_of_cliques(g, inv.delta)


def _t12(inv: Invariants):
    for h in range(inv.delta + 1):
        lam, x = inv.lam(h), inv.xi_h(h)
        if lam is None or lam > x:
            return False, {"h": h, "lambda_h": lam, "xi_h": x}
    return True, None


def _l14_hyp(h: int):
    return lambda inv: inv.connected_at(h) and inv.lam(h) <= inv.xi_h(h)


def _l14(h: int):
    def run(inv: Invariants):
        a, b = inv.super(h), inv.super_fast(h)
        return _ok(a == b, {"h": h, "definition": a, "criterion": b})

    return run


def _l14_note(inv: Invariants):
    """Levels where lambda^(h) > xi_h, which is exactly where the two super
    tests disagree (the definition needs optimality, the criterion does not)."""
    found = []
    for h in (0, 1, 2):
        if inv.connected_at(h) and inv.lam(h) > inv.xi_h(h):
            found.append({"h": h, "lambda_h": inv.lam(h), "xi_h": inv.xi_h(h),
                          "definition": inv.super(h), "criterion": inv.super_fast(h)})
    return {"outside_scope": found} if found else None


def _t16_hyp(inv: Invariants) -> bool:
    return inv.n >= 2 and any(inv.connected_at(h) and inv.super(h) for h in (0, 1, 2))


def _t16(inv: Invariants):
    g = inv.g
    v = min(range(g.n), key=lambda u: (g.degree(u), u))
    fault = [e for e in g.edges if v in e]
    gf = g.without_edges(fault)
    for h in (0, 1, 2):
        if inv.connected_at(h) and inv.super(h):
            try:
                still = gf.is_connected() and bool(is_super_lambda_h_def(gf, h))
            except NotExtraConnected:
                still = False
            if still:
                return False, {"h": h, "fault": fault}
    return True, None


def _l21(inv: Invariants):
    return _ok(inv.lam0 == inv.delta, {"lambda": inv.lam0, "delta": inv.delta})


def _sample_faults(inv: Invariants, tag: str, max_size: int):
    g = inv.g
    rng = inv.rng(tag)
    out = []
    if max_size < 1 or g.m == 0:
        return out
    for _ in range(inv.samples):
        size = rng.randint(1, min(max_size, g.m))
        out.append(sorted(rng.sample(g.edges, size)))
    return out


def _l22i(inv: Invariants):
    for fault in _sample_faults(inv, "L2.2i", inv.delta - 1):
        gf = inv.g.without_edges(fault)
        if not gf.is_connected() or not has_extra_cut(gf, 1):
            return False, {"fault": fault}
    return True, None


def _l22ii(inv: Invariants):
    base = inv.lam(2)
    for fault in _sample_faults(inv, "L2.2ii", max(1, inv.delta + 1)):
        gf = inv.g.without_edges(fault)
        if not gf.is_connected():
            continue
        res = lambda_h(gf, 2)
        if res is None:
            continue
        if base is None or res[0] < base - len(fault):
            return False, {"fault": fault, "lambda2_faulted": res[0], "lambda2": base}
    return True, None


def _super1_next(inv: Invariants) -> bool:
    return inv.connected_at(1) and inv.super(1)


def _t23(inv: Invariants):
    r = inv.rho(1, prune=False)
    return _ok(r.rho == inv.delta - 1, {"rho": r.rho, "delta": inv.delta})


def _t24_hyp(part: str):
    def hyp(inv: Invariants) -> bool:
        if not (_super1_next(inv) and inv.connected_at(2)):
            return False
        return inv.eta >= inv.delta if part == "i" else inv.eta == inv.g.m

    return hyp


def _t24(part: str):
    def run(inv: Invariants):
        gap = inv.lam(2) - inv.xi - (1 if part == "i" else 0)
        low = min(gap, inv.delta - 1)
        if inv.rho_at_least(low):
            return True, None
        return False, {"rho": inv.rho(1).rho, "lower_bound": low}

    return run


def _cubic_super(inv: Invariants) -> bool:
    return inv.k == 3 and _super1_next(inv)


def _l31(inv: Invariants):
    return _ok(inv.girth > 4 and inv.n != 8, {"girth": inv.girth, "order": inv.n})


def _t32_hyp(inv: Invariants) -> bool:
    return _cubic_super(inv) and inv.n != 8


def _t32(inv: Invariants):
    want = 2 if inv.n in (4, 6) else 1
    r = inv.rho(1)
    return _ok(r.rho == want, {"rho": r.rho, "expected": want})


def _reg_opt2(inv: Invariants, kmin: int) -> bool:
    return inv.k is not None and inv.k >= kmin and inv.connected_at(2) and inv.optimal(2)


def _l33(inv: Invariants):
    want = inv.girth >= 4 or inv.k >= 5
    got = inv.super(1) if inv.connected_at(1) else False
    return _ok(got == want, {"super_lambda1": got, "girth": inv.girth, "k": inv.k})


def _rho_window(low_off: int, high_off: int):
    def run(inv: Invariants):
        if not _super1_next(inv):
            return False, {"reason": "not super-lambda'"}
        r = inv.rho(1)
        lo, hi = inv.k - low_off, inv.k - high_off
        return _ok(lo <= r.rho <= hi, {"rho": r.rho, "window": [lo, hi]})

    return run


def _l36(inv: Invariants):
    g = inv.g
    m = inv.kappa
    rng = inv.rng("L3.6")
    if m < 1 or g.n < 2 * m:
        return True, None
    for _ in range(inv.samples):
        size = rng.randint(m, g.n - m)
        x = rng.sample(range(g.n), size)
        got = max_independent_boundary_edges(g, x)
        if got < m:
            return False, {"x": sorted(x), "independent_edges": got, "m": m}
    return True, None


def _t37_hyp(inv: Invariants) -> bool:
    return (
        _reg_opt2(inv, 5)
        and inv.girth == 3
        and inv.kappa >= inv.k - 2
        and not inv.super(2)
    )


def _super2_reg(inv: Invariants, kmin: int = 4) -> bool:
    return inv.k is not None and inv.k >= kmin and inv.connected_at(2) and inv.super(2)


def _t38i(inv: Invariants):
    if not _super1_next(inv):
        return False, {"reason": "not super-lambda'"}
    r = inv.rho(1)
    return _ok(r.rho == inv.k - 1, {"rho": r.rho, "expected": inv.k - 1})


def _t38ii_hyp(inv: Invariants) -> bool:
    return _super2_reg(inv, 5) and inv.girth == 3


def _t38ii(inv: Invariants):
    if not _super1_next(inv):
        return False, {"reason": "not super-lambda'"}
    if inv.k == 5:
        r = inv.rho(1)
        return _ok(r.rho == 2, {"rho": r.rho, "k": inv.k})
    if inv.rho_at_least(inv.k - 3):
        return True, None
    return False, {"rho": inv.rho(1).rho, "k": inv.k}


def _transitive_k4(inv: Invariants) -> bool:
    return inv.transitive and inv.k is not None and inv.k >= 4


def _l39(inv: Invariants):
    ok = inv.connected_at(2) and inv.optimal(2) and inv.lam(2) == 3 * inv.k - 4
    return _ok(ok, {"lambda2": inv.lam(2), "xi2": inv.xi_h(2)})


def _l310(inv: Invariants):
    return _ok(inv.super(2), {"super_lambda2": False})


def _c311(inv: Invariants):
    if not _super1_next(inv):
        return False, {"reason": "not super-lambda'"}
    r = inv.rho(1)
    return _ok(r.rho == inv.k - 1, {"rho": r.rho})


def _l41(inv: Invariants):
    return _ok(4 * inv.g.m <= inv.n * inv.n, {"m": inv.g.m, "n": inv.n})


def _parts(inv: Invariants, kind: str):
    if inv.spec is None or inv.spec.kind != kind:
        return None
    return [generate(p) for p in inv.spec.parts]


def _t43_hyp(inv: Invariants) -> bool:
    parts = _parts(inv, "join")
    if not parts:
        return False
    k = parts[0].regularity()
    if k is None or any(p.regularity() != k for p in parts):
        return False
    lam1 = 0
    for p in parts:
        pi = Invariants(p)
        if pi.girth <= 3 or not pi.connected_at(0) or not pi.super(0):
            return False
        lam1 += pi.lam(1) if pi.connected_at(1) else 0
    return min(parts[0].n, lam1) > 3 * k - 1


def _t43(inv: Invariants):
    k = inv.k - 1
    if not (inv.connected_at(2) and inv.super(2)):
        return False, {"reason": "not super-lambda''"}
    r = inv.rho(1)
    return _ok(r.rho == k, {"rho": r.rho, "expected": k})


def _hypercube_dim(inv: Invariants) -> int | None:
    spec = inv.spec
    if spec is not None and spec.kind == "atom":
        spec = spec.extra["inner"]
    if spec is not None and spec.kind == "hypercube":
        return spec.params[0]
    return None


def _l44(inv: Invariants):
    n = _hypercube_dim(inv)
    ok = inv.lam(1) == 2 * n - 2 and inv.optimal(1)
    if n >= 3:
        ok = ok and inv.super(0)
    return _ok(ok, {"lambda1": inv.lam(1), "n": n})


def _c45(inv: Invariants):
    n = _hypercube_dim(inv)
    if not (inv.super(2) and inv.super(1)):
        return False, {"super_lambda2": inv.super(2), "super_lambda1": inv.super(1)}
    r = inv.rho(1)
    return _ok(r.rho == n - 1, {"rho": r.rho, "expected": n - 1})


def _t47_hyp(inv: Invariants) -> bool:
    parts = _parts(inv, "ring")
    if not parts or len(parts) < 4:
        return False
    k = parts[0].regularity()
    if k is None or k < 3 or any(p.regularity() != k for p in parts):
        return False
    if parts[0].n <= math.ceil((3 * k + 2) / 2):
        return False
    return all(girth(p) > 3 and edge_connectivity(p) >= k for p in parts)


def _t47(inv: Invariants):
    k = inv.k - 2
    if not (inv.connected_at(2) and inv.super(2)):
        return False, {"reason": "not super-lambda''"}
    r = inv.rho(1)
    return _ok(r.rho == k + 1, {"rho": r.rho, "expected": k + 1})


def _chain(inv: Invariants):
    prev = None
    for h in range(min(inv.delta, 3) + 1):
        if not inv.connected_at(h):
            break
        lam = inv.lam(h)
        if prev is not None and lam < prev:
            return False, {"h": h, "lambda_h": lam, "previous": prev}
        prev = lam
    return True, None


def _circulant_params(inv: Invariants):
    spec = inv.spec
    if spec is None or spec.kind != "circulant":
        return None
    n, d = spec.params
    for m in range(1, 8):
        c, r = divmod(n, d**m)
        if r == 0 and 1 < c < d:
            return c, d, m
    return None


def _circ_hyp(inv: Invariants) -> bool:
    p = _circulant_params(inv)
    return p is not None and p[0] != 3 and p[1] >= 4 and p[2] >= 2


def _circ(inv: Invariants):
    c, _, m = _circulant_params(inv)
    want = 2 * m if c == 2 else 2 * m + 1
    if not inv.super(2):
        return False, {"reason": "not super-lambda''"}
    r = inv.rho(1)
    return _ok(r.rho == want, {"rho": r.rho, "expected": want})


def _circ_degree_hyp(inv: Invariants) -> bool:
    return _circulant_params(inv) is not None


def _circ_degree(inv: Invariants):
    c, _, m = _circulant_params(inv)
    want = 2 * m + 1 if c == 2 else 2 * m + 2
    return _ok(inv.k == want, {"measured_degree": inv.k, "formula": want})


def _torus_dims(inv: Invariants):
    if inv.spec is None or inv.spec.kind != "torus":
        return None
    return inv.spec.params


def _torus_hyp(inv: Invariants) -> bool:
    dims = _torus_dims(inv)
    return dims is not None and len(dims) >= 3 and min(dims) >= 4


def _torus(inv: Invariants):
    n = len(_torus_dims(inv))
    if not inv.super(2):
        return False, {"reason": "not super-lambda''"}
    r = inv.rho(1)
    return _ok(r.rho == 2 * n - 1, {"rho": r.rho, "expected": 2 * n - 1})


def builtin_checks() -> list[TheoremCheck]:
    """One check per numbered result; parts (i)/(ii) are separate entries and
    the three-level lemma on super status is checked at h = 0, 1, 2 inside
    one entry."""
    l14_hyps = [_l14_hyp(h) for h in (0, 1, 2)]
    l14_runs = [_l14(h) for h in (0, 1, 2)]

    def l14_hyp(inv):
        return any(hyp(inv) for hyp in l14_hyps)

    def l14(inv):
        for hyp, run in zip(l14_hyps, l14_runs):
            if hyp(inv):
                ok, cert = run(inv)
                if not ok:
                    return ok, cert
        return True, None

    return [
        TheoremCheck("T1.2", "lambda^(h) exists and is at most xi_h for 0 <= h <= delta", _t12_hyp, _t12),
        TheoremCheck("L1.4", "super-lambda^(h) iff no (h+1)-extra cut of size <= xi_h", l14_hyp, l14, _l14_note),
        TheoremCheck("T1.6", "rho^(h) <= delta - 1", _t16_hyp, _t16),
        TheoremCheck("L2.1", "lambda'-optimal implies lambda = delta", lambda i: i.connected_at(1) and i.optimal(1), _l21),
        TheoremCheck("L2.2i", "lambda'-optimal and |F| <= delta-1 keep G-F lambda'-connected",
                     lambda i: i.connected_at(1) and i.optimal(1), _l22i),
        TheoremCheck("L2.2ii", "lambda''(G-F) >= lambda''(G) - |F|", lambda i: i.connected_at(1), _l22ii),
        TheoremCheck("T2.3", "super-lambda' without 2-extra cuts gives rho' = delta - 1",
                     lambda i: _super1_next(i) and not i.connected_at(2), _t23),
        TheoremCheck("T2.4i", "rho' >= min(lambda''-xi-1, delta-1) when eta >= delta", _t24_hyp("i"), _t24("i")),
        TheoremCheck("T2.4ii", "rho' >= min(lambda''-xi, delta-1) when edge-regular", _t24_hyp("ii"), _t24("ii")),
        TheoremCheck("L3.1", "3-regular super-lambda' of order >= 8: girth > 4 and order != 8",
                     lambda i: _cubic_super(i) and i.n >= 8, _l31),
        TheoremCheck("T3.2", "3-regular super-lambda': rho' = 2 on 4 or 6 vertices, 1 from 10 on", _t32_hyp, _t32),
        TheoremCheck("L3.3", "k-regular lambda''-optimal, k >= 4: super-lambda' iff girth >= 4 or k >= 5",
                     lambda i: _reg_opt2(i, 4), _l33),
        TheoremCheck("T3.4", "k-regular lambda''-optimal, girth >= 4: k-2 <= rho' <= k-1",
                     lambda i: _reg_opt2(i, 4) and i.girth >= 4, _rho_window(2, 1)),
        TheoremCheck("L3.6", "m-connected: at least m independent boundary edges", lambda i: i.n >= 2, _l36),
        TheoremCheck("T3.7", "girth 3, k >= 5, (k-2)-connected, not super-lambda'': k-4 <= rho' <= k-3",
                     _t37_hyp, _rho_window(4, 3)),
        TheoremCheck("T3.8i", "k-regular super-lambda'', girth >= 4: rho' = k-1",
                     lambda i: _super2_reg(i) and i.girth >= 4, _t38i),
        TheoremCheck("T3.8ii", "k-regular super-lambda'', girth 3: rho' = 2 (k = 5), >= k-3 (k >= 6)",
                     _t38ii_hyp, _t38ii),
        TheoremCheck("L3.9", "transitive, k >= 4, girth >= 5: lambda''-optimal with lambda'' = 3k-4",
                     lambda i: _transitive_k4(i) and i.girth >= 5, _l39),
        TheoremCheck("L3.10", "C4-free transitive lambda''-optimal, k >= 4: super-lambda''",
                     lambda i: _transitive_k4(i) and not has_four_cycle(i.g) and i.connected_at(2) and i.optimal(2),
                     _l310),
        TheoremCheck("C3.11", "transitive, k >= 4, girth >= 5: rho' = k-1",
                     lambda i: _transitive_k4(i) and i.girth >= 5, _c311),
        TheoremCheck("L4.1", "triangle-free graphs have at most n^2/4 edges", lambda i: i.girth > 3, _l41),
        TheoremCheck("T4.3", "matching join of triangle-free super-lambda parts: super-lambda'', rho' = k",
                     _t43_hyp, _t43),
        TheoremCheck("L4.4", "hypercube Q_n: lambda' = 2n-2 (optimal), super-lambda for n >= 3",
                     lambda i: (_hypercube_dim(i) or 0) >= 2, _l44),
        TheoremCheck("C4.5", "hypercube Q_n, n >= 5: super-lambda'', super-lambda', rho' = n-1",
                     lambda i: (_hypercube_dim(i) or 0) >= 5, _c45),
        TheoremCheck("T4.7", "ring of triangle-free k-regular k-edge-connected parts: super-lambda'', rho' = k+1",
                     _t47_hyp, _t47),
    ]


def extra_checks() -> list[TheoremCheck]:
    """Checks for unnumbered statements and bookkeeping facts."""
    return [
        TheoremCheck("chain", "lambda^(0) <= lambda^(1) <= ... where defined", lambda i: i.n >= 2, _chain),
        TheoremCheck("circulant-rho", "recursive circulant G(cd^m, d): super-lambda'', rho' = 2m or 2m+1",
                     _circ_hyp, _circ),
        TheoremCheck("circulant-degree", "recursive circulant degree 2m+1 (c = 2) or 2m+2 (c > 2)",
                     _circ_degree_hyp, _circ_degree),
        TheoremCheck("torus-rho", "toroidal mesh, n >= 3, all d_i >= 4: super-lambda'', rho' = 2n-1",
                     _torus_hyp, _torus),
    ]


def all_checks() -> dict[str, TheoremCheck]:
    return {c.id: c for c in builtin_checks() + extra_checks()}


def select_checks(ids: list[str] | None) -> list[TheoremCheck]:
    table = all_checks()
    if not ids:
        return list(table.values())
    unknown = [i for i in ids if i not in table]
    if unknown:
        raise BadCheckId(", ".join(unknown))
    return [table[i] for i in ids]


# -- running ------------------------------------------------------------------------


@dataclass
class CorpusReport:
    seed: int
    check_ids: list[str]
    rows: list[dict] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "vacuous": 0, "fail": 0, "budget": 0, "error": 0}
        for row in self.rows:
            for cell in row["checks"]:
                out[cell["verdict"]] += 1
        return out

    @property
    def failures(self) -> list[tuple[str, dict]]:
        return [(r["graph"], c) for r in self.rows for c in r["checks"] if c["verdict"] == "fail"]

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "schema": SCHEMA,
            "seed": self.seed,
            "checks": self.check_ids,
            "counts": self.counts,
            "graphs": self.rows,
        }
        if timings:
            out["timings"] = self.timings
        return out


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    return obj


def run_check(check: TheoremCheck, entry: CorpusEntry, inv: Invariants, budget: float | None) -> dict:
    try:
        with time_budget(budget):
            verdict, cert = check.evaluate(inv)
    except BudgetExceeded:
        return {"id": check.id, "verdict": "budget"}
    cell = {"id": check.id, "verdict": verdict}
    if verdict == "vacuous":
        if cert is not None:
            cell["note"] = _jsonable(cert)
        return cell
    if verdict == "fail":
        fresh = Invariants(entry.graph, entry.spec, inv.seed, inv.samples, inv.name)
        try:
            with time_budget(budget):
                again, _ = check.evaluate(fresh)
        except BudgetExceeded:
            again = "budget"
        if again != "fail":
            cell["verdict"] = "error"
        cell["certificate"] = _jsonable(cert)
    return cell


def run_corpus(corpus: list[CorpusEntry], checks: list[TheoremCheck], budget: float | None = None,
               seed: int = 0, samples: int = 8) -> CorpusReport:
    """Evaluate every check on every corpus graph; ``budget`` caps each cell in seconds."""
    report = CorpusReport(seed, [c.id for c in checks])
    for entry in corpus:
        inv = Invariants(entry.graph, entry.spec, seed, samples, entry.name)
        cells = []
        start = time.perf_counter()
        for check in checks:
            cells.append(run_check(check, entry, inv, budget))
        report.timings[entry.name] = round(time.perf_counter() - start, 4)
        report.rows.append({"graph": entry.name, "checks": cells})
    return report
