"""Exhaustive search for a magic orientation-plus-labeling of a small graph.

The search interleaves label choices with arc choices: vertices are visited in
maximum-adjacency order, and each edge is oriented at the moment its second
endpoint is labeled.  The magic constant is never enumerated; it is pinned by
the first vertex whose incident arcs are all decided.  Pruning rules:

  weight    a fully decided vertex whose weight differs from the pinned constant
  interval  a partly decided vertex whose achievable weights, bounded through
            the unused label pool, cannot reach the pinned constant
  parity    the 0/1 label-parity pattern fixed so far extends to no solution of
            the weight-parity system with exactly N/2 odd labels

All three rules only discard assignments that cannot extend to a witness, so
an exhausted search is a sound nonexistence verdict.  Fixing the first arc
halves the space and is existence-preserving (reversing every arc maps
witnesses to witnesses, negating the constant); restricting the first label to
one representative per unit-scaling orbit is available behind a toggle.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from time import perf_counter
from typing import Dict, List, Optional, Sequence, Tuple

from .graphs import Orientation, UndirectedGraph
from .obstructions import parity_solutions
from .verifier import Labeling, MagicCertificate, verify

__all__ = [
    "SearchConfig",
    "SearchStats",
    "SearchOutcome",
    "VERDICT_WITNESS",
    "VERDICT_EXHAUSTED",
    "VERDICT_INCONCLUSIVE",
    "decide_existence",
]

VERDICT_WITNESS = "witness"
VERDICT_EXHAUSTED = "exhausted-no-solution"
VERDICT_INCONCLUSIVE = "inconclusive"

_PRUNE_KEYS = ("weight", "interval", "parity")


@dataclass(frozen=True)
class SearchConfig:
    """Budgets, reductions, and determinism knobs for the search.

    With workers > 1 the top two label choices are expanded into independent
    subtree jobs; budgets then apply per subtree, and which witness is found
    first is no longer determined by the config alone.
    """

    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    workers: int = 1
    fix_first_arc: bool = True
    unit_scaling: bool = False
    parity_prune: bool = True
    parity_list_cap: int = 4096
    seed: int = 0

    def __post_init__(self) -> None:
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: Dict[str, int] = field(default_factory=lambda: {k: 0 for k in _PRUNE_KEYS})
    elapsed: float = 0.0


@dataclass
class SearchOutcome:
    verdict: str
    certificate: Optional[MagicCertificate]
    stats: SearchStats


class _OutOfBudget(Exception):
    pass


def _visit_order(graph: UndirectedGraph) -> List[int]:
    """Maximum-adjacency order: next vertex has most labeled neighbors."""
    n = graph.vertex_count
    chosen = [False] * n
    conn = [0] * n
    order = []
    for _ in range(n):
        best = -1
        key = None
        for v in range(n):
            if chosen[v]:
                continue
            k = (conn[v], graph.degree(v), -v)
            if key is None or k > key:
                key = k
                best = v
        order.append(best)
        chosen[best] = True
        for nb in graph.neighbors(best):
            conn[nb] += 1
    return order


def _unit_orbit_reps(modulus: int) -> frozenset:
    reps = {0}
    for d in range(1, modulus):
        if modulus % d == 0:
            reps.add(d)
    return frozenset(reps)


class _Engine:
    def __init__(self, graph: UndirectedGraph, config: SearchConfig,
                 pinned: Optional[Dict[int, int]] = None) -> None:
        self.graph = graph
        self.config = config
        self.pinned = pinned or {}
        n = graph.vertex_count
        self.n = n
        self.mod = n
        self.edges = graph.edges
        self.incident = [graph.incident(v) for v in range(n)]
        self.deg = [graph.degree(v) for v in range(n)]
        order = _visit_order(graph)
        pos = {v: i for i, v in enumerate(order)}
        self.steps: List[Tuple] = []
        for v in order:
            self.steps.append((0, v))
            back = sorted((e, u) for e, u in self.incident[v] if pos[u] < pos[v])
            for e, u in back:
                self.steps.append((1, e, u, v))
        self.first_orient_si = next(
            (i for i, s in enumerate(self.steps) if s[0] == 1), -1)
        self.labels = [-1] * n
        self.used = 0
        self.bits = [-1] * len(self.edges)
        self.pw = [0] * n
        self.und = list(self.deg)
        self.mu: Optional[int] = None
        self.stats = SearchStats()
        self.witness: Optional[MagicCertificate] = None
        base = list(range(n))
        if config.seed != 0:
            random.Random(config.seed).shuffle(base)
        self.base_label_order = base
        self.unit_reps = _unit_orbit_reps(n) if config.unit_scaling else None
        self.t0 = 0.0

    def run(self) -> SearchOutcome:
        self.t0 = perf_counter()
        psols = self._root_parity_candidates()
        if psols is not None and not psols:
            self.stats.prunes["parity"] += 1
            self.stats.elapsed = perf_counter() - self.t0
            return SearchOutcome(VERDICT_EXHAUSTED, None, self.stats)
        try:
            found = self._dfs(0, psols)
        except _OutOfBudget:
            self.stats.elapsed = perf_counter() - self.t0
            return SearchOutcome(VERDICT_INCONCLUSIVE, None, self.stats)
        self.stats.elapsed = perf_counter() - self.t0
        if found:
            return SearchOutcome(VERDICT_WITNESS, self.witness, self.stats)
        return SearchOutcome(VERDICT_EXHAUSTED, None, self.stats)

    def _root_parity_candidates(self) -> Optional[List[Tuple[int, int]]]:
        if not self.config.parity_prune or self.mod % 2 != 0:
            return None
        sols = parity_solutions(self.graph, max_solutions=self.config.parity_list_cap)
        if sols is None:
            return None
        return [(mask, c) for c in (0, 1) for mask in sols[c]]

    def _tick(self) -> None:
        self.stats.nodes += 1
        cfg = self.config
        if cfg.node_budget is not None and self.stats.nodes > cfg.node_budget:
            raise _OutOfBudget()
        if cfg.time_budget is not None and (self.stats.nodes & 1023) == 0:
            if perf_counter() - self.t0 > cfg.time_budget:
                raise _OutOfBudget()

    def _label_candidates(self, si: int) -> Sequence[int]:
        if si in self.pinned:
            lam = self.pinned[si]
            return [lam] if not (self.used >> lam) & 1 else []
        used = self.used
        out = [lam for lam in self.base_label_order if not (used >> lam) & 1]
        if si == 0 and self.unit_reps is not None:
            out = [lam for lam in out if lam in self.unit_reps]
        return out

    def _interval_ok(self, x: int) -> bool:
        """Can the pending contributions to x still reach the pinned constant?"""
        pending: List[int] = []
        k_unlabeled = 0
        for e, y in self.incident[x]:
            if self.bits[e] != -1:
                continue
            ly = self.labels[y]
            if ly >= 0:
                pending.append(ly)
            else:
                k_unlabeled += 1
        mod = self.mod
        need = (self.mu - self.pw[x]) % mod
        if k_unlabeled == 0 and len(pending) <= 3:
            achievable = {0}
            for val in pending:
                achievable = {s + val for s in achievable} | {s - val for s in achievable}
            return any(s % mod == need for s in achievable)
        lo = -sum(pending)
        hi = sum(pending)
        if k_unlabeled:
            total = 0
            count = 0
            lam = mod - 1
            used = self.used
            while count < k_unlabeled and lam >= 0:
                if not (used >> lam) & 1:
                    total += lam
                    count += 1
                lam -= 1
            lo -= total
            hi += total
        if hi - lo + 1 >= mod:
            return True
        t0 = lo + ((need - lo) % mod)
        return t0 <= hi

    def _dfs(self, si: int, psols: Optional[List[Tuple[int, int]]]) -> bool:
        if si == len(self.steps):
            return self._record_witness()
        step = self.steps[si]
        if step[0] == 0:
            v = step[1]
            for lam in self._label_candidates(si):
                self._tick()
                self.labels[v] = lam
                self.used |= 1 << lam
                mu_was = self.mu
                ok = True
                newp = psols
                if psols is not None:
                    bit = lam & 1
                    newp = [s for s in psols if (s[0] >> v) & 1 == bit]
                    if not newp:
                        self.stats.prunes["parity"] += 1
                        ok = False
                if ok and self.deg[v] == 0:
                    if self.mu is None:
                        self.mu = 0
                        if newp is not None:
                            newp = [s for s in newp if s[1] == 0]
                            if not newp:
                                self.stats.prunes["parity"] += 1
                                ok = False
                    elif self.mu != 0:
                        self.stats.prunes["weight"] += 1
                        ok = False
                if ok and self.mu is not None:
                    if self.und[v] > 0 and not self._interval_ok(v):
                        self.stats.prunes["interval"] += 1
                        ok = False
                    else:
                        for _, y in self.incident[v]:
                            if self.labels[y] >= 0 and self.und[y] > 0 and not self._interval_ok(y):
                                self.stats.prunes["interval"] += 1
                                ok = False
                                break
                if ok and self._dfs(si + 1, newp):
                    return True
                self.labels[v] = -1
                self.used &= ~(1 << lam)
                self.mu = mu_was
            return False
        _, e, u, v = step
        eu, ev = self.edges[e]
        if self.config.fix_first_arc and si == self.first_orient_si:
            candidates: Tuple[int, ...] = (0,)
        else:
            candidates = (0, 1)
        for b in candidates:
            self._tick()
            tail, head = (eu, ev) if b == 0 else (ev, eu)
            lt = self.labels[tail]
            lh = self.labels[head]
            self.bits[e] = b
            self.pw[head] += lt
            self.pw[tail] -= lh
            self.und[tail] -= 1
            self.und[head] -= 1
            mu_was = self.mu
            ok = True
            newp = psols
            for x in (tail, head):
                if self.und[x] == 0:
                    wx = self.pw[x] % self.mod
                    if self.mu is None:
                        self.mu = wx
                        if newp is not None:
                            newp = [s for s in newp if s[1] == wx & 1]
                            if not newp:
                                self.stats.prunes["parity"] += 1
                                ok = False
                                break
                    elif wx != self.mu:
                        self.stats.prunes["weight"] += 1
                        ok = False
                        break
            if ok and self.mu is not None:
                for x in (tail, head):
                    if self.und[x] > 0 and not self._interval_ok(x):
                        self.stats.prunes["interval"] += 1
                        ok = False
                        break
            if ok and self._dfs(si + 1, newp):
                return True
            self.bits[e] = -1
            self.pw[head] -= lt
            self.pw[tail] += lh
            self.und[tail] += 1
            self.und[head] += 1
            self.mu = mu_was
        return False

    def _record_witness(self) -> bool:
        labeling = Labeling(self.mod, tuple(self.labels))
        orientation = Orientation(self.graph, tuple(self.bits))
        result = verify(self.graph, orientation, labeling)
        if not isinstance(result, MagicCertificate):
            raise RuntimeError("search reached a non-magic full assignment; this is a defect")
        self.witness = result
        return True


def _run_job(args: Tuple) -> Tuple[str, Optional[Tuple], int, Dict[str, int]]:
    vertex_count, edges, cfg_kwargs, pinned = args
    graph = UndirectedGraph(vertex_count, edges)
    config = SearchConfig(**cfg_kwargs)
    outcome = _Engine(graph, config, pinned=pinned).run()
    cert = None
    if outcome.certificate is not None:
        cert = (outcome.certificate.labeling.labels, outcome.certificate.orientation.bits)
    return outcome.verdict, cert, outcome.stats.nodes, outcome.stats.prunes


def _run_parallel(graph: UndirectedGraph, config: SearchConfig) -> SearchOutcome:
    from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait

    t0 = perf_counter()
    stats = SearchStats()
    probe = _Engine(graph, config)
    psols = probe._root_parity_candidates()
    if psols is not None and not psols:
        stats.prunes["parity"] += 1
        stats.elapsed = perf_counter() - t0
        return SearchOutcome(VERDICT_EXHAUSTED, None, stats)
    first = list(probe._label_candidates(0))
    n = graph.vertex_count
    jobs = [(lam0, lam1) for lam0 in first for lam1 in range(n) if lam1 != lam0]
    cfg_kwargs = asdict(config)
    cfg_kwargs["workers"] = 1
    payloads = [(n, graph.edges, cfg_kwargs, {0: lam0, 1: lam1}) for lam0, lam1 in jobs]
    witness: Optional[MagicCertificate] = None
    verdicts: List[str] = []
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        futures = [pool.submit(_run_job, p) for p in payloads]
        pending = set(futures)
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            stop = False
            for fut in done:
                verdict, cert, nodes, prunes = fut.result()
                verdicts.append(verdict)
                stats.nodes += nodes
                for k, x in prunes.items():
                    stats.prunes[k] = stats.prunes.get(k, 0) + x
                if verdict == VERDICT_WITNESS and witness is None:
                    labels, bits = cert
                    labeling = Labeling(n, tuple(labels))
                    orientation = Orientation(graph, tuple(bits))
                    result = verify(graph, orientation, labeling)
                    if not isinstance(result, MagicCertificate):
                        raise RuntimeError("parallel worker returned a bad witness; this is a defect")
                    witness = result
                    stop = True
            if stop:
                for fut in pending:
                    fut.cancel()
                break
    stats.elapsed = perf_counter() - t0
    if witness is not None:
        return SearchOutcome(VERDICT_WITNESS, witness, stats)
    if any(v == VERDICT_INCONCLUSIVE for v in verdicts):
        return SearchOutcome(VERDICT_INCONCLUSIVE, None, stats)
    return SearchOutcome(VERDICT_EXHAUSTED, None, stats)


def decide_existence(graph: UndirectedGraph, config: Optional[SearchConfig] = None) -> SearchOutcome:
    """Search for a magic orientation-plus-labeling of the graph.

    Returns a witness certificate, a sound exhausted-no-solution verdict, or
    inconclusive when a budget ran out before the space was covered.
    """
    if graph.vertex_count < 1:
        raise ValueError("search needs at least one vertex")
    config = config or SearchConfig()
    if config.workers > 1 and graph.vertex_count >= 2:
        return _run_parallel(graph, config)
    return _Engine(graph, config).run()
