"""Exact minimum strength of small graphs by threshold search.

``feasible(g, s)`` decides whether some labeling keeps every edge sum <= s.
Labels are handed out from N downwards. Once label m goes to vertex u, every
unlabeled neighbour of u gets the cap s - m on its own future label. A partial
assignment is abandoned as soon as the caps of the unlabeled vertices fail
Hall's condition against the labels that remain.

Two reductions keep the tree small:

* symmetry: when the graph carries an automorphism group, only one vertex per
  orbit of the pointwise stabiliser of the labeled vertices is tried;
* memoisation: the future of a node depends only on which vertices are
  unlabeled and on their caps (clipped to the largest remaining label), so
  failed (unlabeled set, caps) states are remembered.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Sequence

from .bits import BitString
from .labeling import canonical_labeling
from .strength import Graph, strength_of_labeling

MEMO_LIMIT = 4_000_000
MAX_GROUP_ORDER = 50_000


@dataclass(frozen=True)
class SolveBudget:
    time_limit: float | None = 60.0
    node_limit: int | None = None

    def __post_init__(self):
        if self.time_limit is None and self.node_limit is None:
            raise ValueError("set at least one of time_limit / node_limit")


@dataclass
class Feasibility:
    status: str  # "yes", "no", "timeout" or "node_limit"
    labeling: tuple[int, ...] | None
    nodes: int


@dataclass
class SolveOutcome:
    status: str  # "optimal", "feasible_only" or "timeout"
    best_value: int
    best_labeling: tuple[int, ...]
    nodes_explored: int
    lower_floor: int = 0
    history: list[tuple[int, str]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_json(self, g: Graph) -> dict:
        return {
            "graph": g.name,
            "status": self.status,
            "best_value": str(self.best_value),
            "nodes_explored": self.nodes_explored,
            "lower_floor": str(self.lower_floor),
            "thresholds": [[str(s), r] for s, r in self.history],
            "labeling": [[g.vertex_name(u), lab] for u, lab in enumerate(self.best_labeling)],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _hypercube_automorphisms(n: int) -> tuple[tuple[int, ...], ...]:
    size = 1 << n
    group = []
    for perm in itertools.permutations(range(n)):
        moved = [0] * size
        for x in range(size):
            y = 0
            for src, dst in enumerate(perm):
                if (x >> src) & 1:
                    y |= 1 << dst
            moved[x] = y
        for mask in range(size):
            group.append(tuple(moved[x] ^ mask for x in range(size)))
    return tuple(group)


def build_graph(kind: str, n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "hypercube":
        size = 1 << n
        edges = tuple((x, x | (1 << d)) for x in range(size) for d in range(n - 1, -1, -1) if not (x >> d) & 1)
        order = (1 << n) * _factorial(n)
        group = _hypercube_automorphisms(n) if order <= MAX_GROUP_ORDER else ()
        names = tuple(str(BitString(n, x)) for x in range(size))
        return Graph(size, edges, f"Q_{n}", group, names)
    if kind == "path":
        edges = tuple((u, u + 1) for u in range(n - 1))
        group = (tuple(range(n)), tuple(range(n - 1, -1, -1)))
        return Graph(n, edges, f"P_{n}", group)
    if kind == "cycle":
        if n < 3:
            raise ValueError("a cycle needs n >= 3")
        edges = tuple((u, (u + 1) % n) for u in range(n))
        rot = [tuple((u + r) % n for u in range(n)) for r in range(n)]
        ref = [tuple((r - u) % n for u in range(n)) for r in range(n)]
        return Graph(n, edges, f"C_{n}", tuple(rot + ref))
    raise ValueError(f"unknown graph kind {kind!r}")


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


class _OutOfBudget(Exception):
    def __init__(self, status: str):
        self.status = status


def _hall_ok(caps: Sequence[int]) -> bool:
    # vertices with caps c_1 <= c_2 <= ... can take labels 1..len iff c_k >= k
    for k, c in enumerate(sorted(caps), start=1):
        if c < k:
            return False
    return True


def feasible(g: Graph, s: int, budget: SolveBudget | None = None, *, _deadline: float | None = None) -> Feasibility:
    """Is there a bijection onto 1..N with every edge sum <= s?"""
    budget = budget or SolveBudget()
    N = g.vertex_count
    adj = g.neighbours()
    deadline = _deadline
    if deadline is None and budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit
    node_limit = budget.node_limit

    labels = [0] * N
    failed: set = set()
    nodes = 0
    identity = tuple(range(N))
    group = [p for p in g.automorphisms if p != identity]

    def tick():
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _OutOfBudget("node_limit")
        if deadline is not None and nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _OutOfBudget("timeout")

    def finish_greedily(unl: list[int], caps: list[int]) -> bool:
        # with 2m - 1 <= s no two remaining labels can clash
        for lab, u in enumerate(sorted(unl, key=lambda u: caps[u]), start=1):
            if caps[u] < lab:
                return False
            labels[u] = lab
        return True

    def dfs(m: int, unl: list[int], caps: list[int], stab: list[tuple[int, ...]]) -> bool:
        if m == 0:
            return True
        if 2 * m - 1 <= s:
            return finish_greedily(unl, caps)
        key = (frozenset(unl), tuple(min(caps[u], m) for u in unl))
        if key in failed:
            return False
        cands = [u for u in unl if caps[u] >= m]
        if stab:
            reps, covered = [], set()
            for u in cands:
                if u in covered:
                    continue
                reps.append(u)
                covered.update(p[u] for p in stab)
            cands = reps
        limit = s - m
        # fewest newly-capped neighbours first
        cands.sort(key=lambda u: sum(1 for v in adj[u] if labels[v] == 0 and caps[v] > limit))
        for u in cands:
            tick()
            new_caps = caps[:]
            ok = True
            for v in adj[u]:
                if labels[v] == 0 and new_caps[v] > limit:
                    new_caps[v] = limit
                    if limit < 1:
                        ok = False
                        break
            if not ok:
                continue
            rest = [v for v in unl if v != u]
            if not _hall_ok([min(new_caps[v], m - 1) for v in rest]):
                continue
            labels[u] = m
            next_stab = [p for p in stab if p[u] == u]
            if dfs(m - 1, rest, new_caps, next_stab):
                return True
            labels[u] = 0
        if len(failed) < MEMO_LIMIT:
            failed.add(key)
        return False

    try:
        found = dfs(N, list(range(N)), [N] * N, group)
    except _OutOfBudget as exc:
        return Feasibility(exc.status, None, nodes)
    if found:
        lab = tuple(labels)
        if g.edges:
            assert strength_of_labeling(g, lab).value <= s
        return Feasibility("yes", lab, nodes)
    return Feasibility("no", None, nodes)


def degree_floor(g: Graph) -> int:
    """m + min degree over the m non-isolated vertices.

    Some non-isolated vertex carries a label >= m, and its neighbours' distinct
    labels reach at least its degree.
    """
    degrees = [len(a) for a in g.neighbours() if a]
    if not degrees:
        return 0
    return len(degrees) + min(degrees)


def initial_labeling(g: Graph) -> tuple[int, ...]:
    if g.name.startswith("Q_") and g.vertex_names:
        n = int(g.name[2:])
        if n <= 24:
            return canonical_labeling(n).labels
    return tuple(range(1, g.vertex_count + 1))


def min_strength(g: Graph, budget: SolveBudget | None = None, seed: Sequence[int] | None = None) -> SolveOutcome:
    """Minimum strength over all labelings, descending from a feasible seed.

    Each "yes" at threshold s replaces the incumbent; the first "no" certifies
    it. The hypercube seed is the canonical labeling.
    """
    budget = budget or SolveBudget()
    t0 = time.monotonic()
    deadline = None if budget.time_limit is None else t0 + budget.time_limit
    best_lab = tuple(seed) if seed is not None else initial_labeling(g)
    floor = degree_floor(g)
    if not g.edges:
        return SolveOutcome("optimal", 0, best_lab, 0, 0)
    best = strength_of_labeling(g, best_lab).value
    nodes = 0
    history: list[tuple[int, str]] = []
    status = "optimal"
    s = best - 1
    while True:
        remaining = None if budget.node_limit is None else budget.node_limit - nodes
        if remaining is not None and remaining <= 0:
            status = "feasible_only"
            break
        r = feasible(g, s, SolveBudget(budget.time_limit, remaining), _deadline=deadline)
        nodes += r.nodes
        history.append((s, r.status))
        if r.status == "yes":
            best_lab = r.labeling
            best = strength_of_labeling(g, best_lab).value
            s = best - 1
        elif r.status == "no":
            break
        else:
            status = "timeout" if r.status == "timeout" else "feasible_only"
            break
    elapsed = (time.monotonic() - t0) * 1000
    return SolveOutcome(status, best, best_lab, nodes, floor, history, elapsed)


def brute_force_strength(g: Graph) -> int:
    """min over all N! labelings; the independent oracle for tiny graphs."""
    if g.vertex_count > 9:
        raise ValueError("brute force limited to 9 vertices")
    best = None
    for perm in itertools.permutations(range(1, g.vertex_count + 1)):
        val = max(perm[u] + perm[v] for u, v in g.edges)
        if best is None or val < best:
            best = val
    return best
