"""Ground truth for conflict-free open-neighborhood colorings.

Everything here is independent of the constructive engine: a direct
verifier, an exact chromatic search by backtracking, and an exhaustive
sweep over all small labeled graphs that cross-checks engine, verifier
and bound in one pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .coloring import UNCOLORED, Coloring
from .graph import Graph, from_edges, components


class NoValidColoring(ValueError):
    """Raised for graphs with isolated vertices, which admit no coloring."""


@dataclass
class VerifyReport:
    valid: bool
    failures: list[tuple[int, str]] = field(default_factory=list)


def verify_cfon(g: Graph, coloring: Coloring) -> VerifyReport:
    """Check every open neighborhood for a uniquely occurring color.

    The witness field is ignored for the main check, then cross-checked
    separately so engine bookkeeping bugs cannot hide.
    """
    failures: list[tuple[int, str]] = []
    for v in range(g.n):
        if coloring.color[v] == UNCOLORED:
            failures.append((v, "uncolored vertex"))
    if failures:
        return VerifyReport(False, failures)

    for v in range(g.n):
        counts: dict[int, int] = {}
        for u in g.adj[v]:
            c = coloring.color[u]
            counts[c] = counts.get(c, 0) + 1
        if not any(k == 1 for k in counts.values()):
            failures.append((v, "no color occurs exactly once in N(v)"))

    for v in range(g.n):
        w = coloring.witness[v]
        if w is None:
            continue
        if w not in g.adj[v]:
            failures.append((v, f"witness {w} is not a neighbor"))
            continue
        cw = coloring.color[w]
        count = sum(1 for u in g.adj[v] if coloring.color[u] == cw)
        if count != 1:
            failures.append((v, f"witness {w} color {cw} occurs {count} times"))
    return VerifyReport(not failures, failures)


def exact_chi_on(g: Graph, k_max: int = 12, n_guard: int = 20) -> int:
    """Smallest k admitting a valid coloring, by pruned backtracking.

    Vertices are ordered by descending degree (fail-first); a partial
    assignment is pruned as soon as some vertex with a fully colored
    neighborhood lacks a unique color. Raises NoValidColoring when an
    isolated vertex makes the question vacuous.
    """
    if g.n > n_guard:
        raise ValueError(f"exact search refused: n={g.n} exceeds guard {n_guard}")
    if g.n == 0:
        return 0
    if any(not g.adj[v] for v in range(g.n)):
        raise NoValidColoring("graph has an isolated vertex")

    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    rank = {v: i for i, v in enumerate(order)}
    # neighbors of v that come no later than position i are colored once
    # position i is reached; last_nbr[v] = position after which N(v) is full
    last_nbr = [max(rank[u] for u in g.adj[v]) for v in range(g.n)]
    check_after: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        check_after[last_nbr[v]].append(v)

    color = [0] * g.n

    def feasible(k: int) -> bool:
        def bt(i: int, used: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            # symmetry break: a fresh color only as the next unused one
            limit = min(k, used + 1)
            for c in range(1, limit + 1):
                color[v] = c
                ok = True
                for u in check_after[i]:
                    counts: dict[int, int] = {}
                    for w in g.adj[u]:
                        cw = color[w]
                        counts[cw] = counts.get(cw, 0) + 1
                    if not any(t == 1 for t in counts.values()):
                        ok = False
                        break
                if ok and bt(i + 1, max(used, c)):
                    return True
            color[v] = 0
            return False

        return bt(0, 0)

    for k in range(1, k_max + 1):
        if feasible(k):
            return k
    raise ValueError(f"chromatic search exceeded k_max={k_max}")


@dataclass
class SweepReport:
    n: int
    graphs_checked: int
    counterexamples: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graphs_checked": self.graphs_checked,
            "counterexamples": self.counterexamples,
        }


def exhaustive_small_sweep(n: int, counters=None) -> SweepReport:
    """Check the bound on every connected isolated-vertex-free graph on n vertices.

    For each graph: compute a minimum modulator by brute force, color with
    the engine, verify, and assert
    exact_chi_on <= colors used <= max(3, dc + 1).
    Counterexamples are returned as data, not raised.
    """
    from .engine import color_graph
    from .modulator import brute_force_dc

    if n > 6:
        raise ValueError("full enumeration is limited to n <= 6")
    report = SweepReport(n=n, graphs_checked=0)
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        g = from_edges(n, edges)
        if any(not g.adj[v] for v in range(g.n)):
            continue
        if len(components(g)) != 1:
            continue
        report.graphs_checked += 1
        mod = brute_force_dc(g)
        bound = max(3, mod.size + 1)
        try:
            col = color_graph(g, mod.x, counters=counters)
        except Exception as exc:  # engine bug: record, keep sweeping
            report.counterexamples.append(f"mask={mask}: engine error: {exc}")
            continue
        vr = verify_cfon(g, col)
        used = len(col.colors_used())
        chi = exact_chi_on(g)
        if not vr.valid:
            report.counterexamples.append(f"mask={mask}: invalid coloring: {vr.failures[:3]}")
        if used > bound:
            report.counterexamples.append(f"mask={mask}: used {used} > bound {bound}")
        if chi > used:
            report.counterexamples.append(f"mask={mask}: chi {chi} > used {used}")
        if chi > bound:
            report.counterexamples.append(f"mask={mask}: chi {chi} > bound {bound}")
    return report
