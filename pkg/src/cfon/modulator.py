"""Modulators: vertex sets whose removal leaves a disjoint union of cliques.

Provides validation plus three ways to obtain a modulator: an exact
branching search (iterative deepening on the budget), a definitional
brute force used as its oracle, and a cheap greedy heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, components, find_induced_p3, induced


class ModulatorError(ValueError):
    """Raised when a claimed modulator leaves an induced P3 behind."""

    def __init__(self, triple):
        self.triple = triple
        a, b, c = triple
        super().__init__(f"not a cluster graph: induced path {a}-{b}-{c} remains")


class BudgetExceeded(RuntimeError):
    """Raised when the exact search exhausts its deletion budget."""


@dataclass(frozen=True)
class Modulator:
    """A validated modulator with the clique decomposition of the rest.

    ``cliques`` are the components of the graph minus ``x``, each inducing a
    clique; ``clique_of`` maps every vertex outside ``x`` to its clique index.
    """

    x: tuple[int, ...]
    cliques: tuple[tuple[int, ...], ...]
    clique_of: dict[int, int]

    @property
    def size(self) -> int:
        return len(self.x)


def validate_modulator(g: Graph, x) -> Modulator:
    """Build the clique decomposition for ``x`` or raise ModulatorError."""
    xs = frozenset(x)
    for v in xs:
        if not (0 <= v < g.n):
            raise ValueError(f"modulator vertex {v} out of range for n={g.n}")
    bad = find_induced_p3(g, xs)
    if bad is not None:
        raise ModulatorError(bad)
    rest = [v for v in range(g.n) if v not in xs]
    sub, back = induced(g, rest)
    cliques = tuple(tuple(back[i] for i in comp) for comp in components(sub))
    clique_of = {v: k for k, cq in enumerate(cliques) for v in cq}
    return Modulator(tuple(sorted(xs)), cliques, clique_of)


def exact_dc(g: Graph, k_max: int = 12) -> Modulator:
    """Minimum modulator by branching on induced P3s.

    While an induced path a-b-c exists one of its vertices must be deleted,
    so branch three ways; iterative deepening on k makes the first success
    a minimum. Deterministic: always branches on the least triple.
    """
    for k in range(k_max + 1):
        found = _branch(g, frozenset(), k)
        if found is not None:
            return validate_modulator(g, found)
    raise BudgetExceeded(f"distance to cluster exceeds budget k_max={k_max}")


def _branch(g: Graph, removed: frozenset[int], k: int):
    triple = find_induced_p3(g, removed)
    if triple is None:
        return removed
    if k == 0:
        return None
    for v in triple:
        found = _branch(g, removed | {v}, k - 1)
        if found is not None:
            return found
    return None


def brute_force_dc(g: Graph, n_guard: int = 20) -> Modulator:
    """Minimum modulator by enumerating vertex subsets of increasing size.

    Definitional oracle for exact_dc; refuses graphs above ``n_guard``.
    """
    if g.n > n_guard:
        raise ValueError(f"brute force refused: n={g.n} exceeds guard {n_guard}")
    for size in range(g.n + 1):
        for subset in combinations(range(g.n), size):
            if find_induced_p3(g, frozenset(subset)) is None:
                return validate_modulator(g, subset)
    raise AssertionError("unreachable: deleting all vertices always works")


def greedy_dc(g: Graph) -> Modulator:
    """Heuristic modulator: repeatedly delete the vertex in most induced P3s."""
    removed: set[int] = set()
    while True:
        counts = _p3_counts(g, frozenset(removed))
        if counts is None:
            return validate_modulator(g, removed)
        best = max(range(g.n), key=lambda v: (counts[v], -v))
        removed.add(best)


def _p3_counts(g: Graph, excluded: frozenset[int]):
    """Per-vertex membership counts over all induced P3s, or None if none."""
    counts = [0] * g.n
    any_found = False
    alive = [v for v in range(g.n) if v not in excluded]
    for b in alive:
        nbrs = sorted(g.adj[b] - excluded)
        for i, a in enumerate(nbrs):
            for c in nbrs[i + 1:]:
                if c not in g.adj[a]:
                    any_found = True
                    counts[a] += 1
                    counts[b] += 1
                    counts[c] += 1
    return counts if any_found else None


def serialize_modulator(mod: Modulator) -> str:
    """One line of vertex indices, ascending."""
    return " ".join(str(v) for v in mod.x)
