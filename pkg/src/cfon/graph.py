"""Immutable simple undirected graphs with adjacency-set queries.

Vertices are dense 0-based indices; external labels live in a side table so
set operations stay cheap and tie-breaking ("pick the least candidate") is
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphParseError(ValueError):
    """Raised on malformed edge-list input."""


class GraphValidationError(ValueError):
    """Raised on structurally invalid graphs (self-loops, bad vertices)."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj`` is a tuple of frozensets; symmetry and absence of self-loops are
    established at construction time. Connectivity is *not* an invariant; it
    is checked by the operations that need it.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, ascending."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def name_of(self, v: int) -> str:
        return self.names[v] if self.names else str(v)

    def __repr__(self) -> str:  # compact; avoids dumping adjacency for big graphs
        return f"Graph(n={self.n}, m={self.m})"


def from_edges(n: int, edges, names=None) -> Graph:
    """Build a graph from an iterable of (u, v) pairs.

    Duplicate edges collapse; self-loops are rejected.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphValidationError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphValidationError(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), tuple(names) if names else ())


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated "u v" lines into a graph.

    Tokens may be integers or arbitrary names. Integer-labelled inputs keep
    their numbering (0..n-1, optionally sized by a "p edge n m" header);
    named inputs are renumbered in first-appearance order. Lines starting
    with '#' are ignored.
    """
    header_n = None
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "p":
            if len(toks) != 4 or toks[1] != "edge":
                raise GraphParseError(f"line {lineno}: malformed header {line!r}")
            try:
                header_n = int(toks[2])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count in header") from None
            continue
        if len(toks) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {line!r}")
        pairs.append((toks[0], toks[1]))

    all_int = all(t.lstrip("-").isdigit() for pair in pairs for t in pair)
    if all_int:
        ints = [(int(u), int(v)) for u, v in pairs]
        if any(u < 0 or v < 0 for u, v in ints):
            raise GraphParseError("negative vertex index")
        top = max((max(u, v) for u, v in ints), default=-1)
        n = header_n if header_n is not None else top + 1
        if top >= n:
            raise GraphParseError(f"vertex {top} exceeds header count {n}")
        try:
            return from_edges(n, ints)
        except GraphValidationError as exc:
            raise GraphParseError(str(exc)) from None

    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for u, v in pairs:
        if u == v:
            raise GraphParseError(f"self-loop at {u!r}")
        for t in (u, v):
            if t not in index:
                index[t] = len(index)
        edges.append((index[u], index[v]))
    names = sorted(index, key=index.get)
    return from_edges(len(index), edges, names)


def serialize(g: Graph) -> str:
    """Emit the "p edge n m" header plus one "u v" line per edge, u < v."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    """Open neighborhood of v."""
    _check_vertex(g, v)
    return g.adj[v]


def deg_in(g: Graph, v: int, subset) -> int:
    """Number of neighbors of v inside ``subset``."""
    _check_vertex(g, v)
    return len(g.adj[v] & frozenset(subset))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least member."""
    seen = [False] * g.n
    out: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def induced(g: Graph, subset) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``subset`` plus the map new-index -> parent vertex."""
    verts = sorted(set(subset))
    for v in verts:
        _check_vertex(g, v)
    pos = {v: i for i, v in enumerate(verts)}
    adj = tuple(frozenset(pos[w] for w in g.adj[v] if w in pos) for v in verts)
    names = tuple(g.name_of(v) for v in verts) if g.names else ()
    return Graph(len(verts), adj, names), verts


def find_induced_p3(g: Graph, excluded: frozenset[int] = frozenset()):
    """Least (a, b, c) with b adjacent to both ends, a < c, a not adjacent c.

    ``excluded`` vertices are treated as deleted. Returns None when every
    remaining component is a clique (the standard characterization).
    """
    for a in range(g.n):
        if a in excluded:
            continue
        nbrs_a = g.adj[a]
        for b in sorted(nbrs_a - excluded):
            for c in sorted(g.adj[b] - excluded):
                if c > a and c != b and c not in nbrs_a:
                    return (a, b, c)
    return None


def is_cluster_graph(g: Graph, excluded: frozenset[int] = frozenset()) -> bool:
    """True when g minus ``excluded`` is a disjoint union of cliques."""
    return find_induced_p3(g, excluded) is None


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise GraphValidationError(f"vertex {v} out of range for n={g.n}")
