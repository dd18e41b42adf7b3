"""Vertex colorings with per-vertex witness bookkeeping.

A coloring maps vertices to colors 1..c_max (0 means not yet colored) and
records, for each vertex, the neighbor designated as its uniquely colored
one. Witnesses are advisory during construction; the verifier re-checks
them independently at the end.
"""

from __future__ import annotations

import json

from .graph import Graph

UNCOLORED = 0


class Coloring:
    """Mutable partial coloring over a fixed graph."""

    __slots__ = ("graph", "color", "witness", "c_max")

    def __init__(self, graph: Graph, c_max: int):
        self.graph = graph
        self.color = [UNCOLORED] * graph.n
        self.witness: list[int | None] = [None] * graph.n
        self.c_max = c_max

    def assign(self, v: int, c: int) -> None:
        if not (1 <= c <= self.c_max):
            raise ValueError(f"color {c} outside palette 1..{self.c_max}")
        self.color[v] = c

    def is_colored(self, v: int) -> bool:
        return self.color[v] != UNCOLORED

    def uncolored(self, verts) -> list[int]:
        return [v for v in sorted(verts) if self.color[v] == UNCOLORED]

    def is_total(self) -> bool:
        return UNCOLORED not in self.color

    def colors_used(self) -> set[int]:
        return {c for c in self.color if c != UNCOLORED}

    def witness_valid(self, v: int) -> bool:
        """True when v's designated witness color occurs exactly once among
        the *currently colored* neighbors of v."""
        w = self.witness[v]
        if w is None or self.color[w] == UNCOLORED:
            return False
        cw = self.color[w]
        count = sum(1 for u in self.graph.adj[v] if self.color[u] == cw)
        return count == 1

    def unique_colors_at(self, v: int) -> set[int]:
        """Colors occurring exactly once among colored neighbors of v."""
        seen: dict[int, int] = {}
        for u in self.graph.adj[v]:
            c = self.color[u]
            if c != UNCOLORED:
                seen[c] = seen.get(c, 0) + 1
        return {c for c, k in seen.items() if k == 1}

    def to_text(self) -> str:
        """One line per vertex: "v color witness" (witness '-' when unset)."""
        lines = []
        for v in range(self.graph.n):
            w = self.witness[v]
            lines.append(f"{v} {self.color[v]} {'-' if w is None else w}")
        return "\n".join(lines) + "\n"

    def to_json(self, modulator=None) -> str:
        payload = {
            "palette_size": self.c_max,
            "colors_used": len(self.colors_used()),
            "modulator": sorted(modulator) if modulator is not None else None,
            "coloring": [
                {"vertex": v, "color": self.color[v], "witness": self.witness[v]}
                for v in range(self.graph.n)
            ],
        }
        return json.dumps(payload, indent=2)


def parse_coloring(graph: Graph, text: str) -> Coloring:
    """Parse the "v color witness" line format back into a Coloring."""
    colors: dict[int, int] = {}
    witnesses: dict[int, int | None] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) not in (2, 3):
            raise ValueError(f"line {lineno}: expected 'v color [witness]'")
        v, c = int(toks[0]), int(toks[1])
        if not (0 <= v < graph.n):
            raise ValueError(f"line {lineno}: vertex {v} out of range")
        colors[v] = c
        if len(toks) == 3 and toks[2] != "-":
            witnesses[v] = int(toks[2])
    c_max = max(colors.values(), default=1)
    col = Coloring(graph, max(c_max, 1))
    for v, c in colors.items():
        col.assign(v, c)
    for v, w in witnesses.items():
        col.witness[v] = w
    return col
