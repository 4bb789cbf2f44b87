"""Finite simple undirected graphs over dense integer vertex ids.

Adjacency is stored as one bitmask per vertex: bit j of ``adj[i]`` is set
exactly when {i, j} is an edge.  Masks make vertex-set algebra plain
integer arithmetic and let complement-side traversals scan non-neighbors
word by word against an unvisited mask, so connected components of the
complement never require materializing complement edges.

Vertex sets returned to callers are frozensets; partitions are lists of
ascending tuples ordered by their smallest member, which keeps every
derived witness reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    """Raised on malformed input text; ``line`` is the 1-based offender."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DisconnectedError(ValueError):
    """Raised by operations whose contract requires a connected input."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def mask_components(adj: Sequence[int], sub: int) -> list[int]:
    """Connected components of the graph restricted to the vertex mask ``sub``.

    Returns component masks ordered by their smallest member.
    """
    comps: list[int] = []
    remaining = sub
    while remaining:
        comp = 0
        frontier = remaining & -remaining
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & sub & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


def mask_co_components(adj: Sequence[int], sub: int) -> list[int]:
    """Components of the complement restricted to ``sub``, as masks.

    Identical traversal to :func:`mask_components` except the frontier
    expands through non-neighbors; the complement is never built.
    """
    comps: list[int] = []
    remaining = sub
    while remaining:
        comp = 0
        frontier = remaining & -remaining
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                v = low.bit_length() - 1
                nxt |= sub & ~adj[v] & ~low
            frontier = nxt & ~comp
        comps.append(comp)
        remaining &= ~comp
    return comps


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor mask of vertex v."""

    adj: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.adj)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if order < 0:
            raise ValueError("order must be non-negative")
        adj = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(tuple(adj))

    def _check_vertex(self, x: int) -> None:
        if not (0 <= x < self.order):
            raise ValueError(f"vertex {x} out of range for order {self.order}")

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.order):
            upper = self.adj[u] >> (u + 1)
            for off in iter_bits(upper):
                out.append((u, u + 1 + off))
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def neighbors(self, x: int) -> frozenset[int]:
        self._check_vertex(x)
        return frozenset(iter_bits(self.adj[x]))

    def non_neighbors(self, x: int) -> frozenset[int]:
        """Vertices other than x that are not adjacent to x."""
        self._check_vertex(x)
        return frozenset(iter_bits(self.full_mask() & ~self.adj[x] & ~(1 << x)))

    def universal_neighbors(self, x: int) -> frozenset[int]:
        """Neighbors of x adjacent to every non-neighbor of x.

        When this set is nonempty in a connected graph with no induced
        four-vertex path, its members are adjacent to everything outside
        the set, so the graph is a join and its complement is disconnected.
        """
        self._check_vertex(x)
        inc = self.full_mask() & ~self.adj[x] & ~(1 << x)
        out = 0
        for y in iter_bits(self.adj[x]):
            if inc & ~self.adj[y] == 0:
                out |= 1 << y
        return frozenset(iter_bits(out))

    def components(self) -> list[tuple[int, ...]]:
        return [vertices_of(m) for m in mask_components(self.adj, self.full_mask())]

    def co_components(self) -> list[tuple[int, ...]]:
        """Connected components of the complement graph."""
        return [vertices_of(m) for m in mask_co_components(self.adj, self.full_mask())]

    def is_connected(self) -> bool:
        return self.order == 0 or len(mask_components(self.adj, self.full_mask())) == 1

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph plus the dense remap table.

        Returns (h, keep) where keep is the ascending tuple of original
        ids and vertex i of h corresponds to keep[i].
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        sub = mask_of(keep)
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            m = 0
            for w in iter_bits(self.adj[v] & sub):
                m |= 1 << index[w]
            adj[i] = m
        return Graph(tuple(adj)), tuple(keep)

    def is_module(self, vertices: Iterable[int]) -> bool:
        """True when every outside vertex is adjacent to all or none of the set."""
        a = mask_of(set(vertices))
        if a >> self.order:
            raise ValueError(f"member out of range for order {self.order}")
        for v in iter_bits(self.full_mask() & ~a):
            t = self.adj[v] & a
            if t != 0 and t != a:
                return False
        return True

    def complement(self) -> Graph:
        full = self.full_mask()
        return Graph(tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))


def parse_graph(text: str) -> tuple[Graph, tuple[int, ...]]:
    """Parse the edge-list text format.

    Lines starting with '#' and blank lines are skipped.  An optional
    first significant line ``n <order>`` fixes the vertex set to
    0..order-1; without it the vertex set is the labels that appear,
    remapped to dense ids in sorted order.  Returns the graph and the
    table mapping dense id to original label.
    """
    declared: int | None = None
    saw_edge = False
    raw_edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels_used: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n" and declared is None and not saw_edge:
            if len(tokens) != 2:
                raise ParseError(lineno, "malformed header, expected 'n <order>'")
            try:
                declared = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"malformed header order {tokens[1]!r}") from None
            if declared < 0:
                raise ParseError(lineno, "declared order must be non-negative")
            continue
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected two vertex labels, got {len(tokens)} tokens")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"not a vertex label pair: {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "vertex labels must be non-negative")
        if u == v:
            raise ParseError(lineno, f"self-loop {u} {v}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        if declared is not None and (u >= declared or v >= declared):
            raise ParseError(lineno, f"vertex {max(u, v)} outside declared order {declared}")
        saw_edge = True
        raw_edges.append((u, v))
        labels_used.add(u)
        labels_used.add(v)
    if declared is not None:
        labels = tuple(range(declared))
        return Graph.from_edges(declared, raw_edges), labels
    labels = tuple(sorted(labels_used))
    index = {lab: i for i, lab in enumerate(labels)}
    return Graph.from_edges(len(labels), [(index[u], index[v]) for u, v in raw_edges]), labels


def format_graph(g: Graph, labels: Sequence[int] | None = None) -> str:
    """Serialize to the edge-list text format.

    With the default dense labeling a header line declares the order, so
    isolated vertices survive the round trip.  Custom labels drop the
    header (its count would clash with relabeled ids); every vertex must
    then appear in some edge, or the serialization would lose it.
    """
    if labels is None or tuple(labels) == tuple(range(g.order)):
        lines = [f"n {g.order}"]
        labels = range(g.order)
    else:
        if len(set(labels)) != g.order:
            raise ValueError("labels must be distinct, one per vertex")
        lines = []
        for v in range(g.order):
            if not g.adj[v]:
                raise ValueError(
                    f"vertex {labels[v]} has no edges and no header can declare it"
                )
    for u, v in g.edges():
        lines.append(f"{labels[u]} {labels[v]}")
    return "\n".join(lines) + "\n"
