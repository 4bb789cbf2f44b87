"""Cograph recognition and canonical series/parallel decomposition.

A finite graph is a cograph exactly when it has no induced four-vertex
path.  Recognition proceeds by repeated splitting: a graph on two or
more vertices either falls apart into connected components (parallel
node) or its complement does (series node); when neither happens the
graph contains an induced path on four vertices and that path is
returned as a certificate instead of a tree.

Trees are kept canonical: no series child of a series node, no parallel
child of a parallel node, at least two children per internal node, and
children ordered by their smallest leaf id.  Canonical form makes tree
equality meaningful, so round trips through the graph are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import (
    DisconnectedError,
    Graph,
    iter_bits,
    mask_co_components,
    mask_components,
    mask_of,
    vertices_of,
)

LEAF = "leaf"
SERIES = "series"
PARALLEL = "parallel"

# The 12 orderings of a 4-set that name a path once reversals are merged.
_PATH_ORDERS = tuple(
    perm for perm in itertools.permutations(range(4)) if perm[0] < perm[3]
)


@dataclass(frozen=True)
class P4Witness:
    """An induced path a-b-c-d: edges ab, bc, cd; non-edges ac, ad, bd."""

    path: tuple[int, int, int, int]

    def validate(self, g: Graph) -> bool:
        a, b, c, d = self.path
        if len({a, b, c, d}) != 4:
            return False
        for v in self.path:
            if not (0 <= v < g.order):
                return False
        return (
            g.has_edge(a, b)
            and g.has_edge(b, c)
            and g.has_edge(c, d)
            and not g.has_edge(a, c)
            and not g.has_edge(a, d)
            and not g.has_edge(b, d)
        )


class P4Error(ValueError):
    """An operation that requires a path-free input found an induced
    four-vertex path; ``witness`` carries it."""

    def __init__(self, witness: P4Witness, message: str):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class JoinWitness:
    """Certificate that a connected graph is a join: every member of
    ``universal_neighbors`` is adjacent to every vertex outside the set,
    so the complement is disconnected across ``split``."""

    x: int
    universal_neighbors: tuple[int, ...]
    split: tuple[tuple[int, ...], tuple[int, ...]]

    def validate(self, g: Graph) -> bool:
        if not (0 <= self.x < g.order):
            return False
        un = mask_of(self.universal_neighbors)
        rest = mask_of(self.split[0])
        if un == 0 or (un | rest) != g.full_mask() or un & rest:
            return False
        if self.split[1] != self.universal_neighbors:
            return False
        if (g.adj[self.x] & un) != un or (un >> self.x) & 1:
            return False
        for y in self.universal_neighbors:
            if rest & ~g.adj[y]:
                return False
        return True


@dataclass(frozen=True)
class NeighborSplit:
    """Split of the neighbors of x against one connected block of its
    non-neighbors: ``adjacent_all`` sees the whole block, ``adjacent_none``
    sees none of it, and the two sides are completely joined to each other."""

    component: tuple[int, ...]
    adjacent_all: tuple[int, ...]
    adjacent_none: tuple[int, ...]

    def validate(self, g: Graph, x: int) -> bool:
        cm = mask_of(self.component)
        n1 = mask_of(self.adjacent_all)
        n2 = mask_of(self.adjacent_none)
        if n1 & n2 or (n1 | n2) != g.adj[x]:
            return False
        for y in self.adjacent_all:
            if cm & ~g.adj[y]:
                return False
        for y in self.adjacent_none:
            if cm & g.adj[y]:
                return False
        for y in self.adjacent_all:
            if n2 & ~g.adj[y]:
                return False
        return True


@dataclass(frozen=True)
class Cotree:
    """Decomposition tree node; series means join, parallel means disjoint
    union, leaves carry vertex ids."""

    kind: str
    vertex: int | None = None
    children: tuple[Cotree, ...] = ()

    @classmethod
    def leaf(cls, vertex: int) -> Cotree:
        return cls(LEAF, vertex=vertex)

    @classmethod
    def series(cls, children: Iterable[Cotree]) -> Cotree:
        return cls(SERIES, children=tuple(children))

    @classmethod
    def parallel(cls, children: Iterable[Cotree]) -> Cotree:
        return cls(PARALLEL, children=tuple(children))


def _preorder(t: Cotree) -> list[Cotree]:
    # Parents before children; reversed gives a children-first order.
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        out.append(node)
        stack.extend(node.children)
    return out


def validate_cotree(t: Cotree) -> None:
    """Raise ValueError unless the tree is canonical with distinct leaves."""
    order = _preorder(t)
    min_leaf: dict[int, int] = {}
    seen_leaves: set[int] = set()
    for node in reversed(order):
        if node.kind == LEAF:
            if not isinstance(node.vertex, int) or node.vertex < 0:
                raise ValueError(f"leaf vertex must be a non-negative int, got {node.vertex!r}")
            if node.children:
                raise ValueError("leaf with children")
            if node.vertex in seen_leaves:
                raise ValueError(f"duplicate leaf id {node.vertex}")
            seen_leaves.add(node.vertex)
            min_leaf[id(node)] = node.vertex
        elif node.kind in (SERIES, PARALLEL):
            if node.vertex is not None:
                raise ValueError("internal node with a vertex id")
            if len(node.children) < 2:
                raise ValueError(f"{node.kind} node with fewer than two children")
            mins = []
            for child in node.children:
                if child.kind == node.kind:
                    raise ValueError(f"{node.kind} child of {node.kind} node")
                mins.append(min_leaf[id(child)])
            if mins != sorted(mins):
                raise ValueError("children not ordered by smallest leaf id")
            min_leaf[id(node)] = mins[0]
        else:
            raise ValueError(f"unknown node kind {node.kind!r}")


def cotree_leaves(t: Cotree) -> list[int]:
    return sorted(n.vertex for n in _preorder(t) if n.kind == LEAF)


def _p4_within(adj: Sequence[int], sub: int) -> P4Witness | None:
    # Lexicographic 4-subset scan with all 12 path labelings per subset.
    vs = vertices_of(sub)
    for quad in itertools.combinations(vs, 4):
        for perm in _PATH_ORDERS:
            a, b, c, d = (quad[i] for i in perm)
            if (
                (adj[a] >> b) & 1
                and (adj[b] >> c) & 1
                and (adj[c] >> d) & 1
                and not (adj[a] >> c) & 1
                and not (adj[a] >> d) & 1
                and not (adj[b] >> d) & 1
            ):
                return P4Witness((a, b, c, d))
    return None


def cotree(g: Graph) -> Cotree | P4Witness:
    """Canonical decomposition tree of g, or an induced-path certificate.

    The split alternates between connected components and components of
    the complement; a part with neither split on two or more vertices
    must contain an induced four-vertex path, found by brute force inside
    that part.
    """
    if g.order == 0:
        raise ValueError("the decomposition needs at least one vertex")
    adj = g.adj
    sub_of = [g.full_mask()]
    kind_of = [LEAF]
    child_ids: list[list[int]] = [[]]
    stack = [0]
    while stack:
        tid = stack.pop()
        sub = sub_of[tid]
        if sub & (sub - 1) == 0:
            kind_of[tid] = LEAF
            continue
        parts = mask_components(adj, sub)
        if len(parts) > 1:
            kind_of[tid] = PARALLEL
        else:
            parts = mask_co_components(adj, sub)
            if len(parts) > 1:
                kind_of[tid] = SERIES
            else:
                witness = _p4_within(adj, sub)
                if witness is None:  # cannot happen: no split on >= 2 vertices forces a path
                    raise AssertionError("undecomposable part without an induced path")
                return witness
        for part in parts:  # already ordered by smallest member
            cid = len(sub_of)
            sub_of.append(part)
            kind_of.append(LEAF)
            child_ids.append([])
            child_ids[tid].append(cid)
            stack.append(cid)
    nodes: list[Cotree | None] = [None] * len(sub_of)
    for tid in range(len(sub_of) - 1, -1, -1):
        if kind_of[tid] == LEAF:
            nodes[tid] = Cotree.leaf(sub_of[tid].bit_length() - 1)
        else:
            nodes[tid] = Cotree(kind_of[tid], children=tuple(nodes[c] for c in child_ids[tid]))
    return nodes[0]


def cotree_to_graph(t: Cotree) -> Graph:
    """Graph encoded by a tree: two leaves are adjacent exactly when their
    closest common ancestor is a series node.  Leaf ids must be 0..n-1."""
    order = _preorder(t)
    mask: dict[int, int] = {}
    for node in reversed(order):
        if node.kind == LEAF:
            if not isinstance(node.vertex, int) or node.vertex < 0:
                raise ValueError(f"leaf vertex must be a non-negative int, got {node.vertex!r}")
            mask[id(node)] = 1 << node.vertex
        else:
            if len(node.children) < 2:
                raise ValueError(f"{node.kind} node with fewer than two children")
            m = 0
            total = 0
            for child in node.children:
                cm = mask[id(child)]
                m |= cm
                total += cm.bit_count()
            if m.bit_count() != total:
                raise ValueError("duplicate leaf ids")
            mask[id(node)] = m
    full = mask[id(t)]
    n = full.bit_length()
    if full != (1 << n) - 1:
        raise ValueError("leaf ids must form a dense 0..n-1 range")
    adj = [0] * n
    for node in order:
        if node.kind == SERIES:
            m = mask[id(node)]
            for child in node.children:
                cm = mask[id(child)]
                ext = m & ~cm
                for v in iter_bits(cm):
                    adj[v] |= ext
        elif node.kind not in (LEAF, PARALLEL):
            raise ValueError(f"unknown node kind {node.kind!r}")
    return Graph(tuple(adj))


def is_cograph(g: Graph) -> bool:
    if g.order == 0:
        return True
    return isinstance(cotree(g), Cotree)


def non_neighbor_components(g: Graph, x: int) -> list[tuple[int, ...]]:
    """Connected components of the non-neighbors of x.  In a graph with no
    induced four-vertex path every block is a module."""
    g._check_vertex(x)
    inc = g.full_mask() & ~g.adj[x] & ~(1 << x)
    return [vertices_of(m) for m in mask_components(g.adj, inc)]


def neighbor_split(g: Graph, x: int, component: Iterable[int]) -> NeighborSplit:
    """Split N(x) against one connected block of non-neighbors of x.

    Every neighbor must see all of the block or none of it, and the two
    sides must be completely joined; a violation of either property pins
    an induced four-vertex path, raised as :class:`P4Error`.
    """
    g._check_vertex(x)
    cm = mask_of(set(component))
    if cm == 0:
        raise ValueError("component must be nonempty")
    if cm >> g.order:
        raise ValueError(f"member out of range for order {g.order}")
    if cm & (g.adj[x] | (1 << x)):
        raise ValueError(f"component members must be non-neighbors of {x}")
    n1 = 0
    n2 = 0
    offender = None
    for y in iter_bits(g.adj[x]):
        t = g.adj[y] & cm
        if t == cm:
            n1 |= 1 << y
        elif t == 0:
            n2 |= 1 << y
        else:
            offender = y
            break
    if offender is not None:
        # y sees part of the block: an edge a-b inside it with y-a but not
        # y-b gives the induced path x, y, a, b.
        for a in iter_bits(g.adj[offender] & cm):
            bs = g.adj[a] & cm & ~g.adj[offender]
            if bs:
                b = (bs & -bs).bit_length() - 1
                w = P4Witness((x, offender, a, b))
                raise P4Error(w, f"vertex {offender} is adjacent to part of the block only")
        raise ValueError("component is not connected")
    if n1 and n2:
        for y1 in iter_bits(n1):
            missing = n2 & ~g.adj[y1]
            if missing:
                y2 = (missing & -missing).bit_length() - 1
                c0 = (cm & -cm).bit_length() - 1
                w = P4Witness((c0, y1, x, y2))
                raise P4Error(w, f"neighbors {y1} and {y2} are not adjacent across the split")
    return NeighborSplit(
        component=vertices_of(cm),
        adjacent_all=vertices_of(n1),
        adjacent_none=vertices_of(n2),
    )


def join_witness(g: Graph) -> JoinWitness | None:
    """Search a connected graph for a vertex whose universal neighbor set is
    nonempty and return the resulting complement split.

    For connected graphs with no induced four-vertex path the witness
    exists exactly when the complement is disconnected; absence then
    means the complement is connected.  Disconnected input is rejected.
    """
    if g.order == 0:
        raise ValueError("the witness search needs at least one vertex")
    if not g.is_connected():
        raise DisconnectedError("input graph is not connected")
    full = g.full_mask()
    for x in range(g.order):
        inc = full & ~g.adj[x] & ~(1 << x)
        un = 0
        for y in iter_bits(g.adj[x]):
            if inc & ~g.adj[y] == 0:
                un |= 1 << y
        if un:
            rest = full & ~un
            return JoinWitness(
                x=x,
                universal_neighbors=vertices_of(un),
                split=(vertices_of(rest), vertices_of(un)),
            )
    return None


def select_universal_neighbor(g: Graph, x: int) -> int:
    """Pick a neighbor of x adjacent to every non-neighbor of x.

    Splits each block of non-neighbors, takes the block whose fully
    adjacent side is smallest (cardinality, then lexicographic), and
    returns that side's smallest member.  With no non-neighbors the
    smallest neighbor is returned.  A four-vertex path met along the way
    surfaces as :class:`P4Error`.
    """
    g._check_vertex(x)
    if g.adj[x] == 0:
        raise ValueError(f"vertex {x} has no neighbors")
    inc = g.full_mask() & ~g.adj[x] & ~(1 << x)
    if inc == 0:
        return (g.adj[x] & -g.adj[x]).bit_length() - 1
    best: tuple[int, tuple[int, ...]] | None = None
    for cm in mask_components(g.adj, inc):
        split = neighbor_split(g, x, vertices_of(cm))
        n1 = split.adjacent_all
        if not n1:
            raise DisconnectedError(
                f"no neighbor of {x} reaches the block containing {cm.bit_length() - 1}"
            )
        key = (len(n1), n1)
        if best is None or key < best:
            best = key
    return best[1][0]


def parity_split_graph(n: int, offset: int = 0) -> Graph:
    """Window of the split graph on the integers where even numbers form a
    clique and odd numbers an independent set: {i, j} with i < j is an
    edge exactly when i is even.  Vertex k of the result stands for the
    integer offset + k.  Every window is a cograph."""
    if n < 1:
        raise ValueError("window size must be positive")
    full = (1 << n) - 1
    adj = [0] * n
    evens_below = 0
    for j in range(n):
        adj[j] |= evens_below
        if (j + offset) % 2 == 0:
            evens_below |= 1 << j
            adj[j] |= full & ~((1 << (j + 1)) - 1)
    return Graph(tuple(adj))


# === serialization ===


def cotree_to_json(t: Cotree, labels: Sequence[int] | None = None) -> dict:
    """Nested dict form: leaves {"kind": "leaf", "vertex": k}, internal
    nodes {"kind": kind, "children": [...]}."""
    order = _preorder(t)
    built: dict[int, dict] = {}
    for node in reversed(order):
        if node.kind == LEAF:
            v = node.vertex if labels is None else labels[node.vertex]
            built[id(node)] = {"kind": LEAF, "vertex": v}
        else:
            built[id(node)] = {
                "kind": node.kind,
                "children": [built[id(c)] for c in node.children],
            }
    return built[id(t)]


def cotree_from_json(obj: object) -> Cotree:
    """Inverse of :func:`cotree_to_json`; shape errors raise ValueError."""
    if not isinstance(obj, dict):
        raise ValueError(f"tree node must be an object, got {type(obj).__name__}")
    kind = obj.get("kind")
    if kind == LEAF:
        vertex = obj.get("vertex")
        if not isinstance(vertex, int) or isinstance(vertex, bool) or vertex < 0:
            raise ValueError(f"leaf vertex must be a non-negative int, got {vertex!r}")
        return Cotree.leaf(vertex)
    if kind in (SERIES, PARALLEL):
        children = obj.get("children")
        if not isinstance(children, list) or len(children) < 2:
            raise ValueError(f"{kind} node needs a list of at least two children")
        return Cotree(kind, children=tuple(cotree_from_json(c) for c in children))
    raise ValueError(f"unknown node kind {kind!r}")


_DOT_LABELS = {SERIES: "×", PARALLEL: "∪"}


def cotree_to_dot(t: Cotree, labels: Sequence[int] | None = None) -> str:
    return _tree_dot("cotree", t, _DOT_LABELS, lambda n: n.vertex, labels)


def _tree_dot(name, t, kind_labels, leaf_value, labels) -> str:
    lines = [f"graph {name} {{"]
    stack = [(t, None)]
    counter = 0
    while stack:
        node, parent = stack.pop()
        nid = counter
        counter += 1
        if node.kind == LEAF:
            v = leaf_value(node)
            lab = str(v if labels is None else labels[v])
        else:
            lab = kind_labels[node.kind]
        lines.append(f'  n{nid} [label="{lab}"];')
        if parent is not None:
            lines.append(f"  n{parent} -- n{nid};")
        for child in reversed(node.children):
            stack.append((child, nid))
    lines.append("}")
    return "\n".join(lines) + "\n"
