"""Independent ground-truth routes: brute-force pattern scans, exhaustive
enumeration of small instances, and reproducible random generators.

Everything here favors the obvious implementation over the fast one and
is kept separate from the decomposition engines so the two sides can be
compared instance by instance.  Size guards on the exponential
enumerations are hard errors, not warnings.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterator

from .cographs import _PATH_ORDERS, LEAF, PARALLEL, SERIES, Cotree, P4Witness
from .graphs import Graph, iter_bits, mask_co_components, mask_components, mask_of
from .posets import NWitness, Poset
from .spdecomp import DISJOINT, LINEAR, SPTree

MAX_ENUM_GRAPH = 6
MAX_ENUM_POSET = 4
MAX_DEF_CHECK = 12
MAX_MODULE_ENUM = 20


# === brute-force scans ===


def brute_p4(g: Graph, within: tuple[int, ...] | None = None) -> P4Witness | None:
    """Scan 4-subsets in lexicographic order, trying all 12 path labelings
    of each; return the first induced path found, or None."""
    vs = sorted(range(g.order)) if within is None else sorted(within)
    adj = g.adj
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


def brute_n(p: Poset, within: tuple[int, ...] | None = None) -> NWitness | None:
    """Scan element quadruples (a, b, c, d) in lexicographic order for the
    exact pattern a < b, c < b, c < d with the other three pairs
    incomparable; first witness or None.  Each loop level enforces one
    constraint, so candidate sets shrink instead of being rescanned."""
    dom = mask_of(range(p.order)) if within is None else mask_of(within)
    below, above = p.below, p.above
    comp = [below[v] | above[v] for v in range(p.order)]
    for a in iter_bits(dom):
        inc_a = dom & ~comp[a] & ~(1 << a)
        for b in iter_bits(above[a] & dom):
            for c in iter_bits(below[b] & inc_a):
                ds = above[c] & inc_a & ~comp[b] & ~(1 << b)
                if ds:
                    d = (ds & -ds).bit_length() - 1
                    return NWitness((a, b, c, d))
    return None


def brute_cograph_def(g: Graph) -> bool:
    """Evaluate the defining property directly: every induced subgraph on
    two or more vertices is disconnected or has a disconnected
    complement.  Exponential; guarded."""
    n = g.order
    if n > MAX_DEF_CHECK:
        raise ValueError(f"definition check limited to order {MAX_DEF_CHECK}, got {n}")
    for sub in range(1 << n):
        if sub.bit_count() < 2:
            continue
        if len(mask_components(g.adj, sub)) > 1:
            continue
        if len(mask_co_components(g.adj, sub)) > 1:
            continue
        return False
    return True


# === module enumeration ===


def graph_modules(g: Graph) -> list[tuple[int, ...]]:
    """All modules of g, trivial ones included, by scanning every vertex
    subset.  Guarded."""
    n = g.order
    if n > MAX_MODULE_ENUM:
        raise ValueError(f"module enumeration limited to order {MAX_MODULE_ENUM}, got {n}")
    full = (1 << n) - 1
    out = []
    for a in range(1 << n):
        ok = True
        for v in iter_bits(full & ~a):
            t = g.adj[v] & a
            if t != 0 and t != a:
                ok = False
                break
        if ok:
            out.append(tuple(iter_bits(a)))
    return out


def poset_modules(p: Poset) -> list[tuple[int, ...]]:
    """All order modules: subsets every outside element relates to
    uniformly (below all, above all, or incomparable to all).  Guarded."""
    n = p.order
    if n > MAX_MODULE_ENUM:
        raise ValueError(f"module enumeration limited to order {MAX_MODULE_ENUM}, got {n}")
    full = (1 << n) - 1
    out = []
    for a in range(1 << n):
        ok = True
        for v in iter_bits(full & ~a):
            dn = p.below[v] & a
            up = p.above[v] & a
            if (dn != 0 and dn != a) or (up != 0 and up != a):
                ok = False
                break
        if ok:
            out.append(tuple(iter_bits(a)))
    return out


def is_prime_graph(g: Graph) -> bool:
    """Prime means only trivial modules (empty, singletons, everything)."""
    return all(len(m) in (0, 1, g.order) for m in graph_modules(g))


def is_prime_poset(p: Poset) -> bool:
    return all(len(m) in (0, 1, p.order) for m in poset_modules(p))


# === exhaustive enumeration ===


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices, one per edge-set bitmask in
    ascending order.  Guarded."""
    if n > MAX_ENUM_GRAPH:
        raise ValueError(f"graph enumeration limited to order {MAX_ENUM_GRAPH}, got {n}")
    if n < 0:
        raise ValueError("order must be non-negative")
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if (code >> i) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(tuple(adj))


def enumerate_posets(n: int) -> Iterator[Poset]:
    """All labeled strict partial orders on n elements: every assignment of
    none / u<v / v<u to the unordered pairs, filtered by transitivity.
    Antisymmetry and irreflexivity hold by construction.  Guarded."""
    if n > MAX_ENUM_POSET:
        raise ValueError(f"poset enumeration limited to order {MAX_ENUM_POSET}, got {n}")
    if n < 0:
        raise ValueError("order must be non-negative")
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        below = [0] * n
        above = [0] * n
        for (u, v), state in zip(pairs, states):
            if state == 1:
                below[v] |= 1 << u
                above[u] |= 1 << v
            elif state == 2:
                below[u] |= 1 << v
                above[v] |= 1 << u
        transitive = True
        for v in range(n):
            for u in iter_bits(below[v]):
                if below[u] & ~below[v]:
                    transitive = False
                    break
            if not transitive:
                break
        if transitive:
            yield Poset(tuple(below), tuple(above))


# === seeded generation ===

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """Fixed 64-bit generator with derivable child streams.

    Pure integer arithmetic, so identical seeds give identical sequences
    on every platform; ``split`` derives an independent stream for a
    recursion branch without disturbing the parent sequence.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_u64() % n

    def split(self, tag: int) -> SplitMix64:
        return SplitMix64(self.next_u64() ^ ((tag * _GAMMA) & _MASK64))

    def shuffled(self, items: list) -> list:
        out = list(items)
        for i in range(len(out) - 1, 0, -1):
            j = self.randrange(i + 1)
            out[i], out[j] = out[j], out[i]
        return out


def _random_blocks(leaf_ids: list[int], rng: SplitMix64) -> list[list[int]]:
    # 2..4 children, clipped by available leaves; every block nonempty.
    k = min(len(leaf_ids), 2 + rng.randrange(3))
    pool = rng.shuffled(leaf_ids)
    blocks = [[v] for v in pool[:k]]
    for v in pool[k:]:
        blocks[rng.randrange(k)].append(v)
    return blocks


def rand_cotree(n: int, seed: int) -> Cotree:
    """Reproducible random canonical cotree on leaves 0..n-1."""
    if n < 1:
        raise ValueError("need at least one leaf")
    rng = SplitMix64(seed)

    def build(leaf_ids: list[int], kind: str, rng: SplitMix64) -> Cotree:
        if len(leaf_ids) == 1:
            return Cotree.leaf(leaf_ids[0])
        other = PARALLEL if kind == SERIES else SERIES
        children = [
            build(block, other, rng.split(i))
            for i, block in enumerate(_random_blocks(leaf_ids, rng))
        ]
        children.sort(key=_tree_min_leaf)
        return Cotree(kind, children=tuple(children))

    root_kind = SERIES if rng.randrange(2) == 0 else PARALLEL
    return build(list(range(n)), root_kind, rng)


def rand_sptree(n: int, seed: int) -> SPTree:
    """Reproducible random canonical series-parallel tree on 0..n-1; linear
    children keep their generated bottom-to-top order."""
    if n < 1:
        raise ValueError("need at least one leaf")
    rng = SplitMix64(seed)

    def build(leaf_ids: list[int], kind: str, rng: SplitMix64) -> SPTree:
        if len(leaf_ids) == 1:
            return SPTree.leaf(leaf_ids[0])
        other = DISJOINT if kind == LINEAR else LINEAR
        children = [
            build(block, other, rng.split(i))
            for i, block in enumerate(_random_blocks(leaf_ids, rng))
        ]
        if kind == DISJOINT:
            children.sort(key=_sp_min_leaf)
        return SPTree(kind, children=tuple(children))

    root_kind = LINEAR if rng.randrange(2) == 0 else DISJOINT
    return build(list(range(n)), root_kind, rng)


def _tree_min_leaf(t: Cotree) -> int:
    best = None
    stack = [t]
    while stack:
        node = stack.pop()
        if node.kind == LEAF:
            if best is None or node.vertex < best:
                best = node.vertex
        else:
            stack.extend(node.children)
    return best


def _sp_min_leaf(t: SPTree) -> int:
    best = None
    stack = [t]
    while stack:
        node = stack.pop()
        if node.kind == LEAF:
            if best is None or node.element < best:
                best = node.element
        else:
            stack.extend(node.children)
    return best


def rand_gnp(n: int, p_edge: float, seed: int) -> Graph:
    """Uniform random graph: each pair, in lexicographic order, becomes an
    edge independently with probability p_edge."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if not 0.0 <= p_edge <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = SplitMix64(seed)
    threshold = round(p_edge * (1 << 64))
    adj = [0] * n
    for u, v in itertools.combinations(range(n), 2):
        if rng.next_u64() < threshold:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(tuple(adj))


def rand_poset(n: int, p_edge: float, seed: int) -> Poset:
    """Random order: draw a random graph, orient every edge from smaller to
    larger id (always acyclic), close transitively."""
    g = rand_gnp(n, p_edge, seed)
    pairs = g.edges()
    return Poset.from_relations(n, pairs, mode="covers")


# === fixture records ===


def fixture_line(obj: Graph | Poset, seed: int) -> str:
    """One newline-delimited JSON record for a regression corpus."""
    if isinstance(obj, Graph):
        payload = {"n": obj.order, "edges": [list(e) for e in obj.edges()]}
        kind = "graph"
    elif isinstance(obj, Poset):
        payload = {"n": obj.order, "relations": [list(r) for r in obj.relations()]}
        kind = "poset"
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps({"kind": kind, "seed": seed, "payload": payload})


def read_fixture_line(line: str) -> tuple[int, Graph | Poset]:
    """Invert :func:`fixture_line`; poset payloads are revalidated as full
    closures on the way in."""
    record = json.loads(line)
    kind = record["kind"]
    seed = record["seed"]
    payload = record["payload"]
    if kind == "graph":
        return seed, Graph.from_edges(payload["n"], [tuple(e) for e in payload["edges"]])
    if kind == "poset":
        pairs = [tuple(r) for r in payload["relations"]]
        return seed, Poset.from_relations(payload["n"], pairs, mode="full")
    raise ValueError(f"unknown fixture kind {kind!r}")
