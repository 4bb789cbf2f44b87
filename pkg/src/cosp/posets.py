"""Strict partial orders stored as explicit transitive closures.

Each element carries two bitmasks: the elements strictly below it and
strictly above it.  Keeping the closure dense makes comparability tests,
chain extension, and incomparability traversals single mask operations,
mirroring the graph representation in :mod:`cosp.graphs`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    ParseError,
    iter_bits,
    mask_components,
    mask_of,
    vertices_of,
)


class CycleError(ValueError):
    """The input relation has a directed cycle; ``pair`` is one offending edge."""

    def __init__(self, pair: tuple[int, int]):
        u, v = pair
        super().__init__(f"cycle error: the relation has a cycle through {u} < {v}")
        self.pair = pair


@dataclass(frozen=True)
class NWitness:
    """Four elements (a, b, c, d) with a < b, c < b, c < d and no other
    comparabilities.  A poset contains this pattern exactly when it is not
    series-parallel."""

    quad: tuple[int, int, int, int]

    def validate(self, p: Poset) -> bool:
        a, b, c, d = self.quad
        if len({a, b, c, d}) != 4:
            return False
        for x in self.quad:
            if not (0 <= x < p.order):
                return False
        return (
            p.less(a, b)
            and p.less(c, b)
            and p.less(c, d)
            and not p.comparable(a, c)
            and not p.comparable(a, d)
            and not p.comparable(b, d)
        )


@dataclass(frozen=True)
class SplitCandidates:
    """Elements comparable to x and to every element incomparable to x,
    split by side.  Members can serve as outer layers of a linear split
    around x."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]


@dataclass(frozen=True)
class MaximalChain:
    """A maximal chain, listed bottom to top."""

    elements: tuple[int, ...]

    @property
    def bottom(self) -> int:
        return self.elements[0]

    @property
    def top(self) -> int:
        return self.elements[-1]


@dataclass(frozen=True)
class Poset:
    """Immutable strict partial order; ``below[v]`` / ``above[v]`` are the
    masks of elements strictly less / greater than v in the closure."""

    below: tuple[int, ...]
    above: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.below)

    @classmethod
    def from_relations(
        cls, order: int, pairs: Iterable[tuple[int, int]], mode: str = "covers"
    ) -> Poset:
        """Build a poset from (u, v) pairs meaning u < v.

        mode="covers" closes the input transitively; mode="full" demands
        the input already be its own transitive closure and rejects it
        otherwise.  Cycles raise :class:`CycleError` in both modes.
        """
        if mode not in ("covers", "full"):
            raise ValueError(f"unknown mode {mode!r}")
        if order < 0:
            raise ValueError("order must be non-negative")
        succ = [0] * order
        pred = [0] * order
        for u, v in pairs:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"relation ({u}, {v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"reflexive relation {u} < {u}")
            succ[u] |= 1 << v
            pred[v] |= 1 << u
        # Kahn's algorithm; leftovers witness a cycle.
        indeg = [pred[v].bit_count() for v in range(order)]
        queue = [v for v in range(order) if indeg[v] == 0]
        topo: list[int] = []
        while queue:
            v = queue.pop()
            topo.append(v)
            for w in iter_bits(succ[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        if len(topo) < order:
            leftover = mask_of(v for v in range(order) if indeg[v] > 0)
            for u in iter_bits(leftover):
                inside = succ[u] & leftover
                if inside:
                    raise CycleError((u, (inside & -inside).bit_length() - 1))
            raise CycleError((0, 0))  # unreachable: a cycle always has an internal edge
        below = [0] * order
        for v in topo:
            acc = 0
            for u in iter_bits(pred[v]):
                acc |= below[u] | (1 << u)
            below[v] = acc
        if mode == "full":
            for v in range(order):
                missing = below[v] & ~pred[v]
                if missing:
                    u = (missing & -missing).bit_length() - 1
                    raise ValueError(
                        f"relation is not transitively closed: {u} < {v} is implied but absent"
                    )
        above = [0] * order
        for v in range(order):
            for u in iter_bits(below[v]):
                above[u] |= 1 << v
        return cls(tuple(below), tuple(above))

    def validate(self) -> None:
        """Check irreflexivity, transitivity, and below/above duality."""
        n = self.order
        if len(self.above) != n:
            raise ValueError("below/above length mismatch")
        for v in range(n):
            if (self.below[v] | self.above[v]) >> n:
                raise ValueError(f"element mask of {v} out of range")
            if (self.below[v] >> v) & 1 or (self.above[v] >> v) & 1:
                raise ValueError(f"reflexive entry at element {v}")
            if self.below[v] & self.above[v]:
                raise ValueError(f"element {v} both below and above another")
            for u in iter_bits(self.below[v]):
                if self.below[u] & ~self.below[v]:
                    raise ValueError(f"transitivity violated below {v}")
                if (self.above[u] >> v) & 1 == 0:
                    raise ValueError(f"duality violated for {u} < {v}")
        for v in range(n):
            for u in iter_bits(self.above[v]):
                if (self.below[u] >> v) & 1 == 0:
                    raise ValueError(f"duality violated for {v} < {u}")

    def _check_element(self, x: int) -> None:
        if not (0 <= x < self.order):
            raise ValueError(f"element {x} out of range for order {self.order}")

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def less(self, u: int, v: int) -> bool:
        self._check_element(u)
        self._check_element(v)
        return (self.below[v] >> u) & 1 == 1

    def comparable(self, u: int, v: int) -> bool:
        self._check_element(u)
        self._check_element(v)
        return ((self.below[v] | self.above[v]) >> u) & 1 == 1

    def comparability_masks(self) -> list[int]:
        return [self.below[v] | self.above[v] for v in range(self.order)]

    def comparability_graph(self) -> Graph:
        """Graph with an edge for every comparable pair."""
        return Graph(tuple(self.comparability_masks()))

    def incomparability_graph(self) -> Graph:
        full = self.full_mask()
        return Graph(
            tuple(
                full & ~(self.below[v] | self.above[v]) & ~(1 << v)
                for v in range(self.order)
            )
        )

    def relations(self) -> list[tuple[int, int]]:
        """All closed pairs (u, v) with u < v, sorted."""
        out = []
        for v in range(self.order):
            for u in iter_bits(self.below[v]):
                out.append((u, v))
        out.sort()
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Pairs of the transitive reduction: u < v with nothing between."""
        out = []
        for v in range(self.order):
            for u in iter_bits(self.below[v]):
                if self.below[v] & self.above[u] == 0:
                    out.append((u, v))
        out.sort()
        return out

    def is_connected(self) -> bool:
        """Connectivity of the comparability graph."""
        if self.order == 0:
            return True
        return len(mask_components(self.comparability_masks(), self.full_mask())) == 1

    def incomparables(self, x: int) -> frozenset[int]:
        self._check_element(x)
        inc = self.full_mask() & ~(self.below[x] | self.above[x]) & ~(1 << x)
        return frozenset(iter_bits(inc))

    def incomparable_components(self, x: int) -> list[tuple[int, ...]]:
        """Blocks of the elements incomparable to x, connected through
        comparability: two incomparables land in one block when a chain of
        comparable pairs inside the set links them."""
        self._check_element(x)
        comp = self.comparability_masks()
        inc = self.full_mask() & ~comp[x] & ~(1 << x)
        return [vertices_of(m) for m in mask_components(comp, inc)]

    def is_module(self, elements: Iterable[int]) -> bool:
        """True when every outside element relates uniformly (below, above,
        or incomparable) to all members of the set."""
        a = mask_of(set(elements))
        if a >> self.order:
            raise ValueError(f"member out of range for order {self.order}")
        for v in iter_bits(self.full_mask() & ~a):
            dn = self.below[v] & a
            if dn != 0 and dn != a:
                return False
            up = self.above[v] & a
            if up != 0 and up != a:
                return False
        return True

    def split_candidates(self, x: int) -> SplitCandidates:
        """Elements comparable to x and to every element incomparable to x."""
        self._check_element(x)
        comp = self.comparability_masks()
        inc = self.full_mask() & ~comp[x] & ~(1 << x)
        lower = 0
        for y in iter_bits(self.below[x]):
            if inc & ~comp[y] == 0:
                lower |= 1 << y
        upper = 0
        for y in iter_bits(self.above[x]):
            if inc & ~comp[y] == 0:
                upper |= 1 << y
        return SplitCandidates(lower=vertices_of(lower), upper=vertices_of(upper))

    def maximal_chain(self, x: int) -> MaximalChain:
        """Deterministic maximal chain through x.

        Grows greedily by the smallest-id element comparable to every
        current member, preferring extensions below the current bottom,
        then above the current top, then interior insertions, until no
        element outside the chain is comparable to all of it.
        """
        self._check_element(x)
        comp = self.comparability_masks()
        members = [x]
        chain_mask = 1 << x
        cand = comp[x]
        while cand:
            down = cand & self.below[members[0]]
            up = cand & self.above[members[-1]]
            pool = down or up or cand
            pick = (pool & -pool).bit_length() - 1
            idx = (chain_mask & self.below[pick]).bit_count()
            members.insert(idx, pick)
            chain_mask |= 1 << pick
            cand &= comp[pick] & ~(1 << pick)
        return MaximalChain(tuple(members))


def parse_poset(text: str, mode: str = "covers") -> tuple[Poset, tuple[int, ...]]:
    """Parse the relation text format.

    Relation lines are ``u v`` or ``u < v``, both meaning u < v.  The
    optional header and label remapping follow the graph format rules.
    """
    declared: int | None = None
    saw_pair = False
    raw_pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels_used: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "n" and declared is None and not saw_pair:
            if len(tokens) != 2:
                raise ParseError(lineno, "malformed header, expected 'n <order>'")
            try:
                declared = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"malformed header order {tokens[1]!r}") from None
            if declared < 0:
                raise ParseError(lineno, "declared order must be non-negative")
            continue
        if len(tokens) == 3 and tokens[1] == "<":
            tokens = [tokens[0], tokens[2]]
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected 'u v' or 'u < v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"not an element label pair: {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(lineno, "element labels must be non-negative")
        if u == v:
            raise ParseError(lineno, f"reflexive relation {u} < {v}")
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate relation {u} < {v}")
        seen.add((u, v))
        if declared is not None and (u >= declared or v >= declared):
            raise ParseError(lineno, f"element {max(u, v)} outside declared order {declared}")
        saw_pair = True
        raw_pairs.append((u, v))
        labels_used.add(u)
        labels_used.add(v)
    if declared is not None:
        labels = tuple(range(declared))
        return Poset.from_relations(declared, raw_pairs, mode=mode), labels
    labels = tuple(sorted(labels_used))
    index = {lab: i for i, lab in enumerate(labels)}
    pairs = [(index[u], index[v]) for u, v in raw_pairs]
    return Poset.from_relations(len(labels), pairs, mode=mode), labels


def format_poset(p: Poset, labels: Sequence[int] | None = None, mode: str = "covers") -> str:
    """Serialize to the relation text format.

    mode="covers" writes the transitive reduction, mode="full" the whole
    closure; both round-trip through :func:`parse_poset`.
    """
    if mode not in ("covers", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    pairs = p.covers() if mode == "covers" else p.relations()
    if labels is None or tuple(labels) == tuple(range(p.order)):
        lines = [f"n {p.order}"]
        labels = range(p.order)
    else:
        # custom labels clash with the header's dense count, so drop it;
        # every element must then occur in some relation
        if len(set(labels)) != p.order:
            raise ValueError("labels must be distinct, one per element")
        lines = []
        mentioned = {e for pair in pairs for e in pair}
        for v in range(p.order):
            if v not in mentioned:
                raise ValueError(
                    f"element {labels[v]} occurs in no relation and no header can declare it"
                )
    for u, v in pairs:
        lines.append(f"{labels[u]} {labels[v]}")
    return "\n".join(lines) + "\n"
