"""Series-parallel decomposition of partial orders.

A finite order is series-parallel exactly when it avoids the four-element
"N" pattern (a < b, c < b, c < d, nothing else comparable).  Recognition
splits repeatedly: if the comparability graph is disconnected the order
is a disjoint sum; if the incomparability graph is disconnected it is a
linear sum of its blocks, which are always totally ordered against each
other; when neither split exists the order contains an N, returned as a
certificate.

Tree canonical form: disjoint children sorted by smallest leaf id,
linear children kept bottom to top (their order is meaning, not
presentation), internal nodes with at least two children, alternation
between the two internal kinds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Sequence

from .cographs import LEAF, PARALLEL, SERIES, Cotree, _preorder, _tree_dot
from .graphs import (
    DisconnectedError,
    iter_bits,
    mask_co_components,
    mask_components,
    mask_of,
    vertices_of,
)
from .posets import NWitness, Poset

LINEAR = "linear"
DISJOINT = "disjoint"


@dataclass(frozen=True)
class SPTree:
    """Decomposition tree node; linear children run bottom to top."""

    kind: str
    element: int | None = None
    children: tuple[SPTree, ...] = ()

    @classmethod
    def leaf(cls, element: int) -> SPTree:
        return cls(LEAF, element=element)

    @classmethod
    def linear(cls, children: Iterable[SPTree]) -> SPTree:
        return cls(LINEAR, children=tuple(children))

    @classmethod
    def disjoint(cls, children: Iterable[SPTree]) -> SPTree:
        return cls(DISJOINT, children=tuple(children))


@dataclass(frozen=True)
class LinearSplit:
    """Three-layer split around x: everything in ``lower`` sits below
    everything else, everything in ``upper`` above everything else, and
    ``middle`` contains x.  Existence certifies the order is a linear sum."""

    x: int
    lower: tuple[int, ...]
    middle: tuple[int, ...]
    upper: tuple[int, ...]

    def validate(self, p: Poset) -> bool:
        lo = mask_of(self.lower)
        mid = mask_of(self.middle)
        up = mask_of(self.upper)
        if lo & mid or lo & up or mid & up:
            return False
        if (lo | mid | up) != p.full_mask():
            return False
        if not (mid >> self.x) & 1:
            return False
        if lo == 0 and up == 0:
            return False
        for v in iter_bits(mid):
            if lo & ~p.below[v]:
                return False
        for v in iter_bits(up):
            if (lo | mid) & ~p.below[v]:
                return False
        return True


@dataclass(frozen=True)
class EndpointWitness:
    """A maximal chain endpoint comparable to every element incomparable
    to x; side says which end of the chain qualified."""

    x: int
    endpoint: int
    side: str  # "up" for the top of the chain, "down" for the bottom


class NoEndpointError(ValueError):
    """Neither endpoint of the maximal chain through x is comparable to all
    elements incomparable to x.  For a connected order this only happens
    when the order contains an N pattern."""

    def __init__(self, x: int, top_conflict: tuple[int, int], bottom_conflict: tuple[int, int]):
        t, ty = top_conflict
        b, by = bottom_conflict
        super().__init__(
            f"no chain endpoint through {x} qualifies: "
            f"top {t} is incomparable to {ty}, bottom {b} is incomparable to {by}"
        )
        self.x = x
        self.top_conflict = top_conflict
        self.bottom_conflict = bottom_conflict


def _n_within(below: Sequence[int], above: Sequence[int], dom: int) -> NWitness | None:
    # Quadruple scan in lexicographic order; each loop states one pattern
    # constraint, so the first hit is the least witness tuple.
    comp = [below[v] | above[v] for v in range(len(below))]
    for a in iter_bits(dom):
        inc_a = dom & ~comp[a] & ~(1 << a)
        for b in iter_bits(above[a] & dom):
            for c in iter_bits(below[b] & inc_a):
                ds = above[c] & inc_a & ~comp[b] & ~(1 << b)
                if ds:
                    d = (ds & -ds).bit_length() - 1
                    return NWitness((a, b, c, d))
    return None


def sp_tree(p: Poset) -> SPTree | NWitness:
    """Canonical decomposition tree of p, or an N-pattern certificate.

    Splitting alternates between components of the comparability graph
    (disjoint sum) and blocks of the incomparability graph (linear sum);
    a part admitting neither split on two or more elements contains an N,
    found by brute force inside that part.
    """
    if p.order == 0:
        raise ValueError("the decomposition needs at least one element")
    comp = p.comparability_masks()
    below = p.below

    def block_order(m1: int, m2: int) -> int:
        # Any cross pair decides: blocks of the incomparability split are
        # uniformly comparable.
        r1 = (m1 & -m1).bit_length() - 1
        r2 = (m2 & -m2).bit_length() - 1
        return -1 if (below[r2] >> r1) & 1 else 1

    sub_of = [p.full_mask()]
    kind_of = [LEAF]
    child_ids: list[list[int]] = [[]]
    stack = [0]
    while stack:
        tid = stack.pop()
        sub = sub_of[tid]
        if sub & (sub - 1) == 0:
            kind_of[tid] = LEAF
            continue
        parts = mask_components(comp, sub)
        if len(parts) > 1:
            kind_of[tid] = DISJOINT
        else:
            parts = mask_co_components(comp, sub)
            if len(parts) > 1:
                kind_of[tid] = LINEAR
                parts.sort(key=cmp_to_key(block_order))
            else:
                witness = _n_within(below, p.above, sub)
                if witness is None:  # cannot happen: an unsplittable part contains an N
                    raise AssertionError("undecomposable part without an N pattern")
                return witness
        for part in parts:
            cid = len(sub_of)
            sub_of.append(part)
            kind_of.append(LEAF)
            child_ids.append([])
            child_ids[tid].append(cid)
            stack.append(cid)
    nodes: list[SPTree | None] = [None] * len(sub_of)
    for tid in range(len(sub_of) - 1, -1, -1):
        if kind_of[tid] == LEAF:
            nodes[tid] = SPTree.leaf(sub_of[tid].bit_length() - 1)
        else:
            nodes[tid] = SPTree(kind_of[tid], children=tuple(nodes[c] for c in child_ids[tid]))
    return nodes[0]


def sp_tree_to_poset(t: SPTree) -> Poset:
    """Order encoded by a tree: under a linear node every element of an
    earlier child lies below every element of a later child; disjoint
    children stay incomparable.  Leaf ids must be 0..n-1."""
    order = _preorder(t)
    mask: dict[int, int] = {}
    for node in reversed(order):
        if node.kind == LEAF:
            if not isinstance(node.element, int) or node.element < 0:
                raise ValueError(f"leaf element must be a non-negative int, got {node.element!r}")
            mask[id(node)] = 1 << node.element
        else:
            if node.kind not in (LINEAR, DISJOINT):
                raise ValueError(f"unknown node kind {node.kind!r}")
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
    below = [0] * n
    above = [0] * n
    for node in order:
        if node.kind == LINEAR:
            prefix = 0
            for child in node.children:
                cm = mask[id(child)]
                if prefix:
                    for v in iter_bits(cm):
                        below[v] |= prefix
                prefix |= cm
            suffix = 0
            for child in reversed(node.children):
                cm = mask[id(child)]
                if suffix:
                    for v in iter_bits(cm):
                        above[v] |= suffix
                suffix |= cm
    return Poset(tuple(below), tuple(above))


def validate_sp_tree(t: SPTree) -> None:
    """Raise ValueError unless the tree is canonical with distinct leaves."""
    order = _preorder(t)
    min_leaf: dict[int, int] = {}
    seen: set[int] = set()
    for node in reversed(order):
        if node.kind == LEAF:
            if not isinstance(node.element, int) or node.element < 0:
                raise ValueError(f"leaf element must be a non-negative int, got {node.element!r}")
            if node.children:
                raise ValueError("leaf with children")
            if node.element in seen:
                raise ValueError(f"duplicate leaf id {node.element}")
            seen.add(node.element)
            min_leaf[id(node)] = node.element
        elif node.kind in (LINEAR, DISJOINT):
            if node.element is not None:
                raise ValueError("internal node with an element id")
            if len(node.children) < 2:
                raise ValueError(f"{node.kind} node with fewer than two children")
            mins = []
            for child in node.children:
                if child.kind == node.kind:
                    raise ValueError(f"{node.kind} child of {node.kind} node")
                mins.append(min_leaf[id(child)])
            if node.kind == DISJOINT and mins != sorted(mins):
                raise ValueError("disjoint children not ordered by smallest leaf id")
            min_leaf[id(node)] = min(mins)
        else:
            raise ValueError(f"unknown node kind {node.kind!r}")


def is_nfree(p: Poset, method: str = "modules") -> bool:
    """Decide absence of the N pattern.

    method="modules" checks that every comparability-connected block of
    every element's incomparables is a module; method="brute" runs the
    quadruple scan.  The two routes agree on every input.
    """
    if method == "brute":
        return _n_within(p.below, p.above, p.full_mask()) is None
    if method != "modules":
        raise ValueError(f"unknown method {method!r}")
    for x in range(p.order):
        for block in p.incomparable_components(x):
            if not p.is_module(block):
                return False
    return True


def linear_split_witness(p: Poset) -> LinearSplit | None:
    """Find the first element (ascending id) whose split candidates are
    nonempty and whose induced three-layer split is valid.

    For a connected N-free order a candidate's split is always valid, so
    the witness exists exactly when the order is a linear sum; absence
    certifies there is none.  Candidates whose layers fail the ordering
    checks (possible only when the input contains an N) are skipped.
    Disconnected input is rejected.
    """
    if p.order == 0:
        raise ValueError("the split search needs at least one element")
    if not p.is_connected():
        raise DisconnectedError("input order is not connected")
    full = p.full_mask()
    comp = p.comparability_masks()
    for x in range(p.order):
        inc = full & ~comp[x] & ~(1 << x)
        lower = 0
        for y in iter_bits(p.below[x]):
            if inc & ~comp[y] == 0:
                lower |= 1 << y
        upper = 0
        for y in iter_bits(p.above[x]):
            if inc & ~comp[y] == 0:
                upper |= 1 << y
        if lower == 0 and upper == 0:
            continue
        mid = full & ~lower & ~upper
        ok = True
        for v in iter_bits(mid):
            if lower & ~p.below[v]:
                ok = False
                break
        if ok:
            for v in iter_bits(upper):
                if (lower | mid) & ~p.below[v]:
                    ok = False
                    break
        if ok:
            return LinearSplit(
                x=x,
                lower=vertices_of(lower),
                middle=vertices_of(mid),
                upper=vertices_of(upper),
            )
    return None


def endpoint_witness(p: Poset, x: int) -> EndpointWitness:
    """One endpoint of the deterministic maximal chain through x is
    comparable to every element incomparable to x; the top is preferred
    on ties.  Failure of both endpoints raises :class:`NoEndpointError`,
    which for connected input means an N pattern is present."""
    p._check_element(x)
    chain = p.maximal_chain(x)
    comp = p.comparability_masks()
    inc = p.full_mask() & ~comp[x] & ~(1 << x)
    top, bottom = chain.top, chain.bottom
    top_missing = inc & ~comp[top] & ~(1 << top)
    if top_missing == 0:
        return EndpointWitness(x=x, endpoint=top, side="up")
    bottom_missing = inc & ~comp[bottom] & ~(1 << bottom)
    if bottom_missing == 0:
        return EndpointWitness(x=x, endpoint=bottom, side="down")
    raise NoEndpointError(
        x,
        (top, (top_missing & -top_missing).bit_length() - 1),
        (bottom, (bottom_missing & -bottom_missing).bit_length() - 1),
    )


def cotree_to_sptree(t: Cotree) -> SPTree:
    """Orient a cograph tree: parallel becomes disjoint, series becomes
    linear with the canonical child order read bottom to top."""
    order = _preorder(t)
    built: dict[int, SPTree] = {}
    for node in reversed(order):
        if node.kind == LEAF:
            built[id(node)] = SPTree.leaf(node.vertex)
        elif node.kind == SERIES:
            built[id(node)] = SPTree.linear(built[id(c)] for c in node.children)
        elif node.kind == PARALLEL:
            built[id(node)] = SPTree.disjoint(built[id(c)] for c in node.children)
        else:
            raise ValueError(f"unknown node kind {node.kind!r}")
    return built[id(t)]


def orient_cotree(t: Cotree) -> Poset:
    """Order whose comparability graph is exactly the graph of the tree:
    each series node turns into a linear sum of its children in canonical
    order.  The result is always N-free."""
    return sp_tree_to_poset(cotree_to_sptree(t))


# === serialization ===


def sp_tree_to_json(t: SPTree, labels: Sequence[int] | None = None) -> dict:
    order = _preorder(t)
    built: dict[int, dict] = {}
    for node in reversed(order):
        if node.kind == LEAF:
            e = node.element if labels is None else labels[node.element]
            built[id(node)] = {"kind": LEAF, "element": e}
        else:
            built[id(node)] = {
                "kind": node.kind,
                "children": [built[id(c)] for c in node.children],
            }
    return built[id(t)]


def sp_tree_from_json(obj: object) -> SPTree:
    if not isinstance(obj, dict):
        raise ValueError(f"tree node must be an object, got {type(obj).__name__}")
    kind = obj.get("kind")
    if kind == LEAF:
        element = obj.get("element")
        if not isinstance(element, int) or isinstance(element, bool) or element < 0:
            raise ValueError(f"leaf element must be a non-negative int, got {element!r}")
        return SPTree.leaf(element)
    if kind in (LINEAR, DISJOINT):
        children = obj.get("children")
        if not isinstance(children, list) or len(children) < 2:
            raise ValueError(f"{kind} node needs a list of at least two children")
        return SPTree(kind, children=tuple(sp_tree_from_json(c) for c in children))
    raise ValueError(f"unknown node kind {kind!r}")


_SP_DOT_LABELS = {LINEAR: "→", DISJOINT: "∪"}


def sp_tree_to_dot(t: SPTree, labels: Sequence[int] | None = None) -> str:
    return _tree_dot("sptree", t, _SP_DOT_LABELS, lambda n: n.element, labels)
