"""ABA-freeness and the structure of ABA-free hypergraphs.

Two hyperedges A, B form an ABA pattern when there are vertices x < y < z with
x, z in A - B and y in B - A. An ordered hypergraph without such a pair is
ABA-free. This module holds the checkers for that pattern and its 4-vertex
relatives, the partial order on hyperedges, unskippable vertices, and the
order-changing / edge-adding operations that keep a family ABA-free.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from typing import Callable, Sequence

from . import kernels
from .hypercore import (
    OrderedHypergraph,
    PreconditionError,
    highest,
    lowest,
    mask_of,
    members,
)


class InvariantError(RuntimeError):
    """A post-condition guaranteed by theory failed; indicates a bug or bad input."""


_NAMES = {
    "aba": ("x", "y", "z"),
    "abab": ("w", "x", "y", "z"),
    "abab-lower": ("x1", "x2", "x3", "x4"),
}


@dataclass(frozen=True)
class Violation:
    """A forbidden pattern between edges ``edgeA`` and ``edgeB`` on ``vertices``."""

    pattern: str
    edgeA: int
    edgeB: int
    vertices: tuple[int, ...]

    def __getattr__(self, name):
        names = _NAMES.get(self.__dict__.get("pattern", ""), ())
        if name in names:
            return self.vertices[names.index(name)]
        raise AttributeError(name)

    def to_json(self) -> dict:
        out: dict = {"pattern": self.pattern, "edgeA": self.edgeA, "edgeB": self.edgeB}
        out.update(zip(_NAMES[self.pattern], self.vertices))
        return out


class NotAbaFreeError(PreconditionError):
    def __init__(self, violation: Violation | None, msg: str = "hypergraph is not ABA-free"):
        super().__init__(msg if violation is None else f"{msg}: {violation.to_json()}")
        self.violation = violation


def _above(mask: int, v: int) -> int:
    return mask & ~((1 << (v + 1)) - 1)


def _open_span(mask: int) -> int:
    """Bits strictly between the lowest and highest bit of ``mask``."""
    if not mask:
        return 0
    lo, hi = lowest(mask), highest(mask)
    return ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1)


# ---------------------------------------------------------------------------
# pattern checks


def aba_triple(a: int, b: int) -> tuple[int, int, int] | None:
    """Lexicographically smallest (x, y, z) witnessing ABA for masks ``a``, ``b``."""
    d, e = a & ~b, b & ~a
    mids = e & _open_span(d)
    if not mids:
        return None
    x = lowest(d)
    y = lowest(mids)
    z = lowest(_above(d, y))
    return x, y, z


def abab_quad(a: int, b: int) -> tuple[int, int, int, int] | None:
    d, e = a & ~b, b & ~a
    out = []
    cur = -1
    for src in (d, e, d, e):
        nxt = _above(src, cur) if cur >= 0 else src
        if not nxt:
            return None
        cur = lowest(nxt)
        out.append(cur)
    return tuple(out)


def abab_lower_quad(a: int, b: int) -> tuple[int, int, int, int] | None:
    d, e = a & ~b, b & ~a
    out = []
    cur = -1
    for src in (a, e, d, b):
        nxt = _above(src, cur) if cur >= 0 else src
        if not nxt:
            return None
        cur = lowest(nxt)
        out.append(cur)
    return tuple(out)


def check_aba_free(h: OrderedHypergraph) -> Violation | None:
    """None if ``h`` is ABA-free, else the lexicographically smallest witness."""
    pair = kernels.aba_pair(list(h.masks), h.n)
    if pair is None:
        return None
    i, j = pair
    return Violation("aba", i, j, aba_triple(h.masks[i], h.masks[j]))


def is_aba_free(h: OrderedHypergraph) -> bool:
    return check_aba_free(h) is None


def require_aba_free(h: OrderedHypergraph) -> None:
    v = check_aba_free(h)
    if v is not None:
        raise NotAbaFreeError(v)


def _scan(h: OrderedHypergraph, pattern: str, finder: Callable) -> Violation | None:
    masks = h.masks
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if i != j:
                w = finder(a, b)
                if w is not None:
                    return Violation(pattern, i, j, w)
    return None


def check_abab_free(h: OrderedHypergraph) -> Violation | None:
    """None if no two edges alternate A,B,A,B on four increasing vertices."""
    return _scan(h, "abab", abab_quad)


def check_abab_lower(h: OrderedHypergraph) -> Violation | None:
    """None if ``h`` is aBAb-free (the bottomless-rectangle pattern)."""
    return _scan(h, "abab-lower", abab_lower_quad)


# ---------------------------------------------------------------------------
# partial order on hyperedges


class EdgeRelation(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare_masks(a: int, b: int) -> EdgeRelation:
    if a == b:
        return EdgeRelation.EQUAL
    d, e = a & ~b, b & ~a
    if not d or not e:
        return EdgeRelation.INCOMPARABLE
    less = lowest(d) < highest(e)
    greater = lowest(e) < highest(d)
    if less and greater:
        raise NotAbaFreeError(None, "edges are ordered both ways, so the family is not ABA-free")
    return EdgeRelation.LESS if less else EdgeRelation.GREATER


def compare_edges(h: OrderedHypergraph, i: int, j: int) -> EdgeRelation:
    try:
        return compare_masks(h.masks[i], h.masks[j])
    except NotAbaFreeError:
        w = aba_triple(h.masks[i], h.masks[j])
        v = Violation("aba", i, j, w) if w else Violation("aba", j, i, aba_triple(h.masks[j], h.masks[i]))
        raise NotAbaFreeError(v) from None


def linear_extension_masks(masks: Sequence[int]) -> list[int]:
    """Total order of edge indices extending ``<``; ties go to the smaller index."""
    m = len(masks)
    succ: list[list[int]] = [[] for _ in range(m)]
    indeg = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            rel = compare_masks(masks[i], masks[j])
            if rel is EdgeRelation.LESS:
                succ[i].append(j)
                indeg[j] += 1
            elif rel is EdgeRelation.GREATER:
                succ[j].append(i)
                indeg[i] += 1
    heap = [i for i in range(m) if indeg[i] == 0]
    heapq.heapify(heap)
    out = []
    while heap:
        i = heapq.heappop(heap)
        out.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, j)
    if len(out) != m:
        raise NotAbaFreeError(None, "edge order has a cycle, so the family is not ABA-free")
    return out


def linear_extension(h: OrderedHypergraph) -> list[int]:
    return linear_extension_masks(h.masks)


# ---------------------------------------------------------------------------
# skippable vertices


def skipped_mask(masks: Sequence[int]) -> int:
    out = 0
    for e in masks:
        out |= _open_span(e) & ~e
    return out


def unskippable_mask(masks: Sequence[int], n: int) -> int:
    return ((1 << n) - 1) & ~skipped_mask(masks)


def unskippable_vertices(h: OrderedHypergraph) -> list[int]:
    """Vertices not strictly inside the span of an edge that misses them.

    Isolated vertices are unskippable.
    """
    return members(unskippable_mask(h.masks, h.n))


# ---------------------------------------------------------------------------
# operations that keep ABA-freeness


def _shrink_vertex(masks: list[int], a: int, n: int) -> int:
    while a & (a - 1):
        cand = a & unskippable_mask(masks, n)
        if not cand:
            raise InvariantError("edge without an unskippable vertex; input is not ABA-free")
        bit = cand & -cand
        masks = [m & ~bit for m in masks]
        a &= ~bit
    return lowest(a)


def shrink_edge(h: OrderedHypergraph, i: int) -> tuple[int, OrderedHypergraph]:
    """Find ``a`` in edge ``i`` such that adding ``edge_i - {a}`` keeps ``h`` ABA-free.

    Peels the smallest unskippable vertex of the edge, recurses on the rest,
    and returns the vertex reached when a single vertex is left.
    """
    require_aba_free(h)
    a_mask = h.masks[i]
    if not a_mask:
        raise PreconditionError(f"edge {i} is empty")
    a = _shrink_vertex(list(h.masks), a_mask, h.n)
    out = OrderedHypergraph(h.n, h.edges + (tuple(v for v in h.edges[i] if v != a),))
    if check_aba_free(out) is not None:
        raise InvariantError("shrunk edge broke ABA-freeness")
    return a, out


def insert_vertex(h: OrderedHypergraph, position: int) -> OrderedHypergraph:
    """Insert a vertex at ``position``, joining every edge that straddles it."""
    if not 0 <= position <= h.n:
        raise PreconditionError(f"position must lie in [0, {h.n}]")
    edges = []
    for e in h.edges:
        lo = [v for v in e if v < position]
        hi = [v + 1 for v in e if v >= position]
        edges.append(tuple(lo + ([position] if lo and hi else []) + hi))
    return OrderedHypergraph(h.n + 1, tuple(edges))


def reorder(h: OrderedHypergraph, order: Sequence[int]) -> OrderedHypergraph:
    """Relabel so that new vertex ``i`` is old vertex ``order[i]``."""
    if sorted(order) != list(range(h.n)):
        raise PreconditionError("order must be a permutation of the vertices")
    pos = {old: new for new, old in enumerate(order)}
    return OrderedHypergraph(h.n, tuple(tuple(pos[v] for v in e) for e in h.edges))


# ---------------------------------------------------------------------------
# order search for unordered hypergraphs


DEFAULT_ORDER_LIMIT = 10


def _order_search(h: OrderedHypergraph, bad: Callable[[int, int], bool], limit: int) -> list[int] | None:
    if h.n > limit:
        raise PreconditionError(f"order search limited to n <= {limit}, got n = {h.n}")
    m = h.m
    inc = [[i for i in range(m) if v in set(h.edges[i])] for v in range(h.n)]
    cur = [0] * m
    order: list[int] = []
    used = [False] * h.n

    def rec() -> bool:
        p = len(order)
        if p == h.n:
            return True
        for v in range(h.n):
            if used[v]:
                continue
            bit = 1 << p
            for i in inc[v]:
                cur[i] |= bit
            inside = set(inc[v])
            ok = True
            for i in inside:
                for j in range(m):
                    if j not in inside and (bad(cur[i], cur[j]) or bad(cur[j], cur[i])):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                used[v] = True
                order.append(v)
                if rec():
                    return True
                order.pop()
                used[v] = False
            for i in inc[v]:
                cur[i] &= ~bit
        return False

    return list(order) if rec() else None


def find_aba_order(h: OrderedHypergraph, limit: int = DEFAULT_ORDER_LIMIT) -> list[int] | None:
    """A vertex order under which ``h`` is ABA-free, or None if none exists.

    ``order[i]`` is the vertex placed at position ``i``. Exhaustive
    backtracking; prefixes already containing a pattern are cut, since any
    pattern inside a prefix survives every extension.
    """
    return _order_search(h, lambda a, b: aba_triple(a, b) is not None, limit)


def check_abab_free_unordered(h: OrderedHypergraph, limit: int = DEFAULT_ORDER_LIMIT) -> list[int] | None:
    return _order_search(h, lambda a, b: abab_quad(a, b) is not None, limit)


__all__ = [
    "EdgeRelation",
    "InvariantError",
    "NotAbaFreeError",
    "Violation",
    "check_aba_free",
    "check_abab_free",
    "check_abab_free_unordered",
    "check_abab_lower",
    "compare_edges",
    "find_aba_order",
    "insert_vertex",
    "is_aba_free",
    "linear_extension",
    "mask_of",
    "reorder",
    "shrink_edge",
    "unskippable_vertices",
]
