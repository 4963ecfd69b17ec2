"""Explicit extremal constructions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .abafree import InvariantError, check_abab_free
from .geom import PointSet2D
from .hypercore import OrderedHypergraph, PreconditionError

DEFAULT_HK_VERTICES = 100


def sharpness_family(k: int) -> OrderedHypergraph:
    """All (2k-2)-subsets of 2k-1 vertices: no k-coloring puts every color in every edge."""
    if k < 2:
        raise PreconditionError("k must be at least 2")
    n = 2 * k - 1
    return OrderedHypergraph(n, tuple(combinations(range(n), n - 1)))


@dataclass(frozen=True)
class HkTree:
    """Tree labels of an ``hk_family`` instance.

    ``labels[v]`` is the root path of vertex ``v`` (child indices from the
    root); ``children_edges`` and ``path_edges`` index the two edge kinds.
    """

    k: int
    labels: tuple[tuple[int, ...], ...]
    children_edges: tuple[int, ...]
    path_edges: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "labels": [list(x) for x in self.labels],
            "children_edges": list(self.children_edges),
            "path_edges": list(self.path_edges),
        }


def _hk_order(k: int) -> list[tuple[int, ...]]:
    # Each node's children form a consecutive block; the blocks of their own
    # children follow it, nested, last child first. This is the left-to-right
    # order of the recursive curve construction, where every new block sits
    # in the empty strip under its path curve.
    def expand(node: tuple[int, ...]) -> list[tuple[int, ...]]:
        if len(node) == k - 1:
            return []
        kids = [node + (i,) for i in range(k)]
        out = list(kids)
        for c in reversed(kids):
            out += expand(c)
        return out

    return [()] + expand(())


def hk_family(k: int, max_vertices: int = DEFAULT_HK_VERTICES) -> tuple[OrderedHypergraph, HkTree]:
    """k-uniform hypergraph on the complete k-ary tree of depth k with an ABAB-free order.

    Edges are the child sets of inner nodes, then the root-to-leaf paths.
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    size = (k**k - 1) // (k - 1)
    if size > max_vertices:
        raise PreconditionError(f"hk_family({k}) has {size} vertices, above the limit {max_vertices}")
    order = _hk_order(k)
    pos = {v: i for i, v in enumerate(order)}
    bfs = sorted(order, key=lambda v: (len(v), v))
    edges = []
    for v in bfs:
        if len(v) < k - 1:
            edges.append(tuple(sorted(pos[v + (i,)] for i in range(k))))
    n_children = len(edges)
    for v in bfs:
        if len(v) == k - 1:
            edges.append(tuple(sorted(pos[v[:d]] for d in range(k))))
    h = OrderedHypergraph(len(order), tuple(edges))
    if check_abab_free(h) is not None:
        raise InvariantError(f"hk_family({k}) order is not ABAB-free")
    meta = HkTree(k, tuple(order), tuple(range(n_children)), tuple(range(n_children, len(edges))))
    return h, meta


def no_shallow_family(k: int) -> tuple[PointSet2D, OrderedHypergraph]:
    """Bottomless-rectangle family whose hitting sets all load some edge with k/2 points.

    Points ``(i, i)`` and ``(k+i, k+1-i)`` for ``i = 1..k``, listed by x. Edges:
    the first k points, the last k points, and the pairs ``{(i, i), (2k+1-i, i)}``.
    """
    if k < 2 or k % 2:
        raise PreconditionError("k must be an even integer >= 2")
    xs = [(i, i) for i in range(1, k + 1)]
    ys = [(k + i, k + 1 - i) for i in range(1, k + 1)]
    pts = PointSet2D(tuple(xs + ys))
    edges = [tuple(range(k)), tuple(range(k, 2 * k))]
    for i in range(1, k + 1):
        j = k + 1 - i  # (2k+1-i, i) is the j-th point of the second group
        edges.append((i - 1, k + j - 1))
    return pts, OrderedHypergraph(2 * k, tuple(edges))


__all__ = ["HkTree", "hk_family", "no_shallow_family", "sharpness_family"]
