"""Ordered hypergraphs and the structural operations the rest of the package uses.

Vertices are the integers ``0..n-1`` and their index order is the vertex order.
Internally every hyperedge is also available as a bitmask (bit ``v`` set iff
``v`` is in the edge); most algorithms work on the masks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels


class PreconditionError(ValueError):
    """An operation was called on input that violates its stated precondition."""


# ---------------------------------------------------------------------------
# bit helpers


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def highest(mask: int) -> int:
    return mask.bit_length() - 1


def full_mask(n: int) -> int:
    return (1 << n) - 1


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class OrderedHypergraph:
    """A multihypergraph on the ordered vertex set ``0..n-1``.

    ``edges`` is normalised to a tuple of strictly increasing tuples. Repeated
    hyperedges are kept; empty hyperedges are allowed.
    """

    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {self.n}")
        norm = []
        for i, e in enumerate(self.edges):
            t = tuple(sorted(e))
            if len(set(t)) != len(t):
                raise PreconditionError(f"edge {i} repeats a vertex: {list(e)}")
            if t and (t[0] < 0 or t[-1] >= self.n):
                raise PreconditionError(f"edge {i} has a vertex outside [0, {self.n})")
            norm.append(t)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "OrderedHypergraph":
        return cls(n, tuple(tuple(members(m)) for m in masks))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def select(self, indices: Iterable[int]) -> "OrderedHypergraph":
        """Sub-family made of the given edges (same vertex set)."""
        return OrderedHypergraph(self.n, tuple(self.edges[i] for i in indices))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "OrderedHypergraph":
        try:
            return cls(int(obj["n"]), tuple(tuple(int(v) for v in e) for e in obj["edges"]))
        except (KeyError, TypeError) as exc:
            raise PreconditionError(f"malformed instance JSON: {exc}") from exc


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> color in ``1..k``; ``colors[v]`` is the color of ``v``."""

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        bad = [v for v, c in enumerate(self.colors) if not 1 <= c <= self.k]
        if bad:
            raise PreconditionError(f"vertex {bad[0]} has color outside 1..{self.k}")

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def to_json(self) -> dict:
        return {"k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, obj: dict) -> "Coloring":
        return cls(tuple(obj["colors"]), int(obj["k"]))


@dataclass(frozen=True)
class HittingSet:
    vertices: tuple[int, ...]
    shallowness: int

    @classmethod
    def of(cls, h: OrderedHypergraph, vertices: Iterable[int]) -> "HittingSet":
        vs = tuple(sorted(set(vertices)))
        r = mask_of(vs)
        load = max((bin(e & r).count("1") for e in h.masks), default=0)
        return cls(vs, load)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "shallowness": self.shallowness}

    @classmethod
    def from_json(cls, obj: dict) -> "HittingSet":
        return cls(tuple(obj["vertices"]), int(obj.get("shallowness", -1)))


@dataclass(frozen=True)
class Report:
    """Outcome of a verification. Truthy iff the check passed."""

    ok: bool
    witness: dict | None = field(default=None)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


# ---------------------------------------------------------------------------
# operations


def containment_free_indices(masks: Sequence[int], n: int | None = None) -> list[int]:
    """Indices of the edges that survive containment reduction.

    Among equal edges the first occurrence survives; an edge that strictly
    contains another edge is dropped.
    """
    if n is None:
        n = max((m.bit_length() for m in masks), default=0)
    return kernels.containment_free(list(masks), n)


def containment_free_reduce(h: OrderedHypergraph) -> OrderedHypergraph:
    return h.select(containment_free_indices(h.masks, h.n))


def restrict(h: OrderedHypergraph, keep: Iterable[int]) -> OrderedHypergraph:
    """Induced subhypergraph on ``keep``, reindexed preserving the order."""
    keep = sorted(set(keep))
    if keep and (keep[0] < 0 or keep[-1] >= h.n):
        raise PreconditionError("keep must be a subset of the vertex set")
    pos = {v: i for i, v in enumerate(keep)}
    return OrderedHypergraph(
        len(keep), tuple(tuple(pos[v] for v in e if v in pos) for e in h.edges)
    )


def dual(h: OrderedHypergraph, edge_order: Sequence[int] | None = None) -> OrderedHypergraph:
    """Incidence transpose.

    Dual vertex ``j`` is the original edge ``edge_order[j]``; dual edge ``p`` is
    the set of dual vertices whose original edge contains ``p``.
    """
    if edge_order is None:
        edge_order = range(h.m)
    edge_order = list(edge_order)
    if sorted(edge_order) != list(range(h.m)):
        raise PreconditionError("edge_order must be a permutation of the edge indices")
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for j, e in enumerate(edge_order):
        for p in h.edges[e]:
            incident[p].append(j)
    return OrderedHypergraph(h.m, tuple(tuple(x) for x in incident))


def verify_polychromatic(h: OrderedHypergraph, c: Coloring, m: int) -> Report:
    """Pass iff every edge with at least ``m`` vertices sees all ``c.k`` colors."""
    if len(c.colors) < h.n:
        raise PreconditionError("coloring does not cover every vertex")
    everything = set(range(1, c.k + 1))
    for i, e in enumerate(h.edges):
        if len(e) < m:
            continue
        missing = everything - {c.colors[v] for v in e}
        if missing:
            return Report(False, {"edge": i, "vertices": list(e), "missing_color": min(missing)})
    return Report(True)


def verify_hitting(h: OrderedHypergraph, r: HittingSet | Iterable[int], c: int) -> Report:
    """Pass iff ``1 <= |R & H| <= c`` for every hyperedge ``H``."""
    vs = r.vertices if isinstance(r, HittingSet) else tuple(r)
    if any(v < 0 or v >= h.n for v in vs):
        raise PreconditionError("hitting set contains a vertex outside the hypergraph")
    rm = mask_of(vs)
    for i, e in enumerate(h.masks):
        load = bin(e & rm).count("1")
        if load < 1 or load > c:
            w = {"edge": i, "vertices": list(h.edges[i]), "load": load}
            if not e:
                w["reason"] = "empty hyperedge cannot be hit"
            return Report(False, w)
    return Report(True)
