"""Pseudohalfplane and pseudohalfsphere representations and their transforms.

A pseudohalfplane representation is an ABA-free base family F together with a
side per base edge: an ``up`` edge realises F itself, a ``down`` edge realises
its complement. A pseudohalfsphere representation adds a vertex set X; a
``plain`` edge realises ``F ^ X`` and a ``comp`` edge realises ``(S - F) ^ X``.

Every transform that moves vertices returns the new representation together
with ``order``: ``order[new_position]`` is the old position of that vertex, or
``-1`` for a vertex that did not exist before.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Sequence, Union

from .abafree import (
    EdgeRelation,
    InvariantError,
    NotAbaFreeError,
    check_aba_free,
    compare_masks,
    linear_extension_masks,
    require_aba_free,
    unskippable_mask,
)
from .hypercore import (
    OrderedHypergraph,
    PreconditionError,
    dual,
    full_mask,
    mask_of,
    members,
)

UP, DOWN = "up", "down"
PLAIN, COMP = "plain", "comp"


class NoCommonPointError(PreconditionError):
    """Some few realised hyperedges have empty intersection."""

    def __init__(self, witness: tuple[int, ...]):
        super().__init__(f"hyperedges {list(witness)} have no common vertex")
        self.witness = witness


def _permute_mask(mask: int, pos: dict[int, int]) -> int:
    out = 0
    for v in members(mask):
        out |= 1 << pos[v]
    return out


@dataclass(frozen=True)
class PshpRepresentation:
    base: OrderedHypergraph
    sides: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(self.sides))
        if len(self.sides) != self.base.m:
            raise PreconditionError("need exactly one side per base edge")
        if any(s not in (UP, DOWN) for s in self.sides):
            raise PreconditionError("sides must be 'up' or 'down'")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    def realized_masks(self) -> list[int]:
        full = full_mask(self.n)
        return [f if s == UP else full & ~f for f, s in zip(self.base.masks, self.sides)]

    def realize(self) -> OrderedHypergraph:
        return OrderedHypergraph.from_masks(self.n, self.realized_masks())

    def validate(self) -> None:
        require_aba_free(self.base)

    def select(self, indices: Sequence[int]) -> "PshpRepresentation":
        return PshpRepresentation(self.base.select(indices), tuple(self.sides[i] for i in indices))

    def restrict(self, keep: Sequence[int]) -> "PshpRepresentation":
        from .hypercore import restrict

        return PshpRepresentation(restrict(self.base, keep), self.sides)

    def complement(self) -> "PshpRepresentation":
        """Representation realising the complement of every edge."""
        return PshpRepresentation(self.base, tuple(DOWN if s == UP else UP for s in self.sides))

    def to_sphere(self) -> "SphereRepresentation":
        return SphereRepresentation(self.base, (), tuple(PLAIN if s == UP else COMP for s in self.sides))

    def to_json(self) -> dict:
        return {"n": self.n, "base_edges": [list(e) for e in self.base.edges], "sides": list(self.sides)}


@dataclass(frozen=True)
class SphereRepresentation:
    base: OrderedHypergraph
    x_set: tuple[int, ...]
    flags: tuple[str, ...]

    def __post_init__(self):
        xs = tuple(sorted(set(self.x_set)))
        if xs and (xs[0] < 0 or xs[-1] >= self.base.n):
            raise PreconditionError("x_set must be a subset of the vertices")
        object.__setattr__(self, "x_set", xs)
        object.__setattr__(self, "flags", tuple(self.flags))
        if len(self.flags) != self.base.m:
            raise PreconditionError("need exactly one flag per base edge")
        if any(f not in (PLAIN, COMP) for f in self.flags):
            raise PreconditionError("flags must be 'plain' or 'comp'")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def x_mask(self) -> int:
        return mask_of(self.x_set)

    @property
    def all_plain(self) -> bool:
        return all(f == PLAIN for f in self.flags)

    def realized_masks(self) -> list[int]:
        full, x = full_mask(self.n), self.x_mask
        return [(f if g == PLAIN else full & ~f) ^ x for f, g in zip(self.base.masks, self.flags)]

    def realize(self) -> OrderedHypergraph:
        return OrderedHypergraph.from_masks(self.n, self.realized_masks())

    def validate(self) -> None:
        require_aba_free(self.base)

    def select(self, indices: Sequence[int]) -> "SphereRepresentation":
        return SphereRepresentation(self.base.select(indices), self.x_set, tuple(self.flags[i] for i in indices))

    def restrict(self, keep: Sequence[int]) -> "SphereRepresentation":
        from .hypercore import restrict

        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        xs = tuple(pos[v] for v in self.x_set if v in pos)
        return SphereRepresentation(restrict(self.base, keep), xs, self.flags)

    def complement(self) -> "SphereRepresentation":
        return SphereRepresentation(self.base, self.x_set, tuple(COMP if f == PLAIN else PLAIN for f in self.flags))

    def flip_x(self) -> "SphereRepresentation":
        """Same realised family, with X replaced by its complement."""
        xs = tuple(members(full_mask(self.n) & ~self.x_mask))
        return SphereRepresentation(self.base, xs, tuple(COMP if f == PLAIN else PLAIN for f in self.flags))

    def to_pshp(self) -> PshpRepresentation:
        if self.x_set:
            raise PreconditionError("only a representation with empty x_set is a pseudohalfplane one")
        return PshpRepresentation(self.base, tuple(UP if f == PLAIN else DOWN for f in self.flags))

    def reorder(self, order: Sequence[int]) -> "SphereRepresentation":
        pos = {old: new for new, old in enumerate(order)}
        base = OrderedHypergraph(self.n, tuple(tuple(pos[v] for v in e) for e in self.base.edges))
        return SphereRepresentation(base, tuple(pos[v] for v in self.x_set), self.flags)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "base_edges": [list(e) for e in self.base.edges],
            "x_set": list(self.x_set),
            "flags": list(self.flags),
        }


Representation = Union[PshpRepresentation, SphereRepresentation]


def load_instance(obj: dict) -> OrderedHypergraph | Representation:
    """Parse instance or representation JSON, choosing the type by its keys."""
    try:
        if "base_edges" not in obj:
            return OrderedHypergraph.from_json(obj)
        base = OrderedHypergraph(int(obj["n"]), tuple(tuple(e) for e in obj["base_edges"]))
        if "sides" in obj:
            if "flags" in obj or obj.get("x_set"):
                raise PreconditionError("'sides' cannot be combined with 'x_set'/'flags'")
            return PshpRepresentation(base, tuple(obj["sides"]))
        flags = obj.get("flags", [PLAIN] * base.m)
        return SphereRepresentation(base, tuple(obj.get("x_set", ())), tuple(flags))
    except (KeyError, TypeError) as exc:
        raise PreconditionError(f"malformed representation JSON: {exc}") from exc


def as_sphere(rep: OrderedHypergraph | Representation) -> SphereRepresentation:
    if isinstance(rep, SphereRepresentation):
        return rep
    if isinstance(rep, PshpRepresentation):
        return rep.to_sphere()
    return SphereRepresentation(rep, (), (PLAIN,) * rep.m)


def realize(rep: Representation) -> OrderedHypergraph:
    return rep.realize()


def compose(outer: Sequence[int], inner: Sequence[int]) -> list[int]:
    """Order of a transform applied after another: ``outer[inner[i]]``."""
    return [outer[j] if j >= 0 else -1 for j in inner]


# ---------------------------------------------------------------------------
# top / bottom vertices


def top_bottom_vertices(rep: PshpRepresentation) -> tuple[list[int], list[int]]:
    """Top and bottom vertices of a pseudohalfplane representation.

    A top vertex lies in some upset and is skipped by no base edge, so the
    singleton on it could join the base family. A bottom vertex lies in some
    downset and is skipped by no complement of a base edge.
    """
    n = rep.n
    full = full_mask(n)
    base = list(rep.base.masks)
    real = rep.realized_masks()
    up_union = down_union = 0
    for r, s in zip(real, rep.sides):
        if s == UP:
            up_union |= r
        else:
            down_union |= r
    top = unskippable_mask(base, n) & up_union
    bottom = unskippable_mask([full & ~f for f in base], n) & down_union
    return members(top), members(bottom)


# ---------------------------------------------------------------------------
# reorderings


def pushback_family(h: OrderedHypergraph, y_count: int) -> tuple[OrderedHypergraph, list[int]]:
    """Complement the first ``y_count`` vertices in every edge and move them last."""
    if not 0 <= y_count <= h.n:
        raise PreconditionError(f"y_count must lie in [0, {h.n}]")
    order = list(range(y_count, h.n)) + list(range(y_count))
    pos = {old: new for new, old in enumerate(order)}
    y = full_mask(y_count)
    masks = [_permute_mask(f ^ y, pos) for f in h.masks]
    return OrderedHypergraph.from_masks(h.n, masks), order


def pushback(rep: SphereRepresentation, y_count: int) -> tuple[SphereRepresentation, list[int]]:
    """Rotate the prefix Y of length ``y_count`` to the back: F -> F^Y, X -> X^Y."""
    base, order = pushback_family(rep.base, y_count)
    pos = {old: new for new, old in enumerate(order)}
    x = rep.x_mask ^ full_mask(y_count)
    out = SphereRepresentation(base, tuple(pos[v] for v in members(x)), rep.flags)
    return out, order


def pushfront(h: OrderedHypergraph, i: int) -> tuple[OrderedHypergraph, list[int]]:
    """Move the vertices of the minimal edge ``i`` to the front, keeping relative order."""
    require_aba_free(h)
    a = h.masks[i]
    for j, b in enumerate(h.masks):
        if j != i and compare_masks(b, a) is EdgeRelation.LESS:
            raise PreconditionError(f"edge {i} is not minimal: edge {j} is smaller")
    inside = list(h.edges[i])
    order = inside + [v for v in range(h.n) if not (a >> v) & 1]
    pos = {old: new for new, old in enumerate(order)}
    out = OrderedHypergraph(h.n, tuple(tuple(pos[v] for v in e) for e in h.edges))
    if check_aba_free(out) is not None:
        raise InvariantError("pushfront broke ABA-freeness")
    return out, order


# ---------------------------------------------------------------------------
# duality


def dual_representation(rep: OrderedHypergraph | Representation) -> tuple[SphereRepresentation, list[int]]:
    """Representation of the dual hypergraph.

    Dual vertex ``j`` is original edge ``order[j]``, the order being the
    linear extension of the base edges; dual edge ``p`` is original vertex
    ``p``. Complemented edges become the dual X, and the vertices in X become
    complemented dual edges. A pseudohalfplane input thus yields a
    representation with every flag plain, and vice versa.
    """
    rep = as_sphere(rep)
    require_aba_free(rep.base)
    order = linear_extension_masks(rep.base.masks)
    base = dual(rep.base, order)
    if check_aba_free(base) is not None:
        raise InvariantError("dual of an ABA-free family under its edge order is not ABA-free")
    x_hat = tuple(j for j, e in enumerate(order) if rep.flags[e] == COMP)
    xs = set(rep.x_set)
    flags = tuple(COMP if p in xs else PLAIN for p in range(rep.n))
    return SphereRepresentation(base, x_hat, flags), order


# ---------------------------------------------------------------------------
# polar transform


def polar(rep: OrderedHypergraph | Representation, p: int) -> tuple[PshpRepresentation, list[int], list[int]]:
    """Pseudohalfplane representation of the dual when vertex ``p`` is in no edge.

    Returns ``(dual_rep, vertex_order, edge_source)``: position ``j`` of the
    result is original edge ``vertex_order[j]``, and result edge ``q`` is the
    dual edge of original vertex ``edge_source[q]``. The empty dual edge of
    ``p`` is left out.
    """
    rep = as_sphere(rep)
    rep.validate()
    real = rep.realized_masks()
    if not 0 <= p < rep.n:
        raise PreconditionError(f"vertex {p} out of range")
    hit = [i for i, r in enumerate(real) if (r >> p) & 1]
    if hit:
        raise PreconditionError(f"vertex {p} lies in realised edge {hit[0]}")

    rep1, ord1 = pushback(rep, p)  # p is now position 0
    d, dord = dual_representation(rep1)
    if d.flags[0] == COMP:
        d = d.flip_x()
    if d.base.masks[0] != d.x_mask:
        raise InvariantError("dual edge of the avoided vertex does not equal X")
    try:
        _, ord2 = pushfront(d.base, 0)
    except PreconditionError as exc:
        raise InvariantError(f"dual edge of the avoided vertex is not minimal: {exc}") from exc
    d2 = d.reorder(ord2)
    d3, ord3 = pushback(d2, len(d.x_set))
    if d3.x_set:
        raise InvariantError("polar chain left a non-empty X")
    keep = [q for q in range(d3.m) if q != 0]
    out = d3.select(keep).to_pshp()
    vertex_order = compose(dord, compose(ord2, ord3))
    edge_source = [ord1[q] for q in keep]

    # post-check: realised sets are the incidence transpose
    pos = {e: j for j, e in enumerate(vertex_order)}
    expect = []
    for v in edge_source:
        expect.append(sum(1 << pos[i] for i, r in enumerate(real) if (r >> v) & 1))
    if out.realized_masks() != expect:
        raise InvariantError("polar output does not realise the dual hypergraph")
    if check_aba_free(out.base) is not None:
        raise InvariantError("polar output base is not ABA-free")
    return out, vertex_order, edge_source


# ---------------------------------------------------------------------------
# covers and Helly-type extensions


def find_cover(h: OrderedHypergraph, t: int) -> tuple[int, ...] | None:
    """At most ``t`` edges whose union is every vertex, smallest first; else None."""
    full = full_mask(h.n)
    if full == 0:
        return ()
    masks = h.masks
    for size in range(1, t + 1):
        for combo in combinations(range(h.m), size):
            u = 0
            for i in combo:
                u |= masks[i]
            if u == full:
                return combo
    return None


def _intersecting(masks: Sequence[int], t: int, full: int) -> tuple[int, ...] | None:
    """Witness of at most ``t`` edges with empty intersection, or None."""
    for size in range(1, t + 1):
        for combo in combinations_with_replacement(range(len(masks)), size):
            x = full
            for i in combo:
                x &= masks[i]
            if not x:
                return tuple(sorted(set(combo)))
    return None


def _helly_pshp(rep: PshpRepresentation) -> tuple[PshpRepresentation, list[int]]:
    n, m = rep.n, rep.m
    if m == 0:
        return PshpRepresentation(OrderedHypergraph(n + 1, ()), ()), list(range(n)) + [-1]
    d, dord = dual_representation(rep)  # every flag plain, X = downsets
    extra = tuple(members(full_mask(m) & ~d.x_mask))
    d_ext = SphereRepresentation(
        OrderedHypergraph(d.n, d.base.edges + (extra,)), d.x_set, d.flags + (PLAIN,)
    )
    if check_aba_free(d_ext.base) is not None:
        raise InvariantError("complement of X does not extend the dual family")
    e, eord = dual_representation(d_ext)
    # edges of e follow dual positions; put them back in original edge order
    back = [dord.index(i) for i in range(m)]
    e = e.select(back)
    out = e.to_pshp()
    order = [v if v < n else -1 for v in eord]
    return out, order


def _helly_sphere(rep: SphereRepresentation) -> tuple[SphereRepresentation, list[int]]:
    n, m = rep.n, rep.m
    if m == 0:
        return SphereRepresentation(OrderedHypergraph(n + 1, ()), rep.x_set, ()), list(range(n)) + [-1]
    if rep.flags[0] == COMP:
        rep = rep.flip_x()
    full = full_mask(n)
    f0 = rep.base.masks[0]
    x_prime = full & ~f0
    # H' realises every edge so that edge 0 is everything; E0 is its empty twin
    h_plus = SphereRepresentation(
        OrderedHypergraph(n, rep.base.edges + (rep.base.edges[0],)),
        tuple(members(x_prime)),
        rep.flags + (COMP,),
    )
    dd, dord = dual_representation(h_plus)
    p0 = dord.index(m)
    pshp_rep, pord, pedge = polar(dd, p0)
    # pshp_rep: vertices are the original vertices, edges are those of H'
    src = [dord[q] for q in pedge]
    pshp_rep = pshp_rep.select([src.index(i) for i in range(m)])
    ext, ord2 = _helly_pshp(pshp_rep)
    vorder = compose(pord, ord2)
    pos = {v: j for j, v in enumerate(vorder) if v >= 0}
    x_plus = x_prime ^ rep.x_mask
    out = SphereRepresentation(
        ext.base,
        tuple(pos[v] for v in members(x_plus)),
        tuple(PLAIN if s == UP else COMP for s in ext.sides),
    )
    return out, vorder


def helly_extend(rep: Representation) -> tuple[Representation, list[int]]:
    """Add one vertex lying in every realised edge.

    A pseudohalfplane representation needs every three realised edges to
    meet; a pseudohalfsphere one needs every four. Otherwise
    ``NoCommonPointError`` carries the offending edges. The new vertex's
    position comes out of dualising, adding the complement of the dual X,
    and dualising back.
    """
    rep.validate()
    t = 3 if isinstance(rep, PshpRepresentation) else 4
    real = rep.realized_masks()
    bad = _intersecting(real, t, full_mask(rep.n))
    if bad is not None:
        raise NoCommonPointError(bad)
    out, order = _helly_pshp(rep) if t == 3 else _helly_sphere(rep)

    # post-check: every realised edge gained exactly the new vertex
    pos = {v: j for j, v in enumerate(order)}
    new = order.index(-1)
    got = out.realized_masks()
    for i, r in enumerate(real):
        want = _permute_mask(r, pos) | (1 << new)
        if got[i] != want:
            raise InvariantError(f"extended edge {i} does not match")
    if check_aba_free(out.base) is not None:
        raise InvariantError("extended base is not ABA-free")
    return out, order


def add_avoiding_vertex(rep: Representation) -> tuple[Representation, list[int]]:
    """Add one vertex lying in no realised edge (complement form of Helly)."""
    ext, order = helly_extend(rep.complement())
    return ext.complement(), order


__all__ = [
    "COMP",
    "DOWN",
    "NoCommonPointError",
    "NotAbaFreeError",
    "PLAIN",
    "PshpRepresentation",
    "SphereRepresentation",
    "UP",
    "add_avoiding_vertex",
    "as_sphere",
    "dual_representation",
    "find_cover",
    "helly_extend",
    "load_instance",
    "polar",
    "pushback",
    "pushback_family",
    "pushfront",
    "realize",
    "top_bottom_vertices",
]
