"""Shallow hitting sets.

Each class has a constructive routine with a shallowness bound: ABA-free and
pseudohalfplane families get 2, dual pseudohalfplane families 3 and
pseudohalfsphere families 4. ``min_shallowness_oracle`` computes the exact
optimum by exhaustive search for cross-checking.
"""

from __future__ import annotations

import os
from typing import Iterable, Sequence

from . import kernels
from .abafree import InvariantError, require_aba_free, unskippable_mask
from .hypercore import (
    HittingSet,
    OrderedHypergraph,
    PreconditionError,
    containment_free_indices,
    members,
    verify_hitting,
)
from .pshp import (
    PshpRepresentation,
    SphereRepresentation,
    add_avoiding_vertex,
    dual_representation,
    find_cover,
    polar,
    top_bottom_vertices,
)

DEFAULT_SHALLOW_BUDGET = 1 << 20


class BudgetExceeded(PreconditionError):
    pass


def env_budget(default: int) -> int:
    raw = os.environ.get("POLY_BUDGET")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"POLY_BUDGET must be an integer, got {raw!r}") from None


def _require_hittable(masks: Sequence[int]) -> None:
    for i, e in enumerate(masks):
        if not e:
            raise PreconditionError(f"edge {i} is empty and cannot be hit")


def _require_containment_free(masks: Sequence[int], n: int) -> None:
    keep = containment_free_indices(masks, n)
    if len(keep) != len(masks):
        drop = sorted(set(range(len(masks))) - set(keep))[0]
        raise PreconditionError(f"family is not containment-free: edge {drop} contains another edge")


def greedy_minimal(masks: Sequence[int], candidates: Iterable[int]) -> list[int]:
    """Shrink a hitting set to a minimal one, trying removals in ascending order."""
    cand = sorted(set(candidates))
    cmask = sum(1 << v for v in cand)
    load = [bin(e & cmask).count("1") for e in masks]
    if any(x == 0 for x in load):
        raise InvariantError("candidate set does not hit every edge")
    keep = []
    for v in cand:
        touched = [i for i, e in enumerate(masks) if (e >> v) & 1]
        if all(load[i] > 1 for i in touched):
            for i in touched:
                load[i] -= 1
        else:
            keep.append(v)
    return keep


def _finish(h: OrderedHypergraph, vertices: Iterable[int], c: int) -> HittingSet:
    hs = HittingSet.of(h, vertices)
    rep = verify_hitting(h, hs, c)
    if not rep:
        raise InvariantError(f"hitting set is not {c}-shallow: {rep.witness}")
    return hs


def minimal_unskippable_hitting(h: OrderedHypergraph) -> HittingSet:
    """Minimal hitting set drawn from the unskippable vertices; 2-shallow."""
    require_aba_free(h)
    _require_hittable(h.masks)
    _require_containment_free(h.masks, h.n)
    cand = members(unskippable_mask(h.masks, h.n))
    return _finish(h, greedy_minimal(h.masks, cand), 2)


def pshp_hitting(rep: PshpRepresentation) -> HittingSet:
    """Minimal hitting set drawn from the top and bottom vertices; 2-shallow."""
    rep.validate()
    h = rep.realize()
    _require_hittable(h.masks)
    _require_containment_free(h.masks, h.n)
    top, bottom = top_bottom_vertices(rep)
    return _finish(h, greedy_minimal(h.masks, set(top) | set(bottom)), 2)


def _via_dual(rep: SphereRepresentation, t: int) -> HittingSet:
    rep.validate()
    h = rep.realize()
    _require_hittable(h.masks)
    _require_containment_free(h.masks, h.n)
    d, _ = dual_representation(rep)
    cover = find_cover(d.realize(), t)
    if cover is not None:
        # dual edges are original vertices
        return _finish(h, cover, t)

    # no small cover: a vertex avoiding every dual edge exists, and the polar
    # transform at that vertex gives a pseudohalfplane representation of h
    dd = d.to_pshp() if not d.x_set else d
    ext, order = add_avoiding_vertex(dd)
    q = order.index(-1)
    p_rep, vorder, _ = polar(ext, q)
    # vertices of p_rep are dual edges, i.e. vertices of h
    inner = pshp_hitting(p_rep)
    return _finish(h, [vorder[v] for v in inner.vertices], 2)


def dual_pshp_hitting(rep: SphereRepresentation) -> HittingSet:
    """3-shallow hitting set of a family whose dual is a pseudohalfplane family.

    The input has every flag plain. If X is empty the family is itself a
    pseudohalfplane family and the 2-shallow routine applies directly.
    """
    if not rep.all_plain:
        raise PreconditionError("dual pseudohalfplane input needs every flag 'plain'")
    if not rep.x_set:
        return pshp_hitting(rep.to_pshp())
    return _via_dual(rep, 3)


def sphere_hitting(rep: SphereRepresentation) -> HittingSet:
    """4-shallow hitting set of a pseudohalfsphere family."""
    if not rep.x_set:
        return pshp_hitting(rep.to_pshp())
    return _via_dual(rep, 4)


def min_shallowness_oracle(h: OrderedHypergraph, budget: int | None = None) -> tuple[int, HittingSet]:
    """Exact minimum over hitting sets of the maximum load, with a witness.

    ``budget`` caps the subset space ``2**n`` (default ``2**20``, or
    ``POLY_BUDGET``).
    """
    if budget is None:
        budget = env_budget(DEFAULT_SHALLOW_BUDGET)
    if 2 ** h.n > budget:
        raise BudgetExceeded(f"2^{h.n} subsets exceed the search budget {budget}")
    _require_hittable(h.masks)
    if not h.m:
        return 0, HittingSet((), 0)
    top = max(bin(e).count("1") for e in h.masks)
    for c in range(1, top + 1):
        found = kernels.shallow_search(list(h.masks), h.n, c)
        if found is not None:
            return c, HittingSet.of(h, members(found))
    raise InvariantError("the full vertex set should always be a hitting set")


HITTERS = {
    "aba": (2, minimal_unskippable_hitting),
    "pshp": (2, pshp_hitting),
    "dual": (3, dual_pshp_hitting),
    "sphere": (4, sphere_hitting),
}


__all__ = [
    "BudgetExceeded",
    "HITTERS",
    "dual_pshp_hitting",
    "greedy_minimal",
    "min_shallowness_oracle",
    "minimal_unskippable_hitting",
    "pshp_hitting",
    "sphere_hitting",
]
