"""Polychromatic colorings built from shallow hitting sets.

``generic_color`` peels one shallow hitting set per color. If every hitting
set meets each minimal edge at most ``c`` times, an edge of size at least
``c*k - (c-1)`` sees every color. The class wrappers fix ``c`` per family
type; ``balanced_color`` keeps cycling colors until the vertices run out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple, Union

from . import kernels
from .abafree import InvariantError
from .hitting import HITTERS, BudgetExceeded, env_budget
from .hypercore import (
    Coloring,
    HittingSet,
    OrderedHypergraph,
    PreconditionError,
    Report,
    containment_free_indices,
    restrict,
    verify_hitting,
    verify_polychromatic,
)
from .pshp import PshpRepresentation, SphereRepresentation

Instance = Union[OrderedHypergraph, PshpRepresentation, SphereRepresentation]

DEFAULT_POLY_BUDGET = 20000


def threshold(c: int, k: int) -> int:
    """Edge size that guarantees all ``k`` colors for hitting bound ``c``."""
    return c * k - (c - 1)


def _masks(inst: Instance) -> list[int]:
    return list(inst.masks) if isinstance(inst, OrderedHypergraph) else inst.realized_masks()


def _realize(inst: Instance) -> OrderedHypergraph:
    return inst if isinstance(inst, OrderedHypergraph) else inst.realize()


def _restrict(inst: Instance, keep: list[int]) -> Instance:
    return restrict(inst, keep) if isinstance(inst, OrderedHypergraph) else inst.restrict(keep)


def _check_class(inst: Instance, cls: str) -> None:
    want = {
        "aba": OrderedHypergraph,
        "pshp": PshpRepresentation,
        "dual": SphereRepresentation,
        "sphere": SphereRepresentation,
    }[cls]
    if not isinstance(inst, want):
        raise PreconditionError(f"class '{cls}' needs a {want.__name__}, got {type(inst).__name__}")
    if cls == "dual" and not inst.all_plain:
        raise PreconditionError("class 'dual' needs every flag 'plain'")


class Round(NamedTuple):
    hitting: tuple[int, ...]
    color: int
    edges_left: int
    vertices_left: int


@dataclass
class ColoringTrace:
    rounds: list[Round] = field(default_factory=list)
    coloring: Coloring | None = None

    def replay(self, n: int) -> Coloring:
        """Rebuild the coloring from the rounds; survivors get the last color."""
        colors = [0] * n
        for r in self.rounds:
            for v in r.hitting:
                colors[v] = r.color
        k = self.coloring.k if self.coloring else max(colors, default=1)
        return Coloring(tuple(c or k for c in colors), k)

    def to_json(self) -> dict:
        return {
            "rounds": [r._asdict() | {"hitting": list(r.hitting)} for r in self.rounds],
            "coloring": self.coloring.to_json() if self.coloring else None,
        }


def _hit_round(inst: Instance, cls: str) -> tuple[list[int], int]:
    """Hitting set of the containment-free core of ``inst`` (non-empty edges)."""
    c, hitter = HITTERS[cls]
    masks = _masks(inst)
    live = [i for i, e in enumerate(masks) if e]
    idx = [live[j] for j in containment_free_indices([masks[i] for i in live], inst.n)]
    core = inst.select(idx)
    if not core.m:
        return [], c
    hs: HittingSet = hitter(core)
    rep = verify_hitting(_realize(core), hs, c)
    if not rep:
        raise InvariantError(f"round hitting set is not {c}-shallow: {rep.witness}")
    return list(hs.vertices), c


def generic_color(inst: Instance, k: int, cls: str) -> tuple[Coloring, ColoringTrace]:
    """k-coloring in which every edge of size >= c*k-(c-1) sees all colors."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    _check_class(inst, cls)
    c, _ = HITTERS[cls]
    m = threshold(c, k)
    full = _realize(inst)
    for i, e in enumerate(full.edges):
        if len(e) < m:
            raise PreconditionError(f"edge {i} has size {len(e)} < {m} = {c}*{k}-{c - 1}")

    colors = [0] * inst.n
    alive = list(range(inst.n))
    cur = inst
    trace = ColoringTrace()
    for color in range(1, k):
        hit, _ = _hit_round(cur, cls)
        chosen = [alive[v] for v in hit]
        for v in chosen:
            colors[v] = color
        gone = set(hit)
        keep = [p for p in range(len(alive)) if p not in gone]
        cur = _restrict(cur, keep)
        alive = [alive[p] for p in keep]
        trace.rounds.append(Round(tuple(chosen), color, cur.m, len(alive)))
    for v in alive:
        colors[v] = k
    coloring = Coloring(tuple(colors), k)
    trace.coloring = coloring
    rep = verify_polychromatic(full, coloring, m)
    if not rep:
        raise InvariantError(f"coloring is not polychromatic: {rep.witness}")
    return coloring, trace


def _class_color(inst: Instance, k: int, cls: str) -> Coloring:
    # edges below the threshold carry no requirement; drop them first
    _check_class(inst, cls)
    m = threshold(HITTERS[cls][0], k)
    masks = _masks(inst)
    big = [i for i, e in enumerate(masks) if bin(e).count("1") >= m]
    return generic_color(inst.select(big), k, cls)[0]


def color_aba(h: OrderedHypergraph, k: int) -> Coloring:
    return _class_color(h, k, "aba")


def color_pshp(rep: PshpRepresentation, k: int) -> Coloring:
    return _class_color(rep, k, "pshp")


def color_dual_pshp(rep: SphereRepresentation, k: int) -> Coloring:
    return _class_color(rep, k, "dual")


def color_sphere(rep: SphereRepresentation, k: int) -> Coloring:
    return _class_color(rep, k, "sphere")


COLORERS: dict[str, Callable] = {
    "aba": color_aba,
    "pshp": color_pshp,
    "dual": color_dual_pshp,
    "sphere": color_sphere,
}


# ---------------------------------------------------------------------------
# balanced colorings


def verify_balanced(h: OrderedHypergraph, coloring: Coloring, c: int) -> Report:
    """Pass iff on every edge any two color counts satisfy n1 <= c*(n2 + 1)."""
    for i, e in enumerate(h.edges):
        counts = [0] * coloring.k
        for v in e:
            counts[coloring.colors[v] - 1] += 1
        hi, lo = max(counts, default=0), min(counts, default=0)
        if hi > c * (lo + 1):
            return Report(False, {"edge": i, "vertices": list(e), "counts": counts, "c": c})
    return Report(True)


class BalanceError(InvariantError):
    def __init__(self, report: Report, coloring: Coloring):
        super().__init__(f"coloring is not balanced: {report.witness}")
        self.report = report
        self.coloring = coloring


def balanced_color(inst: Instance, k: int, cls: str) -> Coloring:
    """Color shallow hitting sets cyclically 1, 2, ..., k, 1, ... until no vertex is left.

    Vertices that lie in no remaining edge take the next color together. The
    result is checked for the per-edge balance inequality with the class
    bound ``c``; ``BalanceError`` carries the offending edge and the coloring.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    _check_class(inst, cls)
    c, _ = HITTERS[cls]
    full = _realize(inst)
    colors = [0] * inst.n
    alive = list(range(inst.n))
    cur = inst
    step = 0
    while alive:
        color = step % k + 1
        step += 1
        masks = _masks(cur)
        if not any(masks):
            for v in alive:
                colors[v] = color
            break
        hit, _ = _hit_round(cur, cls)
        if not hit:
            raise InvariantError("empty hitting set for a non-empty family")
        for v in hit:
            colors[alive[v]] = color
        gone = set(hit)
        keep = [p for p in range(len(alive)) if p not in gone]
        cur = _restrict(cur, keep)
        alive = [alive[p] for p in keep]
    coloring = Coloring(tuple(colors), k)
    rep = verify_balanced(full, coloring, c)
    if not rep:
        raise BalanceError(rep, coloring)
    return coloring


# ---------------------------------------------------------------------------
# exhaustive oracle


@dataclass(frozen=True)
class OracleResult:
    exists: bool
    coloring: Coloring | None
    nodes: int

    def to_json(self) -> dict:
        return {
            "exists": self.exists,
            "coloring": self.coloring.to_json() if self.coloring else None,
            "nodes": self.nodes,
        }


def polychromatic_oracle(h: OrderedHypergraph, k: int, m: int, budget: int | None = None) -> OracleResult:
    """Decide by exhaustive search whether a k-coloring makes every edge of size >= m polychromatic.

    Colors are interchangeable, so each vertex may open at most one new
    color. ``budget`` caps ``k**n`` (default 20000, or ``POLY_BUDGET``).
    A negative answer is a proof: the whole pruned tree was explored.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if budget is None:
        budget = env_budget(DEFAULT_POLY_BUDGET)
    if k ** h.n > budget:
        raise BudgetExceeded(f"{k}^{h.n} colorings exceed the search budget {budget}")
    colors, nodes = kernels.poly_search(list(h.masks), h.n, k, m)
    if colors is None:
        return OracleResult(False, None, nodes)
    coloring = Coloring(tuple(colors), k)
    if not verify_polychromatic(h, coloring, m):
        raise InvariantError("oracle returned a non-polychromatic coloring")
    return OracleResult(True, coloring, nodes)


# ---------------------------------------------------------------------------
# epsilon-nets


def _eps(epsilon) -> Fraction:
    e = Fraction(epsilon)
    if not 0 < e <= 1:
        raise PreconditionError("epsilon must satisfy 0 < epsilon <= 1")
    return e


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _net_classes(rep: Instance, epsilon, cls: str) -> tuple[list[list[int]], int]:
    e = _eps(epsilon)
    n = rep.n
    if n == 0:
        return [[]], 1
    t = _ceil(e * n)
    c = HITTERS[cls][0]
    # largest k with c*k - (c-1) <= t; surplus vertices are set aside so the
    # colored part is small enough for the size bound
    k = max(1, (t + c - 1) // c)
    drop = min(t - threshold(c, k), n - 1)
    keep = list(range(n - drop))
    part = _restrict(rep, keep)
    coloring = COLORERS[cls](part, k)
    classes = coloring.classes()
    return classes, drop


def epsilon_net(rep: PshpRepresentation, epsilon) -> list[int]:
    """Vertex set hitting every realised edge with at least ``epsilon * n`` vertices.

    The smallest color class of a polychromatic coloring with
    ``k = floor((ceil(epsilon*n) + 1) / 2)`` colors; at most ``ceil(2/epsilon) - 1``
    vertices.
    """
    classes, _ = _net_classes(rep, epsilon, "pshp")
    return min(classes, key=lambda cl: (len(cl), cl))


def epsilon_net_partition(rep: PshpRepresentation, epsilon) -> list[list[int]]:
    """Partition of all vertices into epsilon-nets."""
    classes, drop = _net_classes(rep, epsilon, "pshp")
    n = rep.n
    if drop:
        big = max(range(len(classes)), key=lambda i: len(classes[i]))
        classes[big] = sorted(classes[big] + list(range(n - drop, n)))
    return classes


def dual_epsilon_net(rep: SphereRepresentation, epsilon) -> list[int]:
    """Epsilon-net of a dual pseudohalfplane family (3k-2 coloring threshold)."""
    classes, _ = _net_classes(rep, epsilon, "dual")
    return min(classes, key=lambda cl: (len(cl), cl))


def verify_net(h: OrderedHypergraph, net, epsilon) -> Report:
    e = _eps(epsilon)
    s = set(net)
    for i, edge in enumerate(h.edges):
        if len(edge) >= e * h.n and not s.intersection(edge):
            return Report(False, {"edge": i, "vertices": list(edge)})
    return Report(True)


__all__ = [
    "BalanceError",
    "COLORERS",
    "ColoringTrace",
    "OracleResult",
    "Round",
    "balanced_color",
    "color_aba",
    "color_dual_pshp",
    "color_pshp",
    "color_sphere",
    "dual_epsilon_net",
    "epsilon_net",
    "epsilon_net_partition",
    "generic_color",
    "polychromatic_oracle",
    "threshold",
    "verify_balanced",
    "verify_net",
]
