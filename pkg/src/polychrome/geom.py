"""Planar point sets and region families turned into ordered hypergraphs.

All arithmetic is exact (``fractions.Fraction``). Vertices are always the
points sorted by x-coordinate. Region builders include the empty set when it
is realisable; pass ``drop_empty=True`` to leave it out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .hypercore import OrderedHypergraph, PreconditionError
from .pshp import DOWN, UP, PshpRepresentation

Point = tuple[Fraction, Fraction]


def parse_rational(value) -> Fraction:
    """``"p/q"``, an int, or a decimal string; floats are refused."""
    if isinstance(value, float):
        raise PreconditionError("floats are not accepted; write coordinates as 'p/q'")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise PreconditionError(f"not an exact rational: {value!r}") from exc


def format_rational(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class PointSet2D:
    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((parse_rational(x), parse_rational(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def x_order(self) -> list[int]:
        """Input indices sorted by x; vertex ``i`` of every builder is ``points[x_order()[i]]``."""
        return sorted(range(self.n), key=lambda i: (self.points[i][0], self.points[i][1]))

    def sorted_points(self) -> list[Point]:
        return [self.points[i] for i in self.x_order()]

    def require_distinct_x(self) -> None:
        xs = [p[0] for p in self.points]
        if len(set(xs)) != len(xs):
            raise PreconditionError("points must have pairwise distinct x-coordinates")

    def require_distinct_y(self) -> None:
        ys = [p[1] for p in self.points]
        if len(set(ys)) != len(ys):
            raise PreconditionError("points must have pairwise distinct y-coordinates")

    def require_general_position(self) -> None:
        ipts = _integer_points(self.points)
        for a, b, c in combinations(range(self.n), 3):
            if _cross(ipts[a], ipts[b], ipts[c]) == 0:
                pa, pb, pc = (self.points[v] for v in (a, b, c))
                raise PreconditionError(f"points {pa}, {pb}, {pc} are collinear")

    def to_json(self) -> dict:
        return {"points": [[format_rational(x), format_rational(y)] for x, y in self.points]}

    @classmethod
    def from_json(cls, obj) -> "PointSet2D":
        try:
            pts = obj["points"] if isinstance(obj, dict) else obj
            return cls(tuple((p[0], p[1]) for p in pts))
        except (KeyError, IndexError, TypeError) as exc:
            raise PreconditionError(f"malformed point JSON: {exc}") from exc


@dataclass(frozen=True)
class ConvexChain:
    """Lower boundary of an unbounded convex region, extended linearly past both ends."""

    breakpoints: tuple[Point, ...]
    _slopes: tuple[Fraction, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        bps = tuple((parse_rational(x), parse_rational(y)) for x, y in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        if len(bps) < 2:
            raise PreconditionError("a chain needs at least two breakpoints")
        xs = [b[0] for b in bps]
        if any(x1 >= x2 for x1, x2 in zip(xs, xs[1:])):
            raise PreconditionError("breakpoint x-coordinates must be strictly increasing")
        sl = tuple((y2 - y1) / (x2 - x1) for (x1, y1), (x2, y2) in zip(bps, bps[1:]))
        if any(s1 >= s2 for s1, s2 in zip(sl, sl[1:])):
            raise PreconditionError("chain slopes must be strictly increasing (degenerate chain)")
        object.__setattr__(self, "_slopes", sl)

    def slopes(self) -> list[Fraction]:
        return list(self._slopes)

    def __call__(self, x: Fraction) -> Fraction:
        b = self.breakpoints
        sl = self._slopes
        if x <= b[0][0]:
            return b[0][1] + sl[0] * (x - b[0][0])
        for (x1, y1), (x2, _), s in zip(b, b[1:], sl):
            if x <= x2:
                return y1 + s * (x - x1)
        return b[-1][1] + sl[-1] * (x - b[-1][0])

    def contains(self, p: Point, shift: Point = (Fraction(0), Fraction(0))) -> bool:
        """Whether ``p`` lies in the region translated by ``shift`` (boundary included)."""
        return p[1] - shift[1] >= self(p[0] - shift[0])


def _cross(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _family(sets: Iterable[frozenset], n: int, drop_empty: bool) -> OrderedHypergraph:
    uniq = {s for s in sets if s or not drop_empty}
    edges = sorted((tuple(sorted(s)) for s in uniq), key=lambda e: (len(e), e))
    return OrderedHypergraph(n, tuple(edges))


# ---------------------------------------------------------------------------
# intervals


def build_intervals(values: Sequence, drop_empty: bool = True) -> OrderedHypergraph:
    """All runs of consecutive points on a line."""
    vals = [parse_rational(v) for v in values]
    if len(set(vals)) != len(vals):
        raise PreconditionError("interval points must be distinct")
    n = len(vals)
    sets = [frozenset(range(i, j + 1)) for i in range(n) for j in range(i, n)]
    if not drop_empty:
        sets.append(frozenset())
    return _family(sets, n, drop_empty)


# ---------------------------------------------------------------------------
# halfplanes


def _above(p: Point, line: tuple[Fraction, Fraction]) -> bool:
    a, b = line
    return p[1] > a * p[0] + b


def _integer_points(pts: Sequence[Point]) -> list[tuple[int, int]]:
    """Scale to a common denominator; orientation tests are then pure integer math."""
    den = 1
    for x, y in pts:
        den = den * x.denominator // gcd(den, x.denominator)
        den = den * y.denominator // gcd(den, y.denominator)
    return [(int(x * den), int(y * den)) for x, y in pts]


def _nudged_line(pts: Sequence[Point], i: int, j: int, si: int, sj: int) -> tuple[Fraction, Fraction]:
    """Line near the one through points i and j with point i below it iff ``si > 0`` (same for j).

    The nudge ``eta`` is small enough that no third point changes side.
    """
    (xi, yi), (xj, yj) = pts[i], pts[j]
    a = (yj - yi) / (xj - xi)
    b = yi - a * xi
    eta = Fraction(1)
    for k, (xk, yk) in enumerate(pts):
        if k in (i, j):
            continue
        wi = abs((xk - xj) / (xi - xj))
        wj = abs((xk - xi) / (xj - xi))
        eta = min(eta, abs(yk - (a * xk + b)) / (2 * (wi + wj + 1)))
    y1, y2 = yi + si * eta, yj + sj * eta
    a2 = (y2 - y1) / (xj - xi)
    return a2, y1 - a2 * xi


def halfplane_sets(ps: PointSet2D, witnesses: bool = False) -> dict[frozenset, tuple[Fraction, Fraction] | None]:
    """Every set of points strictly above a non-vertical line.

    Each realisable set is found from a line through two points, nudged so
    either point falls on either side, plus the empty and the full set. With
    ``witnesses`` each set maps to a line ``(a, b)`` for ``y = a*x + b``
    that cuts it out; otherwise values are None.
    """
    ps.require_distinct_x()
    ps.require_general_position()
    pts = ps.sorted_points()
    ipts = _integer_points(pts)
    n = len(pts)
    out: dict[frozenset, tuple[Fraction, Fraction] | None] = {}
    if n:
        ys = [p[1] for p in pts]
        out[frozenset()] = (Fraction(0), max(ys) + 1)
        out[frozenset(range(n))] = (Fraction(0), min(ys) - 1)
    else:
        out[frozenset()] = (Fraction(0), Fraction(0))
    for i, j in combinations(range(n), 2):
        (xi, yi), (xj, yj) = ipts[i], ipts[j]
        dx, dy = xj - xi, yj - yi
        # x_i < x_j, so a positive cross product means strictly above the line
        above = [k for k, (xk, yk) in enumerate(ipts) if dx * (yk - yi) - dy * (xk - xi) > 0]
        for si, sj in ((-1, -1), (-1, 1), (1, -1), (1, 1)):
            s = frozenset(above + [v for v, sv in ((i, si), (j, sj)) if sv < 0])
            if s not in out:
                out[s] = _nudged_line(pts, i, j, si, sj) if witnesses else None
    return out


def build_halfplanes(ps: PointSet2D, side: str = "upper", drop_empty: bool = False):
    """Halfplane hypergraph on points ordered by x.

    ``side="upper"`` gives an ``OrderedHypergraph`` of the sets above a line.
    ``side="both"`` gives a ``PshpRepresentation``: upper sets as up edges and
    the remaining sets below a line as down edges stored by their complement.
    """
    if side not in ("upper", "both"):
        raise PreconditionError("side must be 'upper' or 'both'")
    n = ps.n
    uppers = set(halfplane_sets(ps))
    upper = _family(uppers, n, drop_empty)
    if side == "upper":
        return upper
    full = frozenset(range(n))
    lowers = {full - u for u in uppers} - uppers
    down = _family(lowers, n, drop_empty)
    base = upper.edges + tuple(tuple(sorted(full - set(e))) for e in down.edges)
    sides = (UP,) * upper.m + (DOWN,) * down.m
    return PshpRepresentation(OrderedHypergraph(n, base), sides)


# ---------------------------------------------------------------------------
# translates of an unbounded convex region


def _linear_root(t1: Fraction, d1: Fraction, t2: Fraction, d2: Fraction) -> Fraction | None:
    if d1 == d2:
        return None
    return t1 - d1 * (t2 - t1) / (d2 - d1)


def convex_translates(ps: PointSet2D, chain: ConvexChain) -> dict[frozenset, tuple[Fraction, Fraction]]:
    """Every set cut out by a translate of the region above ``chain``, with a shift ``(t_x, t_y)``.

    For a fixed horizontal shift the points inside are those whose key
    ``p_y - f(p_x - t_x)`` is at least ``t_y``, so the sets are the upper
    level sets of the key. The key order only changes where two keys tie;
    the sweep visits every such tie, every gap between ties, and both ends.
    """
    ps.require_distinct_x()
    pts = ps.sorted_points()
    n = len(pts)
    bx = [b[0] for b in chain.breakpoints]
    kinks = sorted({p[0] - x for p in pts for x in bx})

    def key(p: Point, t: Fraction) -> Fraction:
        return p[1] - chain(p[0] - t)

    if not n:
        return {frozenset(): (Fraction(0), Fraction(0))}
    # between consecutive kinks every key difference is linear in t
    critical = set(kinks)
    pieces = [(kinks[0] - 2, kinks[0] - 1, None, kinks[0])]
    pieces += [(t1, t2, t1, t2) for t1, t2 in zip(kinks, kinks[1:])]
    pieces.append((kinks[-1] + 1, kinks[-1] + 2, kinks[-1], None))
    table = {t: [key(p, t) for p in pts] for piece in pieces for t in piece[:2]}
    for a, b in combinations(range(n), 2):
        for s1, s2, lo, hi in pieces:
            k1, k2 = table[s1], table[s2]
            root = _linear_root(s1, k1[a] - k1[b], s2, k2[a] - k2[b])
            if root is None:
                continue
            if (lo is None or root >= lo) and (hi is None or root <= hi):
                critical.add(root)
    crit = sorted(critical)
    samples = [crit[0] - 1, crit[-1] + 1] + crit
    samples += [(a + b) / 2 for a, b in zip(crit, crit[1:])]

    out: dict[frozenset, tuple[Fraction, Fraction]] = {}
    for t in sorted(samples):
        keys = [key(p, t) for p in pts]
        levels = sorted(set(keys), reverse=True)
        out.setdefault(frozenset(), (t, levels[0] + 1))
        for lv in levels:
            s = frozenset(i for i in range(n) if keys[i] >= lv)
            out.setdefault(s, (t, lv))
    return out


def build_unbounded_convex(ps: PointSet2D, chain: ConvexChain, drop_empty: bool = False) -> OrderedHypergraph:
    return _family(convex_translates(ps, chain), ps.n, drop_empty)


# ---------------------------------------------------------------------------
# bottomless rectangles


def bottomless_sets(ps: PointSet2D, allow_equal_y: bool = False) -> dict[frozenset, tuple[Fraction, Fraction, Fraction]]:
    """Sets cut out by ``[x1, x2] x (-inf, y0]``, with the rectangle ``(x1, x2, y0)``.

    Equal y-coordinates are refused unless ``allow_equal_y``; rectangles are
    closed, so tied points enter together.
    """
    ps.require_distinct_x()
    if not allow_equal_y:
        ps.require_distinct_y()
    pts = ps.sorted_points()
    n = len(pts)
    out: dict[frozenset, tuple[Fraction, Fraction, Fraction]] = {}
    low = min((p[1] for p in pts), default=Fraction(0)) - 1
    out[frozenset()] = (Fraction(0), Fraction(0), low)
    for i in range(n):
        for j in range(i, n):
            for k in range(i, j + 1):
                y0 = pts[k][1]
                s = frozenset(v for v in range(i, j + 1) if pts[v][1] <= y0)
                out.setdefault(s, (pts[i][0], pts[j][0], y0))
    return out


def build_bottomless(ps: PointSet2D, drop_empty: bool = False, allow_equal_y: bool = False) -> OrderedHypergraph:
    return _family(bottomless_sets(ps, allow_equal_y), ps.n, drop_empty)


def in_bottomless(p: Point, rect: tuple[Fraction, Fraction, Fraction]) -> bool:
    x1, x2, y0 = rect
    return x1 <= p[0] <= x2 and p[1] <= y0


__all__ = [
    "ConvexChain",
    "PointSet2D",
    "bottomless_sets",
    "build_bottomless",
    "build_halfplanes",
    "build_intervals",
    "build_unbounded_convex",
    "convex_translates",
    "halfplane_sets",
    "in_bottomless",
    "parse_rational",
]
