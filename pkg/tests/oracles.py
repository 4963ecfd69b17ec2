"""Brute-force reference implementations used to freeze expected values.

These work on plain Python sets and never call the package's own search or
pattern code, so agreement with the package is evidence rather than a
tautology.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product


def edge_sets(edges):
    return [frozenset(e) for e in edges]


def aba_free(edges) -> bool:
    sets = edge_sets(edges)
    verts = sorted(set().union(*sets)) if sets else []
    for a in sets:
        for b in sets:
            if a == b:
                continue
            for x, y, z in combinations(verts, 3):
                if x in a - b and z in a - b and y in b - a:
                    return False
    return True


def abab_free(edges) -> bool:
    sets = edge_sets(edges)
    verts = sorted(set().union(*sets)) if sets else []
    for a in sets:
        for b in sets:
            for w, x, y, z in combinations(verts, 4):
                if {w, y} <= a - b and {x, z} <= b - a:
                    return False
    return True


def abab_lower_free(edges) -> bool:
    sets = edge_sets(edges)
    verts = sorted(set().union(*sets)) if sets else []
    for a in sets:
        for b in sets:
            for x1, x2, x3, x4 in combinations(verts, 4):
                if x1 in a and x2 in b - a and x3 in a - b and x4 in b:
                    return False
    return True


def unskippable(n, edges):
    out = set(range(n))
    for e in edges:
        if e:
            for v in range(min(e) + 1, max(e)):
                if v not in e:
                    out.discard(v)
    return out


def polychromatic_exists(n, edges, k, m) -> bool:
    big = [frozenset(e) for e in edges if len(e) >= m]
    for colors in product(range(k), repeat=n):
        if all(len({colors[v] for v in e}) == k for e in big):
            return True
    return False


def min_shallowness(n, edges):
    best = None
    for mask in range(1 << n):
        r = {v for v in range(n) if mask >> v & 1}
        loads = [len(r & set(e)) for e in edges]
        if loads and min(loads) >= 1:
            c = max(loads)
            if best is None or c < best:
                best = c
    return best


def transpose(n, edges, order):
    """Dual family: dual edge p = positions j whose edge order[j] contains p."""
    return [frozenset(j for j, e in enumerate(order) if p in edges[e]) for p in range(n)]


def halfplane_sweep(points):
    """Sets strictly above some non-vertical line, by sweeping the slope.

    For a fixed slope the sets are suffixes of the order by ``y - a*x``; the
    order only changes at slopes of point pairs, so probing between and
    beyond those slopes finds everything. ``points`` must be sorted by x.
    """
    n = len(points)
    crit = sorted({(q[1] - p[1]) / (q[0] - p[0]) for p, q in combinations(points, 2)})
    probes = [Fraction(0)] if not crit else [crit[0] - 1, crit[-1] + 1]
    probes += [(a + b) / 2 for a, b in zip(crit, crit[1:])]
    out = {frozenset()}
    for a in probes:
        key = sorted(range(n), key=lambda i: points[i][1] - a * points[i][0])
        for j in range(n):
            out.add(frozenset(key[j:]))
    return out


def bottomless_grid(points):
    """Sets in closed bottomless rectangles, probing every coordinate and half-step."""
    xs = sorted({p[0] for p in points})
    ys = sorted({p[1] for p in points})
    half = Fraction(1, 2)
    xcand = xs + [x + half for x in xs] + [x - half for x in xs]
    ycand = ys + [min(ys) - 1] if ys else [Fraction(0)]
    out = set()
    for x1 in xcand:
        for x2 in xcand:
            if x2 < x1:
                continue
            for y0 in ycand:
                out.add(frozenset(i for i, p in enumerate(points) if x1 <= p[0] <= x2 and p[1] <= y0))
    return out or {frozenset()}


# ---------------------------------------------------------------------------
# random instances


def random_aba_masks(rng: random.Random, n: int, m: int, tries: int = 8):
    """Greedy random ABA-free family as bitmasks (checked with the brute oracle per pair)."""
    masks = []
    for _ in range(m * tries):
        if len(masks) >= m:
            break
        mk = rng.getrandbits(n) if n else 0
        if all(_pair_ok(mk, o) and _pair_ok(o, mk) for o in masks):
            masks.append(mk)
    return masks


def _pair_ok(a, b):
    d, e = a & ~b, b & ~a
    if not d:
        return True
    lo, hi = (d & -d).bit_length() - 1, d.bit_length() - 1
    inside = ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1)
    return not (e & inside)


def random_points(rng: random.Random, n: int, span: int = 10**4):
    """n points with distinct x, no three collinear, sorted by x."""
    while True:
        xs = sorted(rng.sample(range(span), n))
        pts = [(Fraction(x), Fraction(rng.randrange(span))) for x in xs]
        if all(
            (b[0] - a[0]) * (c[1] - a[1]) != (b[1] - a[1]) * (c[0] - a[0])
            for a, b, c in combinations(pts, 3)
        ):
            return pts
