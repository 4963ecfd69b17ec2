"""Pure-Python hot kernels. Reference semantics for ``_ckernels.pyx``.

All kernels take hyperedges as bitmask ints over ``n`` vertices.
"""

from __future__ import annotations

import sys


def containment_free(masks, n):
    order = sorted(range(len(masks)), key=lambda i: (bin(masks[i]).count("1"), i))
    kept: list[int] = []
    seen: list[int] = []
    for i in order:
        a = masks[i]
        for b in seen:
            if b & a == b:  # b subset of a (equal or strict)
                break
        else:
            kept.append(i)
            seen.append(a)
    kept.sort()
    return kept


def _aba(a, b):
    d = a & ~b
    if not d:
        return False
    lo = (d & -d).bit_length() - 1
    hi = d.bit_length() - 1
    inside = ((1 << hi) - 1) & ~((1 << (lo + 1)) - 1)
    return bool(b & ~a & inside)


def aba_pair(masks, n):
    m = len(masks)
    for i in range(m):
        a = masks[i]
        for j in range(m):
            if i != j and _aba(a, masks[j]):
                return (i, j)
    return None


def _incidence(masks, n):
    inc = [[] for _ in range(n)]
    last = [-1] * len(masks)
    for e, mk in enumerate(masks):
        x = mk
        while x:
            low = x & -x
            v = low.bit_length() - 1
            inc[v].append(e)
            last[e] = v
            x ^= low
    return inc, last


def poly_search(masks, n, k, m):
    """Search a k-coloring in which every edge of size >= m sees all colors.

    Returns ``(colors or None, nodes)`` with ``colors[v]`` in ``1..k``. Color
    symmetry is broken by letting vertex ``v`` use at most one new color.
    """
    edges = [mk for mk in masks if bin(mk).count("1") >= m]
    if any(bin(mk).count("1") < k for mk in edges):
        return None, 0
    inc, _ = _incidence(edges, n)
    sizes = [bin(mk).count("1") for mk in edges]
    seen = [0] * len(edges)  # bitmask of colors already in the edge
    left = sizes[:]  # uncolored vertices still in the edge
    colors = [0] * n
    nodes = 0
    limit = sys.getrecursionlimit()
    if n + 50 > limit:
        sys.setrecursionlimit(n + 100)

    def rec(v, used):
        nonlocal nodes
        if v == n:
            return True
        top = min(used + 1, k)
        for c in range(top):
            nodes += 1
            bit = 1 << c
            ok = True
            touched = inc[v]
            for e in touched:
                left[e] -= 1
            saved = [seen[e] for e in touched]
            for e in touched:
                seen[e] |= bit
                if k - bin(seen[e]).count("1") > left[e]:
                    ok = False
            if ok:
                colors[v] = c + 1
                if rec(v + 1, max(used, c + 1)):
                    return True
            for e, s in zip(touched, saved):
                seen[e] = s
                left[e] += 1
        colors[v] = 0
        return False

    found = rec(0, 0)
    return (colors if found else None), nodes


def shallow_search(masks, n, c):
    """Mask of a hitting set with load in ``[1, c]`` on every edge, or None."""
    if any(mk == 0 for mk in masks):
        return None
    inc, last = _incidence(masks, n)
    closes = [[] for _ in range(n)]
    for e, v in enumerate(last):
        closes[v].append(e)
    load = [0] * len(masks)
    limit = sys.getrecursionlimit()
    if n + 50 > limit:
        sys.setrecursionlimit(n + 100)

    def rec(v, chosen):
        if v == n:
            return chosen
        # exclude v
        if all(load[e] > 0 for e in closes[v]):
            r = rec(v + 1, chosen)
            if r is not None:
                return r
        # include v
        if all(load[e] < c for e in inc[v]):
            for e in inc[v]:
                load[e] += 1
            r = rec(v + 1, chosen | (1 << v))
            for e in inc[v]:
                load[e] -= 1
            if r is not None:
                return r
        return None

    return rec(0, 0)
