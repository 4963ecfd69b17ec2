# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; masks must fit in 64 bits."""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

cdef extern from * nogil:
    int popcount64 "__builtin_popcountll"(unsigned long long)
    int ctz64 "__builtin_ctzll"(unsigned long long)
    int clz64 "__builtin_clzll"(unsigned long long)


cdef uint64_t* _to_array(masks) except NULL:
    cdef Py_ssize_t m = len(masks), i
    cdef uint64_t* arr = <uint64_t*> malloc((m + 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    for i in range(m):
        arr[i] = <uint64_t> masks[i]
    return arr


def containment_free(masks, int n):
    cdef Py_ssize_t m = len(masks), i, j
    cdef uint64_t* arr = _to_array(masks)
    cdef uint64_t a, b
    cdef int pa, pb
    kept = []
    try:
        for i in range(m):
            a = arr[i]
            pa = popcount64(a)
            for j in range(m):
                if j == i:
                    continue
                b = arr[j]
                if b & a != b:
                    continue
                pb = popcount64(b)
                if pb < pa or (pb == pa and j < i):
                    break
            else:
                kept.append(i)
    finally:
        free(arr)
    return kept


cdef inline bint _aba(uint64_t a, uint64_t b) nogil:
    cdef uint64_t d = a & ~b
    cdef int lo, hi
    cdef uint64_t inside
    if d == 0:
        return False
    lo = ctz64(d)
    hi = 63 - clz64(d)
    if hi - lo < 2:
        return False
    inside = ((<uint64_t> 1 << hi) - 1) & ~((<uint64_t> 2 << lo) - 1)
    return (b & ~a & inside) != 0


def aba_pair(masks, int n):
    cdef Py_ssize_t m = len(masks), i, j
    cdef uint64_t* arr = _to_array(masks)
    cdef Py_ssize_t fi = -1, fj = -1
    try:
        with nogil:
            for i in range(m):
                for j in range(m):
                    if i != j and _aba(arr[i], arr[j]):
                        fi = i
                        fj = j
                        break
                if fi >= 0:
                    break
    finally:
        free(arr)
    if fi < 0:
        return None
    return (fi, fj)


cdef struct PolyState:
    int n
    int k
    int me
    uint64_t* edges
    int* inc_start
    int* inc
    int* seen
    int* left
    int* colors
    long long nodes


cdef bint _poly_rec(PolyState* s, int v, int used) nogil:
    cdef int c, top, t, e, bad
    if v == s.n:
        return True
    top = used + 1
    if top > s.k:
        top = s.k
    for c in range(top):
        s.nodes += 1
        bad = 0
        for t in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[t]
            s.left[e] -= 1
        # prune if some edge can no longer collect its missing colors
        for t in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[t]
            if s.seen[e] & (1 << c):
                # color already present: nothing new, but the edge lost a slot
                if s.k - popcount64(<uint64_t> s.seen[e]) > s.left[e]:
                    bad = 1
            else:
                if s.k - popcount64(<uint64_t> s.seen[e]) - 1 > s.left[e]:
                    bad = 1
        if not bad:
            # entries flipped negative mark bits this frame must undo
            for t in range(s.inc_start[v], s.inc_start[v + 1]):
                e = s.inc[t]
                if not s.seen[e] & (1 << c):
                    s.seen[e] |= (1 << c)
                    s.inc[t] = -e - 1
            s.colors[v] = c + 1
            if _poly_rec(s, v + 1, used if used > c + 1 else c + 1):
                for t in range(s.inc_start[v], s.inc_start[v + 1]):
                    if s.inc[t] < 0:
                        s.inc[t] = -s.inc[t] - 1
                return True
            for t in range(s.inc_start[v], s.inc_start[v + 1]):
                if s.inc[t] < 0:
                    e = -s.inc[t] - 1
                    s.seen[e] &= ~(1 << c)
                    s.inc[t] = e
        for t in range(s.inc_start[v], s.inc_start[v + 1]):
            e = s.inc[t]
            s.left[e] += 1
    s.colors[v] = 0
    return False


def poly_search(masks, int n, int k, int m):
    edges = [mk for mk in masks if bin(mk).count("1") >= m]
    if any(bin(mk).count("1") < k for mk in edges):
        return None, 0
    if k > 30:
        raise ValueError("compiled kernel supports at most 30 colors")
    cdef int me = len(edges)
    cdef PolyState s
    cdef int v, e, t, total
    s.n = n
    s.k = k
    s.me = me
    s.nodes = 0
    s.edges = _to_array(edges)
    total = 0
    for mk in edges:
        total += bin(mk).count("1")
    s.inc_start = <int*> malloc((n + 2) * sizeof(int))
    s.inc = <int*> malloc((total + 1) * sizeof(int))
    s.seen = <int*> malloc((me + 1) * sizeof(int))
    s.left = <int*> malloc((me + 1) * sizeof(int))
    s.colors = <int*> malloc((n + 1) * sizeof(int))
    try:
        t = 0
        for v in range(n):
            s.inc_start[v] = t
            for e in range(me):
                if (s.edges[e] >> v) & 1:
                    s.inc[t] = e
                    t += 1
        s.inc_start[n] = t
        for e in range(me):
            s.seen[e] = 0
            s.left[e] = popcount64(s.edges[e])
        for v in range(n):
            s.colors[v] = 0
        with nogil:
            found = _poly_rec(&s, 0, 0)
        colors = [s.colors[v] for v in range(n)] if found else None
        return colors, s.nodes
    finally:
        free(s.edges)
        free(s.inc_start)
        free(s.inc)
        free(s.seen)
        free(s.left)
        free(s.colors)


cdef struct ShallowState:
    int n
    int c
    int* inc_start
    int* inc
    int* close_start
    int* closes
    int* load


cdef bint _shallow_rec(ShallowState* s, int v, uint64_t chosen, uint64_t* out) nogil:
    cdef int t, ok
    if v == s.n:
        out[0] = chosen
        return True
    ok = 1
    for t in range(s.close_start[v], s.close_start[v + 1]):
        if s.load[s.closes[t]] == 0:
            ok = 0
            break
    if ok and _shallow_rec(s, v + 1, chosen, out):
        return True
    ok = 1
    for t in range(s.inc_start[v], s.inc_start[v + 1]):
        if s.load[s.inc[t]] >= s.c:
            ok = 0
            break
    if ok:
        for t in range(s.inc_start[v], s.inc_start[v + 1]):
            s.load[s.inc[t]] += 1
        if _shallow_rec(s, v + 1, chosen | (<uint64_t> 1 << v), out):
            return True
        for t in range(s.inc_start[v], s.inc_start[v + 1]):
            s.load[s.inc[t]] -= 1
    return False


def shallow_search(masks, int n, int c):
    if any(mk == 0 for mk in masks):
        return None
    cdef int me = len(masks)
    cdef ShallowState s
    cdef uint64_t* arr = _to_array(masks)
    cdef int v, e, t, total = 0, last
    cdef uint64_t out = 0
    cdef bint found
    for mk in masks:
        total += bin(mk).count("1")
    s.n = n
    s.c = c
    s.inc_start = <int*> malloc((n + 2) * sizeof(int))
    s.inc = <int*> malloc((total + 1) * sizeof(int))
    s.close_start = <int*> malloc((n + 2) * sizeof(int))
    s.closes = <int*> malloc((me + 1) * sizeof(int))
    s.load = <int*> malloc((me + 1) * sizeof(int))
    try:
        t = 0
        for v in range(n):
            s.inc_start[v] = t
            for e in range(me):
                if (arr[e] >> v) & 1:
                    s.inc[t] = e
                    t += 1
        s.inc_start[n] = t
        t = 0
        for v in range(n):
            s.close_start[v] = t
            for e in range(me):
                last = 63 - clz64(arr[e])
                if last == v:
                    s.closes[t] = e
                    t += 1
        s.close_start[n] = t
        for e in range(me):
            s.load[e] = 0
        with nogil:
            found = _shallow_rec(&s, 0, 0, &out)
        return int(out) if found else None
    finally:
        free(arr)
        free(s.inc_start)
        free(s.inc)
        free(s.close_start)
        free(s.closes)
        free(s.load)
