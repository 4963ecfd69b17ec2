import random

import pytest
from hypothesis import strategies as st

from oracles import _pair_ok, random_aba_masks
from polychrome.hypercore import OrderedHypergraph, containment_free_indices
from polychrome.pshp import PshpRepresentation, SphereRepresentation

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(12345)


def aba_family(rng, n, m):
    return OrderedHypergraph.from_masks(n, random_aba_masks(rng, n, m))


def clean(rep):
    """Keep the non-empty edges of a containment-free core of the realised family."""
    real = list(rep.masks) if isinstance(rep, OrderedHypergraph) else rep.realized_masks()
    live = [i for i, e in enumerate(real) if e]
    keep = [live[j] for j in containment_free_indices([real[i] for i in live], rep.n)]
    return rep.select(keep)


def random_rep(rng, kind, n, m):
    h = aba_family(rng, n, m)
    x = tuple(v for v in range(n) if rng.random() < 0.4)
    if kind == "aba":
        return h
    if kind == "pshp":
        return PshpRepresentation(h, tuple(rng.choice(["up", "down"]) for _ in range(h.m)))
    if kind == "dual":
        return SphereRepresentation(h, x, ("plain",) * h.m)
    return SphereRepresentation(h, x, tuple(rng.choice(["plain", "comp"]) for _ in range(h.m)))


@st.composite
def aba_hypergraphs(draw, max_n=9, max_m=9, min_n=1):
    n = draw(st.integers(min_n, max_n))
    raw = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_m))
    # keep a greedy ABA-free subfamily of the drawn masks
    masks = []
    for mk in raw:
        if all(_pair_ok(mk, o) and _pair_ok(o, mk) for o in masks):
            masks.append(mk)
    return OrderedHypergraph.from_masks(n, masks)


@st.composite
def sphere_reps(draw, max_n=8, max_m=8):
    h = draw(aba_hypergraphs(max_n=max_n, max_m=max_m))
    x = draw(st.sets(st.integers(0, h.n - 1)))
    flags = draw(st.lists(st.sampled_from(["plain", "comp"]), min_size=h.m, max_size=h.m))
    return SphereRepresentation(h, tuple(x), tuple(flags))


@st.composite
def pshp_reps(draw, max_n=8, max_m=8):
    h = draw(aba_hypergraphs(max_n=max_n, max_m=max_m))
    sides = draw(st.lists(st.sampled_from(["up", "down"]), min_size=h.m, max_size=h.m))
    return PshpRepresentation(h, tuple(sides))
