import random

import pytest
from hypothesis import given, settings

import oracles
from conftest import aba_hypergraphs, clean, random_rep
from polychrome.abafree import NotAbaFreeError
from polychrome.families import no_shallow_family
from polychrome.geom import PointSet2D, build_halfplanes
from polychrome.hitting import (
    HITTERS,
    BudgetExceeded,
    dual_pshp_hitting,
    greedy_minimal,
    min_shallowness_oracle,
    minimal_unskippable_hitting,
    pshp_hitting,
    sphere_hitting,
)
from polychrome.hypercore import OrderedHypergraph, PreconditionError, verify_hitting
from polychrome.pshp import COMP, DOWN, PLAIN, UP, PshpRepresentation, SphereRepresentation, dual_representation, find_cover, load_instance


def H(n, *edges):
    return OrderedHypergraph(n, tuple(tuple(e) for e in edges))


# all-plain instance of four singletons: its dual has four singleton edges, so no 3-cover
POLAR_DUAL = {"n": 4, "base_edges": [[0, 2], [], [2, 3], [1, 2]], "x_set": [2], "flags": ["plain"] * 4}
POLAR_SPHERE = {
    "n": 7,
    "base_edges": [[0, 2, 3, 5], [0, 2, 4, 5], [0, 2, 3, 4], [0, 2, 3, 4, 5, 6], [2, 6]],
    "x_set": [1, 6],
    "flags": ["comp", "comp", "comp", "comp", "plain"],
}
# sphere instance whose dual is covered by four edges and not by three
COVER_SPHERE = {"n": 5, "base_edges": [[0, 2, 3], [2, 4], [1, 2, 3], []], "x_set": [4], "flags": ["comp", "plain", "comp", "plain"]}


class TestUnskippableHitting:
    def test_path(self):
        hs = minimal_unskippable_hitting(H(4, (0, 1), (1, 2), (2, 3)))
        assert hs.vertices == (1, 3) and hs.shallowness == 1

    def test_singleton(self):
        assert minimal_unskippable_hitting(H(1, (0,))).vertices == (0,)

    def test_containment_required(self):
        with pytest.raises(PreconditionError):
            minimal_unskippable_hitting(H(3, (0, 1), (0, 1, 2)))

    def test_empty_edge_rejected(self):
        with pytest.raises(PreconditionError):
            minimal_unskippable_hitting(H(2, (), (0,)))

    def test_not_aba_free(self):
        with pytest.raises(NotAbaFreeError):
            minimal_unskippable_hitting(H(3, (0, 2), (1,)))

    @settings(max_examples=150)
    @given(aba_hypergraphs())
    def test_minimal_unskippable_two_shallow(self, h):
        h = clean(h)
        if not h.m:
            return
        hs = minimal_unskippable_hitting(h)
        assert verify_hitting(h, hs, 2)
        unsk = oracles.unskippable(h.n, [set(e) for e in h.edges])
        assert set(hs.vertices) <= unsk
        for v in hs.vertices:
            rest = set(hs.vertices) - {v}
            assert any(not rest & set(e) for e in h.edges)

    def test_greedy_order(self):
        masks = [0b0011, 0b0110, 0b1100]
        assert greedy_minimal(masks, range(4)) == [1, 3]


class TestPshpHitting:
    def test_all_up_matches_aba_routine(self):
        h = H(4, (0, 1), (1, 2), (2, 3))
        rep = PshpRepresentation(h, (UP,) * 3)
        assert pshp_hitting(rep) == minimal_unskippable_hitting(h)

    def test_mixed(self):
        rep = PshpRepresentation(H(3, (0, 1), (0,)), (UP, DOWN))
        hs = pshp_hitting(rep)
        assert len(hs.vertices) <= 2 and hs.shallowness <= 2
        assert verify_hitting(rep.realize(), hs, 2)

    def test_halfplane_fuzz(self):
        rng = random.Random(31)
        for _ in range(40):
            pts = oracles.random_points(rng, rng.randint(2, 12), 200)
            rep = clean(build_halfplanes(PointSet2D(tuple(pts)), side="both"))
            if not rep.m:
                continue
            hs = pshp_hitting(rep)
            assert verify_hitting(rep.realize(), hs, 2)

    def test_random_representations(self):
        rng = random.Random(32)
        for _ in range(300):
            rep = clean(random_rep(rng, "pshp", rng.randint(1, 10), rng.randint(1, 10)))
            if rep.m:
                assert verify_hitting(rep.realize(), pshp_hitting(rep), 2)


class TestDualAndSphere:
    def test_plain_x_empty_is_two_shallow(self):
        rep = SphereRepresentation(H(4, (0, 1), (2, 3)), (), (PLAIN, PLAIN))
        assert dual_pshp_hitting(rep).shallowness <= 2

    def test_comp_flag_rejected_for_dual(self):
        rep = SphereRepresentation(H(2, (0,)), (1,), (COMP,))
        with pytest.raises(PreconditionError):
            dual_pshp_hitting(rep)

    def test_cover_branch_dual(self):
        # realises three singletons, so the dual needs all three of its edges
        rep = SphereRepresentation(H(3, (2,), (1,), (0, 1, 2)), (1, 2), (PLAIN,) * 3)
        assert rep.realize().edges == ((1,), (2,), (0,))
        h = rep.realize()
        d, _ = dual_representation(rep)
        cover = find_cover(d.realize(), 3)
        assert cover is not None
        hs = dual_pshp_hitting(rep)
        assert len(cover) == 3 and hs.vertices == tuple(sorted(cover))
        assert verify_hitting(h, hs, 3)

    def test_polar_branch_dual(self):
        rep = load_instance(POLAR_DUAL)
        d, _ = dual_representation(rep)
        assert find_cover(d.realize(), 3) is None
        hs = dual_pshp_hitting(rep)
        assert verify_hitting(rep.realize(), hs, 2)

    def test_polar_branch_sphere(self):
        rep = load_instance(POLAR_SPHERE)
        d, _ = dual_representation(rep)
        assert find_cover(d.realize(), 4) is None
        hs = sphere_hitting(rep)
        assert verify_hitting(rep.realize(), hs, 2)

    def test_cover_branch_sphere(self):
        rep = load_instance(COVER_SPHERE)
        d, _ = dual_representation(rep)
        assert find_cover(d.realize(), 3) is None
        cover = find_cover(d.realize(), 4)
        hs = sphere_hitting(rep)
        assert hs.vertices == tuple(sorted(cover))
        assert verify_hitting(rep.realize(), hs, 4)

    def test_plain_sphere_agrees_with_dual_routine(self):
        rep = load_instance(POLAR_DUAL)
        assert sphere_hitting(rep).shallowness <= 3
        assert dual_pshp_hitting(rep).shallowness <= 3

    @pytest.mark.parametrize("kind", ["dual", "sphere"])
    def test_fuzz(self, kind):
        rng = random.Random(40 if kind == "dual" else 41)
        c, hitter = HITTERS[kind]
        for _ in range(300):
            rep = clean(random_rep(rng, kind, rng.randint(1, 10), rng.randint(1, 10)))
            if rep.m:
                assert verify_hitting(rep.realize(), hitter(rep), c)


class TestOracle:
    def test_two_edges(self):
        c, hs = min_shallowness_oracle(H(3, (0, 1), (1, 2)))
        assert c == 1 and hs.vertices == (1,)

    def test_no_shallow_k4(self):
        _, h = no_shallow_family(4)
        assert min_shallowness_oracle(h)[0] == 2

    def test_no_shallow_k2(self):
        _, h = no_shallow_family(2)
        assert min_shallowness_oracle(h)[0] == 1

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            min_shallowness_oracle(H(12, (0,)), budget=1000)

    def test_env_budget(self, monkeypatch):
        monkeypatch.setenv("POLY_BUDGET", "16")
        with pytest.raises(BudgetExceeded):
            min_shallowness_oracle(H(5, (0,)))

    @settings(max_examples=100)
    @given(aba_hypergraphs(max_n=8))
    def test_matches_brute_force_and_bound(self, h):
        h = clean(h)
        if not h.m:
            return
        c, hs = min_shallowness_oracle(h)
        assert c == oracles.min_shallowness(h.n, [set(e) for e in h.edges])
        assert c <= 2
        assert verify_hitting(h, hs, c)
