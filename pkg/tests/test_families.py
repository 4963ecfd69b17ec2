from itertools import product

import pytest

import oracles
from polychrome.abafree import check_aba_free, check_abab_free, check_abab_lower
from polychrome.coloring import polychromatic_oracle
from polychrome.families import hk_family, no_shallow_family, sharpness_family
from polychrome.geom import build_bottomless
from polychrome.hitting import min_shallowness_oracle
from polychrome.hypercore import PreconditionError


class TestSharpness:
    def test_k2(self):
        h = sharpness_family(2)
        assert h.n == 3 and h.edges == ((0, 1), (0, 2), (1, 2))
        assert check_aba_free(h) is None

    def test_k3(self):
        h = sharpness_family(3)
        assert h.n == 5 and h.m == 5 and all(len(e) == 4 for e in h.edges)

    @pytest.mark.parametrize("k", [2, 3])
    def test_no_polychromatic_coloring(self, k):
        h = sharpness_family(k)
        assert not polychromatic_oracle(h, k, 2 * k - 2).exists
        assert not oracles.polychromatic_exists(h.n, [set(e) for e in h.edges], k, 2 * k - 2)

    def test_k_too_small(self):
        with pytest.raises(PreconditionError):
            sharpness_family(1)


def _properly_two_colorable(h):
    for colors in product((0, 1), repeat=h.n):
        if all(len({colors[v] for v in e}) == 2 for e in h.edges):
            return True
    return False


class TestHk:
    def test_k2(self):
        h, tree = hk_family(2)
        assert h.n == 3 and h.m == 3
        assert sorted(h.edges) == [(0, 1), (0, 2), (1, 2)]
        assert not _properly_two_colorable(h)
        assert tree.labels[0] == ()

    def test_k3(self):
        h, tree = hk_family(3)
        assert h.n == 13 and len(tree.children_edges) == 4 and len(tree.path_edges) == 9
        assert all(len(e) == 3 for e in h.edges)
        assert check_abab_free(h) is None
        assert oracles.abab_free([set(e) for e in h.edges])
        assert not _properly_two_colorable(h)

    def test_k4(self):
        h, tree = hk_family(4)
        assert h.n == 85 and h.m == 21 + 64
        assert check_abab_free(h) is None

    def test_edges_follow_the_tree(self):
        h, tree = hk_family(3)
        for i in tree.children_edges:
            labels = [tree.labels[v] for v in h.edges[i]]
            parent = labels[0][:-1]
            assert all(x[:-1] == parent for x in labels)
        for i in tree.path_edges:
            labels = sorted((tree.labels[v] for v in h.edges[i]), key=len)
            assert [len(x) for x in labels] == [0, 1, 2]
            assert labels[1] == labels[2][:1]

    def test_limit(self):
        with pytest.raises(PreconditionError):
            hk_family(5)
        assert hk_family(5, max_vertices=1000)[0].n == 781

    def test_json(self):
        _, tree = hk_family(2)
        assert tree.to_json()["labels"] == [[], [0], [1]]


class TestNoShallow:
    @pytest.mark.parametrize("k", [2, 4, 6])
    def test_shape_and_bottomless(self, k):
        ps, h = no_shallow_family(k)
        assert h.n == 2 * k and h.m == k + 2
        realisable = {frozenset(e) for e in build_bottomless(ps, allow_equal_y=True).edges}
        for e in h.edges:
            assert frozenset(e) in realisable
        assert check_abab_lower(h) is None
        sets = [set(e) for e in h.edges]
        assert not any(a < b for a in sets for b in sets)

    def test_k4_oracle(self):
        _, h = no_shallow_family(4)
        assert min_shallowness_oracle(h)[0] == 2
        assert oracles.min_shallowness(h.n, [set(e) for e in h.edges]) == 2

    def test_k2_fixture(self):
        _, h = no_shallow_family(2)
        assert min_shallowness_oracle(h)[0] == 1

    def test_k6_lower_bound(self):
        _, h = no_shallow_family(6)
        assert min_shallowness_oracle(h)[0] == 6 // 2

    def test_points(self):
        ps, _ = no_shallow_family(2)
        assert [(int(x), int(y)) for x, y in ps.points] == [(1, 1), (2, 2), (3, 2), (4, 1)]

    def test_odd_rejected(self):
        with pytest.raises(PreconditionError):
            no_shallow_family(3)
