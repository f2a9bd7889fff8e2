"""Inequality descriptions, faces, and the weighted labels."""

import pytest

from positroids import (
    dimension,
    face_for_flag,
    face_poset,
    h_description,
    make_matroid,
    necklace_of,
    pi_star,
    rank_h_description,
    uniform,
    vertices_01,
    weighted_nc_of_face,
)
from positroids.counting import enumerate_positroids
from positroids.errors import InvalidFlag, NotAPositroid, SubsetBlowup
from positroids.matroid import connected_components
from positroids.polytope import cyclic_interval, cyclic_rank_description


class TestHDescription:
    def test_pyramid_constraint(self, m0):
        desc = h_description(necklace_of(m0))
        assert ((3, 4), 1) in desc.constraints

    def test_free_matroid_point(self):
        free = make_matroid(3, [{1, 2, 3}])
        desc = h_description(necklace_of(free))
        assert vertices_01(desc) == frozenset({frozenset({1, 2, 3})})

    def test_uniform_all_pass(self):
        desc = h_description(necklace_of(uniform(2, 4)))
        assert vertices_01(desc) == uniform(2, 4).bases

    def test_pyramid_vertices(self, m0):
        assert vertices_01(h_description(necklace_of(m0))) == m0.bases


class TestRankDescription:
    def test_pyramid_has_rank_constraint(self, m0):
        desc = rank_h_description(m0)
        assert (frozenset({3, 4}), 1) in desc.constraints

    def test_rank_zero(self):
        m = make_matroid(2, [set()])
        assert vertices_01(rank_h_description(m)) == frozenset({frozenset()})

    def test_guard(self):
        with pytest.raises(SubsetBlowup):
            rank_h_description(uniform(1, 13))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_agrees_with_necklace_description(self, n):
        for m in enumerate_positroids(n):
            assert vertices_01(rank_h_description(m)) == m.bases

    def test_cyclic_reconstruction_fails_off_positroids(self, crossing_sum):
        got = vertices_01(cyclic_rank_description(crossing_sum))
        assert got != crossing_sum.bases


class TestFaces:
    def test_trivial_flag(self, m0):
        assert face_for_flag(m0, [{1, 2, 3, 4}]).bases == m0.bases

    def test_vertex_flag(self, m0):
        f = face_for_flag(m0, [{1, 2}, {3, 4}])
        assert f.bases == frozenset({frozenset({1, 2})})

    def test_singleton_flag_gives_greedy_vertex(self, m0):
        # weights 1 < 2 < 3 < 4: the greedy basis for that order is {1,2}
        f = face_for_flag(m0, [{1}, {2}, {3}, {4}])
        assert f.bases == frozenset({frozenset({1, 2})})

    def test_invalid_flag(self, m0):
        with pytest.raises(InvalidFlag):
            face_for_flag(m0, [{1, 2}, {2, 3, 4}])

    def test_pyramid_face_count(self, m0):
        poset = face_poset(m0)
        assert len(poset) == 20
        by_dim = {}
        for node in poset.nodes:
            key = -1 if node.is_empty else dimension(node.matroid)
            by_dim[key] = by_dim.get(key, 0) + 1
        # square pyramid: 5 vertices, 8 edges, 5 two-faces, the solid, and one empty face
        assert by_dim == {-1: 1, 0: 5, 1: 8, 2: 5, 3: 1}

    def test_free_matroid_two_faces(self):
        assert len(face_poset(make_matroid(2, [{1, 2}]))) == 2

    def test_segment(self):
        poset = face_poset(uniform(1, 2))
        assert len(poset) == 4  # two endpoints, the segment, the empty face

    def test_non_positroid_rejected(self, crossing_sum):
        with pytest.raises(NotAPositroid):
            face_poset(crossing_sum)


class TestWeightedLabels:
    def test_full_face(self, m0):
        label = weighted_nc_of_face(m0)
        assert label.partition.blocks == (frozenset({1, 2, 3, 4}),)
        assert label.weights == (2,)

    def test_vertex_label(self, m0):
        v = face_for_flag(m0, [{1, 2}, {3, 4}])
        label = weighted_nc_of_face(v)
        assert label.partition.blocks == tuple(frozenset({i}) for i in range(1, 5))
        assert label.weights == (1, 1, 0, 0)

    def test_top_of_poset(self, m0):
        top = face_poset(m0).top
        assert top.label.partition.blocks == (frozenset({1, 2, 3, 4}),)
        assert top.label.weights == (2,)


class TestPiStar:
    def test_free_matroid(self):
        free = make_matroid(3, [{1, 2, 3}])
        assert pi_star(free).block_sets() == frozenset({frozenset({1, 2, 3})})

    def test_two_segments(self):
        m = make_matroid(4, [{1, 3}, {1, 4}, {2, 3}, {2, 4}])
        assert pi_star(m).block_sets() == frozenset(
            {frozenset({2, 4}), frozenset({1}), frozenset({3})}
        )


class TestDimension:
    def test_point(self):
        assert dimension(make_matroid(3, [{1, 2, 3}])) == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_n_minus_components(self, n):
        for m in enumerate_positroids(n):
            c = len(connected_components(m).blocks)
            assert dimension(m) == n - c


def test_cyclic_interval_wraps():
    assert cyclic_interval(3, 1, 4) == (3, 4, 1)
    assert cyclic_interval(2, 2, 4) == (2,)
