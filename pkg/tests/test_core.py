from itertools import combinations

import pytest
from hypothesis import given, settings

from clutterkit.core import (
    Clutter,
    ClutterError,
    SimplicialComplex,
    alexander_dual,
    augment_with_nonface,
    contract_vertex,
    d_complement,
    delete_face,
    delete_vertex,
    independence_complex,
    is_antichain,
    iter_subsets,
    join,
    link,
    link_vertex,
    minimal_transversals,
    minors_one_step,
    nonface_clutter,
    popcount,
    skeleton,
)
from clutterkit.canonical import are_isomorphic, canonical_key
from clutterkit.families import make_cyclic_uniform, make_two_facet_complement

from conftest import cl, clutters, complexes, cx


def brute_faces(c):
    return {s for s in range(1 << c.n) if c.is_independent(s)}


class TestClutterBasics:
    def test_rejects_non_antichain(self):
        with pytest.raises(ClutterError):
            Clutter(3, (0b011, 0b111))

    def test_rejects_out_of_range(self):
        with pytest.raises(ClutterError):
            Clutter(2, (0b100,))

    def test_void_and_empty_are_distinct(self):
        assert Clutter(3, ()) != Clutter(3, (0,))
        assert SimplicialComplex.void(3).is_void
        assert not SimplicialComplex.empty(3).is_void
        assert SimplicialComplex.void(3).dim == -2
        assert SimplicialComplex.empty(3).dim == -1

    def test_uniformity(self):
        assert cl("12, 23").is_uniform(2)
        assert not cl("12, 345").is_uniform()
        assert Clutter(3).is_uniform(5)


class TestDeletion:
    def test_c6_delete_first(self):
        c6 = cl("12, 13, 24, 35, 46, 56")
        # vertices 2..6 become indices 0..4
        assert delete_vertex(c6, 0) == cl("13, 24, 35, 45", 5)

    def test_empty_circuit_survives(self):
        assert delete_vertex(Clutter(3, (0,)), 1) == Clutter(2, (0,))

    def test_single_circuit_disappears(self):
        assert delete_vertex(cl("123"), 1) == Clutter(2, ())


class TestContraction:
    def test_single_circuit(self):
        assert contract_vertex(cl("123"), 0) == cl("12", 2)

    def test_example_cycle_of_triangles(self):
        c = cl("123, 345, 567, 178")
        for v in (7, 5, 3, 1):  # 8, 6, 4, 2 from the top so indices stay put
            c = contract_vertex(c, v)
        assert c == cl("12, 23, 34, 14")

    def test_no_circuits(self):
        assert contract_vertex(Clutter(4), 2) == Clutter(3)


class TestMinors:
    def test_single_edge(self):
        ms = minors_one_step(cl("12"))
        assert len(ms) == 4
        assert len({canonical_key(m) for m in ms}) == 2

    def test_c4_minors_have_no_four_cycle(self):
        c4 = make_cyclic_uniform(4, 2)
        ms = minors_one_step(c4)
        assert len(ms) == 8
        assert all(m.n == 3 for m in ms)

    def test_empty_circuit(self):
        for m in minors_one_step(Clutter(3, (0,))):
            assert m.circuits in ((0,), ())

    def test_no_vertices(self):
        with pytest.raises(ClutterError):
            minors_one_step(Clutter(0))


class TestAugment:
    def test_absorbs_superset(self):
        assert augment_with_nonface(cl("123"), 0b110) == cl("23", 3)

    def test_c5_chord(self):
        got = augment_with_nonface(make_cyclic_uniform(5, 2), 0b00101)
        assert got == cl("12, 23, 34, 45, 15, 13")

    def test_empty_set(self):
        assert augment_with_nonface(cl("12, 34"), 0) == Clutter(4, (0,))

    def test_dependent_set_rejected(self):
        with pytest.raises(ClutterError):
            augment_with_nonface(cl("12"), 0b11)


class TestIndependenceComplex:
    def test_c6(self):
        assert independence_complex(cl("12, 13, 24, 35, 46, 56")) == cx("145, 16, 236, 25, 34", 6)

    def test_z53(self):
        assert independence_complex(make_cyclic_uniform(5, 3)) == cx("124, 235, 134, 245, 135")

    def test_empty_circuit_gives_void(self):
        assert independence_complex(Clutter(4, (0,))).is_void

    def test_nonfaces_of_c6_complex(self):
        assert nonface_clutter(cx("145, 16, 236, 25, 34", 6)) == cl("12, 13, 24, 35, 46, 56")

    def test_nonfaces_of_simplex_and_void(self):
        assert nonface_clutter(SimplicialComplex.simplex(4)) == Clutter(4)
        assert nonface_clutter(SimplicialComplex.void(4)) == Clutter(4, (0,))

    @given(clutters())
    def test_faces_match_brute_force(self, c):
        assert independence_complex(c).faces() == brute_faces(c)

    @given(clutters())
    def test_round_trip_clutter(self, c):
        assert nonface_clutter(independence_complex(c)) == c

    @given(complexes())
    def test_round_trip_complex(self, d):
        assert independence_complex(nonface_clutter(d)) == d

    def test_minimal_transversals_edge_cases(self):
        assert minimal_transversals([], 0b111) == (0,)
        assert minimal_transversals([0], 0b111) == ()


class TestLinkAndDeletion:
    def test_link_of_empty_face(self):
        d = cx("145, 16, 236, 25, 34", 6)
        assert link(d, 0) == d

    def test_link_of_facet(self):
        d = cx("145, 16, 236, 25, 34", 6)
        assert link(d, 0b011001) == SimplicialComplex.empty(3)

    def test_link_of_non_face(self):
        with pytest.raises(ClutterError):
            link(cx("12, 3"), 0b101)

    def test_link_vertex_of_missing_vertex_is_void(self):
        assert link_vertex(cx("12", 3), 2).is_void

    def test_delete_edge_of_triangle(self):
        assert delete_face(SimplicialComplex.simplex(3), 0b011) == cx("13, 23")

    def test_delete_empty_face(self):
        assert delete_face(cx("12, 3"), 0).is_void

    @given(clutters(max_n=7, min_n=1))
    @settings(max_examples=150)
    def test_link_is_contraction(self, c):
        d = independence_complex(c)
        for v in range(c.n):
            if d.contains(1 << v):
                assert link(d, 1 << v) == independence_complex(contract_vertex(c, v))

    @given(clutters(max_n=7, min_n=1))
    @settings(max_examples=150)
    def test_induced_is_deletion(self, c):
        from clutterkit.core import delete_vertex_complex

        d = independence_complex(c)
        for v in range(c.n):
            assert delete_vertex_complex(d, v) == independence_complex(delete_vertex(c, v))

    @given(clutters(max_n=7))
    @settings(max_examples=150)
    def test_face_deletion_is_augmentation(self, c):
        d = independence_complex(c)
        for s in d.faces():
            assert delete_face(d, s) == independence_complex(augment_with_nonface(c, s))

    @given(clutters(max_n=6, min_n=2))
    @settings(max_examples=80)
    def test_minor_operations_commute(self, c):
        for u in range(c.n):
            for v in range(u + 1, c.n):
                # after removing u, vertex v has index v - 1
                for f in (delete_vertex, contract_vertex):
                    for g in (delete_vertex, contract_vertex):
                        assert g(f(c, u), v - 1) == f(g(c, v), u)


class TestJoinAndSkeleton:
    def test_join_identity_and_absorption(self):
        d = cx("12, 3")
        assert join(d, SimplicialComplex.empty(0)) == d
        assert join(d, SimplicialComplex.void(2)).is_void

    def test_point_times_point(self):
        p = SimplicialComplex.simplex(1)
        assert join(p, p) == SimplicialComplex.simplex(2)

    def test_y3_top_skeleton(self):
        d = independence_complex(make_two_facet_complement(3))
        assert skeleton(d, 2) == cx("123, 456")

    def test_minus_one_skeleton(self):
        assert skeleton(cx("123, 45"), -1) == SimplicialComplex.empty(5)

    def test_graph_skeleton(self):
        k4 = skeleton(SimplicialComplex.simplex(4), 1, pure=False)
        assert k4 == cx("12, 13, 14, 23, 24, 34")

    def test_non_pure_skeleton_keeps_small_facets(self):
        assert skeleton(cx("123, 4"), 1, pure=False) == cx("12, 13, 23, 4")
        assert skeleton(cx("123, 4"), 1) == cx("12, 13, 23", 4)


class TestAlexanderDual:
    def test_triangle_boundary(self):
        assert alexander_dual(cx("12, 13, 23")) == SimplicialComplex.empty(3)

    def test_empty_complex_gives_boundary(self):
        assert alexander_dual(SimplicialComplex.empty(4)) == cx("123, 124, 134, 234")

    def test_two_edges(self):
        assert alexander_dual(cx("12, 34")) == cx("13, 14, 23, 24")

    @given(complexes(max_n=7))
    def test_involution(self, d):
        assert alexander_dual(alexander_dual(d)) == d

    @given(complexes(max_n=6))
    def test_definition(self, d):
        faces = d.faces()
        full = d.ground
        want = {s for s in range(1 << d.n) if (full & ~s) not in faces}
        assert alexander_dual(d).faces() == want


class TestComplement:
    def test_c5(self):
        assert d_complement(make_cyclic_uniform(5, 2), 2) == cl("13, 14, 24, 25, 35")

    def test_z53(self):
        assert d_complement(make_cyclic_uniform(5, 3), 3) == cl("124, 134, 135, 235, 245")

    def test_complete(self):
        full = Clutter(5, tuple(sum(1 << v for v in s) for s in combinations(range(5), 3)))
        assert d_complement(full, 3) == Clutter(5)

    def test_range(self):
        with pytest.raises(ClutterError):
            d_complement(cl("12"), 3)

    def test_c5_complement_is_c5(self):
        c5 = make_cyclic_uniform(5, 2)
        assert are_isomorphic(d_complement(c5, 2), c5)


def test_iter_subsets_count():
    assert sorted(iter_subsets(0b1011)) == [0, 1, 2, 3, 8, 9, 10, 11]


@given(clutters())
def test_constructors_keep_antichain(c):
    assert is_antichain(c.circuits)
    assert all(popcount(e) <= c.n for e in c.circuits)
