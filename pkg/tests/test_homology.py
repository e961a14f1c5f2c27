import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_reduced_homology, complexes, cx_faces

from seqsr.complex import RelativePair, SimplicialComplex, cone, f_vector, face_set, pure_skeleton
from seqsr.config import limits
from seqsr.errors import InputError, ResourceError
from seqsr.graphs import cycle_graph, independence_complex
from seqsr.homology import (
    HomologyVector,
    _chain_reduced,
    boundary_matrices,
    reduced_homology,
    relative_homology,
)
from seqsr.linalg import GF, QQ


def C(n):
    return independence_complex(cycle_graph(n))


def cx(n, *facets):
    return SimplicialComplex.from_facets(n, facets)


HOLLOW = cx(3, [1, 2], [1, 3], [2, 3])
# real projective plane, 6-vertex triangulation: H_1 has 2-torsion
RP2 = cx(
    6,
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
)


class TestBoundaryMatrices:
    def test_single_point(self):
        m = boundary_matrices(cx(1, [1]))[0]
        assert m.to_dense() == [[1]]

    def test_c5_shape(self):
        assert boundary_matrices(C(5))[1].shape == (5, 5)

    def test_hollow_triangle_columns(self):
        d1 = boundary_matrices(HOLLOW)[1].to_dense()
        assert all(sum(row[j] for row in d1) == 0 for j in range(3))

    @given(complexes(max_n=6, max_facets=6))
    def test_boundary_squares_to_zero(self, c):
        mats = boundary_matrices(c)
        for i in range(1, c.dim + 1):
            lower, upper = mats[i - 1].to_dense(), mats[i].to_dense()
            for row in lower:
                for j in range(len(upper[0]) if upper else 0):
                    assert sum(row[k] * upper[k][j] for k in range(len(row))) == 0

    def test_void_rejected(self):
        with pytest.raises(InputError):
            boundary_matrices(SimplicialComplex.void(2))


class TestReducedHomology:
    def test_hollow_triangle(self):
        h = reduced_homology(HOLLOW)
        assert h[0] == 0 and h[1] == 1

    def test_irrelevant(self):
        assert reduced_homology(SimplicialComplex.irrelevant(2)).as_dict() == {-1: 1}

    def test_c7_pure_2_skeleton_is_a_circle(self):
        assert reduced_homology(pure_skeleton(C(7), 2)).as_dict() == {1: 1}

    def test_torsion_depends_on_field(self):
        assert reduced_homology(RP2, QQ).is_zero
        assert reduced_homology(RP2, GF(2)).as_dict() == {1: 1, 2: 1}
        assert reduced_homology(RP2, GF(3)).is_zero

    def test_void_rejected(self):
        with pytest.raises(InputError):
            reduced_homology(SimplicialComplex.void(3))

    def test_cap(self):
        with limits(cap_n=3), pytest.raises(ResourceError):
            reduced_homology(C(5))

    @pytest.mark.parametrize("n", range(3, 10))
    def test_cycles_field_independent(self, n):
        assert reduced_homology(C(n), QQ) == reduced_homology(C(n), GF(2))
        for i in range(-1, C(n).dim + 1):
            sk = pure_skeleton(C(n), i)
            assert reduced_homology(sk, QQ) == reduced_homology(sk, GF(2))

    @given(complexes(max_n=6, max_facets=6), st.sampled_from([None, 2, 3]))
    def test_matches_dense_oracle(self, c, p):
        field = QQ if p is None else GF(p)
        assert reduced_homology(c, field).as_dict() == brute_reduced_homology(cx_faces(c), p)

    @given(complexes(max_n=6, max_facets=6))
    def test_shortcuts_agree_with_chain_computation(self, c):
        assert reduced_homology(c) == _chain_reduced(c.facets, QQ)

    @given(complexes(max_n=6, max_facets=6), st.sampled_from([None, 2, 5]))
    def test_euler_poincare(self, c, p):
        field = QQ if p is None else GF(p)
        f = f_vector(c)
        assert sum((-1) ** (k - 1) * x for k, x in enumerate(f)) == reduced_homology(c, field).euler_characteristic()

    @given(complexes(max_n=6, max_facets=6))
    def test_cone_is_acyclic(self, c):
        assert _chain_reduced(cone(c).facets, QQ).is_zero
        assert reduced_homology(cone(c)).is_zero


class TestRelativeHomology:
    def test_identity_pair(self):
        assert relative_homology(RelativePair(C(5), C(5))).is_zero

    def test_void_sub(self):
        assert relative_homology(RelativePair(C(6), SimplicialComplex.void(6))) == reduced_homology(C(6))

    def test_interval_mod_boundary(self):
        pair = RelativePair(cx(2, [1, 2]), cx(2, [1], [2]))
        assert relative_homology(pair).as_dict() == {1: 1}

    def test_sub_must_be_contained(self):
        with pytest.raises(InputError):
            RelativePair(cx(3, [1, 2]), cx(3, [3]))

    @given(complexes(max_n=6, max_facets=6), st.data())
    def test_long_exact_sequence(self, amb, data):
        faces = sorted(face_set(amb))
        picks = data.draw(st.lists(st.sampled_from(faces), max_size=4))
        sub = SimplicialComplex(amb.n, tuple(picks))
        pair = RelativePair(amb, sub)
        chi_sub = 0 if sub.is_void else reduced_homology(sub).euler_characteristic()
        chi_amb = reduced_homology(amb).euler_characteristic()
        chi_rel = relative_homology(pair).euler_characteristic()
        assert chi_sub - chi_amb + chi_rel == 0

    @given(complexes(max_n=5, max_facets=5), st.data())
    def test_matches_quotient_oracle(self, amb, data):
        picks = data.draw(st.lists(st.sampled_from(sorted(face_set(amb))), min_size=1, max_size=3))
        sub = SimplicialComplex(amb.n, tuple(picks))
        rel = cx_faces(amb) - cx_faces(sub)
        expected = brute_reduced_homology(rel) if rel else {}
        assert relative_homology(RelativePair(amb, sub)).as_dict() == expected


def test_homology_vector_text():
    assert HomologyVector().to_text() == "0"
    assert HomologyVector.from_sequence(-1, [0, 2, 0, 1]).to_text() == "0:2 2:1"
    assert HomologyVector(((1, 3),))[1] == 3 and HomologyVector(((1, 3),))[0] == 0
