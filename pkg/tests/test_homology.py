"""Basis reduction of chain complexes and homology structure."""

import random

import pytest

from fshom.exact import ExactMatrix, PrimeField, ZZ, snf
from fshom.homology import ReducedChainComplex
from fshom.simplicial import from_maximal
from randgen import random_complex

REFERENCE_MAXIMAL = [[0, 1], [0, 3], [1, 2, 3], [4]]

SPHERE = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]

RP2 = [[0, 1, 2], [0, 1, 3], [0, 2, 4], [0, 3, 5], [0, 4, 5],
       [1, 2, 5], [1, 3, 4], [1, 4, 5], [2, 3, 4], [2, 3, 5]]

# triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
TORUS = [[(i + a) % 7, (i + b) % 7, (i + c) % 7]
         for i in range(7) for a, b, c in ((0, 1, 3), (0, 2, 3))]


def betti_list(maximal, ring=ZZ):
    R = ReducedChainComplex(from_maximal(maximal), ring)
    return [R.homology(d).structure.betti for d in range(R.top + 1)]


class TestReduction:
    def test_reference_partitions(self):
        R = ReducedChainComplex(from_maximal(REFERENCE_MAXIMAL), ZZ)
        assert R.partition[0].as_tuple() == (3, 0, 0, 2)
        assert R.partition[1].as_tuple() == (1, 0, 3, 1)
        assert R.partition[2].as_tuple() == (0, 0, 1, 0)

    def check_invariants(self, K, ring):
        R = ReducedChainComplex(K, ring)
        for d in range(R.top + 1):
            n = K.n(d)
            ident = ExactMatrix.identity(ring, n)
            assert R.from_delta[d] @ R.to_delta[d] == ident
            assert R.to_delta[d] @ R.from_delta[d] == ident
            p = R.partition[d]
            assert p.n_U + p.n_T + p.n_R + p.n_F == n
        for d in range(1, R.top + 1):
            M = ExactMatrix.from_rows(ring, K.boundary_matrix(d))
            assert R.from_delta[d - 1] @ M @ R.to_delta[d] == R.D[d]
        for d in range(R.top):
            prod = R.D[d] @ R.D[d + 1]
            assert prod.is_zero_matrix()
        return R

    def test_invariants_on_random_complexes(self):
        rng = random.Random(101)
        for i in range(40):
            K = random_complex(rng)
            ring = PrimeField(2) if i % 3 == 0 else ZZ
            self.check_invariants(K, ring)

    def test_empty_complex_rejected(self):
        from fshom.simplicial import EMPTY_COMPLEX
        with pytest.raises(ValueError):
            ReducedChainComplex(EMPTY_COMPLEX, ZZ)


class TestHomologyStructure:
    def test_reference(self):
        R = ReducedChainComplex(from_maximal(REFERENCE_MAXIMAL), ZZ)
        assert [R.homology(d).structure.describe() for d in range(3)] == \
            ["Z^2", "Z", "0"]
        h0 = R.homology(0)
        assert [list(g) for g in h0.free_generators] == \
            [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
        h1 = R.homology(1)
        assert [list(g) for g in h1.free_generators] == [[1, -1, 0, 1, 0]]

    def test_point_and_circle(self):
        assert betti_list([[0]]) == [1]
        assert betti_list([[0, 1], [1, 2], [0, 2]]) == [1, 1]

    def test_two_circles(self):
        two = [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]]
        assert betti_list(two) == [2, 2]

    def test_sphere(self):
        assert betti_list(SPHERE) == [1, 0, 1]

    def test_projective_plane_torsion(self):
        R = ReducedChainComplex(from_maximal(RP2), ZZ)
        assert R.homology(0).structure.describe() == "Z"
        h1 = R.homology(1)
        assert h1.structure.betti == 0 and h1.structure.torsion == (2,)
        assert R.homology(2).structure.is_zero
        # over the two-element field the torsion shows up as extra rank
        assert betti_list(RP2, PrimeField(2)) == [1, 1, 1]
        assert betti_list(RP2, PrimeField(3)) == [1, 0, 0]

    def test_torus(self):
        assert betti_list(TORUS) == [1, 2, 1]

    def test_betti_by_rank_nullity(self):
        rng = random.Random(103)
        for _ in range(30):
            K = random_complex(rng)
            R = ReducedChainComplex(K, ZZ)
            for d in range(K.dim + 1):
                rank_d = snf(ExactMatrix.from_rows(ZZ, K.boundary_matrix(d))).rank
                rank_up = snf(ExactMatrix.from_rows(ZZ, K.boundary_matrix(d + 1))).rank
                assert R.homology(d).structure.betti == K.n(d) - rank_d - rank_up


class TestClassCoordinates:
    def reference(self):
        return ReducedChainComplex(from_maximal(REFERENCE_MAXIMAL), ZZ)

    def test_round_trip(self):
        R = self.reference()
        for d in (0, 1):
            ambient = R.ambient(d)
            for k in range(ambient.length):
                vec = [0] * ambient.length
                vec[k] = 1
                coords = R.class_from_vector(d, vec)
                cycle = R.cycle_of_class(d, coords)
                back = R.class_of_cycle(d, cycle)
                assert back.vector() == coords.vector()

    def test_boundary_invisible(self):
        R = self.reference()
        # boundary of the triangle, as a 1-cycle
        b = [0, 0, 1, -1, 1]
        coords = R.class_of_cycle(1, b)
        assert coords.is_zero
        # adding it to a generator does not move the class
        z = [1, -1, 0, 1, 0]
        moved = [zi + bi for zi, bi in zip(z, b)]
        assert R.class_of_cycle(1, moved).vector() == R.class_of_cycle(1, z).vector()

    def test_non_cycle_rejected(self):
        R = self.reference()
        with pytest.raises(ValueError):
            R.class_of_cycle(1, [1, 0, 0, 0, 0])

    def test_torsion_coordinates_reduced(self):
        R = ReducedChainComplex(from_maximal(RP2), ZZ)
        ambient = R.ambient(1)
        assert ambient.torsion == (2,) and ambient.free_rank == 0
        g = R.homology(1).torsion_generators[0]
        coords = R.class_of_cycle(1, g)
        assert coords.vector() == (1,)
        doubled = [2 * v for v in g]
        assert R.class_of_cycle(1, doubled).is_zero

    def test_random_round_trips(self):
        rng = random.Random(107)
        for _ in range(20):
            K = random_complex(rng)
            R = ReducedChainComplex(K, ZZ)
            for d in range(K.dim + 1):
                ambient = R.ambient(d)
                if ambient.length == 0:
                    continue
                vec = [rng.randint(-3, 3) for _ in range(ambient.length)]
                coords = R.class_from_vector(d, vec)
                back = R.class_of_cycle(d, R.cycle_of_class(d, coords))
                assert back.vector() == coords.vector()
