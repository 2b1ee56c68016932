import numpy as np
import pytest

from lattice import (
    UNBOUNDED,
    Cone2,
    HalfPlane,
    LatticeVector,
    Side,
    brute_force_minimize,
    ccw_key,
    dual_cone,
    lattice_minimize,
    mu_compare,
    mu_of,
    primitive,
)
from utils.exceptions import EmptyFeasibleRegion, MalformedInput, ZeroVector

V = LatticeVector
THIRD_QUADRANT = Cone2(V(-1, 0), V(0, -1))


class TestVectors:
    def test_primitive_splits_off_gcd(self):
        assert primitive(V(4, -6)) == (V(2, -3), 2)
        assert primitive(V(0, -5)) == (V(0, -1), 5)

    def test_primitive_of_zero(self):
        with pytest.raises(ZeroVector):
            primitive(V(0, 0))

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            V(1.5, 0)

    def test_counterclockwise_order(self):
        vectors = [V(0, -1), V(1, 0), V(-1, 0), V(0, 1), V(1, 1), V(1, -1)]
        assert sorted(vectors, key=ccw_key) == [V(1, 0), V(1, 1), V(0, 1), V(-1, 0), V(0, -1), V(1, -1)]


class TestMu:
    def test_compare_normalizes_by_length(self):
        # mu((1,0), (1,0)) = 1 > 1/sqrt(2) = mu((1,0), (1,1))
        assert mu_compare(V(1, 0), V(1, 0), V(1, 1)) == 1
        assert mu_compare(V(1, 0), V(1, 1), V(1, 0)) == -1
        assert mu_compare(V(1, 0), V(2, 0), V(1, 0)) == 0

    def test_sign_is_kept(self):
        assert mu_of(V(1, 0), V(-1, 0)) < mu_of(V(1, 0), V(0, 1))

    def test_zero_cocharacter(self):
        with pytest.raises(ZeroVector):
            mu_of(V(1, 0), V(0, 0))


class TestCones:
    def test_generators_must_be_counterclockwise_and_primitive(self):
        with pytest.raises(MalformedInput):
            Cone2(V(0, -1), V(-1, 0))
        with pytest.raises(MalformedInput):
            Cone2(V(2, 0), V(0, 1))

    def test_spanned_by_reorders(self):
        assert Cone2.spanned_by(V(0, -3), V(-2, 0)) == THIRD_QUADRANT

    def test_third_quadrant_is_self_dual(self):
        dual = dual_cone(THIRD_QUADRANT)
        assert (dual.a, dual.b) == (THIRD_QUADRANT.a, THIRD_QUADRANT.b)
        assert dual.side is Side.COCHARACTER

    def test_dual_pairs_nonnegatively(self):
        cone = Cone2(V(1, 0), V(1, 3))
        dual = dual_cone(cone)
        assert (dual.a, dual.b) == (V(3, -1), V(0, 1))
        for g in (cone.a, cone.b):
            assert g.pairing(dual.a) >= 0 and g.pairing(dual.b) >= 0
        assert dual_cone(dual) == cone


class TestMinimize:
    def test_discriminant_length_example(self):
        assert lattice_minimize(V(0, -3), THIRD_QUADRANT, HalfPlane(V(0, 1), -1)) == 3

    def test_bounded_below_on_cut_quadrant(self):
        # -x >= 1 on the cut region; attained at (-1, 0)
        assert lattice_minimize(V(-1, 0), THIRD_QUADRANT, HalfPlane(V(1, 0), -1)) == 1

    def test_unbounded_along_recession_ray(self):
        assert lattice_minimize(V(1, 0), THIRD_QUADRANT, HalfPlane(V(1, 0), -1)) is UNBOUNDED

    def test_zero_objective(self):
        assert lattice_minimize(V(0, 0), THIRD_QUADRANT) == 0

    def test_without_half_plane(self):
        assert lattice_minimize(V(-1, -1), THIRD_QUADRANT) == 0
        assert lattice_minimize(V(1, 0), THIRD_QUADRANT) is UNBOUNDED

    def test_empty_region(self):
        with pytest.raises(EmptyFeasibleRegion):
            lattice_minimize(V(-1, 0), THIRD_QUADRANT, HalfPlane(V(-1, -1), -1))

    def test_non_unimodular_cone_needs_lattice_points(self):
        # the real minimum 1/3 sits at (1/3, 1), the nearest lattice point is (1, 1)
        cone = Cone2(V(1, 0), V(1, 3))
        assert lattice_minimize(V(1, 0), cone, HalfPlane(V(0, -1), -1)) == 1
        assert brute_force_minimize(V(1, 0), cone, HalfPlane(V(0, -1), -1)) == 1

    def test_matches_brute_force(self):
        rng = np.random.default_rng(7)
        checked = 0
        while checked < 150:
            a = V(*(int(v) for v in rng.integers(-2, 3, size=2)))
            b = V(*(int(v) for v in rng.integers(-2, 3, size=2)))
            if a.is_zero() or b.is_zero() or a.cross(b) <= 0:
                continue
            if primitive(a)[1] != 1 or primitive(b)[1] != 1:
                continue
            cone = Cone2(a, b)
            objective = V(*(int(v) for v in rng.integers(-2, 3, size=2)))
            normal = V(*(int(v) for v in rng.integers(-2, 3, size=2)))
            half_plane = HalfPlane(normal, int(rng.integers(-2, 3)))
            try:
                exact = lattice_minimize(objective, cone, half_plane)
            except EmptyFeasibleRegion:
                with pytest.raises(EmptyFeasibleRegion):
                    brute_force_minimize(objective, cone, half_plane)
                continue
            checked += 1
            if exact is UNBOUNDED:
                continue
            assert exact == brute_force_minimize(objective, cone, half_plane)


def _random_vectors(seed, count, bound=9):
    rng = np.random.default_rng(seed)
    vectors = []
    while len(vectors) < count:
        v = V(*(int(c) for c in rng.integers(-bound, bound + 1, size=2)))
        if not v.is_zero():
            vectors.append(v)
    return vectors


class TestLatticeInvariants:
    def test_primitive_of_multiple(self):
        for v in _random_vectors(seed=1, count=200):
            direction, g = primitive(v)
            for k in (1, 2, 5):
                assert primitive(v.scale(k)) == (direction, k * g)
            assert direction.scale(g) == v

    def test_mu_compare_is_scale_invariant(self):
        vectors = _random_vectors(seed=2, count=300)
        for chi, lam1, lam2 in zip(vectors[0::3], vectors[1::3], vectors[2::3]):
            expected = mu_compare(chi, lam1, lam2)
            assert mu_compare(chi, lam1.scale(3), lam2) == expected
            assert mu_compare(chi, lam1, lam2.scale(2)) == expected
            assert mu_compare(chi.scale(4), lam1, lam2) == expected

    def test_mu_against_shorter_axis(self):
        # mu^2 is 64/10 for (3,-1) against 1 for (1,0)
        assert mu_compare(V(1, -5), V(3, -1), V(1, 0)) == 1
        assert mu_compare(V(1, -5), V(1, 0), V(3, -1)) == -1

    def test_dual_of_obtuse_cone(self):
        cone = Cone2(V(1, 3), V(-1, 0))
        dual = dual_cone(cone)
        assert dual == Cone2(V(0, 1), V(-3, 1), Side.COCHARACTER)
        assert dual_cone(dual) == cone

    def test_dual_cone_pairs_nonnegatively(self):
        vectors = _random_vectors(seed=3, count=400, bound=5)
        checked = 0
        for a, b in zip(vectors[0::2], vectors[1::2]):
            if a.cross(b) <= 0:
                continue
            cone = Cone2.spanned_by(a, b)
            dual = dual_cone(cone)
            for g in (cone.a, cone.b):
                assert g.pairing(dual.a) >= 0 and g.pairing(dual.b) >= 0
            assert cone.a.pairing(dual.b) == 0 and cone.b.pairing(dual.a) == 0
            assert dual_cone(dual) == cone
            checked += 1
        assert checked > 50
