from fractions import Fraction
from itertools import product
from math import ceil, isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discmink.bodies import BodyError, VPolytope, crosspolytope, cube, ellipsoid, slab_parallelepiped
from discmink.corpus import gen_ellipsoids, gen_random_symmetric_polytopes, gen_symmetric_polygons, random_unimodular
from discmink.counting import (
    MinimaError,
    PointSet,
    count,
    interior_lattice_points,
    lambda1,
    lambda1_with_witness,
    lattice_points,
    successive_minima,
)
from discmink.lattice import rank
from discmink.rng import SplitMix64

HALF = Fraction(1, 2)


def double_loop(K, margin=2):
    """Independent scan: a box larger than the bounding box, membership per point."""
    lo, hi = K.bounding_box()
    total, interior = [], []
    for x in product(*(range(a - margin, b + margin + 1) for a, b in zip(lo, hi))):
        if K.contains(x):
            total.append(x)
            if K.contains_interior(x):
                interior.append(x)
    return total, interior


def test_count_examples():
    assert count(cube(2)) == (9, 1, 8)
    assert count(cube(3)) == (27, 1, 26)
    assert count(slab_parallelepiped(2, 3)) == (21, 5, 16)
    assert count(crosspolytope(2).scaled(2)) == (13, 5, 8)
    E = ellipsoid([[HALF, 0], [0, HALF]])
    assert count(E) == (9, 5, 4)
    assert count(ellipsoid([[1, 0], [0, 1]])) == (5, 1, 4)
    assert count(ellipsoid([[Fraction(1, 9), 0], [0, 1]])) == (9, 5, 4)


def test_point_lists():
    K = slab_parallelepiped(2, 2)
    assert len(lattice_points(K)) == 15
    assert list(interior_lattice_points(K)) == [(0, -1), (0, 0), (0, 1)]
    assert (0, 2) in lattice_points(K)


def test_point_set():
    U = PointSet.of([(1, 0), (0, 0), (1, 0)])
    assert list(U) == [(0, 0), (1, 0)] and U.dim == 2
    assert list(U.translate((1, 1))) == [(1, 1), (2, 1)]
    with pytest.raises(ValueError):
        PointSet.of([(0, 0), (1,)])
    with pytest.raises(ValueError):
        PointSet.of([])


def test_successive_minima_examples():
    for n in (2, 3):
        assert successive_minima(cube(n)).values == (1,) * n
    assert successive_minima(cube(2).scaled(2)).values == (HALF, HALF)
    m = successive_minima(slab_parallelepiped(2, 3))
    assert m.values == (Fraction(1, 3), 1)
    assert m.witnesses == ((0, 1), (1, 0))
    assert lambda1(cube(2)) == 1
    assert str(lambda1(ellipsoid([[HALF, 0], [0, HALF]]))) == "sqrt(1/2)"
    for ell in (1, 2, 5):
        assert lambda1(slab_parallelepiped(2, ell)) == Fraction(1, ell)


def test_minima_of_thin_body_needs_scaling():
    K = VPolytope([(Fraction(1, 5), 0), (Fraction(-1, 5), 0), (0, Fraction(1, 3)), (0, Fraction(-1, 3))])
    assert successive_minima(K).values == (3, 5)
    assert lambda1_with_witness(K) == (3, (0, 1))


def test_minima_errors():
    with pytest.raises(BodyError):
        successive_minima(ellipsoid([[1, 0], [0, 1]], [HALF, 0]))
    tiny = cube(2).scaled(Fraction(1, 100))
    with pytest.raises(MinimaError):
        lambda1(tiny)
    assert lambda1(tiny, cap=128) == 100


def _minima_oracle(K):
    """lambda_i by brute force over every nonzero point of a box (LP and facet gauges agree, see test_bodies)."""
    m = successive_minima(K)
    t = isqrt(ceil(max(m.values).radicand)) + 1
    lo, hi = K.scaled(t).bounding_box()
    pts = [p for p in product(*(range(a, b + 1) for a, b in zip(lo, hi))) if any(p)]
    gauges = sorted((K.fast_gauge(p).radicand, p) for p in pts)
    out, chosen = [], []
    for r, p in gauges:
        if rank(chosen + [p]) > len(chosen):
            chosen.append(p)
            out.append(r)
            if len(chosen) == K.dim:
                break
    return tuple(out)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_minima_match_oracle(seed):
    (_, K), = gen_random_symmetric_polytopes(3, 2, 1, seed)
    assert tuple(v.radicand for v in successive_minima(K).values) == _minima_oracle(K)
    (_, E), = gen_ellipsoids(2, 1, seed)
    assert tuple(v.radicand for v in successive_minima(E).values) == _minima_oracle(E)


def test_lattice_points_match_double_loop():
    bodies = [K for _, K in gen_symmetric_polygons(2)][::7]
    bodies += [K for _, K in gen_random_symmetric_polytopes(3, 2, 15, 3)]
    bodies += [K for _, K in gen_ellipsoids(2, 15, 3, centered=False)]
    for K in bodies:
        total, interior = double_loop(K)
        assert list(lattice_points(K)) == total
        assert list(interior_lattice_points(K)) == interior


def test_counts_invariant_under_unimodular_maps():
    rng = SplitMix64(2024)
    bodies = [K for _, K in gen_random_symmetric_polytopes(3, 2, 8, 9)] + [slab_parallelepiped(3, 2)]
    for K in bodies:
        for _ in range(5):
            A = random_unimodular(3, rng)
            assert count(K.transformed(A)) == count(K)
    for _, E in gen_ellipsoids(2, 8, 9, centered=False):
        A = random_unimodular(2, rng)
        assert count(E.transformed(A)) == count(E)


def test_lambda1_at_least_one_iff_origin_only_interior():
    for _, K in gen_symmetric_polygons(2):
        only_origin = list(interior_lattice_points(K)) == [(0, 0)]
        assert (lambda1(K) >= 1) == only_origin
