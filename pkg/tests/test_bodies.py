from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from discmink.bodies import (
    BodyError,
    GaugeValue,
    RationalEllipsoid,
    SymmetricHPolytope,
    VPolytope,
    bounding_box,
    contains,
    contains_interior,
    crosspolytope,
    cube,
    ellipsoid,
    gauge,
    is_zero_symmetric,
    make_standard,
    slab_parallelepiped,
    unimodular_image,
    volume,
)
from discmink.lattice import DimensionError, rank

HALF = Fraction(1, 2)
sym_sets = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=2, max_size=4)


def symmetric_polygon(S):
    pts = list(S) + [(-x, -y) for x, y in S]
    return VPolytope(pts)


def test_gauge_value_ordering_and_text():
    assert GaugeValue(Fraction(1, 9)) == Fraction(1, 3)
    assert str(GaugeValue(Fraction(1, 9))) == "1/3"
    assert str(GaugeValue(HALF)) == "sqrt(1/2)"
    assert GaugeValue(2) < 2 and GaugeValue(2) > 1
    assert GaugeValue(8) <= 3 and not GaugeValue(8) <= 2
    assert GaugeValue(HALF).floor_ratio(2) == 2
    assert GaugeValue(HALF).ceil_ratio(2) == 3
    assert GaugeValue.from_rational(Fraction(1, 3)).floor_ratio(2) == 6
    assert GaugeValue.from_rational(Fraction(1, 3)).ceil_ratio(2) == 6
    with pytest.raises(ValueError):
        GaugeValue(-1)
    with pytest.raises(TypeError):
        GaugeValue(0.5)


@given(st.fractions(min_value=Fraction(1, 50), max_value=50), st.integers(1, 9))
def test_floor_ratio_brackets(r, c):
    g = GaugeValue(r)
    f = g.floor_ratio(c)
    # f <= c/sqrt(r) < f + 1, squared
    assert f * f * r <= c * c < (f + 1) ** 2 * r


def test_cube_membership():
    K = cube(2)
    assert contains(K, (1, 1)) and not contains_interior(K, (1, 1))
    assert contains_interior(K, (0, 0))
    assert contains(K, (HALF, -1)) and not contains(K, (2, 0))
    assert gauge(K, (1, 0)) == 1
    assert gauge(K, (3, -2)) == 3
    with pytest.raises(ValueError):
        gauge(K, (0, 0))
    with pytest.raises(DimensionError):
        contains(K, (1, 2, 3))


def test_ellipsoid_membership_and_gauge():
    E = ellipsoid([[HALF, 0], [0, HALF]])
    assert contains(E, (1, 1)) and not contains_interior(E, (1, 1))
    assert contains_interior(E, (1, 0))
    assert not contains(E, (2, 1))
    assert gauge(E, (1, 1)) == 1
    assert str(gauge(E, (1, 0))) == "sqrt(1/2)"
    assert E.is_strictly_convex and E.is_zero_symmetric
    off = ellipsoid([[1, 0], [0, 1]], [HALF, 0])
    assert not off.is_zero_symmetric
    with pytest.raises(BodyError):
        gauge(off, (1, 0))


def test_invalid_bodies():
    with pytest.raises(BodyError):
        VPolytope([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(BodyError):
        ellipsoid([[1, 2], [2, 1]])
    with pytest.raises(BodyError):
        ellipsoid([[1, 1], [0, 1]])
    with pytest.raises(BodyError):
        SymmetricHPolytope([((1, 0), 1)])
    with pytest.raises(BodyError):
        SymmetricHPolytope([((1, 0), 0), ((0, 1), 1)])
    with pytest.raises(BodyError):
        slab_parallelepiped(2, 0)
    with pytest.raises(TypeError):
        VPolytope([(0.5, 0), (0, 1), (-1, -1)])
    with pytest.raises(ValueError):
        unimodular_image([[2, 0], [0, 1]], cube(2))
    with pytest.raises(BodyError):
        make_standard("dodecahedron")


def test_hpolytope_matches_vpolytope():
    H = SymmetricHPolytope([((1, 0), 1), ((0, 1), 3)])
    assert set(H.vertices) == set(slab_parallelepiped(2, 3).vertices)
    assert H.to_vpolytope() == slab_parallelepiped(2, 3)
    assert bounding_box(H) == ((-1, -3), (1, 3))
    D = SymmetricHPolytope([((1, 1), 1), ((1, -1), 1)])
    assert D.to_vpolytope() == crosspolytope(2)
    assert volume(D) == 2
    assert gauge(D, (1, 1)) == 2


def test_volumes():
    assert volume(cube(3)) == 8
    assert volume(crosspolytope(3)) == Fraction(4, 3)
    assert volume(VPolytope([(1, 0), (-1, 0), (1, 2), (-1, -2)])) == 4
    with pytest.raises(BodyError):
        volume(ellipsoid([[1, 0], [0, 1]]))


def test_unimodular_image_of_cube():
    K = unimodular_image([[1, 0], [1, 1]], cube(2))
    assert set(K.vertices) == {(1, 2), (-1, -2), (1, 0), (-1, 0)}
    assert is_zero_symmetric(K)


def test_scaling():
    assert cube(2).scaled(2) == VPolytope(product((-2, 2), repeat=2))
    E = ellipsoid([[1, 0], [0, 1]]).scaled(2)
    assert E.Q == ((Fraction(1, 4), 0), (0, Fraction(1, 4)))


@settings(max_examples=60)
@given(sym_sets, st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_facet_gauge_matches_lp_gauge(S, x):
    assume(rank(S) == 2 and any(x))
    K = symmetric_polygon(S)
    assert K.fast_gauge(x) == K.gauge(x)
    assert K.contains(x) == (K.gauge(x) <= 1)
    assert K.contains_interior(x) == (K.gauge(x) < 1)


@settings(max_examples=60)
@given(sym_sets, st.sampled_from([((1, 0), (1, 1)), ((0, 1), (1, 0)), ((2, 1), (1, 1)), ((1, -2), (0, 1))]))
def test_hrep_vrep_transform_commute(S, A):
    assume(rank(S) == 2)
    K = symmetric_polygon(S)
    cons = [(c, d) for c, d in K.facets if c >= tuple(-v for v in c)]
    H = SymmetricHPolytope(cons)
    assert H.to_vpolytope() == K
    assert H.transformed(A).to_vpolytope() == K.transformed(A)


@given(st.integers(1, 3).flatmap(lambda d: st.tuples(
    st.integers(1, 3), st.integers(-2, 2), st.integers(1, 3), st.just(d))))
def test_ellipsoid_bounding_box_contains_body(params):
    a, b, c, d = params
    E = RationalEllipsoid([[Fraction(a * a, d), Fraction(a * b, d)],
                           [Fraction(a * b, d), Fraction(b * b + c * c, d)]])
    lo, hi = E.bounding_box()
    for p in product(range(-12, 13), repeat=2):
        if E.contains(p):
            assert all(l <= v <= h for l, v, h in zip(lo, p, hi))
