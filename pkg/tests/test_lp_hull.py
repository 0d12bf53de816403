from fractions import Fraction
from itertools import product
from math import factorial

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from discmink import lp
from discmink.hull import convex_hull_2d, extreme_points, facets, polytope_volume, triangulate
from discmink.lattice import dot, matvec, rank

points2 = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=9)
points3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=4, max_size=9)


def shoelace(poly):
    s = 0
    for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]):
        s += x0 * y1 - x1 * y0
    return Fraction(abs(s), 2)


def test_solve_small_lp():
    # min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
    res = lp.solve([-1, -1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
    assert res.status == lp.OPTIMAL
    assert res.value == Fraction(-14, 5)
    assert res.x[:2] == (Fraction(8, 5), Fraction(6, 5))


def test_solve_infeasible_and_unbounded():
    assert lp.solve([0, 0], [[1, 1]], [-1]).status == lp.INFEASIBLE
    assert lp.solve([-1, 0], [[1, -1]], [0]).status == lp.UNBOUNDED


def test_solve_degenerate_redundant_rows():
    res = lp.solve([1, 1], [[1, 1], [2, 2]], [2, 4])
    assert res.status == lp.OPTIMAL and res.value == 2


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3),
       st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_solve_matches_vertex_enumeration(rows, cost):
    # max over the box-like polytope {x >= 0, a.x <= 6} equals the best basic solution
    A = [list(r) + [int(i == j) for j in range(len(rows))] for i, r in enumerate(rows)]
    c = list(cost) + [0] * len(rows)
    res = lp.solve(c, A, [6] * len(rows))
    grid = [(Fraction(x, 6), Fraction(y, 6)) for x in range(0, 37) for y in range(0, 37)]
    feasible = [p for p in grid if all(dot(r, p) <= 6 for r in rows)]
    if res.status == lp.UNBOUNDED:
        assert any(all(r[j] == 0 for r in rows) and cost[j] < 0 for j in range(2))
        return
    assert res.status == lp.OPTIMAL
    assert res.value <= min(dot(cost, p) for p in feasible)
    assert all(dot(r, res.x[:2]) <= 6 for r in rows) and min(res.x) >= 0


@settings(max_examples=60)
@given(points3, st.tuples(*[st.integers(-4, 4)] * 3))
def test_hull_membership_lp_vs_facets(pts, q):
    assume(rank([tuple(a - b for a, b in zip(p, pts[0])) for p in pts]) == 3)
    inside = all(dot(a, q) <= b for a, b, _ in facets(pts))
    assert lp.in_convex_hull(q, pts) == inside
    slack = lp.interior_slack(q, pts)
    strict = all(dot(a, q) < b for a, b, _ in facets(pts))
    assert (slack is not None) == inside
    if inside:
        assert (slack > 0) == strict


@given(points2)
def test_monotone_chain_matches_facets(pts):
    assume(rank([(p[0] - pts[0][0], p[1] - pts[0][1]) for p in pts]) == 2)
    hull = convex_hull_2d(pts)
    uniq = sorted(set(pts))
    verts = {uniq[i] for i in extreme_points(uniq)}
    assert set(hull) == verts
    # every hull vertex lies on exactly two facets
    facs = facets(uniq)
    for v in hull:
        assert sum(1 for a, b, _ in facs if dot(a, v) == b) == 2


@given(points2)
def test_volume_matches_shoelace(pts):
    assume(rank([(p[0] - pts[0][0], p[1] - pts[0][1]) for p in pts]) == 2)
    hull = convex_hull_2d(pts)
    assert polytope_volume(hull) == shoelace(hull)


def test_standard_volumes():
    for n in (1, 2, 3, 4):
        cube = list(product((-1, 1), repeat=n))
        assert polytope_volume(cube) == 2 ** n
        cross = [tuple(s * int(i == j) for j in range(n)) for i in range(n) for s in (1, -1)]
        assert polytope_volume(cross) == Fraction(2 ** n, factorial(n))


@settings(max_examples=40)
@given(points3)
def test_triangulation_volume_is_unimodular_invariant(pts):
    assume(rank([tuple(a - b for a, b in zip(p, pts[0])) for p in pts]) == 3)
    verts = [p for i, p in enumerate(sorted(set(pts))) if i in extreme_points(sorted(set(pts)))]
    simplices = triangulate(verts)
    assert all(len(set(s)) == 4 for s in simplices)
    A = ((1, 1, 0), (0, 1, 2), (0, 0, 1))
    assert polytope_volume(verts) == polytope_volume([matvec(A, v) for v in verts])
