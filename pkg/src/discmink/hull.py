"""Exact convex hull helpers for small dimensions (n <= 4).

Facets are found by brute force over n-subsets of the input points, which is
fine for the few dozen points a desk-scale body has.  Everything is exact:
normals are primitive integer vectors and right-hand sides are Fractions.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .lattice import affine_dim, cofactor_normal, det, dot, lcm_denominators, primitive, rank


def _integer_rows(rows):
    out = []
    for r in rows:
        s = lcm_denominators(r)
        out.append(tuple(int(Fraction(c) * s) for c in r))
    return out


def facets(points):
    """Facets of conv(points) as a list of ``(normal, rhs, incident)``.

    ``normal . x <= rhs`` holds on the hull with equality exactly on the
    points indexed by the frozenset ``incident``.  The hull must be
    full-dimensional.
    """
    points = [tuple(p) for p in points]
    n = len(points[0])
    found = {}
    for combo in combinations(range(len(points)), n):
        base = points[combo[0]]
        rows = _integer_rows([tuple(a - b for a, b in zip(points[i], base)) for i in combo[1:]])
        normal = primitive(cofactor_normal(rows))
        if not any(normal):
            continue
        rhs = dot(normal, base)
        sign = 0
        for p in points:
            s = dot(normal, p) - rhs
            if s == 0:
                continue
            if sign == 0:
                sign = 1 if s > 0 else -1
            elif (s > 0) != (sign > 0):
                break
        else:
            if sign > 0:
                normal = tuple(-c for c in normal)
                rhs = -rhs
            key = (normal, Fraction(rhs))
            if key not in found:
                found[key] = frozenset(i for i, p in enumerate(points) if dot(normal, p) == rhs)
    return [(k[0], k[1], v) for k, v in sorted(found.items())]


def extreme_points(points):
    """Indices of the vertices of conv(points), for full-dimensional input."""
    points = [tuple(p) for p in points]
    n = len(points[0])
    if n == 2:
        hull = convex_hull_2d(points)
        index = {p: i for i, p in enumerate(points)}
        return sorted(index[p] for p in hull)
    facs = facets(points)
    out = []
    for i in range(len(points)):
        normals = [f[0] for f in facs if i in f[2]]
        if len(normals) >= n and rank(normals) == n:
            out.append(i)
    return out


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points):
    """Counter-clockwise hull vertices (Andrew's monotone chain), no collinear points."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def triangulate(vertices):
    """Pulling triangulation of a full-dimensional polytope given by its vertices.

    Returns a list of simplices, each a tuple of n+1 vertex indices.  Every
    face is coned from its lexicographically smallest vertex over the facets
    of that face not containing it.
    """
    vertices = [tuple(v) for v in vertices]
    n = len(vertices[0])
    facet_sets = [f[2] for f in facets(vertices)]

    @lru_cache(maxsize=None)
    def rec(face, d):
        if d == 0:
            return ((min(face),),)
        apex = min(face, key=lambda i: vertices[i])
        subfaces = set()
        for G in facet_sets:
            sub = face & G
            if sub and sub != face and affine_dim([vertices[i] for i in sub]) == d - 1:
                subfaces.add(sub)
        out = []
        for sub in sorted(subfaces, key=sorted):
            if apex in sub:
                continue
            for simplex in rec(sub, d - 1):
                out.append(simplex + (apex,))
        return tuple(out)

    return list(rec(frozenset(range(len(vertices))), n))


def simplex_volume_times_factorial(simplex):
    v0 = simplex[0]
    return abs(det([tuple(Fraction(a) - b for a, b in zip(v, v0)) for v in simplex[1:]]))


def polytope_volume(vertices):
    """Exact Lebesgue volume of conv(vertices)."""
    vertices = [tuple(v) for v in vertices]
    n = len(vertices[0])
    total = sum(simplex_volume_times_factorial([vertices[i] for i in s])
                for s in triangulate(vertices))
    return Fraction(total) / factorial(n)
