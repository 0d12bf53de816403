"""Exact convex bodies: symmetric H-polytopes, V-polytopes and rational ellipsoids.

All three share the :class:`Body` interface (membership, interior membership,
gauge, bounding box, scaling, unimodular images).  Coordinates are ints or
Fractions; floats are rejected.
"""

from fractions import Fraction
from functools import cached_property, total_ordering
from itertools import combinations, product
from math import ceil, floor, isqrt

from . import hull, kernels, lp
from .lattice import (
    DimensionError,
    det,
    dot,
    inverse,
    is_unimodular,
    lcm_denominators,
    matmul,
    matrix,
    matvec,
    rank,
    transpose,
)

MAX_VOLUME_DIM = 4


class BodyError(ValueError):
    pass


def as_rational(v):
    if isinstance(v, float):
        raise TypeError("floating point input is not accepted; use Fraction or a 'p/q' string")
    return Fraction(v)


def rational_vector(x):
    return tuple(as_rational(c) for c in x)


def _exact(v):
    """Collapse integral Fractions to int so tuples compare and hash cleanly."""
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def _is_square(k):
    return k >= 0 and isqrt(k) ** 2 == k


@total_ordering
class GaugeValue:
    """A nonnegative real sqrt(radicand) with rational radicand.

    All comparisons are done on radicands, so no floating point is involved.
    Rational values q are stored as q**2.
    """

    __slots__ = ("radicand",)

    def __init__(self, radicand):
        r = as_rational(radicand)
        if r < 0:
            raise ValueError("negative radicand")
        self.radicand = r

    @classmethod
    def from_rational(cls, q):
        q = as_rational(q)
        if q < 0:
            raise ValueError("gauge values are nonnegative")
        return cls(q * q)

    def _other_radicand(self, other):
        if isinstance(other, GaugeValue):
            return other.radicand
        q = as_rational(other)
        if q < 0:
            return None
        return q * q

    def __eq__(self, other):
        if not isinstance(other, (GaugeValue, int, Fraction)):
            return NotImplemented
        r = self._other_radicand(other)
        return r is not None and self.radicand == r

    def __lt__(self, other):
        if not isinstance(other, (GaugeValue, int, Fraction)):
            return NotImplemented
        r = self._other_radicand(other)
        return r is not None and self.radicand < r

    def __gt__(self, other):
        if not isinstance(other, (GaugeValue, int, Fraction)):
            return NotImplemented
        r = self._other_radicand(other)
        return r is None or self.radicand > r

    def __hash__(self):
        return hash(("gauge", self.radicand))

    @property
    def is_rational(self):
        return _is_square(self.radicand.numerator) and _is_square(self.radicand.denominator)

    def as_fraction(self):
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(isqrt(self.radicand.numerator), isqrt(self.radicand.denominator))

    def floor_ratio(self, c):
        """floor(c / value) for rational c > 0, by integer square-root bracketing."""
        c = as_rational(c)
        if self.radicand == 0:
            raise ZeroDivisionError("ratio by a zero gauge")
        return isqrt(floor(c * c / self.radicand))

    def ceil_ratio(self, c):
        c = as_rational(c)
        f = self.floor_ratio(c)
        return f if f * f * self.radicand == c * c else f + 1

    def ratio_string(self, c):
        """Exact text for c / value."""
        return str(GaugeValue(as_rational(c) ** 2 / self.radicand))

    def __str__(self):
        if self.is_rational:
            return str(self.as_fraction())
        return f"sqrt({self.radicand})"

    def __repr__(self):
        return f"GaugeValue({str(self)!r})"


class Body:
    """Common interface of the exact body representations."""

    kind = None
    dim = 0

    def contains(self, x):
        raise NotImplementedError

    def contains_interior(self, x):
        raise NotImplementedError

    def gauge(self, x):
        raise NotImplementedError

    def bounding_box(self):
        raise NotImplementedError

    def scaled(self, t):
        raise NotImplementedError

    def transformed(self, A):
        raise NotImplementedError

    def lattice_scan(self, box=None, backend=None):
        """List of ``(point, interior)`` for all lattice points of the body."""
        raise NotImplementedError

    def fast_gauge(self, x):
        """Gauge used by the enumeration code; agrees with :meth:`gauge`."""
        return self.gauge(x)

    @property
    def is_zero_symmetric(self):
        raise NotImplementedError

    @property
    def is_strictly_convex(self):
        return False

    def _check_point(self, x):
        if len(x) != self.dim:
            raise DimensionError(f"point of dimension {len(x)} for a body of dimension {self.dim}")
        return rational_vector(x)

    def _check_gauge_point(self, x):
        x = self._check_point(x)
        if not any(x):
            raise ValueError("gauge of the origin is undefined here")
        if not self.is_zero_symmetric:
            raise BodyError("gauge requires a 0-symmetric body")
        return x

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))


class SymmetricHPolytope(Body):
    """{x : |a.x| <= b for every constraint (a, b)} with integer a and rational b > 0."""

    kind = "hpolytope"

    def __init__(self, constraints):
        cons = []
        for a, b in constraints:
            a = tuple(int(c) for c in a)
            b = as_rational(b)
            if not any(a):
                raise BodyError("zero constraint normal")
            if b <= 0:
                raise BodyError("constraint bound must be positive")
            cons.append((a, _exact(b)))
        if not cons:
            raise BodyError("no constraints")
        dims = {len(a) for a, _ in cons}
        if len(dims) != 1:
            raise DimensionError("constraints of different dimension")
        self.dim = dims.pop()
        if rank([a for a, _ in cons]) < self.dim:
            raise BodyError("constraint system is unbounded")
        self.constraints = tuple(sorted(set(cons)))

    def _key(self):
        return self.constraints

    @property
    def is_zero_symmetric(self):
        return True

    def halfspaces(self):
        for a, b in self.constraints:
            yield a, b
            yield tuple(-c for c in a), b

    def contains(self, x):
        x = self._check_point(x)
        return all(abs(dot(a, x)) <= b for a, b in self.constraints)

    def contains_interior(self, x):
        x = self._check_point(x)
        return all(abs(dot(a, x)) < b for a, b in self.constraints)

    def gauge(self, x):
        x = self._check_gauge_point(x)
        return GaugeValue.from_rational(max(abs(dot(a, x)) / Fraction(b) for a, b in self.constraints))

    @cached_property
    def vertices(self):
        """Vertex enumeration over n-subsets of the 2m halfspaces."""
        hs = list(self.halfspaces())
        found = set()
        for combo in combinations(hs, self.dim):
            M = [a for a, _ in combo]
            if det(M) == 0:
                continue
            x = matvec(inverse(M), [b for _, b in combo])
            if all(dot(a, x) <= b for a, b in hs):
                found.add(tuple(_exact(c) for c in x))
        return tuple(sorted(found))

    def bounding_box(self):
        vs = self.vertices
        lo = tuple(floor(min(v[i] for v in vs)) for i in range(self.dim))
        hi = tuple(ceil(max(v[i] for v in vs)) for i in range(self.dim))
        return lo, hi

    def scaled(self, t):
        t = as_rational(t)
        if t <= 0:
            raise ValueError("scale factor must be positive")
        return SymmetricHPolytope((a, b * t) for a, b in self.constraints)

    def transformed(self, A):
        A = _check_unimodular(A, self.dim)
        Ainv_t = transpose(inverse(A))
        return SymmetricHPolytope((matvec(Ainv_t, a), b) for a, b in self.constraints)

    def lattice_scan(self, box=None, backend=None):
        lo, hi = box or self.bounding_box()
        rows, closed, open_ = [], [], []
        for a, b in self.halfspaces():
            rows.append(a)
            closed.append(floor(b))
            open_.append(ceil(b) - 1)
        return kernels.scan_linear(rows, closed, open_, lo, hi, backend=backend)

    def to_vpolytope(self):
        return VPolytope(self.vertices)

    def __repr__(self):
        return f"SymmetricHPolytope({self.constraints!r})"


class VPolytope(Body):
    """Convex hull of finitely many rational points (irredundant, sorted)."""

    kind = "vpolytope"

    def __init__(self, points):
        pts = sorted({tuple(_exact(as_rational(c)) for c in p) for p in points})
        if not pts:
            raise BodyError("empty vertex list")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise DimensionError("vertices of different dimension")
        self.dim = dims.pop()
        if len(pts) < self.dim + 1 or rank([tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]) < self.dim:
            raise BodyError("polytope is not full-dimensional")
        keep = hull.extreme_points(pts)
        self.vertices = tuple(pts[i] for i in keep)

    def _key(self):
        return self.vertices

    @cached_property
    def facets(self):
        return [(c, d) for c, d, _ in hull.facets(self.vertices)]

    @cached_property
    def is_zero_symmetric(self):
        vs = set(self.vertices)
        return all(tuple(-c for c in v) in vs for v in vs)

    @property
    def is_lattice_polytope(self):
        return all(isinstance(c, int) for v in self.vertices for c in v)

    def contains(self, x):
        x = self._check_point(x)
        return lp.in_convex_hull(x, self.vertices)

    def contains_interior(self, x):
        x = self._check_point(x)
        slack = lp.interior_slack(x, self.vertices)
        return slack is not None and slack > 0

    def gauge(self, x):
        x = self._check_gauge_point(x)
        return GaugeValue.from_rational(lp.cone_gauge(x, self.vertices))

    def fast_gauge(self, x):
        x = self._check_gauge_point(x)
        return GaugeValue.from_rational(max(dot(c, x) / d for c, d in self.facets))

    def bounding_box(self):
        vs = self.vertices
        lo = tuple(floor(min(v[i] for v in vs)) for i in range(self.dim))
        hi = tuple(ceil(max(v[i] for v in vs)) for i in range(self.dim))
        return lo, hi

    def scaled(self, t):
        t = as_rational(t)
        if t <= 0:
            raise ValueError("scale factor must be positive")
        return VPolytope(tuple(c * t for c in v) for v in self.vertices)

    def transformed(self, A):
        A = _check_unimodular(A, self.dim)
        return VPolytope(matvec(A, v) for v in self.vertices)

    def lattice_scan(self, box=None, backend=None):
        lo, hi = box or self.bounding_box()
        rows, closed, open_ = [], [], []
        for c, d in self.facets:
            rows.append(c)
            closed.append(floor(d))
            open_.append(ceil(d) - 1)
        return kernels.scan_linear(rows, closed, open_, lo, hi, backend=backend)

    def volume(self):
        if self.dim > MAX_VOLUME_DIM:
            raise BodyError(f"volume only supported up to dimension {MAX_VOLUME_DIM}")
        return hull.polytope_volume(self.vertices)

    def __repr__(self):
        return f"VPolytope({self.vertices!r})"


class RationalEllipsoid(Body):
    """{x : (x-c)^T Q (x-c) <= 1} with Q rational symmetric positive definite."""

    kind = "ellipsoid"

    def __init__(self, Q, center=None):
        Q = matrix(tuple(_exact(as_rational(c)) for c in row) for row in Q)
        n = len(Q)
        if any(len(r) != n for r in Q):
            raise DimensionError("Q must be square")
        if any(Q[i][j] != Q[j][i] for i in range(n) for j in range(n)):
            raise BodyError("Q must be symmetric")
        for k in range(1, n + 1):
            if det([r[:k] for r in Q[:k]]) <= 0:
                raise BodyError("Q is not positive definite")
        center = (0,) * n if center is None else center
        if len(center) != n:
            raise DimensionError("center dimension does not match Q")
        self.dim = n
        self.Q = Q
        self.center = tuple(_exact(as_rational(c)) for c in center)

    def _key(self):
        return (self.Q, self.center)

    @property
    def is_zero_symmetric(self):
        return not any(self.center)

    @property
    def is_strictly_convex(self):
        return True

    def form(self, x):
        y = [a - c for a, c in zip(x, self.center)]
        return sum(y[i] * self.Q[i][j] * y[j] for i in range(self.dim) for j in range(self.dim))

    def contains(self, x):
        return self.form(self._check_point(x)) <= 1

    def contains_interior(self, x):
        return self.form(self._check_point(x)) < 1

    def gauge(self, x):
        x = self._check_gauge_point(x)
        return GaugeValue(self.form(x))

    def bounding_box(self):
        Qinv = inverse(self.Q)
        lo, hi = [], []
        for i in range(self.dim):
            r = Fraction(Qinv[i][i])
            # smallest integer s with s >= sqrt(r)
            s = isqrt(ceil(r))
            if s * s < r:
                s += 1
            lo.append(floor(self.center[i]) - s)
            hi.append(ceil(self.center[i]) + s)
        return tuple(lo), tuple(hi)

    def scaled(self, t):
        t = as_rational(t)
        if t <= 0:
            raise ValueError("scale factor must be positive")
        return RationalEllipsoid([[c / (t * t) for c in row] for row in self.Q],
                                 [c * t for c in self.center])

    def transformed(self, A):
        A = _check_unimodular(A, self.dim)
        Ainv = inverse(A)
        Q = matmul(matmul(transpose(Ainv), self.Q), Ainv)
        return RationalEllipsoid(Q, matvec(A, self.center))

    def lattice_scan(self, box=None, backend=None):
        lo, hi = box or self.bounding_box()
        D = lcm_denominators(self.center)
        qd = lcm_denominators(c for row in self.Q for c in row)
        Qn = [[int(c * qd) for c in row] for row in self.Q]
        shift = [int(c * D) for c in self.center]
        return kernels.scan_quadric(Qn, shift, D, qd * D * D, lo, hi, backend=backend)

    def __repr__(self):
        return f"RationalEllipsoid({self.Q!r}, {self.center!r})"


def _check_unimodular(A, n):
    A = matrix(A)
    if len(A) != n or any(len(r) != n for r in A):
        raise DimensionError("transformation has the wrong shape")
    if not all(isinstance(c, int) for r in A for c in r) or not is_unimodular(A):
        raise BodyError("transformation is not unimodular")
    return A


# module-level API ---------------------------------------------------------

def contains(K, x):
    return K.contains(x)


def contains_interior(K, x):
    return K.contains_interior(x)


def is_zero_symmetric(K):
    return K.is_zero_symmetric


def gauge(K, x):
    return K.gauge(x)


def bounding_box(K):
    return K.bounding_box()


def volume(K):
    if isinstance(K, RationalEllipsoid):
        raise BodyError("ellipsoid volume is irrational and not supported")
    if isinstance(K, SymmetricHPolytope):
        K = K.to_vpolytope()
    return K.volume()


def polytope_vertices(K):
    if isinstance(K, SymmetricHPolytope):
        return K.vertices
    if isinstance(K, VPolytope):
        return K.vertices
    raise BodyError("body is not a polytope")


def cube(n):
    return VPolytope(product((-1, 1), repeat=n))


def slab_parallelepiped(n, ell):
    """C_{n-1} x [-ell, ell]."""
    if ell < 1:
        raise BodyError("slab half-length must be >= 1")
    return VPolytope(s[:-1] + (s[-1] * ell,) for s in product((-1, 1), repeat=n))


def crosspolytope(n):
    pts = []
    for i in range(n):
        for s in (1, -1):
            pts.append(tuple(s if j == i else 0 for j in range(n)))
    return VPolytope(pts)


def ellipsoid(Q, center=None):
    return RationalEllipsoid(Q, center)


def unimodular_image(A, K):
    return K.transformed(A)


def scaled(K, t):
    return K.scaled(t)


def make_standard(kind, *args):
    makers = {
        "cube": cube,
        "slab_parallelepiped": slab_parallelepiped,
        "crosspolytope": crosspolytope,
        "ellipsoid": ellipsoid,
        "unimodular_image": unimodular_image,
    }
    try:
        return makers[kind](*args)
    except KeyError:
        raise BodyError(f"unknown standard body {kind!r}") from None


__all__ = [
    "Body", "BodyError", "GaugeValue", "RationalEllipsoid", "SymmetricHPolytope", "VPolytope",
    "bounding_box", "contains", "contains_interior", "crosspolytope", "cube", "ellipsoid",
    "gauge", "is_zero_symmetric", "make_standard", "polytope_vertices", "scaled",
    "slab_parallelepiped", "unimodular_image", "volume",
]
