"""Difference sets, sumsets and the extremal cases of the planar difference-set bound.

A set of ``k`` non-collinear points has at least ``3k - 3`` (k even) or
``3k - 2`` (k odd) distinct differences.  :func:`classify_extremal` decides
which extremal family a set belongs to by searching directly for an
arithmetic-progression descriptor, and :func:`brute_force_min_diffset` is the
exhaustive oracle the classifier is checked against.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import lp
from .counting import PointSet
from .lattice import affine_dim, is_collinear, rank

MAX_BRUTE_K = 9
MAX_BRUTE_RADIUS = 3


class ClassificationError(RuntimeError):
    """Equality is attained but no extremal family matches (or several do)."""

    def __init__(self, message, points=None):
        super().__init__(message)
        self.points = points


def _as_pointset(U):
    if isinstance(U, PointSet):
        return U
    U = list(U)
    if not U:
        raise ValueError("empty point set")
    return PointSet.of(U)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def difference_set(U):
    U = _as_pointset(U)
    if not len(U):
        raise ValueError("empty point set")
    return PointSet.of((_sub(a, b) for a in U for b in U), U.dim)


def sumset(U, V, check=True):
    """U + V; with ``check`` the bound |U+V| >= |U| + |V| - 1 is asserted."""
    U, V = _as_pointset(U), _as_pointset(V)
    if not len(U) or not len(V):
        raise ValueError("empty point set")
    if U.dim != V.dim:
        raise ValueError("dimension mismatch")
    S = PointSet.of((_add(a, b) for a in U for b in V), U.dim)
    if check:
        assert len(S) >= len(U) + len(V) - 1, "sumset lower bound violated"
    return S


def fhu_bound(U):
    """(d+1)|U| - C(d+1, 2) for a set of affine dimension d."""
    U = _as_pointset(U)
    d = affine_dim(U)
    return (d + 1) * len(U) - comb(d + 1, 2)


def planar_min_bound(k):
    if k < 3:
        raise ValueError("a non-collinear set has at least 3 points")
    return 3 * k - 3 if k % 2 == 0 else 3 * k - 2


@dataclass(frozen=True)
class APDescriptor:
    """{anchor + i*s + j*t : 0 <= i < k, 0 <= j < l}."""

    anchor: tuple
    s: tuple
    t: tuple
    k: int
    l: int

    def points(self):
        return PointSet.of(
            tuple(u + i * a + j * b for u, a, b in zip(self.anchor, self.s, self.t))
            for i in range(self.k) for j in range(self.l))

    def __str__(self):
        return f"AP(type=({self.k},{self.l}) u={self.anchor} s={self.s} t={self.t})"


def _unit_vectors(dim):
    return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]


def is_ap_of_type(U, k, l):
    """Canonical descriptor if U is an arithmetic progression of type (k, l), else None.

    Anchors range over U and the steps over differences from the anchor, so
    the search is exhaustive.  Among valid descriptors the least (u, t, s) is
    returned.
    """
    U = _as_pointset(U)
    if k < 1 or l < 1 or len(U) != k * l:
        return None
    pts = set(U)
    for u in U:
        diffs = sorted({_sub(v, u) for v in pts if v != u})
        s_cands = diffs if k >= 2 else _unit_vectors(U.dim)
        t_cands = diffs if l >= 2 else _unit_vectors(U.dim)
        best = None
        for t in t_cands:
            for s in s_cands:
                if best is not None and (t, s) >= best:
                    break
                if rank([s, t]) < 2:
                    continue
                if all(tuple(c + i * a + j * b for c, a, b in zip(u, s, t)) in pts
                       for i in range(k) for j in range(l)):
                    best = (t, s)
        if best is not None:
            return APDescriptor(u, best[1], best[0], k, l)
    return None


def _step_norm(desc):
    return sum(c * c for c in desc.s) + sum(c * c for c in desc.t)


def is_incomplete_ap(U, k, l):
    """``(descriptor, missing)`` if U plus one hull vertex is an AP of type (k, l).

    The missing point of such a set is a corner of the completed grid, so it
    is a parallelogram completion a + b - c of points of U.  When several
    completions exist the one with the shortest steps wins.
    """
    U = _as_pointset(U)
    if len(U) != k * l - 1 or len(U) < 1 or is_collinear(U):
        return None
    pts = set(U)
    cands = {tuple(x + y - z for x, y, z in zip(a, b, c)) for a in U for b in U for c in U}
    cands.difference_update(pts)
    found = []
    for x in sorted(cands):
        desc = is_ap_of_type(PointSet.of(list(U) + [x], U.dim), k, l)
        if desc is None:
            continue
        if lp.in_convex_hull(x, list(U)):
            continue
        found.append((_step_norm(desc), desc.anchor, desc.t, desc.s, x, desc))
    if not found:
        return None
    best = min(found, key=lambda f: f[:5])
    return best[5], best[4]


# verdicts ------------------------------------------------------------------

@dataclass(frozen=True)
class CollinearInput:
    kind = "CollinearInput"

    def __str__(self):
        return "CollinearInput"


@dataclass(frozen=True)
class ExactAP:
    desc: APDescriptor
    kind = "ExactAP"

    def __str__(self):
        return f"ExactAP({self.desc.k},{self.desc.l})"


@dataclass(frozen=True)
class IncompleteAP:
    desc: APDescriptor
    missing: tuple
    kind = "IncompleteAP"

    def __str__(self):
        return f"IncompleteAP({self.desc.k},{self.desc.l})"


@dataclass(frozen=True)
class GridThreeByThree:
    desc: APDescriptor
    kind = "GridThreeByThree"

    def __str__(self):
        return "GridThreeByThree"


@dataclass(frozen=True)
class NotExtremal:
    excess: int
    kind = "NotExtremal"

    def __str__(self):
        return f"NotExtremal({self.excess})"


EQUALITY_KINDS = frozenset({"ExactAP", "IncompleteAP", "GridThreeByThree"})


def classify_extremal(U):
    U = _as_pointset(U)
    k = len(U)
    if k < 3:
        raise ValueError("classification needs at least 3 points")
    if is_collinear(U):
        return CollinearInput()
    size = len(difference_set(U))
    bound = planar_min_bound(k)
    if size < bound:
        raise ClassificationError(f"|U-U| = {size} is below the bound {bound}", U)
    if size > bound:
        return NotExtremal(size - bound)
    matches = []
    if k % 2 == 0:
        desc = is_ap_of_type(U, k // 2, 2)
        if desc is not None:
            matches.append(ExactAP(desc))
    else:
        found = is_incomplete_ap(U, (k + 1) // 2, 2)
        if found is not None:
            matches.append(IncompleteAP(*found))
        if k == 9:
            desc = is_ap_of_type(U, 3, 3)
            if desc is not None:
                matches.append(GridThreeByThree(desc))
    if len(matches) != 1:
        raise ClassificationError(
            f"|U-U| = {size} attains the bound but {len(matches)} extremal families match", U)
    return matches[0]


def _collinear_2d(U):
    (x0, y0), (x1, y1) = U[0], U[1]
    dx, dy = x1 - x0, y1 - y0
    return all(dx * (y - y0) - dy * (x - x0) == 0 for x, y in U[2:])


def brute_force_min_diffset(k, grid_radius):
    """Minimum |U-U| over non-collinear k-subsets of [0, grid_radius]^2.

    Returns ``(minimum, minimizers)`` with minimizers translated so that their
    lexicographically least point is the origin, deduplicated and sorted.
    """
    if not 3 <= k <= MAX_BRUTE_K or not 1 <= grid_radius <= MAX_BRUTE_RADIUS:
        raise ValueError(f"search guard: need 3 <= k <= {MAX_BRUTE_K} "
                         f"and 1 <= grid_radius <= {MAX_BRUTE_RADIUS}")
    grid = [(x, y) for x in range(grid_radius + 1) for y in range(grid_radius + 1)]
    if k > len(grid):
        raise ValueError("more points requested than the grid holds")
    best = None
    minimizers = set()
    for U in combinations(grid, k):
        if _collinear_2d(U):
            continue
        ox, oy = U[0]
        V = tuple((x - ox, y - oy) for x, y in U)
        size = len({(a[0] - b[0], a[1] - b[1]) for a in V for b in V})
        if best is None or size < best:
            best = size
            minimizers = {V}
        elif size == best:
            minimizers.add(V)
    return best, [PointSet.of(V, 2) for V in sorted(minimizers)]


__all__ = [
    "APDescriptor", "ClassificationError", "CollinearInput", "EQUALITY_KINDS", "ExactAP",
    "GridThreeByThree", "IncompleteAP", "NotExtremal", "brute_force_min_diffset",
    "classify_extremal", "difference_set", "fhu_bound", "is_ap_of_type", "is_incomplete_ap",
    "planar_min_bound", "sumset",
]
