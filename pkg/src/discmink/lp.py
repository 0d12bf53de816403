"""Small exact linear programming solver over the rationals.

Two-phase tableau simplex with Bland's rule, so it cannot cycle.  Problems
are given in standard form::

    minimize c.x  subject to  A x = b,  x >= 0

The sizes met here are tiny (a few dozen variables), which is the only
regime this is meant for.
"""

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction = None
    x: tuple = None


def _pivot(T, basis, r, c):
    p = T[r][c]
    T[r] = [a / p for a in T[r]]
    for i, row in enumerate(T):
        if i != r and row[c]:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, T[r])]
    basis[r] = c


def _run(T, basis, ncols):
    """Minimize the objective stored in the last row of T.

    The last row holds reduced costs; last column the right-hand side.
    """
    obj = T[-1]
    while True:
        obj = T[-1]
        c = next((j for j in range(ncols) if obj[j] < 0), None)
        if c is None:
            return OPTIMAL
        best = None
        for i in range(len(T) - 1):
            a = T[i][c]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, basis, best[1], c)


def solve(c, A, b):
    """Solve ``min c.x  s.t.  A x = b, x >= 0`` exactly."""
    m = len(A)
    n = len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]

    # phase one: artificial variables n .. n+m-1
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = list(range(n, n + m))
    phase1 = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        phase1 = [p - t for p, t in zip(phase1, T[i])]
    for j in range(n, n + m):
        phase1[j] = Fraction(0)
    T.append(phase1)
    _run(T, basis, n + m)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE)

    # drive remaining artificials out of the basis
    for i in range(m):
        if basis[i] >= n:
            c_in = next((j for j in range(n) if T[i][j] != 0), None)
            if c_in is not None:
                _pivot(T, basis, i, c_in)
    keep = [i for i in range(m) if basis[i] < n]
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    cost = [Fraction(v) for v in c] + [Fraction(0)]
    for i, bj in enumerate(basis):
        if cost[bj]:
            f = cost[bj]
            cost = [a - f * t for a, t in zip(cost, T[i])]
    T.append(cost)
    status = _run(T, basis, n)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for i, bj in enumerate(basis):
        x[bj] = T[i][-1]
    return LPResult(OPTIMAL, -T[-1][-1], tuple(x))


def in_convex_hull(point, points):
    """Exact test whether ``point`` is a convex combination of ``points``."""
    if not points:
        return False
    n = len(point)
    A = [[p[j] for p in points] for j in range(n)] + [[1] * len(points)]
    b = list(point) + [1]
    return solve([0] * len(points), A, b).status == OPTIMAL


def interior_slack(point, points):
    """Largest t with point = sum(l_i p_i), sum(l_i) = 1 and every l_i >= t.

    Returns None when the point is outside the hull.  For a full-dimensional
    hull a positive value means the point is interior.
    """
    N = len(points)
    n = len(point)
    # l_i = mu_i + t with mu_i, t >= 0
    A = [[p[j] for p in points] + [sum(p[j] for p in points)] for j in range(n)]
    A.append([1] * N + [N])
    b = list(point) + [1]
    c = [0] * N + [-1]
    res = solve(c, A, b)
    if res.status == INFEASIBLE:
        return None
    return -res.value


def cone_gauge(point, generators):
    """min sum(mu_i) subject to sum(mu_i g_i) = point, mu >= 0."""
    n = len(point)
    A = [[g[j] for g in generators] for j in range(n)]
    res = solve([1] * len(generators), A, list(point))
    if res.status != OPTIMAL:
        return None
    return res.value
