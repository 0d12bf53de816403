"""Exact integer linear algebra on the lattice Z^n.

Points are plain tuples of ``int`` and matrices are tuples of row tuples.
Nothing in here touches floating point.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class DimensionError(ValueError):
    pass


def _check_modulus(m):
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")


def congruent(x, y, m):
    """True iff x - y lies in m * Z^n."""
    _check_modulus(m)
    if len(x) != len(y):
        raise DimensionError("points of different dimension")
    return all((a - b) % m == 0 for a, b in zip(x, y))


@dataclass(frozen=True, order=True)
class ResidueClass:
    modulus: int
    representative: tuple

    def __post_init__(self):
        _check_modulus(self.modulus)
        if any(not 0 <= r < self.modulus for r in self.representative):
            raise ValueError("representative not reduced")

    def __contains__(self, x):
        return congruent(x, self.representative, self.modulus)


def residue_class(x, m):
    _check_modulus(m)
    return ResidueClass(m, tuple(c % m for c in x))


def matrix(rows):
    """Normalize nested sequences into a tuple-of-tuples matrix."""
    rows = tuple(tuple(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionError("ragged matrix")
    return rows


def shape(A):
    return len(A), (len(A[0]) if A else 0)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A):
    return tuple(zip(*A))


def matmul(A, B):
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, x):
    return tuple(sum(a * c for a, c in zip(row, x)) for row in A)


def dot(x, y):
    return sum(a * b for a, b in zip(x, y))


def det(A):
    """Determinant by fraction-free Bareiss elimination.

    Works for integer and Fraction entries; integer input gives an ``int``.
    """
    n, m = shape(A)
    if n != m:
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                # exact division is guaranteed by Sylvester's identity
                M[i][j] = num // prev if isinstance(num, int) else num / prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rank(rows):
    """Rank of a list of vectors (integer or rational) by exact elimination."""
    M = [[Fraction(c) for c in r] for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def affine_dim(points):
    """Affine dimension of a nonempty finite point set."""
    points = list(points)
    if not points:
        raise ValueError("affine dimension of an empty set")
    u0 = points[0]
    return rank([tuple(a - b for a, b in zip(u, u0)) for u in points[1:]])


def is_collinear(points):
    points = list(points)
    if not points:
        raise ValueError("collinearity of an empty set")
    return affine_dim(points) <= 1


def is_unimodular(A):
    n, m = shape(A)
    if n != m:
        raise DimensionError("unimodularity of a non-square matrix")
    if not all(isinstance(c, int) or Fraction(c).denominator == 1 for row in A for c in row):
        return False
    return det(A) in (1, -1)


def inverse(A):
    """Exact inverse over Q; integral input with det +-1 stays integral."""
    n, m = shape(A)
    if n != m:
        raise DimensionError("inverse of a non-square matrix")
    M = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [a / p for a in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    out = tuple(tuple(M[i][n:]) for i in range(n))
    if all(x.denominator == 1 for row in out for x in row):
        out = tuple(tuple(int(x) for x in row) for row in out)
    return out


def unimodular_inverse(A):
    if not is_unimodular(A):
        raise ValueError("matrix is not unimodular")
    return inverse(A)


def primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        return tuple(v)
    return tuple(c // g for c in v)


def lcm_denominators(values):
    out = 1
    for v in values:
        d = Fraction(v).denominator
        out = out * d // gcd(out, d)
    return out


def cofactor_normal(rows):
    """Integer vector orthogonal to the n-1 given integer rows in Z^n.

    Generalized cross product: entry j is (-1)^j times the minor obtained by
    deleting column j.
    """
    n = len(rows) + 1
    out = []
    for j in range(n):
        minor = tuple(tuple(r[c] for c in range(n) if c != j) for r in rows)
        out.append((-1) ** j * det(minor))
    return tuple(out)


def smith_normal_form(A):
    """Return (S, U, V) with S = U*A*V diagonal and s1 | s2 | ...

    U and V are unimodular and are accumulated from the elementary row and
    column operations that were applied.
    """
    A = matrix(A)
    m, n = shape(A)
    S = [list(r) for r in A]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (S, V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, f):
        S[dst] = [a + f * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):
        for M in (S, V):
            for r in M:
                r[dst] += f * r[src]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    for t in range(min(m, n)):
        nonzero = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                q = S[i][t] // S[t][t]
                if q:
                    add_row(i, t, -q)
                if S[i][t]:
                    swap_rows(t, i)
                    done = False
            for j in range(t + 1, n):
                q = S[t][j] // S[t][t]
                if q:
                    add_col(j, t, -q)
                if S[t][j]:
                    swap_cols(t, j)
                    done = False
            if not done:
                continue
            # enforce divisibility of the remaining block by the pivot
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if S[t][t] < 0:
            negate_row(t)
    return matrix(S), matrix(U), matrix(V)
