"""Pure-Python box-scan kernels.

Same contract as the compiled ``_ckernels`` module.  Both return a list of
``(point, interior)`` pairs in lexicographic order of ``point``.
"""

from itertools import product


def scan_linear(A, ub_closed, ub_open, lo, hi):
    """Lattice points x of the box with A x <= ub_closed.

    ``interior`` is set when additionally A x <= ub_open holds.
    """
    rows = list(zip(A, ub_closed, ub_open))
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        interior = True
        for a, uc, uo in rows:
            s = 0
            for ai, xi in zip(a, x):
                s += ai * xi
            if s > uc:
                break
            if s > uo:
                interior = False
        else:
            out.append((x, interior))
    return out


def scan_quadric(Q, shift, scale, rhs, lo, hi):
    """Lattice points x of the box with y^T Q y <= rhs, y = scale*x - shift.

    ``interior`` marks the strict inequality.
    """
    n = len(lo)
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        y = [scale * x[i] - shift[i] for i in range(n)]
        f = 0
        for i in range(n):
            row = Q[i]
            s = 0
            for j in range(n):
                s += row[j] * y[j]
            f += y[i] * s
        if f <= rhs:
            out.append((x, f < rhs))
    return out
