# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box-scan kernels (int64).

Callers must make sure no intermediate can overflow 64 bits; the dispatcher
in ``kernels.py`` checks magnitudes and routes large inputs to the Python
fallback.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef i64* _copy(seq, Py_ssize_t k) except NULL:
    cdef i64* buf = <i64*> malloc(max(k, 1) * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(k):
        buf[i] = seq[i]
    return buf


def scan_linear(A, ub_closed, ub_open, lo, hi):
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t i, j
    flat = [c for row in A for c in row]
    cdef i64* a = _copy(flat, m * n)
    cdef i64* uc = _copy(ub_closed, m)
    cdef i64* uo = _copy(ub_open, m)
    cdef i64* l = _copy(lo, n)
    cdef i64* h = _copy(hi, n)
    cdef i64* x = _copy(lo, n)
    cdef i64 s
    cdef bint inside, interior
    out = []
    try:
        for j in range(n):
            if l[j] > h[j]:
                return out
        while True:
            inside = True
            interior = True
            for i in range(m):
                s = 0
                for j in range(n):
                    s += a[i * n + j] * x[j]
                if s > uc[i]:
                    inside = False
                    break
                if s > uo[i]:
                    interior = False
            if inside:
                out.append((tuple([x[j] for j in range(n)]), interior))
            # odometer, last coordinate fastest
            j = n - 1
            while j >= 0:
                if x[j] < h[j]:
                    x[j] += 1
                    break
                x[j] = l[j]
                j -= 1
            if j < 0:
                break
        return out
    finally:
        free(a); free(uc); free(uo); free(l); free(h); free(x)


def scan_quadric(Q, shift, scale, rhs, lo, hi):
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t i, j
    flat = [c for row in Q for c in row]
    cdef i64* q = _copy(flat, n * n)
    cdef i64* sh = _copy(shift, n)
    cdef i64* l = _copy(lo, n)
    cdef i64* h = _copy(hi, n)
    cdef i64* x = _copy(lo, n)
    cdef i64* y = _copy(lo, n)
    cdef i64 sc = scale
    cdef i64 r = rhs
    cdef i64 f, s
    out = []
    try:
        for j in range(n):
            if l[j] > h[j]:
                return out
        while True:
            for i in range(n):
                y[i] = sc * x[i] - sh[i]
            f = 0
            for i in range(n):
                s = 0
                for j in range(n):
                    s += q[i * n + j] * y[j]
                f += y[i] * s
            if f <= r:
                out.append((tuple([x[j] for j in range(n)]), f < r))
            j = n - 1
            while j >= 0:
                if x[j] < h[j]:
                    x[j] += 1
                    break
                x[j] = l[j]
                j -= 1
            if j < 0:
                break
        return out
    finally:
        free(q); free(sh); free(l); free(h); free(x); free(y)
