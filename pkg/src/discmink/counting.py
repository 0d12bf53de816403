"""Lattice point enumeration and successive minima.

Enumeration scans the integer bounding box of a body and filters by exact
membership; the inner loop lives in :mod:`discmink.kernels`.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .bodies import BodyError, GaugeValue
from .lattice import rank

DEFAULT_SCALE_CAP = 64


class MinimaError(RuntimeError):
    pass


@dataclass(frozen=True)
class PointSet:
    """Finite set of lattice points kept in lexicographic order."""

    points: tuple
    dim: int

    @classmethod
    def of(cls, points, dim=None):
        pts = tuple(sorted({tuple(int(c) for c in p) for p in points}))
        dims = {len(p) for p in pts}
        if len(dims) > 1:
            raise ValueError("points of different dimension")
        if dims:
            d = dims.pop()
            if dim is not None and dim != d:
                raise ValueError("dimension mismatch")
            dim = d
        if dim is None:
            raise ValueError("dimension of an empty point set must be given")
        return cls(pts, dim)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    @cached_property
    def _members(self):
        return frozenset(self.points)

    def __contains__(self, p):
        return tuple(p) in self._members

    def __getitem__(self, i):
        return self.points[i]

    def translate(self, v):
        return PointSet.of((tuple(a + b for a, b in zip(p, v)) for p in self.points), self.dim)


class Counts(NamedTuple):
    total: int
    interior: int
    boundary: int


def _scan(K, backend=None):
    return K.lattice_scan(backend=backend)


def lattice_points(K, backend=None):
    return PointSet.of((p for p, _ in _scan(K, backend)), K.dim)


def interior_lattice_points(K, backend=None):
    return PointSet.of((p for p, inside in _scan(K, backend) if inside), K.dim)


def count(K, backend=None):
    scan = _scan(K, backend)
    total = len(scan)
    interior = sum(1 for _, inside in scan if inside)
    return Counts(total, interior, total - interior)


@dataclass(frozen=True)
class SuccessiveMinima:
    values: tuple
    witnesses: tuple

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _require_symmetric(K):
    if not K.is_zero_symmetric:
        raise BodyError("successive minima need a 0-symmetric body")


def _nonzero_points_of_scaled(K, t, backend):
    # one of each pair +-p: the one whose first nonzero coordinate is positive
    return [p for p, _ in K.scaled(t).lattice_scan(backend=backend)
            if any(p) and next(c for c in p if c) > 0]


def _rank_key(K):
    """Order by gauge, then squared length, then lexicographically."""
    def key(p):
        return (K.fast_gauge(p).radicand, sum(c * c for c in p), p)
    return key


def successive_minima(K, cap=DEFAULT_SCALE_CAP, backend=None):
    """All n successive minima with linearly independent witnesses.

    Lattice points of t*K are collected for t = 1, 2, 4, ... until they span
    the space; sorting them by gauge and picking greedily then gives the
    minima, since every point of gauge <= t has been seen.  Witnesses have a
    positive first nonzero coordinate; ties go to the shorter point.
    """
    _require_symmetric(K)
    n = K.dim
    t = 1
    while True:
        pts = _nonzero_points_of_scaled(K, t, backend)
        if rank(pts) == n:
            break
        t *= 2
        if t > cap:
            raise MinimaError(f"no {n} independent lattice points in {cap}*K")
    values, witnesses = [], []
    for p in sorted(pts, key=_rank_key(K)):
        if rank(witnesses + [p]) > len(witnesses):
            values.append(K.fast_gauge(p))
            witnesses.append(p)
            if len(witnesses) == n:
                break
    return SuccessiveMinima(tuple(values), tuple(witnesses))


def lambda1(K, cap=DEFAULT_SCALE_CAP, backend=None):
    return lambda1_with_witness(K, cap, backend)[0]


def lambda1_with_witness(K, cap=DEFAULT_SCALE_CAP, backend=None):
    _require_symmetric(K)
    t = 1
    while True:
        pts = _nonzero_points_of_scaled(K, t, backend)
        if pts:
            p = min(pts, key=_rank_key(K))
            return K.fast_gauge(p), p
        t *= 2
        if t > cap:
            raise MinimaError(f"no nonzero lattice point in {cap}*K")


__all__ = [
    "Counts", "DEFAULT_SCALE_CAP", "GaugeValue", "MinimaError", "PointSet", "SuccessiveMinima",
    "count", "interior_lattice_points", "lambda1", "lambda1_with_witness", "lattice_points",
    "successive_minima",
]
