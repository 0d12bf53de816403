"""Deterministic corpora of test bodies.

* ``gen_symmetric_polygons`` lists every 0-symmetric convex lattice polygon
  with vertices in a box, exhaustively.
* ``gen_random_symmetric_polytopes`` samples conv(S u -S) in dimension 3 or 4.
* ``gen_ellipsoids`` samples rational ellipsoids {|Lx|^2 <= d}.

Randomness comes from :class:`discmink.rng.SplitMix64` only.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key

from .bodies import (
    BodyError,
    RationalEllipsoid,
    VPolytope,
    crosspolytope,
    cube,
    slab_parallelepiped,
)
from .formats import FormatError, dump_body, load_body
from .lattice import det, identity, is_unimodular, matmul, rank
from .rng import SplitMix64

MANIFEST = "corpus.txt"


@dataclass
class Corpus:
    id: str
    bodies: list
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        ids = [b for b, _ in self.bodies]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate body ids in corpus")

    def __iter__(self):
        return iter(self.bodies)

    def __len__(self):
        return len(self.bodies)

    def body(self, body_id):
        return dict(self.bodies)[body_id]

    def merged(self, other, new_id=None):
        return Corpus(new_id or f"{self.id}+{other.id}", self.bodies + other.bodies,
                      {**self.provenance, **{f"merged.{k}": v for k, v in other.provenance.items()}})


def save_corpus(corpus, directory):
    os.makedirs(directory, exist_ok=True)
    lines = [f"id: {corpus.id}"]
    lines += [f"provenance.{k}: {v}" for k, v in sorted(corpus.provenance.items())]
    for body_id, K in corpus.bodies:
        lines.append(f"body: {body_id}")
        with open(os.path.join(directory, f"{body_id}.body"), "w") as fh:
            fh.write(dump_body(K))
    with open(os.path.join(directory, MANIFEST), "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_corpus(directory):
    path = os.path.join(directory, MANIFEST)
    if not os.path.exists(path):
        raise FormatError(f"no {MANIFEST} in {directory}")
    cid, prov, bodies = None, {}, []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            key, _, value = line.partition(":")
            value = value.strip()
            if key == "id":
                cid = value
            elif key.startswith("provenance."):
                prov[key[len("provenance."):]] = value
            elif key == "body":
                with open(os.path.join(directory, f"{value}.body")) as bf:
                    bodies.append((value, load_body(bf.read())))
            else:
                raise FormatError(f"unknown manifest key {key!r}")
    if cid is None:
        raise FormatError("manifest has no id")
    return Corpus(cid, bodies, prov)


# n = 2 exhaustive polygons -------------------------------------------------

def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _angle_cmp(a, b):
    # both in the half-plane y > 0 or (y == 0, x > 0): angle order is the sign of the cross product
    c = a[0] * b[1] - a[1] * b[0]
    if c:
        return -1 if c > 0 else 1
    return (a[0] ** 2 + a[1] ** 2 > b[0] ** 2 + b[1] ** 2) - (a[0] ** 2 + a[1] ** 2 < b[0] ** 2 + b[1] ** 2)


def symmetric_polygon_vertex_sets(radius):
    """Vertex sets of all 0-symmetric convex lattice polygons in [-radius, radius]^2.

    A symmetric polygon is determined by its vertices v_1..v_m with angle in
    [0, pi); the rest are -v_1..-v_m.  Chains with strictly increasing angle
    and strict left turns are extended depth-first and kept when the turns at
    v_m and -v_1 close up convexly.
    """
    reps = [(x, y) for x in range(-radius, radius + 1) for y in range(0, radius + 1)
            if y > 0 or (y == 0 and x > 0)]
    reps.sort(key=cmp_to_key(_angle_cmp))
    out = []

    def neg(p):
        return (-p[0], -p[1])

    def closes(seq):
        a, b = reps[seq[0]], reps[seq[1]]
        y, z = reps[seq[-2]], reps[seq[-1]]
        return _cross(y, z, neg(a)) > 0 and _cross(z, neg(a), neg(b)) > 0

    def extend(seq):
        if len(seq) >= 2 and closes(seq):
            vs = [reps[i] for i in seq]
            out.append(tuple(sorted(vs + [neg(v) for v in vs])))
        last = reps[seq[-1]]
        for j in range(seq[-1] + 1, len(reps)):
            p = reps[j]
            if last[0] * p[1] - last[1] * p[0] == 0:
                continue
            if len(seq) >= 2 and _cross(reps[seq[-2]], last, p) <= 0:
                continue
            extend(seq + [j])

    for i in range(len(reps)):
        extend([i])
    return sorted(out)


def gen_symmetric_polygons(radius):
    if not 1 <= radius <= 3:
        raise ValueError("polygon radius must be in 1..3")
    bodies = [(f"poly-r{radius}-{i:05d}", VPolytope(vs))
              for i, vs in enumerate(symmetric_polygon_vertex_sets(radius))]
    return Corpus(f"polygons-r{radius}", bodies, {"generator": "polygons", "radius": str(radius)})


# random symmetric polytopes -------------------------------------------------

def standard_polytopes(n):
    out = [(f"std-cube{n}", cube(n)), (f"std-cross{n}", crosspolytope(n)),
           (f"std-2cube{n}", cube(n).scaled(2))]
    out += [(f"std-slab{n}-l{ell}", slab_parallelepiped(n, ell)) for ell in (2, 3)]
    return out


def gen_random_symmetric_polytopes(n, radius, count, seed, include_standards=False):
    if n not in (3, 4):
        raise ValueError("random polytopes are generated in dimension 3 or 4")
    if not 1 <= radius <= 4:
        raise ValueError("radius must be in 1..4")
    if count < 0:
        raise ValueError("count must be nonnegative")
    rng = SplitMix64(seed)
    bodies = []
    while len(bodies) < count:
        size = rng.randint(n, n + 3)
        S = []
        while len(S) < size:
            p = tuple(rng.randint(-radius, radius) for _ in range(n))
            if any(p):
                S.append(p)
        pts = S + [tuple(-c for c in p) for p in S]
        if rank(pts) < n:
            continue
        bodies.append((f"rand-n{n}-r{radius}-s{seed}-{len(bodies):05d}", VPolytope(pts)))
    if include_standards:
        bodies += standard_polytopes(n)
    prov = {"generator": "random", "n": str(n), "radius": str(radius), "count": str(count),
            "seed": str(seed), "standards": str(int(include_standards))}
    return Corpus(f"random-n{n}-r{radius}-s{seed}", bodies, prov)


# ellipsoids ----------------------------------------------------------------

def standard_ellipsoids(n, centered=True):
    half = Fraction(1, 2)
    out = [(f"std-ball{n}-r2", RationalEllipsoid([[half if i == j else 0 for j in range(n)] for i in range(n)])),
           (f"std-ball{n}-r1", RationalEllipsoid([[int(i == j) for j in range(n)] for i in range(n)]))]
    if n == 2:
        out.append(("std-ell2-9-1", RationalEllipsoid([[Fraction(1, 9), 0], [0, 1]])))
        if not centered:
            out.append(("std-ell2-offcenter", RationalEllipsoid([[2, 0], [0, 2]], [half, half])))
    return out


def gen_ellipsoids(n, count, seed, centered=True, include_standards=False):
    """Ellipsoids {x : |L(x - c)|^2 <= d}, i.e. Q = L^T L / d."""
    if n not in (2, 3):
        raise ValueError("ellipsoids are generated in dimension 2 or 3")
    rng = SplitMix64(seed)
    bodies = []
    while len(bodies) < count:
        L = [[0] * n for _ in range(n)]
        for i in range(n):
            L[i][i] = rng.randint(1, 3)
            for j in range(i + 1, n):
                L[i][j] = rng.randint(-2, 2)
        d = rng.randint(1, 8)
        if det(L) == 0:
            continue
        LtL = matmul(tuple(zip(*L)), L)
        Q = [[Fraction(c, d) for c in row] for row in LtL]
        if centered:
            center = None
        else:
            center = []
            for _ in range(n):
                q = rng.randint(1, 4)
                center.append(Fraction(rng.randint(-q, q), q))
        try:
            K = RationalEllipsoid(Q, center)
        except BodyError:
            continue
        tag = "c" if centered else "g"
        bodies.append((f"ell-n{n}-{tag}-s{seed}-{len(bodies):05d}", K))
    if include_standards:
        bodies += standard_ellipsoids(n, centered)
    prov = {"generator": "ellipsoids", "n": str(n), "count": str(count), "seed": str(seed),
            "centered": str(int(centered)), "standards": str(int(include_standards))}
    return Corpus(f"ellipsoids-n{n}-{'c' if centered else 'g'}-s{seed}", bodies, prov)


# unimodular transforms -------------------------------------------------------

def random_unimodular(n, rng, max_entry=3, steps=None):
    """Random unimodular matrix from elementary operations, entries bounded by max_entry."""
    steps = steps if steps is not None else 3 * n
    while True:
        A = [list(r) for r in identity(n)]
        for _ in range(steps):
            op = rng.randint(0, 2)
            i = rng.randint(0, n - 1)
            j = rng.randint(0, n - 2)
            j = j + 1 if j >= i else j
            if op == 0:
                f = rng.choice((-1, 1))
                A[i] = [a + f * b for a, b in zip(A[i], A[j])]
            elif op == 1:
                A[i], A[j] = A[j], A[i]
            else:
                A[i] = [-a for a in A[i]]
        if all(abs(c) <= max_entry for r in A for c in r):
            A = tuple(tuple(r) for r in A)
            assert is_unimodular(A)
            return A
