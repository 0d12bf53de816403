"""Bound evaluators and exact verifiers for the lattice-point inequalities.

Every ``verify_*`` function returns a :class:`BoundReport` comparing a
measured quantity (a lattice point count, a volume, or ``2/lambda_1``) with
the corresponding bound.  Measurements of one body are shared through
:class:`Facts` so a batch of checks scans the body once.
"""

import warnings
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, prod
from typing import NamedTuple

from .bodies import (
    MAX_VOLUME_DIM,
    GaugeValue,
    RationalEllipsoid,
    SymmetricHPolytope,
    VPolytope,
    slab_parallelepiped,
    volume,
)
from .counting import count, lambda1_with_witness, lattice_points, successive_minima
from .lattice import det, inverse, is_unimodular, matvec, residue_class


class PreconditionError(ValueError):
    pass


def doignon_helly_number(n):
    """Helly number of the integer lattice Z^n (Doignon): 2^n."""
    return 2 ** n


# bound formulas -------------------------------------------------------------

def bound_main(n, i):
    """3^(n-1) * (i + 2)."""
    if n < 1 or i < 1:
        raise ValueError("need n >= 1 and at least one interior lattice point")
    if i % 2 == 0:
        warnings.warn("a 0-symmetric body has an odd number of interior lattice points", stacklevel=2)
    return 3 ** (n - 1) * (i + 2)


def bound_bhw(n, lam1):
    return (lam1.floor_ratio(2) + 1) ** n


def bound_bhw_sc(n, lam1):
    return 2 * lam1.ceil_ratio(2) ** n - 1


def bound_vdc(n, i):
    return 2 ** (n - 1) * (i + 1)


def bound_combined(n, i):
    return (i + 2) ** n


def bound_sc_symmetric(n, i):
    return 2 ** n * (i + 1) - 1


def bound_sc_general(n, i):
    """2(2^(n-1) - 1) * ceil(2(i+1)/3) + i + 2."""
    return 2 * (2 ** (n - 1) - 1) * ceil(Fraction(2 * (i + 1), 3)) + i + 2


def c_bound(n, k):
    """Upper bound 2(2^(n-1) - 1) * ceil(2(k+1)/3) + 2 on c(n, k)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return 2 * (2 ** (n - 1) - 1) * ceil(Fraction(2 * (k + 1), 3)) + 2


def remark_sc_bound(n, i):
    """2^(n+1) i / 3 + 2^(n+2), exact."""
    if n < 1 or i < 1:
        raise ValueError("need n >= 1 and i >= 1")
    return Fraction(2 ** (n + 1) * i, 3) + 2 ** (n + 2)


def bound_bhw_conjecture(minima):
    return prod(lam.floor_ratio(2) + 1 for lam in minima)


# shared measurements --------------------------------------------------------

class Facts:
    """Lazily computed measurements of one body."""

    def __init__(self, K, backend=None):
        self.K = K
        self.backend = backend

    @cached_property
    def points(self):
        return lattice_points(self.K, backend=self.backend)

    @cached_property
    def counts(self):
        return count(self.K, backend=self.backend)

    @cached_property
    def lambda1(self):
        return lambda1_with_witness(self.K, backend=self.backend)

    @cached_property
    def minima(self):
        return successive_minima(self.K, backend=self.backend)

    @cached_property
    def volume(self):
        return volume(self.K)


@dataclass(frozen=True)
class EqualityCertificate:
    """Unimodular A with A*K = C_{n-1} x [-ell, ell]."""

    ell: int
    A: tuple

    @property
    def direction(self):
        return f"A*K = C_{{n-1}} x [-{self.ell},{self.ell}]"

    def verify(self, K):
        vs = _lattice_vertices(K)
        if vs is None or not is_unimodular(self.A):
            return False
        image = {matvec(self.A, v) for v in vs}
        return image == set(slab_parallelepiped(len(self.A), self.ell).vertices)

    def __str__(self):
        rows = ";".join(",".join(str(c) for c in r) for r in self.A)
        return f"ell:{self.ell}|A:{rows}"


@dataclass(frozen=True)
class BoundReport:
    body_id: str
    check: str
    n: int
    total: int
    interior: int
    boundary: int
    lhs: object
    bound: object
    satisfied: bool
    equality: bool
    witness: object = None
    extra: tuple = ()

    def fields(self):
        """Ordered ``(key, value-text)`` pairs for the line format."""
        out = [
            ("body", self.body_id),
            ("check", self.check),
            ("n", str(self.n)),
            ("total", str(self.total)),
            ("interior", str(self.interior)),
            ("boundary", str(self.boundary)),
            ("lhs", str(self.lhs)),
            ("bound", str(self.bound)),
            ("satisfied", "1" if self.satisfied else "0"),
            ("equality", "1" if self.equality else "0"),
        ]
        if self.witness is not None:
            out.append(("witness", str(self.witness)))
        out.extend(self.extra)
        return out


def _report(check, K, facts, body_id, lhs, bound, witness=None, extra=()):
    c = facts.counts
    satisfied = lhs <= bound
    equality = satisfied and lhs == bound
    return BoundReport(body_id or "-", check, K.dim, c.total, c.interior, c.boundary,
                       lhs, bound, satisfied, equality, witness, tuple(extra))


def _require_symmetric(K):
    if not K.is_zero_symmetric:
        raise PreconditionError("body is not 0-symmetric")


def _require_polytope(K):
    if isinstance(K, RationalEllipsoid):
        raise PreconditionError("volume checks need a polytope")
    if K.dim > MAX_VOLUME_DIM:
        raise PreconditionError(f"volume checks need dimension <= {MAX_VOLUME_DIM}")


def _require_ellipsoid(K, centered):
    if not isinstance(K, RationalEllipsoid):
        raise PreconditionError("strictly convex checks need an ellipsoid")
    if centered and not K.is_zero_symmetric:
        raise PreconditionError("ellipsoid is not origin-centered")


def _lambda_extra(facts):
    lam, z = facts.lambda1
    return [("lambda1", str(lam)), ("lambda1_witness", ",".join(map(str, z)))]


# equality case of the main theorem -----------------------------------------

def _lattice_vertices(K):
    if isinstance(K, SymmetricHPolytope):
        vs = K.vertices
    elif isinstance(K, VPolytope):
        vs = K.vertices
    else:
        return None
    if not all(isinstance(c, int) for v in vs for c in v):
        return None
    return vs


def _normalize_generator(g):
    lead = next(c for c in g if c)
    return g if lead > 0 else tuple(-c for c in g)


def parallelepiped_generators(K):
    """Generators g_1..g_n with vertices {sum(+-g_i)}, or None.

    With v0 the largest vertex, every (v0 - w)/2 is a nonempty subset sum of
    the generators; the generators are exactly those not expressible as a sum
    of two of them.
    """
    vs = _lattice_vertices(K)
    if vs is None or not K.is_zero_symmetric:
        return None
    n = K.dim
    if len(vs) != 2 ** n:
        return None
    v0 = max(vs)
    D = [tuple(Fraction(a - b, 2) for a, b in zip(v0, w)) for w in vs if w != v0]
    Dset = set(D)
    sums = {tuple(a + b for a, b in zip(x, y)) for x in D for y in D}
    gens = [d for d in D if d not in sums]
    if len(gens) != n or det(gens) == 0:
        return None
    generated = {()}
    for g in gens:
        generated = {p + (s,) for p in generated for s in (1, -1)}
    points = {tuple(sum(e * g[j] for e, g in zip(signs, gens)) for j in range(n)) for signs in generated}
    if points != set(vs) or len(Dset) != len(D):
        return None
    return [tuple(int(c) if c.denominator == 1 else c for c in g) for g in gens]


def equality_parallelepiped(K, interior=None):
    """Certificate that K is unimodularly equivalent to C_{n-1} x [-ell, ell], or None.

    ell is taken from the interior lattice point count (2*ell - 1 of them,
    all on the long axis), then checked against |det| of the generators.
    """
    gens = parallelepiped_generators(K)
    if gens is None or any(isinstance(c, Fraction) for g in gens for c in g):
        return None
    n = K.dim
    if interior is None:
        interior = count(K).interior
    if interior % 2 == 0:
        return None
    ell = (interior + 1) // 2
    cols = sorted((_normalize_generator(g) for g in gens), reverse=True)
    if abs(det(cols)) != ell:
        return None
    for j in reversed(range(n)):
        if any(c % ell for c in cols[j]):
            continue
        others = cols[:j] + cols[j + 1:]
        B_cols = others + [tuple(c // ell for c in cols[j])]
        if abs(det(B_cols)) != 1:
            continue
        B = tuple(zip(*B_cols))
        A = inverse(B)
        cert = EqualityCertificate(ell, tuple(tuple(r) for r in A))
        assert cert.verify(K), "produced certificate does not re-verify"
        return cert
    return None


# verifiers ------------------------------------------------------------------

def verify_main(K, body_id=None, facts=None):
    _require_symmetric(K)
    facts = facts or Facts(K)
    c = facts.counts
    if c.interior < 1:
        raise PreconditionError("no interior lattice point")
    rep = _report("main", K, facts, body_id, c.total, bound_main(K.dim, c.interior))
    if rep.equality:
        cert = equality_parallelepiped(K, c.interior)
        rep = _with_witness(rep, cert)
    return rep


def _with_witness(rep, witness):
    return BoundReport(**{**rep.__dict__, "witness": witness})


def verify_minkowski_volume(K, body_id=None, facts=None):
    _require_symmetric(K)
    _require_polytope(K)
    facts = facts or Facts(K)
    if facts.counts.interior != 1:
        raise PreconditionError("origin is not the only interior lattice point")
    return _report("minkowski-vol", K, facts, body_id, facts.volume, 2 ** K.dim)


def verify_minkowski_discrete(K, body_id=None, facts=None):
    _require_symmetric(K)
    facts = facts or Facts(K)
    c = facts.counts
    if c.interior != 1:
        raise PreconditionError("origin is not the only interior lattice point")
    rep = _report("minkowski-disc", K, facts, body_id, c.total, 3 ** K.dim)
    if rep.equality:
        rep = _with_witness(rep, equality_parallelepiped(K, c.interior))
    return rep


def verify_bhw(K, body_id=None, facts=None):
    _require_symmetric(K)
    facts = facts or Facts(K)
    lam, _ = facts.lambda1
    return _report("bhw", K, facts, body_id, facts.counts.total, bound_bhw(K.dim, lam),
                   extra=_lambda_extra(facts))


def verify_bhw_sc(K, body_id=None, facts=None):
    _require_ellipsoid(K, centered=True)
    facts = facts or Facts(K)
    lam, _ = facts.lambda1
    return _report("bhw-sc", K, facts, body_id, facts.counts.total, bound_bhw_sc(K.dim, lam),
                   extra=_lambda_extra(facts))


def verify_vdc(K, body_id=None, facts=None):
    _require_symmetric(K)
    _require_polytope(K)
    facts = facts or Facts(K)
    return _report("vdc", K, facts, body_id, facts.volume, bound_vdc(K.dim, facts.counts.interior))


def verify_lambda1_interior(K, body_id=None, facts=None):
    """2/lambda_1 <= G(int K) + 1, compared on squares."""
    _require_symmetric(K)
    facts = facts or Facts(K)
    lam, _ = facts.lambda1
    lhs = GaugeValue(Fraction(4) / lam.radicand)
    return _report("lambda1-int", K, facts, body_id, lhs, facts.counts.interior + 1,
                   extra=_lambda_extra(facts))


def verify_combined(K, body_id=None, facts=None):
    _require_symmetric(K)
    facts = facts or Facts(K)
    c = facts.counts
    return _report("combined", K, facts, body_id, c.total, bound_combined(K.dim, c.interior))


def verify_sc_symmetric(K, body_id=None, facts=None):
    _require_ellipsoid(K, centered=True)
    facts = facts or Facts(K)
    c = facts.counts
    return _report("sc-sym", K, facts, body_id, c.total, bound_sc_symmetric(K.dim, c.interior))


def verify_sc_general(K, body_id=None, facts=None):
    _require_ellipsoid(K, centered=False)
    facts = facts or Facts(K)
    c = facts.counts
    return _report("sc-gen", K, facts, body_id, c.total, bound_sc_general(K.dim, c.interior))


def verify_bhw_conjecture(K, body_id=None, facts=None):
    _require_symmetric(K)
    facts = facts or Facts(K)
    m = facts.minima
    extra = [("minima", ",".join(str(v) for v in m.values))]
    return _report("bhw-conjecture", K, facts, body_id, facts.counts.total,
                   bound_bhw_conjecture(m.values), extra=extra)


CHECKS = {
    "main": verify_main,
    "minkowski-vol": verify_minkowski_volume,
    "minkowski-disc": verify_minkowski_discrete,
    "bhw": verify_bhw,
    "bhw-sc": verify_bhw_sc,
    "vdc": verify_vdc,
    "lambda1-int": verify_lambda1_interior,
    "combined": verify_combined,
    "sc-sym": verify_sc_symmetric,
    "sc-gen": verify_sc_general,
    "bhw-conjecture": verify_bhw_conjecture,
}

# the conjecture scan reports violations but never fails a run
EXPLORATORY_CHECKS = frozenset({"bhw-conjecture"})


def applicable(check, K, facts):
    """Whether ``check`` has its preconditions met on K (no exception raised)."""
    if check in ("sc-sym", "bhw-sc"):
        return isinstance(K, RationalEllipsoid) and K.is_zero_symmetric
    if check == "sc-gen":
        return isinstance(K, RationalEllipsoid)
    if not K.is_zero_symmetric:
        return False
    if check in ("minkowski-vol", "vdc"):
        if isinstance(K, RationalEllipsoid) or K.dim > MAX_VOLUME_DIM:
            return False
    if check in ("minkowski-vol", "minkowski-disc"):
        return facts.counts.interior == 1
    return True


def scan_bhw_conjecture(corpus):
    """Conjectured product bound on every symmetric body of ``corpus``."""
    out = []
    for body_id, K in corpus:
        if K.is_zero_symmetric:
            out.append(verify_bhw_conjecture(K, body_id))
    return out


# congruence witnesses -------------------------------------------------------

class CongruenceWitness(NamedTuple):
    v: tuple
    w: tuple
    point: tuple
    interior: bool


def congruence_witnesses(K, m=3, facts=None):
    """(v - w)/m for every pair v > w of lattice points of K congruent mod m.

    For m >= 3 each such point is an interior lattice point of a 0-symmetric
    convex body, and this is asserted.  For m = 2 that holds only for strictly
    convex bodies and pairs with v != -w; the pair (x, -x) is skipped and for
    other bodies the interior flag is reported without asserting.
    """
    _require_symmetric(K)
    if m < 2:
        raise ValueError("modulus must be >= 2")
    facts = facts or Facts(K)
    scan = K.lattice_scan(backend=facts.backend)
    interior = {p for p, inside in scan if inside}
    classes = defaultdict(list)
    for p, _ in scan:
        classes[residue_class(p, m).representative].append(p)
    must_hold = m >= 3 or K.is_strictly_convex
    out = []
    for members in classes.values():
        members.sort()
        for a in range(len(members)):
            for b in range(a):
                v, w = members[a], members[b]
                if m == 2 and all(x == -y for x, y in zip(v, w)):
                    continue
                point = tuple((x - y) // m for x, y in zip(v, w))
                inside = point in interior
                if must_hold:
                    assert inside, f"witness {point} from {v}, {w} is not interior: corrupted body"
                out.append(CongruenceWitness(v, w, point, inside))
    out.sort()
    return out
