"""Text formats: body files, point-set files and report lines.

Body file (one body per document, ``#`` starts a comment)::

    type: vpolytope          # or hpolytope, ellipsoid
    dim: 2
    vertex: 1,-1/2           # vpolytope: one line per vertex
    constraint: 1,0 | 3/2    # hpolytope: |a.x| <= b
    center: 0,0              # ellipsoid: (x-c)^T Q (x-c) <= 1
    row: 1/2,0               # ellipsoid: rows of Q

Rationals are written ``p`` or ``p/q`` in lowest terms.  :func:`dump_body`
is canonical, so ``dump_body(load_body(text)) == text`` for any text it
produced.
"""

import re
from fractions import Fraction

from .bodies import RationalEllipsoid, SymmetricHPolytope, VPolytope
from .counting import PointSet


class FormatError(ValueError):
    pass


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_INTEGER = re.compile(r"^[+-]?\d+$")


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text):
    text = text.strip()
    if not _RATIONAL.match(text):
        raise FormatError(f"not a rational 'p' or 'p/q': {text!r}")
    q = Fraction(text)
    return q.numerator if q.denominator == 1 else q


def _vector(text):
    return tuple(parse_rational(c) for c in text.split(","))


def _int_vector(text):
    parts = [c.strip() for c in text.split(",")]
    if not all(_INTEGER.match(c) for c in parts):
        raise FormatError(f"expected integers: {text!r}")
    return tuple(int(c) for c in parts)


def _fmt_vector(v):
    return ",".join(format_rational(c) for c in v)


def dump_body(K):
    lines = [f"type: {K.kind}", f"dim: {K.dim}"]
    if isinstance(K, VPolytope):
        lines += [f"vertex: {_fmt_vector(v)}" for v in K.vertices]
    elif isinstance(K, SymmetricHPolytope):
        lines += [f"constraint: {_fmt_vector(a)} | {format_rational(b)}" for a, b in K.constraints]
    elif isinstance(K, RationalEllipsoid):
        lines.append(f"center: {_fmt_vector(K.center)}")
        lines += [f"row: {_fmt_vector(r)}" for r in K.Q]
    else:
        raise FormatError(f"cannot serialize {type(K).__name__}")
    return "\n".join(lines) + "\n"


def load_body(text):
    fields = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise FormatError(f"line {lineno}: expected 'key: value'")
        key, value = (s.strip() for s in line.split(":", 1))
        fields.setdefault(key, []).append(value)
    kind = _single(fields, "type")
    dim = int(_single(fields, "dim"))
    try:
        if kind == "vpolytope":
            K = VPolytope(_vector(v) for v in fields.get("vertex", []))
        elif kind == "hpolytope":
            cons = []
            for v in fields.get("constraint", []):
                if "|" not in v:
                    raise FormatError("constraint needs 'a | b'")
                a, b = v.split("|", 1)
                cons.append((_int_vector(a), parse_rational(b)))
            K = SymmetricHPolytope(cons)
        elif kind == "ellipsoid":
            K = RationalEllipsoid([_vector(r) for r in fields.get("row", [])],
                                  _vector(_single(fields, "center")))
        else:
            raise FormatError(f"unknown body type {kind!r}")
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if K.dim != dim:
        raise FormatError(f"declared dim {dim} but data has dimension {K.dim}")
    return K


def _single(fields, key):
    vals = fields.get(key)
    if not vals or len(vals) != 1:
        raise FormatError(f"expected exactly one '{key}' field")
    return vals[0]


def read_body(path):
    with open(path) as fh:
        return load_body(fh.read())


def write_body(path, K):
    with open(path, "w") as fh:
        fh.write(dump_body(K))


def dump_points(U):
    return "".join(",".join(str(c) for c in p) + "\n" for p in U)


def load_points(text):
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            pts.append(_int_vector(line))
        except FormatError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
    if not pts:
        raise FormatError("empty point set")
    try:
        return PointSet.of(pts)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_report(report):
    """One line of space-separated ``key=value`` pairs."""
    return " ".join(f"{k}={v}" for k, v in report.fields())


def parse_report_line(line):
    out = {}
    for token in line.split():
        key, _, value = token.partition("=")
        out[key] = value
    return out
