"""Command-line interface: ``discmink <command> ...``.

Exit status: 0 on success, 1 when ``verify`` finds a violation, 2 on bad
input (unknown flags, unreadable or invalid files, guard violations).
"""

import argparse
import sys

from . import kernels
from .bodies import BodyError, volume
from .corpus import (
    gen_ellipsoids,
    gen_random_symmetric_polytopes,
    gen_symmetric_polygons,
    load_corpus,
    save_corpus,
)
from .counting import MinimaError, count, successive_minima
from .diffsets import (
    ClassificationError,
    brute_force_min_diffset,
    classify_extremal,
    difference_set,
    planar_min_bound,
)
from .formats import FormatError, format_rational, load_points, read_body
from .harness import EXIT_INPUT_ERROR, ConfigError, RunConfig, default_jobs, run_verification
from .lattice import is_collinear
from .theorems import PreconditionError, congruence_witnesses


class InputError(Exception):
    pass


def _vec(p):
    return ",".join(str(c) for c in p)


def _read_body(path):
    try:
        return read_body(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def cmd_count(args):
    c = count(_read_body(args.body))
    if args.interior:
        print(f"interior={c.interior}")
    else:
        print(f"total={c.total} interior={c.interior} boundary={c.boundary}")


def cmd_minima(args):
    m = successive_minima(_read_body(args.body))
    for i, (lam, w) in enumerate(zip(m.values, m.witnesses), 1):
        print(f"lambda{i}={lam} witness={_vec(w)}")


def cmd_volume(args):
    print(f"volume={format_rational(volume(_read_body(args.body)))}")


def _diffset_line(U, classify):
    size = len(difference_set(U))
    line = f"|U-U|={size}"
    if len(U) >= 3 and not is_collinear(U):
        line += f" bound={planar_min_bound(len(U))}"
    if classify:
        try:
            verdict = str(classify_extremal(U))
        except ClassificationError:
            verdict = "Unclassified"
        line += f" verdict={verdict}"
    return line


def cmd_diffset(args):
    try:
        with open(args.points) as fh:
            U = load_points(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {args.points}: {exc.strerror}") from None
    if args.classify and len(U) < 3:
        raise InputError("classification needs at least 3 points")
    print(_diffset_line(U, args.classify))


def cmd_search(args):
    best, minimizers = brute_force_min_diffset(args.k, args.grid)
    print(f"k={args.k} grid={args.grid} min={best} bound={planar_min_bound(args.k)} "
          f"minimizers={len(minimizers)}")
    for U in minimizers:
        try:
            verdict = str(classify_extremal(U))
        except ClassificationError:
            verdict = "Unclassified"
        print(f"{';'.join(_vec(p) for p in U)} verdict={verdict}")


def cmd_gen(args):
    if args.family == "polygons":
        corpus = gen_symmetric_polygons(args.radius)
    elif args.family == "random":
        corpus = gen_random_symmetric_polytopes(args.n, args.radius, args.count, args.seed,
                                                include_standards=args.include_standards)
    else:
        corpus = gen_ellipsoids(args.n, args.count, args.seed, centered=not args.general,
                                include_standards=args.include_standards)
    save_corpus(corpus, args.out)
    print(f"corpus={corpus.id} bodies={len(corpus)} out={args.out}")


def cmd_verify(args):
    jobs = args.jobs if args.jobs is not None else default_jobs()
    config = RunConfig.parse(args.checks, jobs=jobs, out=args.out, seed=args.seed)
    try:
        corpus = load_corpus(args.corpus)
    except OSError as exc:
        raise InputError(f"cannot read corpus {args.corpus}: {exc.strerror}") from None
    try:
        with open(args.out, "w") as fh:
            _, summary = run_verification(corpus, config, fh)
    except OSError as exc:
        raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    for line in summary.lines():
        print(line.lstrip("# "))
    return summary.exit_code


def cmd_witness(args):
    ws = congruence_witnesses(_read_body(args.body), args.mod)
    for w in ws:
        print(f"v={_vec(w.v)} w={_vec(w.w)} witness={_vec(w.point)} interior={int(w.interior)}")
    print(f"witnesses={len(ws)}")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser():
    p = argparse.ArgumentParser(prog="discmink", description="Exact lattice-point bound checks.")
    p.add_argument("--backend", choices=("auto", "cython", "python"), default="auto",
                   help="membership-scan kernel (default: compiled if available)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", help="count lattice points of a body")
    s.add_argument("--body", required=True)
    s.add_argument("--interior", action="store_true", help="print the interior count only")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("minima", help="successive minima of a 0-symmetric body")
    s.add_argument("--body", required=True)
    s.set_defaults(func=cmd_minima)

    s = sub.add_parser("volume", help="exact volume of a polytope")
    s.add_argument("--body", required=True)
    s.set_defaults(func=cmd_volume)

    s = sub.add_parser("diffset", help="size of U-U, optionally with the extremal verdict")
    s.add_argument("--points", required=True)
    s.add_argument("--classify", action="store_true")
    s.set_defaults(func=cmd_diffset)

    s = sub.add_parser("search", help="exhaustive searches")
    ss = s.add_subparsers(dest="target", required=True)
    e = ss.add_parser("extremal-diffsets", help="minimal |U-U| over k-subsets of a grid")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--grid", type=int, required=True)
    e.set_defaults(func=cmd_search)

    s = sub.add_parser("gen", help="generate a corpus directory")
    gs = s.add_subparsers(dest="family", required=True)
    g = gs.add_parser("polygons")
    g.add_argument("--radius", type=int, required=True)
    g.add_argument("--out", required=True)
    g = gs.add_parser("random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--radius", type=int, default=2)
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--include-standards", action="store_true")
    g.add_argument("--out", required=True)
    g = gs.add_parser("ellipsoids")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--general", action="store_true", help="random centers instead of the origin")
    g.add_argument("--include-standards", action="store_true")
    g.add_argument("--out", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="run checks over a corpus")
    s.add_argument("--corpus", required=True)
    s.add_argument("--checks", required=True, help="comma-separated check names")
    s.add_argument("--out", required=True)
    s.add_argument("--jobs", type=_positive, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("witness", help="congruence witnesses (v - w)/m")
    s.add_argument("--body", required=True)
    s.add_argument("--mod", type=int, default=3)
    s.set_defaults(func=cmd_witness)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.backend != "auto":
        try:
            kernels.set_backend(args.backend)
        except RuntimeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT_ERROR
    try:
        return args.func(args) or 0
    except (InputError, FormatError, ConfigError, BodyError, PreconditionError,
            MinimaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
