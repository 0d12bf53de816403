"""Compare the compiled and pure-Python lattice scan backends.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time
from fractions import Fraction

from discmink.bodies import cube, crosspolytope, ellipsoid, slab_parallelepiped
from discmink.corpus import gen_ellipsoids, gen_random_symmetric_polytopes, gen_symmetric_polygons
from discmink.counting import count
from discmink.kernels import available_backends


def workloads():
    yield "cube(3) x 12", [cube(3).scaled(12)]
    yield "slab(4, 5) x 3", [slab_parallelepiped(4, 5).scaled(3)]
    yield "cross(4) x 8", [crosspolytope(4).scaled(8)]
    yield "ellipsoid(3) r~40", [ellipsoid([[Fraction(1, 1600), 0, 0], [0, Fraction(1, 900), 0],
                                           [0, 0, Fraction(1, 400)]])]
    yield "polygons r3", [K for _, K in gen_symmetric_polygons(3)]
    yield "random n=3 x 200", [K for _, K in gen_random_symmetric_polytopes(3, 3, 200, 1)]
    yield "ellipsoids n=3 x 200", [K for _, K in gen_ellipsoids(3, 200, 1)]


def timed(bodies, backend, repeat):
    # facets and bounding boxes are cached on the bodies by the warm-up pass
    best, totals = None, None
    for _ in range(repeat):
        start = time.perf_counter()
        totals = [count(K, backend=backend).total for K in bodies]
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, totals


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = available_backends()
    print(f"{'workload':<24}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, bodies in workloads():
        timed(bodies, "python", 1)
        results = {b: timed(bodies, b, args.repeat) for b in backends}
        if len({tuple(t) for _, t in results.values()}) != 1:
            raise SystemExit(f"{name}: backends disagree")
        row = f"{name:<24}" + "".join(f"{results[b][0]:>11.3f}s" for b in backends)
        if "cython" in results:
            row += f"{results['python'][0] / results['cython'][0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
