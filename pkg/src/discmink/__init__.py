"""Exact lattice-point counting and the inequalities relating it to volume,
successive minima and interior points of convex bodies.

All arithmetic is over the integers and rationals; no floating point is used
anywhere in a verdict.
"""

from .bodies import (
    BodyError,
    GaugeValue,
    RationalEllipsoid,
    SymmetricHPolytope,
    VPolytope,
    bounding_box,
    contains,
    contains_interior,
    crosspolytope,
    cube,
    ellipsoid,
    gauge,
    is_zero_symmetric,
    scaled,
    slab_parallelepiped,
    unimodular_image,
    volume,
)
from .corpus import (
    Corpus,
    gen_ellipsoids,
    gen_random_symmetric_polytopes,
    gen_symmetric_polygons,
    load_corpus,
    save_corpus,
)
from .counting import (
    Counts,
    PointSet,
    count,
    interior_lattice_points,
    lambda1,
    lattice_points,
    successive_minima,
)
from .diffsets import (
    brute_force_min_diffset,
    classify_extremal,
    difference_set,
    is_ap_of_type,
    is_incomplete_ap,
    sumset,
)
from .harness import RunConfig, run_verification
from .lattice import det, residue_class, smith_normal_form
from .theorems import (
    CHECKS,
    BoundReport,
    EqualityCertificate,
    congruence_witnesses,
    equality_parallelepiped,
)

__version__ = "0.1.0"
