"""Exact computations around monotone maps of finite posets: order
polynomials with their strict/weak reciprocity, Euler characteristics of
map spaces into lexicographic products, and the staged piecewise-linear
change of coordinates between the strict and weak pictures.
"""

from .errors import (
    CycleError,
    DepthUnsupported,
    DomainError,
    FormatError,
    MembershipError,
    NotTotallyOrdered,
    OrdhomError,
    UnknownElement,
)
from .posets import (
    FinitePoset,
    LexPoset,
    Numbering,
    admissible_numbering,
    all_posets,
    antichain,
    build_poset,
    chain,
    euler_char,
    negate,
    random_poset,
)
from .homs import STRICT, WEAK, MonotoneMap, count_homs, enumerate_homs, iter_hom_values
from .orderpoly import (
    OrderPolynomial,
    StanleyReport,
    check_stanley_reciprocity,
    euler_via_orderpoly,
    evaluate,
    order_polynomial,
)
from .euler import (
    EulerReport,
    OrderedSetPartition,
    check_euler_reciprocity,
    compatible_preorders,
    count_components,
    euler_hom,
    euler_hom_real,
)
from .homeo import (
    LexHomPoint,
    UscSpec,
    backward,
    backward_trace,
    forward,
    forward_trace,
    lemma_phi,
    lemma_phi_inv,
    membership,
    usc_spec,
    usc_value,
)
from .fileio import file_digest, load_point, load_poset, point_to_dict

__version__ = "0.1.0"

__all__ = [
    "OrdhomError", "CycleError", "UnknownElement", "NotTotallyOrdered",
    "DepthUnsupported", "MembershipError", "DomainError", "FormatError",
    "FinitePoset", "LexPoset", "Numbering", "build_poset", "chain",
    "antichain", "admissible_numbering", "negate", "euler_char",
    "all_posets", "random_poset",
    "STRICT", "WEAK", "MonotoneMap", "count_homs", "enumerate_homs",
    "iter_hom_values",
    "OrderPolynomial", "StanleyReport", "order_polynomial", "evaluate",
    "check_stanley_reciprocity", "euler_via_orderpoly",
    "OrderedSetPartition", "EulerReport", "compatible_preorders",
    "euler_hom_real", "euler_hom", "check_euler_reciprocity",
    "count_components",
    "LexHomPoint", "UscSpec", "usc_spec", "usc_value", "lemma_phi",
    "lemma_phi_inv", "membership", "forward", "backward", "forward_trace",
    "backward_trace",
    "load_poset", "load_point", "point_to_dict", "file_digest",
    "__version__",
]
