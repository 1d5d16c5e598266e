"""Exact algebra of noncrossing partitions.

Two coproducts (block separation and block fusion), characters and their
convolutions, polynomial invariants, and the series and coefficient tables
that come with them.
"""

from .algebra import (
    AlgebraElement,
    Monomial,
    TensorElement,
    check_cointeraction,
    coproduct_Delta,
    coproduct_delta,
    counit_Delta,
    counit_delta,
    gradings,
    multiply,
    parse_element,
    reduced_coproduct_iterate,
)
from .errors import (
    Crossing,
    DegreeOverflow,
    NcpError,
    NonInvertible,
    NotAPartition,
    NotAugmentation,
    NotContractible,
    OrderOverflow,
    ParseError,
    UnknownSuite,
)
from .partition import (
    BlockEquivalence,
    J,
    NoncrossingPartition,
    enumerate_ncp,
    parse_partition,
)
from .polynomial import RationalPolynomial

__version__ = "0.1.0"
