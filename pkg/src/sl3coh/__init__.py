"""Exact cohomology of line bundles on the flag variety of SL3 in characteristic p.

The package is organised as a small stack:

weights
    The A2 weight lattice, Weyl group, dot action and p-adic digit expansions.
charring
    Exact arithmetic in the group ring Z[X(T)] together with Weyl and simple
    characters.
cohomology
    Memoized recursion computing ch H^i(lambda) and the rank-two bundle
    analogues.
gendim
    Generic dimensions, cyclotomic evaluation and psi_p-orders.
supportvar
    Support varieties of H^i(lambda) over the first Frobenius kernel.
identities
    The S/T/phi/psi and Q/R calculus with an exhaustive verification harness.
"""

from .weights import (
    ALPHA,
    BETA,
    RHO,
    Weight,
    WeylElement,
    dominant_representative,
    dot_action,
    p_adic_expand,
    regularity_class,
    wht,
)
from .charring import (
    Character,
    dual,
    frobenius_twist,
    multiply,
    simple_character,
    tau,
    weyl_character,
)
from .cohomology import (
    BundleTag,
    CohomologyTable,
    cohomology,
    dims,
    nonvanishing_pattern,
    serre_dual,
)
from .gendim import (
    CycloElement,
    LaurentPoly,
    d_phi_p,
    derivative_eval,
    psi_order,
    quantum_eval,
    specialize_generic,
    weyl_generic_dimension,
)
from .supportvar import (
    SupportClass,
    complexity_lower_bound,
    projectivity_test,
    support_variety,
)

__all__ = [
    "ALPHA", "BETA", "RHO", "Weight", "WeylElement", "dominant_representative",
    "dot_action", "p_adic_expand", "regularity_class", "wht",
    "Character", "dual", "frobenius_twist", "multiply", "simple_character",
    "tau", "weyl_character",
    "BundleTag", "CohomologyTable", "cohomology", "dims", "nonvanishing_pattern",
    "serre_dual",
    "CycloElement", "LaurentPoly", "d_phi_p", "derivative_eval", "psi_order",
    "quantum_eval", "specialize_generic", "weyl_generic_dimension",
    "SupportClass", "complexity_lower_bound", "projectivity_test",
    "support_variety",
]

__version__ = "0.1.0"
