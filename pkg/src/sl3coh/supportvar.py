"""Support varieties of ``H^i(lambda)`` over the first Frobenius kernel of SL3.

For SL3 the support variety of a nonzero ``H^i(lambda)`` is one of three
conical varieties: the origin, the closure of the subregular nilpotent orbit
(dimension 4) or the whole nilpotent cone (dimension 6).  The class is read
off from the set of p-singular roots of ``lambda + rho``, which is invariant
under the dot action, so it agrees with the class of ``H^0`` at the dominant
representative.

The classification is attached to independent numerical evidence: the order
of ``psi_p(t)`` in the generic dimension, whether the quantum dimension
vanishes, and the complexity bound ``6 - d(Phi, p) - 2 * order``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .cohomology import BundleTag, cohomology
from .gendim import d_phi_p, psi_order, quantum_eval, specialize_generic
from .weights import Regularity, Weight, as_weight, regularity_class


class SupportClass(enum.Enum):
    """The three possible support varieties, valued by their dimension."""

    ZERO = ("Zero", 0)
    SUBREGULAR_CLOSURE = ("SubregularClosure", 4)
    NILPOTENT_CONE = ("NilpotentCone", 6)

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def dim(self) -> int:
        return self.value[1]

    @classmethod
    def from_regularity(cls, kind: Regularity) -> "SupportClass":
        return _BY_REGULARITY[kind]


_BY_REGULARITY = {
    Regularity.REGULAR: SupportClass.NILPOTENT_CONE,
    Regularity.SUBREGULAR: SupportClass.SUBREGULAR_CLOSURE,
    Regularity.STEINBERG: SupportClass.ZERO,
}


@dataclass(frozen=True)
class Evidence:
    """Numerical data computed from the generic dimension of ``H^i(lambda)``."""

    psi_order: int
    quantum_dim_nonzero: bool
    complexity_lower_bound: int

    def to_json(self) -> dict:
        return {
            "psi_order": self.psi_order,
            "quantum_dim_nonzero": self.quantum_dim_nonzero,
            "complexity_lower_bound": self.complexity_lower_bound,
        }


@dataclass(frozen=True)
class SupportResult:
    weight: Weight
    i: int
    p: int
    support: SupportClass
    evidence: Evidence

    @property
    def dim(self) -> int:
        return self.support.dim

    def to_json(self) -> dict:
        return {
            "weight": self.weight.to_json(),
            "i": self.i,
            "p": self.p,
            "class": self.support.label,
            "dim": self.support.dim,
            "evidence": self.evidence.to_json(),
        }


@dataclass(frozen=True)
class ProjectivityResult:
    projective: bool
    psi_order: int

    def __bool__(self) -> bool:
        return self.projective


def _check_degree(i: int) -> None:
    if not 0 <= i <= 3:
        raise ValueError(f"cohomological degree must lie in 0..3, got {i}")


def _generic_dim(lam: Weight, i: int, p: int):
    """Generic dimension of ``H^i(lam)``, or ``None`` if the module is zero."""
    ch = cohomology(lam, BundleTag.PLAIN, p).chars[i]
    if ch.is_zero():
        return None
    return specialize_generic(ch)


def _nonzero_generic_dim(lam: Weight, i: int, p: int):
    f = _generic_dim(lam, i, p)
    if f is None:
        raise ValueError(f"H^{i}{tuple(lam)} is zero at p={p}")
    return f


def _bound(order: int, p: int) -> int:
    return max(0, 6 - d_phi_p(p) - 2 * order)


def complexity_lower_bound(lam, i: int, p: int) -> int:
    """Lower bound for the complexity of ``H^i(lambda)`` over ``G_1``.

    Parameters
    ----------
    lam : Weight
    i : int
        Degree in ``0..3``.
    p : int
        The prime.

    Returns
    -------
    int
        ``max(0, 6 - d(Phi, p) - 2k)`` where ``psi_p^k`` exactly divides the
        generic dimension.

    Raises
    ------
    ValueError
        If ``H^i(lambda) = 0``.
    """
    _check_degree(i)
    f = _nonzero_generic_dim(as_weight(lam), i, p)
    return _bound(psi_order(f, p), p)


def support_variety(lam, i: int, p: int) -> Optional[SupportResult]:
    """Support variety of ``H^i(lambda)`` together with its evidence.

    Returns ``None`` when ``H^i(lambda) = 0``.
    """
    _check_degree(i)
    if p < 2:
        raise ValueError("p must be at least 2")
    lam = as_weight(lam)
    f = _generic_dim(lam, i, p)
    if f is None:
        return None
    order = psi_order(f, p)
    evidence = Evidence(order, not quantum_eval(f, p).is_zero(), _bound(order, p))
    kind = regularity_class(lam, p).kind
    return SupportResult(lam, i, p, SupportClass.from_regularity(kind), evidence)


def projectivity_test(lam, i: int, p: int) -> ProjectivityResult:
    """Decide whether ``H^i(lambda)`` is projective over ``G_1``.

    A module is projective exactly when ``psi_p(t)^3`` divides its generic
    dimension.  Only odd primes are handled here; at ``p = 2`` the generic
    dimension is a polynomial in ``t^2`` and carries no such information.

    Raises
    ------
    ValueError
        If ``p < 3`` or ``H^i(lambda) = 0``.
    """
    _check_degree(i)
    if p < 3:
        raise ValueError("projectivity via psi-orders needs p >= 3; "
                         "use identities.p2_method_check at p = 2")
    f = _nonzero_generic_dim(as_weight(lam), i, p)
    order = psi_order(f, p)
    return ProjectivityResult(order >= 3, order)
