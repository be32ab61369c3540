"""The A2 weight lattice in fundamental-weight coordinates.

A weight is a pair ``(r, s)`` meaning ``r*omega_alpha + s*omega_beta``.  The
simple roots are ``alpha = (2, -1)`` and ``beta = (-1, 2)`` and the Weyl vector
is ``rho = (1, 1)``.  Every coroot pairing is an integer linear form in
``(r, s)``, so no rational arithmetic is ever needed here.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional


class Weight(NamedTuple):
    """A weight ``r*omega_alpha + s*omega_beta`` with arbitrary-size integer coordinates."""

    r: int
    s: int

    def __add__(self, other):  # type: ignore[override]
        return Weight(self.r + other[0], self.s + other[1])

    def __sub__(self, other):
        return Weight(self.r - other[0], self.s - other[1])

    def __neg__(self):
        return Weight(-self.r, -self.s)

    def __mul__(self, k):  # type: ignore[override]
        if not isinstance(k, int):
            return NotImplemented
        return Weight(k * self.r, k * self.s)

    __rmul__ = __mul__

    def to_json(self) -> list:
        return [int(self.r), int(self.s)]


def as_weight(x) -> Weight:
    """Coerce a 2-sequence of integers to :class:`Weight`."""
    if isinstance(x, Weight):
        return x
    r, s = x
    return Weight(int(r), int(s))


ZERO = Weight(0, 0)
ALPHA = Weight(2, -1)
BETA = Weight(-1, 2)
RHO = Weight(1, 1)

# Coroots, written as the coefficient vector of the linear form lambda -> <lambda, gamma^v>.
_COROOT_FORM = {
    ALPHA: (1, 0),
    BETA: (0, 1),
    ALPHA + BETA: (1, 1),
    -ALPHA: (-1, 0),
    -BETA: (0, -1),
    -(ALPHA + BETA): (-1, -1),
}
POSITIVE_ROOTS = (ALPHA, BETA, ALPHA + BETA)
ROOTS = tuple(_COROOT_FORM)
SIMPLE_ROOTS = (ALPHA, BETA)
COXETER_NUMBER = 3


def pairing(lam, root) -> int:
    """Return ``<lam, root^v>`` for a root of A2."""
    c1, c2 = _COROOT_FORM[as_weight(root)]
    return c1 * lam[0] + c2 * lam[1]


class WeylElement(enum.Enum):
    """The six elements of the Weyl group of A2, acting linearly on weights.

    Each value stores the integer matrix of the linear action in fundamental
    coordinates together with the length of the element.
    """

    IDENTITY = ((1, 0, 0, 1), 0)
    S_ALPHA = ((-1, 0, 1, 1), 1)
    S_BETA = ((1, 1, 0, -1), 1)
    S_ALPHA_S_BETA = ((-1, -1, 1, 0), 2)
    S_BETA_S_ALPHA = ((0, 1, -1, -1), 2)
    W0 = ((0, -1, -1, 0), 3)

    @property
    def matrix(self):
        return self.value[0]

    @property
    def length(self) -> int:
        return self.value[1]

    @property
    def det(self) -> int:
        return -1 if self.length % 2 else 1

    def apply(self, lam) -> Weight:
        """Linear action on a weight."""
        a, b, c, d = self.matrix
        return Weight(a * lam[0] + b * lam[1], c * lam[0] + d * lam[1])

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        a, b, c, d = self.matrix
        e, f, g, h = other.matrix
        prod = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        for w in WeylElement:
            if w.matrix == prod:
                return w
        raise AssertionError("Weyl group not closed")  # pragma: no cover

    def inverse(self) -> "WeylElement":
        for w in WeylElement:
            if (self @ w) is WeylElement.IDENTITY:
                return w
        raise AssertionError("no inverse")  # pragma: no cover


def dot_action(w: WeylElement, lam) -> Weight:
    """Return ``w . lam = w(lam + rho) - rho``."""
    return w.apply(as_weight(lam) + RHO) - RHO


def on_wall(lam) -> bool:
    """True when ``lam + rho`` is fixed by some reflection of W."""
    r, s = lam
    return (r + 1) * (s + 1) * (r + s + 2) == 0


def dominant_representative(lam) -> Optional[tuple]:
    """Find the unique ``w`` with ``w . lam`` dominant.

    Parameters
    ----------
    lam : Weight
        Any weight.

    Returns
    -------
    tuple or None
        ``(w, mu, sign)`` with ``mu = w . lam`` dominant and ``sign = det(w)``,
        or ``None`` when ``lam + rho`` lies on a wall.
    """
    lam = as_weight(lam)
    if on_wall(lam):
        return None
    for w in WeylElement:
        mu = dot_action(w, lam)
        if mu.r >= 0 and mu.s >= 0:
            return w, mu, w.det
    raise AssertionError("regular weight without dominant representative")  # pragma: no cover


def is_dominant(lam) -> bool:
    return lam[0] >= 0 and lam[1] >= 0


def wht(lam) -> int:
    """Weighted height; for A2 with all ``d_alpha = 1`` it equals ``r + s``.

    In the root basis ``lam = ((2r+s)/3) alpha + ((r+2s)/3) beta`` and the two
    coefficients sum to ``r + s``.
    """
    return lam[0] + lam[1]


class Regularity(enum.Enum):
    REGULAR = "Regular"
    SUBREGULAR = "Subregular"
    STEINBERG = "Steinberg"


@dataclass(frozen=True)
class RegularityClass:
    """Regularity of a weight modulo p.

    Attributes
    ----------
    kind : Regularity
        Classification by the size of ``roots``.
    roots : frozenset of Weight
        The roots ``gamma`` with ``<lam + rho, gamma^v>`` divisible by p.
    """

    kind: Regularity
    roots: frozenset

    def __len__(self):
        return len(self.roots)


_KIND_BY_SIZE = {0: Regularity.REGULAR, 2: Regularity.SUBREGULAR, 6: Regularity.STEINBERG}


def regularity_class(lam, p: int) -> RegularityClass:
    """Classify ``lam`` by the roots whose pairing with ``lam + rho`` lies in ``pZ``."""
    if p < 2:
        raise ValueError("p must be at least 2")
    shifted = as_weight(lam) + RHO
    roots = frozenset(g for g in ROOTS if pairing(shifted, g) % p == 0)
    return RegularityClass(_KIND_BY_SIZE[len(roots)], roots)


def in_steinberg_block(lam, p: int) -> bool:
    """True when ``lam + rho`` is divisible by p, i.e. all six roots are p-singular."""
    return (lam[0] + 1) % p == 0 and (lam[1] + 1) % p == 0


def restricted(lam, p: int) -> bool:
    return 0 <= lam[0] < p and 0 <= lam[1] < p


def digit_split(lam, p: int) -> tuple:
    """Write ``lam = (a + p r, b + p s)`` with ``0 <= a, b < p``; return ``((a, b), (r, s))``."""
    r, a = divmod(lam[0], p)
    s, b = divmod(lam[1], p)
    return Weight(a, b), Weight(r, s)


@dataclass(frozen=True)
class PAdicExpansion:
    """``lam = sum_i p^i (a_i, b_i) + p^k (r0, s0)`` with ``r0 + s0 = -1``."""

    digits: tuple
    tail: Weight
    p: int

    @property
    def k(self) -> int:
        return len(self.digits)

    @property
    def low(self) -> Weight:
        """The combined low part ``(x, y) = sum_i p^i (a_i, b_i)``."""
        x = y = 0
        for i, (a, b) in enumerate(self.digits):
            x += a * self.p ** i
            y += b * self.p ** i
        return Weight(x, y)

    def reassemble(self) -> Weight:
        return self.low + self.tail * (self.p ** self.k)


def p_adic_expand(lam, p: int, normalize: bool = True) -> PAdicExpansion:
    """Expand a weight with ``(r+1)(s+1) <= 0`` in base p down to the fundamental line.

    Parameters
    ----------
    lam : Weight
        Weight to expand.
    p : int
        The prime.
    normalize : bool, default True
        Stop at the first tail lying on ``r0 + s0 = -1``.  Then the top digit
        has ``a + b != p - 1`` unless ``lam`` itself is on the line.  Without
        normalization the expansion continues until the tail is ``(0, -1)`` or
        ``(-1, 0)``.

    Raises
    ------
    ValueError
        If ``(r+1)(s+1) > 0``, or if ``lam`` lies on ``r = -1`` or ``s = -1``
        with ``r + s < -1``, where the tails never reach the line.
    """
    lam = as_weight(lam)
    prod = (lam.r + 1) * (lam.s + 1)
    if prod > 0 or (prod == 0 and lam.r + lam.s < -1):
        raise ValueError(f"no p-adic expansion for {tuple(lam)}")
    digits = []
    cur = lam

    def done(w):
        if normalize:
            return w.r + w.s == -1
        return w in ((0, -1), (-1, 0))

    while not done(cur):
        d, cur = digit_split(cur, p)
        digits.append(d)
    return PAdicExpansion(tuple(digits), cur, p)
