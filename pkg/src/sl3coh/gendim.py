"""Generic dimensions and their evaluation at a primitive p-th root of unity.

``specialize_generic`` sends ``e(r, s)`` to ``t^(-2(r+s))``, turning a
character into a Laurent polynomial whose value at ``t = 1`` is the
dimension.  Evaluation at ``zeta`` happens in ``Q[t]/Phi_p(t)`` with exact
rational coordinates, which is enough room for closed forms that divide by
units such as ``g(zeta)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np

from .charring import Character
from .weights import ROOTS, RHO, as_weight, pairing


class LaurentPoly:
    """An element of ``Z[t, 1/t]`` with exact integer coefficients.

    Stored as the lowest exponent plus a dense coefficient tuple whose first
    and last entries are nonzero.

    Examples
    --------
    >>> f = LaurentPoly({2: 1, 0: 1, -2: 1})
    >>> f.at_one()
    3
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, terms=None, *, low: int = 0, coeffs: Iterable[int] = ()):
        if terms is not None:
            items = {int(e): int(c) for e, c in dict(terms).items() if c}
            if items:
                lo, hi = min(items), max(items)
                dense = [0] * (hi - lo + 1)
                for e, c in items.items():
                    dense[e - lo] = c
                low, coeffs = lo, dense
            else:
                low, coeffs = 0, []
        coeffs = [int(c) for c in coeffs]
        i, j = 0, len(coeffs)
        while i < j and coeffs[i] == 0:
            i += 1
        while j > i and coeffs[j - 1] == 0:
            j -= 1
        self.low = int(low) + i if j > i else 0
        self.coeffs = tuple(coeffs[i:j])

    # -- constructors --------------------------------------------------
    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls(low=exp, coeffs=[coef])

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls(low=0, coeffs=[c])

    @classmethod
    def sym(cls, m: int) -> "LaurentPoly":
        """``t^m - t^(-m)``."""
        return cls({m: 1, -m: -1}) if m else cls()

    # -- inspection ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return not self.is_zero()

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def terms(self) -> list:
        return [(self.low + k, c) for k, c in enumerate(self.coeffs) if c]

    def coefficient(self, e: int) -> int:
        k = e - self.low
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def to_json(self) -> list:
        return [[e, c] for e, c in self.terms()]

    def __repr__(self) -> str:
        if self.is_zero():
            return "LaurentPoly(0)"
        return "LaurentPoly(" + " + ".join(f"{c}t^{e}" for e, c in self.terms()) + ")"

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.low == other.low or not self.coeffs)

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        dense = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            dense[self.low - lo + k] += c
        for k, c in enumerate(other.coeffs):
            dense[other.low - lo + k] += c
        return LaurentPoly(low=lo, coeffs=dense)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(low=self.low, coeffs=[-c for c in self.coeffs])

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(low=self.low, coeffs=[other * c for c in self.coeffs])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        prod = np.convolve(np.array(self.coeffs, dtype=object), np.array(other.coeffs, dtype=object))
        return LaurentPoly(low=self.low + other.low, coeffs=prod.tolist())

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def exact_divide(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient ``self / other``; raises ``ArithmeticError`` on a nonzero remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        n = len(num) - len(den) + 1
        if n <= 0:
            raise ArithmeticError("inexact Laurent division")
        quot = [0] * n
        for k in range(n - 1, -1, -1):
            c, rem = divmod(num[k + len(den) - 1], lead)
            if rem:
                raise ArithmeticError("inexact Laurent division")
            quot[k] = c
            if c:
                for m, d in enumerate(den):
                    num[k + m] -= c * d
        if any(num):
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly(low=self.low - other.low, coeffs=quot)

    # -- calculus and evaluation ----------------------------------------
    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self.terms() if e})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """``f(t^k)``; ``k = -1`` inverts the variable."""
        return LaurentPoly({k * e: c for e, c in self.terms()})

    def at_one(self) -> int:
        return sum(self.coeffs)

    def at(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x ** e for e, c in self.terms()), Fraction(0))


def psi_poly(p: int) -> LaurentPoly:
    """``psi_p(t) = 1 + t + ... + t^(p-1)``."""
    return LaurentPoly(low=0, coeffs=[1] * p)


class CycloElement:
    """An element of ``Q[t]/Phi_p(t)`` for a prime p.

    Coordinates are the coefficients of ``1, zeta, ..., zeta^(p-2)``.
    """

    __slots__ = ("p", "coords")

    def __init__(self, p: int, coords: Iterable):
        coords = [Fraction(c) for c in coords]
        if len(coords) != p - 1:
            raise ValueError("a cyclotomic element needs p-1 coordinates")
        self.p = p
        self.coords = tuple(coords)

    @classmethod
    def from_residues(cls, p: int, residues) -> "CycloElement":
        """Reduce ``sum_k residues[k] zeta^k`` (``k < p``) using ``zeta^(p-1) = -(1 + ... + zeta^(p-2))``."""
        top = Fraction(residues[p - 1])
        return cls(p, [Fraction(residues[k]) - top for k in range(p - 1)])

    @classmethod
    def const(cls, p: int, c) -> "CycloElement":
        return cls(p, [Fraction(c)] + [0] * (p - 2))

    @classmethod
    def zeta_power(cls, p: int, k: int) -> "CycloElement":
        res = [0] * p
        res[k % p] = 1
        return cls.from_residues(p, res)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def is_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def to_json(self) -> list:
        return [[c.numerator, c.denominator] for c in self.coords]

    def __repr__(self) -> str:
        return f"CycloElement(p={self.p}, {[str(c) for c in self.coords]})"

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloElement.const(self.p, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.p == other.p and self.coords == other.coords

    def __hash__(self):
        return hash((self.p, self.coords))

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            return CycloElement.const(self.p, other)
        if isinstance(other, CycloElement) and other.p == self.p:
            return other
        raise TypeError("incompatible cyclotomic operands")

    def __add__(self, other):
        other = self._coerce(other)
        return CycloElement(self.p, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.p, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        p = self.p
        res = [Fraction(0)] * p
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        res[(i + j) % p] += a * b
        return CycloElement.from_residues(p, res)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        """Multiplicative inverse by solving the linear system of multiplication."""
        if self.is_zero():
            raise ZeroDivisionError("zero is not invertible")
        n = self.p - 1
        basis = [CycloElement.zeta_power(self.p, k) for k in range(n)]
        cols = [(self * b).coords for b in basis]
        # rows: coordinate index, columns: basis index, augmented with e_0
        mat = [[cols[j][i] for j in range(n)] + [Fraction(int(i == 0))] for i in range(n)]
        for c in range(n):
            piv = next(r for r in range(c, n) if mat[r][c] != 0)
            mat[c], mat[piv] = mat[piv], mat[c]
            pv = mat[c][c]
            mat[c] = [v / pv for v in mat[c]]
            for r in range(n):
                if r != c and mat[r][c] != 0:
                    f = mat[r][c]
                    mat[r] = [v - f * w for v, w in zip(mat[r], mat[c])]
        return CycloElement(self.p, [mat[i][n] for i in range(n)])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()


# ---------------------------------------------------------------------------


def specialize_generic(c: Character) -> LaurentPoly:
    """Generic dimension: the ring map ``e(r, s) -> t^(-2(r+s))``."""
    if c.is_zero():
        return LaurentPoly()
    h, w = c.shape
    acc = np.zeros(h + w - 1, dtype=object)
    data = c.data
    for i in range(h):
        acc[i:i + w] += data[i].astype(object)
    base = c.origin[0] + c.origin[1]
    return LaurentPoly({-2 * (base + k): int(v) for k, v in enumerate(acc) if v})


_WEYL_DENOMINATOR = LaurentPoly.sym(1) * LaurentPoly.sym(1) * LaurentPoly.sym(2)


def weyl_denominator() -> LaurentPoly:
    """``g(t) = (t - 1/t)^2 (t^2 - 1/t^2)``."""
    return _WEYL_DENOMINATOR


def weyl_generic_dimension(lam) -> LaurentPoly:
    """Weyl's generic dimension formula for ``lam = (r, s)``.

    ``prod_{gamma > 0} (t^{m_gamma} - t^{-m_gamma}) / g(t)`` with pairings
    ``m = r+1, s+1, r+s+2`` against ``rho``-pairings ``1, 1, 2``.  Zero when
    ``lam + rho`` is singular.
    """
    r, s = as_weight(lam)
    num = LaurentPoly.sym(r + 1) * LaurentPoly.sym(s + 1) * LaurentPoly.sym(r + s + 2)
    if num.is_zero():
        return num
    return num.exact_divide(_WEYL_DENOMINATOR)


def _residues(f: LaurentPoly, p: int) -> list:
    res = [0] * p
    for e, c in f.terms():
        res[e % p] += c
    return res


def quantum_eval(f: LaurentPoly, p: int) -> CycloElement:
    """Image of ``f`` under ``t -> zeta``, a primitive p-th root of unity."""
    return CycloElement.from_residues(p, _residues(f, p))


def psi_order(f: LaurentPoly, p: int) -> int:
    """Largest ``k`` with ``psi_p(t)^k`` dividing ``f`` in ``Z[t, 1/t]``.

    Raises
    ------
    ValueError
        For the zero polynomial, whose order is infinite.
    """
    if f.is_zero():
        raise ValueError("psi-order of the zero polynomial is undefined")
    psi = psi_poly(p)
    k = 0
    while True:
        res = _residues(f, p)
        if any(r != res[0] for r in res):
            return k
        f = f.exact_divide(psi)
        k += 1


def derivative_eval(f: LaurentPoly, order: int, p: int) -> CycloElement:
    """Formal derivative of order 1 or 2, evaluated at ``zeta``."""
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    for _ in range(order):
        f = f.derivative()
    return quantum_eval(f, p)


def derivative_at_one(f: LaurentPoly, order: int = 1) -> int:
    """Formal derivative evaluated at ``t = 1`` with no cyclotomic reduction."""
    for _ in range(order):
        f = f.derivative()
    return f.at_one()


def d_phi_p(p: int) -> int:
    """Number of roots whose pairing with ``rho`` is divisible by p."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return sum(1 for g in ROOTS if pairing(RHO, g) % p == 0)
