"""Independent reference implementations used only by the tests.

Nothing here imports the package's arithmetic: Weyl characters come from
Kostant's partition function, cyclotomic questions are answered by sympy,
and Bott's theorem is applied by brute force over the Weyl group.
"""
from __future__ import annotations

import sympy

# Linear Weyl group action on fundamental coordinates, with determinants.
WEYL = (
    ((1, 0, 0, 1), 1),
    ((-1, 0, 1, 1), -1),
    ((1, 1, 0, -1), -1),
    ((-1, -1, 1, 0), 1),
    ((0, 1, -1, -1), 1),
    ((0, -1, -1, 0), -1),
)


def act(m, lam):
    a, b, c, d = m
    return (a * lam[0] + b * lam[1], c * lam[0] + d * lam[1])


def _to_roots(dr: int, ds: int):
    """Coordinates of ``(dr, ds)`` in the basis alpha, beta, or None if not in the root lattice."""
    x, rx = divmod(2 * dr + ds, 3)
    y, ry = divmod(dr + 2 * ds, 3)
    return (x, y) if rx == ry == 0 else None


def kostant_partition(dr: int, ds: int) -> int:
    """Ways to write ``(dr, ds)`` as a sum of positive roots alpha, beta, alpha+beta."""
    xy = _to_roots(dr, ds)
    if xy is None or xy[0] < 0 or xy[1] < 0:
        return 0
    return min(xy) + 1


def kostant_weyl_character(a: int, b: int) -> dict:
    """Weight multiplicities of the Weyl module of dominant ``(a, b)``.

    ``m(mu) = sum_w det(w) P(w(lam + rho) - (mu + rho))``.
    """
    out = {}
    top = a + b
    for x in range(0, 2 * top + 1):
        for y in range(0, 2 * top + 1):
            mu = (a - 2 * x + y, b + x - 2 * y)
            m = 0
            for mat, det in WEYL:
                wr, ws = act(mat, (a + 1, b + 1))
                m += det * kostant_partition(wr - mu[0] - 1, ws - mu[1] - 1)
            if m:
                out[mu] = m
    return out


def bott_table(lam):
    """Characteristic-zero cohomology: ``(degree, dominant weight)`` or None on a wall."""
    x, y = lam[0] + 1, lam[1] + 1
    for mat, _ in WEYL:
        u, v = act(mat, (x, y))
        if u > 0 and v > 0:
            length = {(1, 0, 0, 1): 0, (-1, 0, 1, 1): 1, (1, 1, 0, -1): 1,
                      (-1, -1, 1, 0): 2, (0, 1, -1, -1): 2, (0, -1, -1, 0): 3}[mat]
            return length, (u - 1, v - 1)
    return None


T = sympy.Symbol("t")


def to_sympy(terms) -> sympy.Expr:
    """Laurent polynomial given as ``[(exp, coef), ...]`` as a sympy expression."""
    return sum((sympy.Integer(c) * T ** e for e, c in terms), sympy.Integer(0))


def _as_poly(terms):
    low = min((e for e, _ in terms), default=0)
    return sympy.Poly(sum((sympy.Integer(c) * T ** (e - low) for e, c in terms),
                          sympy.Integer(0)), T), low


def sympy_psi_order(terms, p: int) -> int:
    poly, _ = _as_poly(terms)
    psi = sympy.Poly(sympy.cyclotomic_poly(p, T), T)
    k = 0
    while True:
        q, r = sympy.div(poly, psi, T)
        if not r.is_zero:
            return k
        poly, k = q, k + 1


def sympy_zeta_residue(terms, p: int) -> list:
    """Coefficients (degree < p-1) of the Laurent polynomial reduced mod Phi_p, as Fractions."""
    poly, low = _as_poly(terms)
    phi = sympy.Poly(sympy.cyclotomic_poly(p, T), T)
    shift = sympy.Poly(T ** (low % p), T)
    rem = sympy.rem(poly * shift, phi, T)
    coeffs = rem.all_coeffs()[::-1]
    coeffs += [0] * (p - 1 - len(coeffs))
    return [sympy.Rational(c) for c in coeffs]


def zeta_numeric(terms, p: int) -> complex:
    """Value at ``exp(2 pi i / p)`` in floating point, for sign checks only."""
    import cmath
    z = cmath.exp(2j * cmath.pi / p)
    return sum(c * z ** e for e, c in terms)


def andersen_brute(lam, p: int, depth: int = 4) -> bool:
    """``(r, s)`` or its transpose equals ``(a, b) + p^n (t, -t-1)`` with the stated ranges."""
    r, s = lam
    for rr, ss in ((r, s), (s, r)):
        for n in range(1, depth + 1):
            q = p ** n
            for t in range(1, p):
                a, b = rr - q * t, ss + q * (t + 1)
                if 0 <= a <= q - 2 and 0 <= b <= q - 2:
                    return True
    return False
