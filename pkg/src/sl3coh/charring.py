"""Exact arithmetic in the group ring Z[X(T)] of the A2 weight lattice.

Characters are stored densely: a 2-D integer array covering the bounding box
of the support plus the integer coordinates of its lower corner.  Supports
arising from SL3 modules are hexagons, so the dense box wastes little, and
products and Frobenius twists reduce to slice additions.

Arrays use ``int64`` while the worst-case coefficient bound stays below
``2**62`` and switch to Python-integer object arrays otherwise, so no result
can silently overflow.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np

from .weights import (
    ALPHA,
    BETA,
    RHO,
    Weight,
    WeylElement,
    as_weight,
    dominant_representative,
    restricted,
)

_LIMIT = 2 ** 62


def _maxabs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(max(abs(int(arr.max())), abs(int(arr.min()))))


class Character:
    """An immutable, finitely supported map ``X(T) -> Z``.

    Parameters
    ----------
    data : ndarray
        Multiplicities on a box; ``data[i, j]`` is the multiplicity of
        ``origin + (i, j)``.
    origin : tuple of int
        Lower corner of the box.

    Notes
    -----
    Construct through :meth:`from_dict`, :meth:`monomial` or :meth:`zero`.
    The stored box is always trimmed to the support.
    """

    __slots__ = ("_data", "_origin", "_maxabs", "_hash")

    def __init__(self, data: np.ndarray, origin=(0, 0)):
        data, origin = _trim(np.asarray(data), origin)
        data.setflags(write=False)
        self._data = data
        self._origin = (int(origin[0]), int(origin[1]))
        self._maxabs = None
        self._hash = None

    # -- constructors --------------------------------------------------
    @classmethod
    def zero(cls) -> "Character":
        return cls(np.zeros((0, 0), dtype=np.int64))

    @classmethod
    def monomial(cls, lam, mult: int = 1) -> "Character":
        """The character ``mult * e(lam)``."""
        lam = as_weight(lam)
        return cls(np.array([[mult]], dtype=_dtype_for(abs(mult))), lam)

    @classmethod
    def from_dict(cls, mapping: Mapping) -> "Character":
        items = [(as_weight(k), int(v)) for k, v in mapping.items() if v]
        if not items:
            return cls.zero()
        rs = [w.r for w, _ in items]
        ss = [w.s for w, _ in items]
        r0, s0 = min(rs), min(ss)
        big = max(abs(v) for _, v in items)
        arr = np.zeros((max(rs) - r0 + 1, max(ss) - s0 + 1), dtype=_dtype_for(big))
        for w, v in items:
            arr[w.r - r0, w.s - s0] += v
        return cls(arr, (r0, s0))

    # -- inspection ----------------------------------------------------
    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def origin(self) -> tuple:
        return self._origin

    @property
    def shape(self) -> tuple:
        return self._data.shape

    def is_zero(self) -> bool:
        return self._data.size == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def maxabs(self) -> int:
        if self._maxabs is None:
            self._maxabs = _maxabs(self._data)
        return self._maxabs

    def nnz(self) -> int:
        return int(np.count_nonzero(self._data))

    def dim(self) -> int:
        """Sum of multiplicities (the dimension, or signed dimension of an Euler class)."""
        if self.is_zero():
            return 0
        if self._data.dtype == object:
            return int(sum(int(x) for x in self._data.ravel()))
        return int(self._data.sum(dtype=np.int64)) if self.maxabs() * self._data.size < _LIMIT \
            else int(sum(int(x) for x in self._data.ravel()))

    def __getitem__(self, lam) -> int:
        i = lam[0] - self._origin[0]
        j = lam[1] - self._origin[1]
        h, w = self._data.shape
        if 0 <= i < h and 0 <= j < w:
            return int(self._data[i, j])
        return 0

    def items(self) -> list:
        """Nonzero ``(Weight, multiplicity)`` pairs sorted lexicographically."""
        ii, jj = np.nonzero(self._data)
        r0, s0 = self._origin
        return [(Weight(r0 + int(i), s0 + int(j)), int(self._data[i, j])) for i, j in zip(ii, jj)]

    def support(self) -> list:
        return [w for w, _ in self.items()]

    def to_dict(self) -> dict:
        return dict(self.items())

    def to_json(self) -> list:
        return [{"weight": w.to_json(), "mult": m} for w, m in self.items()]

    @classmethod
    def from_json(cls, obj: Iterable) -> "Character":
        return cls.from_dict({tuple(e["weight"]): e["mult"] for e in obj})

    def __repr__(self) -> str:
        if self.is_zero():
            return "Character(0)"
        terms = self.items()
        body = " + ".join(f"{m}e{tuple(w)}" for w, m in terms[:8])
        if len(terms) > 8:
            body += f" + ... ({len(terms)} terms)"
        return f"Character({body})"

    # -- comparison ----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Character):
            return NotImplemented
        if self._data.shape != other._data.shape:
            return False
        if self.is_zero():
            return True
        return self._origin == other._origin and bool(np.array_equal(self._data, other._data))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._origin, self._data.shape, tuple(self._data.ravel().tolist())))
        return self._hash

    # -- ring operations -----------------------------------------------
    def __neg__(self) -> "Character":
        return _raw(-self._data, self._origin)

    def __add__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        return linear_combination([(1, self), (1, other)])

    def __sub__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            return NotImplemented
        return linear_combination([(1, self), (-1, other)])

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scale(self, int(other))
        if isinstance(other, Character):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scale(self, int(other))
        return NotImplemented


# ---------------------------------------------------------------------------
# internal helpers


def _dtype_for(bound: int):
    return np.int64 if bound < _LIMIT else object


def _raw(data, origin) -> Character:
    return Character(data, origin)


def _trim(data: np.ndarray, origin):
    if data.size == 0:
        return np.zeros((0, 0), dtype=np.int64), (0, 0)
    nz = data != 0
    rows = np.flatnonzero(nz.any(axis=1))
    if rows.size == 0:
        return np.zeros((0, 0), dtype=np.int64), (0, 0)
    cols = np.flatnonzero(nz.any(axis=0))
    i0, i1, j0, j1 = rows[0], rows[-1] + 1, cols[0], cols[-1] + 1
    if (i0, j0) != (0, 0) or (i1, j1) != data.shape:
        data = data[i0:i1, j0:j1].copy()
    elif not data.flags.owndata:
        data = data.copy()
    return data, (origin[0] + int(i0), origin[1] + int(j0))


def scale(c: Character, k: int) -> Character:
    if k == 0 or c.is_zero():
        return Character.zero()
    if c.data.dtype != object and c.maxabs() * abs(k) >= _LIMIT:
        return _raw(c.data.astype(object) * k, c.origin)
    return _raw(c.data * k, c.origin)


def linear_combination(terms) -> Character:
    """Return ``sum_k n_k * c_k`` for pairs ``(n_k, c_k)`` of integers and characters."""
    terms = [(int(n), c) for n, c in terms if n and not c.is_zero()]
    if not terms:
        return Character.zero()
    lo_r = min(c.origin[0] for _, c in terms)
    lo_s = min(c.origin[1] for _, c in terms)
    hi_r = max(c.origin[0] + c.shape[0] for _, c in terms)
    hi_s = max(c.origin[1] + c.shape[1] for _, c in terms)
    bound = sum(abs(n) * c.maxabs() for n, c in terms)
    obj = bound >= _LIMIT or any(c.data.dtype == object for _, c in terms)
    out = np.zeros((hi_r - lo_r, hi_s - lo_s), dtype=object if obj else np.int64)
    if obj:
        out[...] = 0
    for n, c in terms:
        i, j = c.origin[0] - lo_r, c.origin[1] - lo_s
        block = c.data.astype(object) if obj and c.data.dtype != object else c.data
        if n == 1:
            out[i:i + c.shape[0], j:j + c.shape[1]] += block
        else:
            out[i:i + c.shape[0], j:j + c.shape[1]] += n * block
    return _raw(out, (lo_r, lo_s))


def twisted_products(terms, p: int) -> Character:
    """Return ``sum_k a_k * (b_k)^F`` where ``F`` scales weights by ``p``.

    Parameters
    ----------
    terms : iterable of (Character, Character)
        Pairs ``(a_k, b_k)``.  The twist of ``b_k`` is never materialized:
        each nonzero of one factor contributes one strided slice addition.
    p : int
        Twisting factor; ``p = 1`` gives the ordinary product.
    """
    terms = [(a, b) for a, b in terms if not a.is_zero() and not b.is_zero()]
    if not terms:
        return Character.zero()
    boxes = []
    bound = 0
    obj = False
    for a, b in terms:
        o = (a.origin[0] + p * b.origin[0], a.origin[1] + p * b.origin[1])
        sh = (a.shape[0] + p * (b.shape[0] - 1), a.shape[1] + p * (b.shape[1] - 1))
        boxes.append((o, sh))
        bound += a.maxabs() * b.maxabs() * min(a.nnz(), b.nnz())
        obj = obj or a.data.dtype == object or b.data.dtype == object
    obj = obj or bound >= _LIMIT
    lo_r = min(o[0] for o, _ in boxes)
    lo_s = min(o[1] for o, _ in boxes)
    hi_r = max(o[0] + sh[0] for o, sh in boxes)
    hi_s = max(o[1] + sh[1] for o, sh in boxes)
    out = np.zeros((hi_r - lo_r, hi_s - lo_s), dtype=object if obj else np.int64)
    if obj:
        out[...] = 0
    for (a, b), (o, _) in zip(terms, boxes):
        A = a.data.astype(object) if obj and a.data.dtype != object else a.data
        B = b.data.astype(object) if obj and b.data.dtype != object else b.data
        base_r, base_s = o[0] - lo_r, o[1] - lo_s
        hb, wb = B.shape
        ha, wa = A.shape
        if a.nnz() <= b.nnz():
            for i, j in zip(*np.nonzero(A)):
                r0, s0 = base_r + i, base_s + j
                out[r0:r0 + p * (hb - 1) + 1:p, s0:s0 + p * (wb - 1) + 1:p] += A[i, j] * B
        else:
            for i, j in zip(*np.nonzero(B)):
                r0, s0 = base_r + p * i, base_s + p * j
                out[r0:r0 + ha, s0:s0 + wa] += B[i, j] * A
    return _raw(out, (lo_r, lo_s))


# ---------------------------------------------------------------------------
# public operations


def multiply(c1: Character, c2: Character) -> Character:
    """Group-ring product; ``e(lam) e(mu) = e(lam + mu)``."""
    return twisted_products([(c1, c2)], 1)


def frobenius_twist(c: Character, p: int) -> Character:
    """Apply ``e(lam) -> e(p lam)``."""
    if c.is_zero():
        return c
    h, w = c.shape
    out = np.zeros((p * (h - 1) + 1, p * (w - 1) + 1), dtype=c.data.dtype)
    if c.data.dtype == object:
        out[...] = 0
    out[::p, ::p] = c.data
    return _raw(out, (p * c.origin[0], p * c.origin[1]))


def tau(c: Character) -> Character:
    """Swap the coordinates of every weight (the graph automorphism of A2)."""
    if c.is_zero():
        return c
    return _raw(c.data.T.copy(), (c.origin[1], c.origin[0]))


def dual(c: Character) -> Character:
    """Negate every weight."""
    if c.is_zero():
        return c
    h, w = c.shape
    return _raw(c.data[::-1, ::-1].copy(), (-(c.origin[0] + h - 1), -(c.origin[1] + w - 1)))


def shift(c: Character, lam) -> Character:
    """Multiply by ``e(lam)``."""
    if c.is_zero():
        return c
    return _raw(c.data, (c.origin[0] + lam[0], c.origin[1] + lam[1]))


def is_w_invariant(c: Character) -> bool:
    """True when ``m(mu) = m(w mu)`` for every ``w`` in W (linear action)."""
    d = c.to_dict()
    return all(d.get(w.apply(mu), 0) == m for mu, m in d.items() for w in WeylElement)


# ---------------------------------------------------------------------------
# Weyl characters by exact division


def _cumsum_exact(q: np.ndarray, axis: int) -> np.ndarray:
    """Divide by ``1 - e(-gamma)`` along an array axis; the running sum must close."""
    out = np.cumsum(q, axis=axis)
    edge = out[-1, :] if axis == 0 else out[:, -1]
    if np.any(edge != 0):
        raise ArithmeticError("inexact division in the Weyl quotient")
    return out


@lru_cache(maxsize=4096)
def _dominant_weyl(a: int, b: int) -> Character:
    """Weyl character of a dominant weight as the quotient of alternating sums.

    Work in root coordinates relative to the highest weight: the cell
    ``(x, y)`` stands for ``lam - x alpha - y beta``.  The numerator
    ``sum_w det(w) e(w . lam)`` has six cells, and dividing by
    ``1 - e(-alpha)``, ``1 - e(-beta)`` and ``1 - e(-alpha-beta)`` becomes a
    cumulative sum along the axes and the diagonal.  Each division is checked
    to be exact before the result is moved back to fundamental coordinates.
    """
    lam = Weight(a, b)
    cells = []
    for w in WeylElement:
        mu = w.apply(lam + RHO) - RHO
        dr, ds = lam.r - mu.r, lam.s - mu.s
        x, rx = divmod(2 * dr + ds, 3)
        y, ry = divmod(dr + 2 * ds, 3)
        assert rx == 0 and ry == 0 and x >= 0 and y >= 0
        cells.append((x, y, w.det))
    X = max(c[0] for c in cells) + 1
    Y = max(c[1] for c in cells) + 1
    dtype = np.int64 if X * Y < _LIMIT else object
    q = np.zeros((X, Y), dtype=dtype)
    # diagonal division: each numerator cell spreads along its diagonal ray
    for x, y, sign in cells:
        k = min(X - x, Y - y)
        q[np.arange(x, x + k), np.arange(y, y + k)] += sign
    if np.any(q[-1, :] != 0) or np.any(q[:, -1] != 0):
        raise ArithmeticError("inexact division in the Weyl quotient")
    q = _cumsum_exact(q, 0)
    q = _cumsum_exact(q, 1)
    xs, ys = np.nonzero(q)
    rs = a - 2 * xs + ys
    ss = b + xs - 2 * ys
    r0, s0 = int(rs.min()), int(ss.min())
    out = np.zeros((int(rs.max()) - r0 + 1, int(ss.max()) - s0 + 1), dtype=dtype)
    out[rs - r0, ss - s0] = q[xs, ys]
    return _raw(out, (r0, s0))


def weyl_character(lam) -> Character:
    """Euler class ``chi(lam)`` given by Weyl's character formula.

    For dominant ``lam`` this is the character of ``H^0(lam)``.  For other
    regular ``lam + rho`` it is ``det(w) chi(w . lam)``; on a wall it is zero.
    """
    rep = dominant_representative(lam)
    if rep is None:
        return Character.zero()
    _, mu, sign = rep
    c = _dominant_weyl(mu.r, mu.s)
    return c if sign == 1 else -c


def weyl_dimension(lam) -> int:
    """Signed Weyl dimension ``(r+1)(s+1)(r+s+2)/2``; valid for every weight."""
    r, s = lam
    return (r + 1) * (s + 1) * (r + s + 2) // 2


@lru_cache(maxsize=512)
def _simple(a: int, b: int, p: int) -> Character:
    c = weyl_character((a, b))
    if a + b >= p - 1:
        c = c - weyl_character((p - 2 - b, p - 2 - a))
    return c


def simple_character(a: int, b: int, p: int) -> Character:
    """Character of the simple module ``L(a, b)`` for a restricted weight.

    Uses the SL3 dichotomy: ``L(a, b) = H^0(a, b)`` when ``a + b <= p - 2``
    and otherwise ``ch L(a, b) = chi(a, b) - chi(p-2-b, p-2-a)``.

    Raises
    ------
    ValueError
        If ``(a, b)`` is not p-restricted.
    """
    if not restricted((a, b), p):
        raise ValueError(f"({a}, {b}) is not {p}-restricted")
    return _simple(int(a), int(b), int(p))


def simple_dimension(a: int, b: int, p: int) -> int:
    d = weyl_dimension((a, b))
    if a + b >= p - 1:
        d -= weyl_dimension((p - 2 - b, p - 2 - a))
    return d


N_ALPHA = Character.from_dict({(-ALPHA): 1, (0, 0): 1})
N_BETA = Character.from_dict({(-BETA): 1, (0, 0): 1})
