"""SVG picture of the weight lattice with the regions where both ``H^1`` and
``H^2`` are nonzero, and the values of ``S^1`` and ``T^1`` written next to
the weights they describe.

``S^1(r, s)`` is placed at ``(pr, ps)`` and ``T^1(r, s)`` at
``(p-2+pr, p-2+ps)``, since those are the weights whose quantum dimensions
they equal.  Output is deterministic: fixed ordering and fixed float format.
"""
from __future__ import annotations

import math

from .identities import st_values
from .weights import Weight

MAX_EXTENT = 400
_UNIT = 6.0
_SQRT3_2 = math.sqrt(3) / 2


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def _xy(r: float, s: float) -> tuple:
    """Plane position of ``r*omega_1 + s*omega_2`` with a 60 degree angle, y pointing down."""
    return (_UNIT * (r + 0.5 * s), -_UNIT * _SQRT3_2 * s)


def _fmt(v: float) -> str:
    out = f"{v:.2f}"
    return "0.00" if out == "-0.00" else out


def _points(corners) -> str:
    return " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in (_xy(r, s) for r, s in corners))


def shaded_regions(p: int, extent: int) -> list:
    """Parallelograms ``(a, b) + p^n (t, -t-1)`` with ``0 <= a, b <= p^n - 2`` and transposes.

    Each region is returned as ``(n, t, swapped, corners)`` with corners in
    weight coordinates, padded by half a lattice step.
    """
    regions = []
    n = 1
    while p ** n <= extent:
        q = p ** n
        for t in range(1, p):
            r0, s0 = q * t, -q * (t + 1)
            lo_r, hi_r = r0 - 0.5, r0 + q - 2 + 0.5
            lo_s, hi_s = s0 - 0.5, s0 + q - 2 + 0.5
            if lo_r > extent or hi_s < -extent:
                continue
            box = [(lo_r, lo_s), (hi_r, lo_s), (hi_r, hi_s), (lo_r, hi_s)]
            regions.append((n, t, False, box))
            regions.append((n, t, True, [(s, r) for r, s in box]))
        n += 1
    return regions


def st_labels(p: int, box: int) -> list:
    """Labels ``(kind, tail, lattice_point, value)`` for tails with ``(r+1)(s+1) < 0``."""
    labels = []
    for r in range(-box, box + 1):
        for s in range(-box, box + 1):
            if (r + 1) * (s + 1) >= 0:
                continue
            rec = st_values(1, (r, s), p)
            if rec.S:
                labels.append(("S", Weight(r, s), Weight(p * r, p * s), rec.S))
            if rec.T:
                labels.append(("T", Weight(r, s), Weight(p - 2 + p * r, p - 2 + p * s), rec.T))
    return labels


def render_svg(p: int, box: int) -> str:
    """Render the annotated lattice for tails ``|r|, |s| <= box``.

    Raises
    ------
    ValueError
        If ``p`` is not prime, ``box`` is negative, or the picture would
        exceed :data:`MAX_EXTENT` lattice steps.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if box < 0:
        raise ValueError("box must be nonnegative")
    extent = p * (box + 1)
    if extent > MAX_EXTENT:
        raise ValueError(f"picture too large: extent {extent} exceeds {MAX_EXTENT}")
    corners = [_xy(r, s) for r in (-extent, extent) for s in (-extent, extent)]
    xs = [c[0] for c in corners]
    ys = [c[1] for c in corners]
    pad = 4 * _UNIT
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" '
        f'width="{_fmt(w)}" height="{_fmt(h)}">',
        f'<title>SL3 weight lattice, p={p}</title>',
        '<g id="regions" fill="#9fc5e8" fill-opacity="0.6" stroke="#3d85c6" stroke-width="0.5">',
    ]
    for n, t, swapped, box_corners in shaded_regions(p, extent):
        out.append(f'<polygon data-n="{n}" data-t="{t}" data-swapped="{int(swapped)}" '
                   f'points="{_points(box_corners)}"/>')
    out.append("</g>")
    (ax, ay), (bx, by) = _xy(-extent, extent - 1), _xy(extent - 1, -extent)
    out.append('<g id="axes" stroke="#444444" stroke-width="0.6">')
    out.append(f'<line id="fundamental-line" x1="{_fmt(ax)}" y1="{_fmt(ay)}" '
               f'x2="{_fmt(bx)}" y2="{_fmt(by)}" stroke="#cc0000" stroke-width="1"/>')
    for r0, s0, r1, s1 in ((-extent, 0, extent, 0), (0, -extent, 0, extent)):
        (x1, y1), (x2, y2) = _xy(r0, s0), _xy(r1, s1)
        out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>')
    out.append("</g>")
    if p >= 3:
        out.append('<g id="labels" font-family="sans-serif" font-size="5" text-anchor="middle">')
        for kind, tail, pt, value in st_labels(p, box):
            x, y = _xy(pt.r, pt.s)
            color = "#000000" if kind == "S" else "#38761d"
            out.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}" fill="{color}" data-kind="{kind}" '
                       f'data-r="{pt.r}" data-s="{pt.s}" data-tail="{tail.r},{tail.s}">{value}</text>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
