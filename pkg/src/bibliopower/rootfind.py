"""Bracketed scalar root finding (Brent's method).

Used to invert CDFs and to solve for the effect magnitude that meets a
power target. Callers must supply a sign-changing bracket.
"""

from __future__ import annotations

import math

_EPS = 2.220446049250313e-16


def brent(f, x1: float, x2: float, xtol: float = 1e-12, max_iter: int = 200) -> float:
    """Root of f in [x1, x2]; f(x1) and f(x2) must differ in sign."""
    a, b = x1, x2
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise ValueError(f"root not bracketed: f({x1})={fa}, f({x2})={fb}")
    c, fc = b, fb
    d = e = b - a
    for _ in range(max_iter):
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol1 = 2.0 * _EPS * abs(b) + 0.5 * xtol
        xm = 0.5 * (c - b)
        if abs(xm) <= tol1 or fb == 0.0:
            return b
        if abs(e) >= tol1 and abs(fa) > abs(fb):
            # inverse quadratic interpolation, secant when a == c
            s = fb / fa
            if a == c:
                p = 2.0 * xm * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * xm * q - abs(tol1 * q), abs(e * q)):
                e = d
                d = p / q
            else:
                d = e = xm
        else:
            d = e = xm
        a, fa = b, fb
        b += d if abs(d) > tol1 else math.copysign(tol1, xm)
        fb = f(b)
    raise ArithmeticError("brent: no convergence within max_iter")
