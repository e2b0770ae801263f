"""Exact integration of trigonometric sums with polynomial weights.

Every closed-form function handled by this package -- potentials, the
eigenfunctions and associated functions of the unperturbed boundary-value
problems, and their biorthogonal partners -- is a finite sum of terms

    p(x) * cos(pi*M*x)    or    p(x) * sin(pi*M*x)

with an integer frequency M >= 0 and a low-degree polynomial p with complex
coefficients.  Products of two such terms reduce to the same form (the
frequencies add and subtract, staying integer), so all L2[0,1] inner products
between them evaluate in closed form.  No quadrature enters this layer.
"""

from __future__ import annotations

import numbers

import numpy as np

COS = 0
SIN = 1

_ZERO_TOL = 0.0  # coefficients are dropped only when exactly zero


def _poly_trim(coeffs):
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return tuple(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _poly_mul(a, b):
    out = [0j] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return tuple(out)


def _poly_scale(a, c):
    return tuple(c * ai for ai in a)


def _normalize_term(coeffs, freq, kind):
    """Bring a term to canonical form: freq >= 0, drop exact zeros."""
    if freq < 0:
        freq = -freq
        if kind == SIN:
            coeffs = _poly_scale(coeffs, -1)
    if freq == 0 and kind == SIN:
        return None
    coeffs = _poly_trim(coeffs)
    if not coeffs:
        return None
    return coeffs, freq, kind


def _int_weighted(coeffs, freq, kind):
    """Integral over [0,1] of p(x)*trig(pi*freq*x) for polynomial p."""
    if freq == 0:
        if kind == SIN:
            return 0j
        return sum(c / (d + 1) for d, c in enumerate(coeffs))
    w = np.pi * freq
    sign = -1.0 if freq % 2 else 1.0  # cos(pi*freq)
    # C_p = int x^p cos(w x), S_p = int x^p sin(w x); standard recursion.
    deg = len(coeffs) - 1
    C = [0j] * (deg + 1)
    S = [0j] * (deg + 1)
    C[0] = 0.0
    S[0] = (1.0 - sign) / w
    for p in range(1, deg + 1):
        C[p] = -(p / w) * S[p - 1]
        S[p] = -sign / w + (p / w) * C[p - 1]
    table = C if kind == COS else S
    return sum(c * table[d] for d, c in enumerate(coeffs))


class TrigPoly:
    """A finite sum of polynomial-weighted harmonics on [0,1].

    Immutable.  Supports +, -, scalar and pointwise *, conjugation, exact
    integration over [0,1], the L2 inner product (second factor conjugated),
    and evaluation at scalar or array arguments.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged = {}
        for coeffs, freq, kind in terms:
            norm = _normalize_term(tuple(coeffs), int(freq), int(kind))
            if norm is None:
                continue
            coeffs, freq, kind = norm
            key = (freq, kind)
            if key in merged:
                merged[key] = _poly_add(merged[key], coeffs)
            else:
                merged[key] = coeffs
        final = []
        for (freq, kind), coeffs in sorted(merged.items()):
            coeffs = _poly_trim(coeffs)
            if coeffs:
                final.append((coeffs, freq, kind))
        object.__setattr__(self, "terms", tuple(final))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def harmonic(cls, coeff, freq, kind, poly=(1,)):
        """coeff * p(x) * trig(pi*freq*x)."""
        return cls(((_poly_scale(tuple(poly), coeff), freq, kind),))

    @classmethod
    def const(cls, c):
        return cls((((c,), 0, COS),))

    @classmethod
    def poly(cls, *coeffs):
        """Polynomial c0 + c1*x + ... as a frequency-zero term."""
        return cls(((tuple(coeffs), 0, COS),))

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return TrigPoly(self.terms + other.terms)

    def __neg__(self):
        return TrigPoly(tuple((_poly_scale(c, -1), f, k) for c, f, k in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return TrigPoly(
                tuple((_poly_scale(c, other), f, k) for c, f, k in self.terms)
            )
        if not isinstance(other, TrigPoly):
            return NotImplemented
        out = []
        for ca, fa, ka in self.terms:
            for cb, fb, kb in other.terms:
                coeffs = _poly_scale(_poly_mul(ca, cb), 0.5)
                # product-to-sum: frequencies fa +/- fb stay integer
                if ka == COS and kb == COS:
                    out.append((coeffs, fa - fb, COS))
                    out.append((coeffs, fa + fb, COS))
                elif ka == SIN and kb == SIN:
                    out.append((coeffs, fa - fb, COS))
                    out.append((_poly_scale(coeffs, -1), fa + fb, COS))
                elif ka == SIN and kb == COS:
                    out.append((coeffs, fa + fb, SIN))
                    out.append((coeffs, fa - fb, SIN))
                else:  # cos * sin
                    out.append((coeffs, fa + fb, SIN))
                    out.append((_poly_scale(coeffs, -1), fa - fb, SIN))
        return TrigPoly(out)

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self * other
        return NotImplemented

    def conjugate(self):
        return TrigPoly(
            tuple((tuple(x.conjugate() for x in c), f, k) for c, f, k in self.terms)
        )

    # -- analysis -----------------------------------------------------------

    def integral(self):
        """Exact integral over [0,1]."""
        return complex(sum(_int_weighted(c, f, k) for c, f, k in self.terms))

    def inner(self, other):
        """L2 inner product; the second factor is conjugated."""
        return (self * other.conjugate()).integral()

    def norm_sq(self):
        return self.inner(self).real

    @property
    def is_zero(self):
        return not self.terms

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=complex)
        for coeffs, freq, kind in self.terms:
            p = np.zeros(x.shape, dtype=complex)
            for c in reversed(coeffs):
                p = p * x + c
            trig = np.cos(np.pi * freq * x) if kind == COS else np.sin(np.pi * freq * x)
            out = out + p * trig
        if out.ndim == 0:
            return complex(out)
        return out

    def __repr__(self):
        return f"TrigPoly({len(self.terms)} terms)"
