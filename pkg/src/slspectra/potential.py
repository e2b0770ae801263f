"""Trigonometric-polynomial potentials and their Fourier functionals.

The potential q is restricted to a finite zero-mean trigonometric polynomial

    q(x) = sum_k  a_k cos(2 pi k x) + b_k sin(2 pi k x),     k = 1..K,

with complex coefficients.  The restriction makes every Fourier functional of
q exact: the weighted moments (x^p q, trig 2 pi n x) are sums of closed-form
integrals, so the asymptotic formulas downstream carry no quadrature error.
The zero mean is structural -- there is no slot for a constant term.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from ._trig import COS, SIN, TrigPoly


def _as_complex_tuple(values):
    out = tuple(complex(v) for v in values)
    for v in out:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("potential coefficients must be finite")
    return out


@dataclass(frozen=True)
class TrigPotential:
    """Zero-mean trigonometric polynomial on [0,1].

    ``cos_coeffs[k-1]`` multiplies cos(2 pi k x) and ``sin_coeffs[k-1]``
    multiplies sin(2 pi k x).  The two tuples may have different lengths;
    missing entries are zero.
    """

    cos_coeffs: tuple = ()
    sin_coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cos_coeffs", _as_complex_tuple(self.cos_coeffs))
        object.__setattr__(self, "sin_coeffs", _as_complex_tuple(self.sin_coeffs))

    @property
    def degree(self):
        """Truncation degree K (at least 1, even for the zero potential)."""
        return max(len(self.cos_coeffs), len(self.sin_coeffs), 1)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.cos_coeffs + self.sin_coeffs)

    def sup_bound(self):
        """Cheap upper bound for sup |q| (coefficient l1 norm)."""
        return float(sum(abs(c) for c in self.cos_coeffs + self.sin_coeffs))

    def as_trigpoly(self):
        terms = []
        for k, a in enumerate(self.cos_coeffs, start=1):
            terms.append(((a,), 2 * k, COS))
        for k, b in enumerate(self.sin_coeffs, start=1):
            terms.append(((b,), 2 * k, SIN))
        return TrigPoly(terms)

    def coeff_arrays(self):
        """Aligned complex coefficient arrays (cos, sin) of equal length."""
        k = self.degree
        a = np.zeros(k, dtype=complex)
        b = np.zeros(k, dtype=complex)
        a[: len(self.cos_coeffs)] = self.cos_coeffs
        b[: len(self.sin_coeffs)] = self.sin_coeffs
        return a, b

    def conjugate(self):
        return TrigPotential(
            tuple(c.conjugate() for c in self.cos_coeffs),
            tuple(c.conjugate() for c in self.sin_coeffs),
        )

    # -- JSON wire format: {"cos": {"1": [re, im], ...}, "sin": {...}} -------

    @classmethod
    def from_dict(cls, data):
        coeffs = {"cos": {}, "sin": {}}
        for kind in ("cos", "sin"):
            for key, val in data.get(kind, {}).items():
                k = int(key)
                if k < 1:
                    raise ValueError(f"harmonic index must be >= 1, got {k}")
                if isinstance(val, (list, tuple)):
                    re, im = val
                    coeffs[kind][k] = complex(float(re), float(im))
                else:
                    coeffs[kind][k] = complex(val)
        kmax_c = max(coeffs["cos"], default=0)
        kmax_s = max(coeffs["sin"], default=0)
        return cls(
            tuple(coeffs["cos"].get(k, 0j) for k in range(1, kmax_c + 1)),
            tuple(coeffs["sin"].get(k, 0j) for k in range(1, kmax_s + 1)),
        )

    def to_dict(self):
        return {
            "cos": {
                str(k): [c.real, c.imag]
                for k, c in enumerate(self.cos_coeffs, start=1)
                if c != 0
            },
            "sin": {
                str(k): [c.real, c.imag]
                for k, c in enumerate(self.sin_coeffs, start=1)
                if c != 0
            },
        }


def load_potential(path):
    """Read a potential from its JSON file format."""
    with open(path) as fh:
        return TrigPotential.from_dict(json.load(fh))


def eval_potential(q: TrigPotential, x):
    """q(x) at a scalar or array argument in [0,1]."""
    x_arr = np.asarray(x, dtype=float)
    out = np.zeros(x_arr.shape, dtype=complex)
    for k, a in enumerate(q.cos_coeffs, start=1):
        out = out + a * np.cos(2 * np.pi * k * x_arr)
    for k, b in enumerate(q.sin_coeffs, start=1):
        out = out + b * np.sin(2 * np.pi * k * x_arr)
    if out.ndim == 0:
        return complex(out)
    return out


def weighted_fourier(q: TrigPotential, weight_power: int, kind: str, n: int) -> complex:
    """Exact moment (x^p q, trig 2 pi n x) for p in {0, 1, 2}.

    ``kind`` is "cos" or "sin".  Computed by term-wise closed-form
    integration of the trigonometric products, not by quadrature.
    """
    if weight_power not in (0, 1, 2):
        raise ValueError("weight_power must be 0, 1 or 2")
    if n < 0:
        raise ValueError("harmonic index must be nonnegative")
    kind_code = {"cos": COS, "sin": SIN}[kind]
    weight_poly = (0,) * weight_power + (1,)
    probe = TrigPoly.harmonic(1.0, 2 * n, kind_code, poly=weight_poly)
    return (q.as_trigpoly() * probe).integral()


@dataclass(frozen=True)
class FourierFunctionals:
    """The six weighted moments of q at harmonic n.

    c/s carry weight 1, cx/sx weight x, cxx/sxx weight x^2; the trig factor
    is cos(2 pi n x) resp. sin(2 pi n x).
    """

    n: int
    c: complex
    s: complex
    cx: complex
    sx: complex
    cxx: complex
    sxx: complex


def fourier_functionals(q: TrigPotential, n: int) -> FourierFunctionals:
    return FourierFunctionals(
        n=n,
        c=weighted_fourier(q, 0, "cos", n),
        s=weighted_fourier(q, 0, "sin", n),
        cx=weighted_fourier(q, 1, "cos", n),
        sx=weighted_fourier(q, 1, "sin", n),
        cxx=weighted_fourier(q, 2, "cos", n),
        sxx=weighted_fourier(q, 2, "sin", n),
    )


FunctionLike = Union[TrigPotential, TrigPoly, Callable, np.ndarray]


def _as_exact(f):
    if isinstance(f, TrigPotential):
        return f.as_trigpoly()
    if isinstance(f, TrigPoly):
        return f
    return None


def simpson_weights(npoints: int) -> np.ndarray:
    """Composite Simpson weights on a uniform [0,1] grid of npoints points."""
    if npoints < 3 or npoints % 2 == 0:
        raise ValueError("need an odd number of points >= 3")
    h = 1.0 / (npoints - 1)
    w = np.ones(npoints)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w * (h / 3.0)


def inner_product(f: FunctionLike, g: FunctionLike, *, points: int = 16385) -> complex:
    """L2[0,1] inner product with the second argument conjugated.

    Exact when both arguments are closed-form (TrigPotential / TrigPoly);
    otherwise sampled on a uniform grid and integrated by composite Simpson.
    Array arguments are taken as samples on the uniform grid including both
    endpoints and must share a length.
    """
    fe, ge = _as_exact(f), _as_exact(g)
    if fe is not None and ge is not None:
        return fe.inner(ge)

    if isinstance(f, np.ndarray) or isinstance(g, np.ndarray):
        sizes = {v.size for v in (f, g) if isinstance(v, np.ndarray)}
        if len(sizes) != 1:
            raise ValueError("sampled arguments must share a grid")
        npts = sizes.pop()
        if npts % 2 == 0:
            raise ValueError("sampled grid must have an odd number of points")
    else:
        npts = points
    x = np.linspace(0.0, 1.0, npts)

    def sample(v):
        if isinstance(v, np.ndarray):
            return v.astype(complex)
        if fe is not None and v is f:
            return fe(x)
        if ge is not None and v is g:
            return ge(x)
        if isinstance(v, (TrigPotential, TrigPoly)):
            return v.as_trigpoly()(x) if isinstance(v, TrigPotential) else v(x)
        return np.asarray([complex(v(xi)) for xi in x])

    fv = sample(f)
    gv = sample(g)
    return complex(np.sum(simpson_weights(npts) * fv * np.conj(gv)))
