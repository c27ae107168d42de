"""Univariate polynomials over Q and a simultaneous-iteration root finder."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


class RootFindingError(RuntimeError):
    pass


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class UniPoly:
    """Polynomial with ascending Fraction coefficients; trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_unipoly(self)

    def _lift(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = _frac(other)
            return UniPoly(a * c for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = UniPoly([1])
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return UniPoly([0] * k + list(self.coeffs))

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.lc()
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        return self * (1 / self.lc())

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def format_unipoly(p: UniPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            parts.append(f"{c} * {var}" if k == 1 else f"{c} * {var}^{k}")
    return " + ".join(parts)


def squarefree_decomposition(p: UniPoly) -> List[Tuple[UniPoly, int]]:
    """Yun's algorithm; factors are monic, squarefree and pairwise coprime."""
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    f = p.monic()
    if f.degree == 0:
        return []
    out: List[Tuple[UniPoly, int]] = []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d // g
        d = c - b.derivative()
        i += 1
    return out


@dataclass(frozen=True)
class ComplexRoot:
    re: float
    im: float
    multiplicity: int = 1

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


def cauchy_bound(p: UniPoly) -> float:
    lc = abs(float(p.lc()))
    return 1 + max((abs(float(c)) / lc for c in p.coeffs[:-1]), default=0.0)


def relative_residual(p: UniPoly, z: complex) -> float:
    """Backward error |p(z)| / sum |c_i| |z|^i, with p(z) evaluated exactly at the float z.

    The denominator is the size of the terms being summed, so a correctly
    rounded root scores around machine epsilon whatever its modulus.
    """
    zr = Fraction(z.real) if z.real else Fraction(0)
    zi = Fraction(z.imag) if z.imag else Fraction(0)
    re, im = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        re, im = re * zr - im * zi + c, re * zi + im * zr
    r = abs(z)
    scale = sum(abs(float(c)) * r ** k for k, c in enumerate(p.coeffs))
    value = math.hypot(float(re), float(im))
    if scale == 0:
        return 0.0 if value == 0 else math.inf
    return value / scale


def complex_roots(
    p: UniPoly,
    tol: float = 1e-12,
    multiplicity: int = 1,
    max_iter: int = 500,
) -> List[ComplexRoot]:
    """Roots of a squarefree rational polynomial by Aberth-Ehrlich iteration.

    Starting points lie on a circle of radius equal to the Cauchy bound, at
    rotated roots of unity; the rotation is fixed so output is reproducible.
    Real roots and conjugate pairs are symmetrised before returning, sorted by
    (re, im).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.monic()
    n = p.degree
    if n == 0:
        return []
    # factor out exact zero roots
    zeros = 0
    while p.coeffs[0] == 0:
        p = UniPoly(p.coeffs[1:])
        zeros += 1
    n = p.degree
    roots: List[complex] = []
    if n > 0:
        dp = p.derivative()
        radius = cauchy_bound(p)
        z = [radius * cmath.exp(2j * math.pi * (k + 0.25) / n) for k in range(n)]
        for _ in range(max_iter):
            delta_max = 0.0
            for k in range(n):
                pk = p.eval_complex(z[k])
                dk = dp.eval_complex(z[k])
                if pk == 0:
                    continue
                ratio = pk / dk if dk != 0 else pk
                s = sum(1 / (z[k] - z[j]) for j in range(n) if j != k)
                w = ratio / (1 - ratio * s)
                z[k] -= w
                delta_max = max(delta_max, abs(w) / max(1.0, abs(z[k])))
            if delta_max < 1e-15:
                break
        # Newton polish
        for k in range(n):
            for _ in range(3):
                dk = dp.eval_complex(z[k])
                if dk == 0:
                    break
                z[k] -= p.eval_complex(z[k]) / dk
        roots = _symmetrise(z)
        bad = [r for r in roots if relative_residual(p, r) >= tol]
        if bad:
            raise RootFindingError(
                f"no convergence within {max_iter} iterations; worst residual "
                f"{max(relative_residual(p, r) for r in bad):.3e}"
            )
    roots.extend([0j] * zeros)
    out = [ComplexRoot(r.real, r.imag, multiplicity) for r in roots]
    return sorted(out, key=lambda r: (r.re, r.im))


def _symmetrise(z: Sequence[complex]) -> List[complex]:
    remaining = list(z)
    out: List[complex] = []
    scale = max((abs(x) for x in remaining), default=1.0) or 1.0
    while remaining:
        r = remaining.pop(0)
        if abs(r.imag) <= 1e-9 * scale:
            # nearest partner is itself; treat as real
            out.append(complex(r.real, 0.0))
            continue
        if not remaining:
            # unpaired non-real value: leave it for the residual check to reject
            out.append(r)
            continue
        j = min(range(len(remaining)), key=lambda i: abs(remaining[i] - r.conjugate()))
        s = remaining.pop(j)
        re = (r.real + s.real) / 2
        im = (abs(r.imag) + abs(s.imag)) / 2
        out.extend([complex(re, im), complex(re, -im)])
    return out


def reconstruct(roots: Sequence[ComplexRoot]) -> List[complex]:
    """Ascending coefficients of prod (t - r)^m."""
    coeffs = [1 + 0j]
    for r in roots:
        for _ in range(r.multiplicity):
            new = [0j] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                new[i + 1] += c
                new[i] -= c * r.value
            coeffs = new
    return coeffs


def interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Exact interpolating polynomial through (xs[i], ys[i]) by divided differences."""
    xs = [_frac(x) for x in xs]
    coef = [_frac(y) for y in ys]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly([coef[-1]]) if coef else UniPoly()
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + coef[i]
    return p
