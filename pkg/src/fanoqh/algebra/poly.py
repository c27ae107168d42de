"""Sparse multivariate polynomials over Q in the weighted variables (c1, c2, d2, q).

Monomials are 4-tuples of exponents.  Coefficients are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

Monomial = Tuple[int, int, int, int]

VARIABLES = ("c1", "c2", "d2", "q")
WEIGHTS = (1, 2, 2, 3)
NVARS = len(VARIABLES)
ONE: Monomial = (0, 0, 0, 0)


def wdeg(m: Monomial, weights: Tuple[int, ...] = WEIGHTS) -> int:
    return sum(e * w for e, w in zip(m, weights))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))  # type: ignore[return-value]


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))  # type: ignore[return-value]


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))  # type: ignore[return-value]


class WeightedRevLex:
    """Weighted degree, ties broken reverse-lexicographically.

    Variables earlier in the tuple take precedence, so the last variable (q)
    is the cheapest: among monomials of equal weight the one with the smaller
    q-exponent is larger.
    """

    def __init__(self, weights: Tuple[int, ...] = WEIGHTS):
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        self.weights = tuple(weights)

    def key(self, m: Monomial):
        return (wdeg(m, self.weights),) + tuple(-e for e in reversed(m))

    def __eq__(self, other):
        return isinstance(other, WeightedRevLex) and other.weights == self.weights

    def __hash__(self):
        return hash(("wrevlex", self.weights))

    def __repr__(self):
        return f"WeightedRevLex({self.weights})"


DEFAULT_ORDER = WeightedRevLex()


def _coerce(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero Fractions."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                c = _coerce(c)
                if c:
                    if len(m) != NVARS or any(e < 0 for e in m):
                        raise ValueError(f"bad monomial {m!r}")
                    clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "MultiPoly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        m = [0] * NVARS
        m[VARIABLES.index(name)] = power
        return cls({tuple(m): 1})

    @classmethod
    def constant(cls, c) -> "MultiPoly":
        return cls({ONE: c})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "MultiPoly":
        return cls({tuple(m): c})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                other = MultiPoly.constant(other)
            else:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        return MultiPoly.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = _coerce(other)
            if not c:
                return MultiPoly()
            return MultiPoly._raw({m: a * c for m, a in self._terms.items()})
        out: Dict[Monomial, Fraction] = {}
        for m1, a in self._terms.items():
            for m2, b in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + a * b
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return MultiPoly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _coerce(c)
        return self * (1 / c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, m: Monomial, c: Fraction) -> "MultiPoly":
        return MultiPoly._raw({mono_mul(k, m): a * c for k, a in self._terms.items()})

    # structure

    def leading(self, order: WeightedRevLex = DEFAULT_ORDER) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def degrees(self) -> set:
        return {wdeg(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def graded_part(self, d: int) -> "MultiPoly":
        return MultiPoly._raw({m: c for m, c in self._terms.items() if wdeg(m) == d})

    def monic(self, order: WeightedRevLex = DEFAULT_ORDER) -> "MultiPoly":
        _, lc = self.leading(order)
        return self * (1 / lc)

    def subs(self, images: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (unlisted variables are kept)."""
        gens = [images.get(name, MultiPoly.var(name)) for name in VARIABLES]
        out = MultiPoly()
        powers: Dict[Tuple[int, int], MultiPoly] = {}
        for m, c in self._terms.items():
            term = MultiPoly.constant(c)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in powers:
                        powers[i, e] = gens[i] ** e
                    term = term * powers[i, e]
            out = out + term
        return out

    def q_part(self, k: int) -> "MultiPoly":
        """Coefficient of q^k, as a q-free polynomial."""
        return MultiPoly._raw(
            {m[:3] + (0,): c for m, c in self._terms.items() if m[3] == k}
        )

    def at_q(self, value) -> "MultiPoly":
        value = _coerce(value)
        out: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            key = m[:3] + (0,)
            s = out.get(key, 0) + c * value ** m[3]
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MultiPoly._raw(out)

    def sorted_terms(self, order: WeightedRevLex = DEFAULT_ORDER):
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def format_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def format_poly(p: MultiPoly, order: WeightedRevLex = DEFAULT_ORDER) -> str:
    """Render as ``coeff * monomial`` terms in decreasing monomial order."""
    if p.is_zero():
        return "0"
    return " + ".join(f"{c} * {format_monomial(m)}" for m, c in p.sorted_terms(order))


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def from_terms(terms: Iterable[Tuple[object, Monomial]]) -> MultiPoly:
    out = MultiPoly()
    for c, m in terms:
        out = out + MultiPoly.monomial(m, c)
    return out


c1 = MultiPoly.var("c1")
c2 = MultiPoly.var("c2")
d2 = MultiPoly.var("d2")
q = MultiPoly.var("q")
