"""The rational Chow ring of Y: a graded algebra of rank 13 on generators c1, c2, d2.

Classes are coordinate vectors over a fixed basis::

    0: [Y]   1: c1   2-4: c1^2, c2, d2   5-7: c1c2, c1d2, c3
    8-10: c2^2, c2d2, d2^2   11: line = c2c3/3   12: pt = c3^2

where c3 is not a generator but the stored combination (4 c1 d2 - c1^3) / 3.
Products are computed once by normal forms in Q[c1, c2, d2] modulo the
relations below, then kept as a structure-constant table.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import linalg
from .algebra.groebner import GroebnerBasis, buchberger, hilbert_function, normal_form
from .algebra.poly import MultiPoly, c1, c2, d2, wdeg

DIM = 6
RANK = 13
LABELS = (
    "1", "c1", "c1^2", "c2", "d2", "c1c2", "c1d2", "c3",
    "c2^2", "c2d2", "d2^2", "line", "pt",
)
CODIMS = (0, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5, 6)
GRADED_RANKS = (1, 1, 3, 3, 3, 1, 1)
BLOCKS: Dict[int, Tuple[int, ...]] = {
    k: tuple(i for i, c in enumerate(CODIMS) if c == k) for k in range(DIM + 1)
}
INDEX = {label: i for i, label in enumerate(LABELS)}
POINT = INDEX["pt"]
LINE = INDEX["line"]

C3 = (4 * c1 * d2 - c1 ** 3) / 3

BASIS_POLYS: Tuple[MultiPoly, ...] = (
    MultiPoly.constant(1),
    c1,
    c1 ** 2,
    c2,
    d2,
    c1 * c2,
    c1 * d2,
    C3,
    c2 ** 2,
    c2 * d2,
    d2 ** 2,
    c2 * C3 / 3,
    C3 ** 2,
)

# c1^4 = -3c2^2 + 9c2d2 + 3d2^2, c1^2c2 = 3d2^2 + c2d2, c1^2d2 = 3d2^2,
# 9c1c2^2 = 14c1c2d2, 3c1d2^2 = 2c1c2d2
CLASSICAL_RELATIONS: Tuple[MultiPoly, ...] = (
    c1 ** 4 + 3 * c2 ** 2 - 9 * c2 * d2 - 3 * d2 ** 2,
    c1 ** 2 * c2 - c2 * d2 - 3 * d2 ** 2,
    c1 ** 2 * d2 - 3 * d2 ** 2,
    9 * c1 * c2 ** 2 - 14 * c1 * c2 * d2,
    3 * c1 * d2 ** 2 - 2 * c1 * c2 * d2,
)


class ChowError(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """An internal consistency check on the ring data failed."""


def _F(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class ChowClass:
    coords: Tuple[Fraction, ...]
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coords) != RANK:
            raise ChowError(f"expected {RANK} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(_F(c) for c in self.coords))

    @classmethod
    def zero(cls) -> "ChowClass":
        return cls((Fraction(0),) * RANK)

    @classmethod
    def basis(cls, i: Union[int, str]) -> "ChowClass":
        if isinstance(i, str):
            i = INDEX[i]
        return cls(tuple(Fraction(int(j == i)) for j in range(RANK)), LABELS[i])

    @classmethod
    def from_dict(cls, d: Mapping[str, object], label: Optional[str] = None) -> "ChowClass":
        v = [Fraction(0)] * RANK
        for k, c in d.items():
            v[INDEX[k]] += _F(c)
        return cls(tuple(v), label)

    def __getitem__(self, key: Union[int, str]) -> Fraction:
        if isinstance(key, str):
            key = INDEX[key]
        return self.coords[key]

    def __add__(self, other: "ChowClass") -> "ChowClass":
        return ChowClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return ChowClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "ChowClass":
        return ChowClass(tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return cup(self, other)
        c = _F(other)
        return ChowClass(tuple(a * c for a in self.coords))

    def __rmul__(self, other):
        return ChowClass(tuple(a * _F(other) for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support_codims(self) -> set:
        return {CODIMS[i] for i, c in enumerate(self.coords) if c}

    def is_homogeneous(self) -> bool:
        return len(self.support_codims()) <= 1

    @property
    def codim(self) -> Optional[int]:
        """Codimension of a nonzero homogeneous class (None for 0)."""
        s = self.support_codims()
        if len(s) > 1:
            raise ChowError("class is not homogeneous")
        return next(iter(s)) if s else None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def block(self, k: int) -> Tuple[Fraction, ...]:
        return tuple(self.coords[i] for i in BLOCKS[k])

    def __str__(self):
        return format_class(self)


def format_class(x: ChowClass) -> str:
    terms = [f"{c} * {LABELS[i]}" for i, c in enumerate(x.coords) if c]
    return " + ".join(terms) if terms else "0"


class ChowRing:
    """The classical ring, built once; use :func:`chow_ring` to get the instance."""

    def __init__(self):
        self.relations = CLASSICAL_RELATIONS
        self.gb: GroebnerBasis = buchberger(self.relations)
        self.hilbert = tuple(hilbert_function(self.gb, DIM + 2, nvars=3))
        if self.hilbert[: DIM + 1] != GRADED_RANKS or any(self.hilbert[DIM + 1:]):
            raise InconsistencyError(f"unexpected Hilbert function {self.hilbert}")
        self.standard = {k: self.gb.standard_monomials(k, nvars=3) for k in range(DIM + 1)}
        self._to_basis: Dict[int, linalg.Matrix] = {}
        for k in range(DIM + 1):
            rows = []
            for i in BLOCKS[k]:
                nf = normal_form(BASIS_POLYS[i], self.gb)
                rows.append([nf.terms.get(m, Fraction(0)) for m in self.standard[k]])
            try:
                self._to_basis[k] = linalg.inverse(rows)
            except linalg.SingularMatrixError as exc:
                raise InconsistencyError(f"basis of codimension {k} is not a basis") from exc
        self.table: Tuple[Tuple[ChowClass, ...], ...] = tuple(
            tuple(self.to_class(BASIS_POLYS[i] * BASIS_POLYS[j]) for j in range(RANK))
            for i in range(RANK)
        )
        self._involution = tuple(
            self.to_class(
                BASIS_POLYS[i].subs({"c2": 3 * d2 - c2})
            )
            for i in range(RANK)
        )

    def to_class(self, p: MultiPoly) -> ChowClass:
        """Class of a polynomial in c1, c2, d2 (q must not occur)."""
        nf = normal_form(p, self.gb)
        coords = [Fraction(0)] * RANK
        for m in nf.terms:
            if m[3]:
                raise ChowError("classical polynomial must not involve q")
        for k in range(DIM + 1):
            v = [nf.terms.get(m, Fraction(0)) for m in self.standard[k]]
            if not any(v):
                continue
            x = [sum((a * b for a, b in zip(v, col)), Fraction(0)) for col in zip(*self._to_basis[k])]
            for i, c in zip(BLOCKS[k], x):
                coords[i] = c
        leftover = [m for m in nf.terms if wdeg(m) > DIM]
        if leftover:
            raise InconsistencyError(f"nonzero normal form above top degree: {leftover}")
        return ChowClass(tuple(coords))

    def cup(self, x: ChowClass, y: ChowClass) -> ChowClass:
        out = [Fraction(0)] * RANK
        for i, a in enumerate(x.coords):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(y.coords):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j].coords):
                    if c:
                        out[k] += ab * c
        return ChowClass(tuple(out))

    def involution(self, x: ChowClass) -> ChowClass:
        out = ChowClass.zero()
        for i, a in enumerate(x.coords):
            if a:
                out = out + a * self._involution[i]
        return out


@functools.lru_cache(maxsize=None)
def chow_ring() -> ChowRing:
    return ChowRing()


def to_class(p: MultiPoly) -> ChowClass:
    return chow_ring().to_class(p)


def monomial_class(a: int, b: int = 0, c: int = 0, d: int = 0) -> ChowClass:
    """Class of c1^a c2^b c3^c d2^d; zero above the top degree."""
    if min(a, b, c, d) < 0:
        raise ChowError("exponents must be non-negative")
    if a + 2 * b + 3 * c + 2 * d > DIM:
        return ChowClass.zero()
    return to_class(c1 ** a * c2 ** b * C3 ** c * d2 ** d)


def cup(x: ChowClass, y: ChowClass) -> ChowClass:
    return chow_ring().cup(x, y)


def pairing(x: ChowClass, y: ChowClass) -> Fraction:
    return cup(x, y).coords[POINT]


def pairing_block(k: int) -> linalg.Matrix:
    """Matrix of <B_i, B'_j> for B in codimension k and B' in codimension 6 - k."""
    ring = chow_ring()
    return [
        [ring.table[i][j].coords[POINT] for j in BLOCKS[DIM - k]]
        for i in BLOCKS[k]
    ]


def dual_basis(k: int) -> List[ChowClass]:
    """Classes D_j of codimension 6 - k with pairing(B_i, D_j) = delta_ij."""
    if not 0 <= k <= DIM:
        raise ChowError(f"codimension {k} out of range")
    block = pairing_block(k)
    try:
        inv = linalg.inverse(block)
    except linalg.SingularMatrixError as exc:
        raise InconsistencyError(f"pairing block {k} is singular") from exc
    out = []
    for j in range(len(BLOCKS[k])):
        v = [Fraction(0)] * RANK
        for l, idx in enumerate(BLOCKS[DIM - k]):
            v[idx] = inv[l][j]
        out.append(ChowClass(tuple(v)))
    return out


def degree_of(x: ChowClass, k: int) -> Fraction:
    """Degree against c1: pairing(x, c1^(6-k)) for x homogeneous of codimension k."""
    s = x.support_codims()
    if s and s != {k}:
        raise ChowError(f"class is not homogeneous of codimension {k}")
    return pairing(x, monomial_class(DIM - k))


def involution(x: ChowClass) -> ChowClass:
    """Ring automorphism fixing c1, d2 and sending c2 to 3 d2 - c2."""
    return chow_ring().involution(x)


_NAMED: Dict[str, Dict[str, int]] = {
    "e1": {"c2": -1, "d2": 2},
    "e2": {"c1^2": 1, "d2": -2},
    "e3": {"c2": 1, "d2": -1},
    "f1": {"c1c2": -1, "c1d2": 2, "c3": -1},
    "f2": {"c3": 1},
    "f3": {"c1c2": 1, "c1d2": -1, "c3": -1},
    "h1": {"c2^2": 1, "c2d2": -4, "d2^2": 4},
    "h2": {"c2^2": -1, "c2d2": 3, "d2^2": -2},
    "h3": {"c2^2": 1, "c2d2": -2, "d2^2": 1},
    "m": {"1": 1},
    "p": {"c1": 1},
    "q_cell": {"line": 1},
    "n": {"pt": 1},
    "line": {"line": 1},
    "point": {"pt": 1},
    "P2": {"c2^2": -1, "c2d2": 3, "d2^2": -2},
    "O5": {"c1": 2},
    "O4": {"d2": 3},
    "O2": {"c2d2": -3, "d2^2": 6},
    "O2'": {"c2d2": 3, "d2^2": -3},
}
NAMED_LABELS = tuple(_NAMED)


def named_class(name: str) -> ChowClass:
    if name in _NAMED:
        return ChowClass.from_dict(_NAMED[name], label=name)
    if name in INDEX:
        return ChowClass.basis(name)
    if name in ("Y", "[Y]"):
        return ChowClass.basis(0)
    raise ChowError(f"unknown class label {name!r}")


def basis_class(i: Union[int, str]) -> ChowClass:
    return ChowClass.basis(i)


def classes(names: Sequence[str]) -> List[ChowClass]:
    return [named_class(n) for n in names]


_MONO_TOKEN = re.compile(r"(c1|c2|c3|d2)(?:\^(\d+))?")


def parse_monomial(text: str) -> Optional[ChowClass]:
    """Class of a monomial written like ``c1^2c2``, ``c1*d2^2`` or ``c1 c3``; None if not one."""
    s = text.replace("*", "").replace(" ", "")
    if not s:
        return None
    exps = {"c1": 0, "c2": 0, "c3": 0, "d2": 0}
    pos = 0
    while pos < len(s):
        m = _MONO_TOKEN.match(s, pos)
        if not m:
            return None
        exps[m.group(1)] += int(m.group(2) or 1)
        pos = m.end()
    return monomial_class(exps["c1"], exps["c2"], exps["c3"], exps["d2"])


def parse_class(text: str) -> ChowClass:
    """Parse a label (cell, orbit, basis), a monomial, or 13 comma-separated rationals."""
    t = text.strip()
    if t in _NAMED or t in INDEX or t in ("Y", "[Y]"):
        return named_class(t)
    if "," in t or t.startswith("["):
        parts = [p for p in t.strip("[]() ").split(",") if p.strip()]
        if len(parts) != RANK:
            raise ChowError(f"expected {RANK} coordinates, got {len(parts)}")
        try:
            return ChowClass(tuple(Fraction(p.strip()) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ChowError(f"malformed coordinate vector {text!r}") from exc
    x = parse_monomial(t)
    if x is None:
        raise ChowError(f"unknown class {text!r}")
    return x
