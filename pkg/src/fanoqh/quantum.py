"""Small quantum cohomology of Y over Q[q].

Two descriptions are kept side by side.  The presented ring
Q[c1, c2, d2, q] / (Q1, ..., Q5) is authoritative; classical basis classes
are embedded into it by Tian's inductive quantization, which needs a short
list of degree-1 invariants as input.  Reducing products of lifts and reading
them back in the classical basis gives the 13 x 13 table of quantum products
with coefficients in Q[q].
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import chow
from .algebra import linalg
from .algebra.groebner import GroebnerBasis, buchberger, normal_form
from .algebra.poly import MultiPoly, c1, c2, d2, q, wdeg
from .algebra.unipoly import UniPoly
from .chow import BLOCKS, CODIMS, DIM, LABELS, RANK, ChowClass, InconsistencyError

INDEX_OF_Q = 3  # q is the last variable; it has weight 3, the index of Y

# Relations as printed, with the fractional coefficients of the last two.
RELATIONS_FRACTIONAL: Tuple[Tuple[str, str], ...] = (
    ("c1^4 - 11 q c1", "-3 c2^2 + 9 c2 d2 + 3 d2^2"),
    ("c1^2 c2 - 3 q c1", "3 d2^2 + c2 d2"),
    ("c1^2 d2 - 2 q c1", "3 d2^2"),
    ("c1 c2^2 - q (4 c1^2 - 3 c2 - d2)", "14/9 (c1 c2 d2 - q (3 c1^2 - c2 - 3 d2))"),
    ("c1 c2 d2 - q (3 c1^2 - c2 - 3 d2)", "3/2 (c1 d2^2 - q (2 c1^2 - 3 d2))"),
)
CLEARING_FACTORS = (1, 1, 1, 9, 2)

QUANTUM_RELATIONS: Tuple[MultiPoly, ...] = (
    c1 ** 4 - 11 * q * c1 + 3 * c2 ** 2 - 9 * c2 * d2 - 3 * d2 ** 2,
    c1 ** 2 * c2 - 3 * q * c1 - c2 * d2 - 3 * d2 ** 2,
    c1 ** 2 * d2 - 2 * q * c1 - 3 * d2 ** 2,
    9 * (c1 * c2 ** 2 - q * (4 * c1 ** 2 - 3 * c2 - d2))
    - 14 * (c1 * c2 * d2 - q * (3 * c1 ** 2 - c2 - 3 * d2)),
    2 * (c1 * c2 * d2 - q * (3 * c1 ** 2 - c2 - 3 * d2))
    - 3 * (c1 * d2 ** 2 - q * (2 * c1 ** 2 - 3 * d2)),
)

# Degree-1 three-point invariants, keyed by the sorted triple of basis labels.
# SEED_INVARIANTS is what the embedding of the classical basis needs;
# RELATION_INVARIANTS adds the values used only to deform the classical relations.
SEED_INVARIANTS: Dict[Tuple[Tuple[str, str, str], int], Fraction] = {}
RELATION_INVARIANTS: Dict[Tuple[Tuple[str, str, str], int], Fraction] = {}


def _key(a: str, b: str, c: str) -> Tuple[str, str, str]:
    return tuple(sorted((a, b, c), key=chow.INDEX.__getitem__))


for _a, _b, _c, _v in (
    ("c1", "c1^2", "pt", 3),
    ("c1", "c2", "pt", 0),
    ("c1", "d2", "pt", 0),
    ("c1", "c1c2", "line", 3),
    ("c1", "c1d2", "line", 2),
    ("c1", "c3", "line", 0),
    ("c2", "c2", "line", 0),
    ("c2", "d2", "line", 0),
    ("d2", "d2", "line", 0),
    ("c1", "c2^2", "c2^2", 24),
    ("c1", "c2^2", "c2d2", 18),
    ("c1", "c2^2", "d2^2", 13),
):
    SEED_INVARIANTS[_key(_a, _b, _c), 1] = Fraction(_v)

RELATION_INVARIANTS.update(SEED_INVARIANTS)
for _a, _b, _c, _v in (
    ("c1", "c2d2", "c2d2", 13),
    ("c1", "c2d2", "d2^2", 9),
    ("c1", "d2^2", "d2^2", 6),
):
    RELATION_INVARIANTS[_key(_a, _b, _c), 1] = Fraction(_v)

# Words in the generators representing each basis class: list of (coef, chain).
BASIS_WORDS: Tuple[Tuple[Tuple[Fraction, Tuple[str, ...]], ...], ...] = (
    ((Fraction(1), ()),),
    ((Fraction(1), ("c1",)),),
    ((Fraction(1), ("c1", "c1")),),
    ((Fraction(1), ("c2",)),),
    ((Fraction(1), ("d2",)),),
    ((Fraction(1), ("c1", "c2")),),
    ((Fraction(1), ("c1", "d2")),),
    ((Fraction(4, 3), ("c1", "d2")), (Fraction(-1, 3), ("c1", "c1", "c1"))),
    ((Fraction(1), ("c2", "c2")),),
    ((Fraction(1), ("c2", "d2")),),
    ((Fraction(1), ("d2", "d2")),),
    ((Fraction(1, 14), ("c1", "c2", "c2")),),
    ((Fraction(1, 14), ("c1", "c1", "c2", "c2")),),
)

_GEN_POLY = {"c1": c1, "c2": c2, "d2": d2}
_GEN_INDEX = {"c1": 1, "c2": 3, "d2": 4}


class QuantumError(ValueError):
    pass


class MissingInvariantError(KeyError):
    pass


# ---------------------------------------------------------------- QClass


def _U(x) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly([x])


@dataclass(frozen=True)
class QClass:
    """Coordinates over the classical basis with coefficients in Q[q]."""

    coords: Tuple[UniPoly, ...]

    def __post_init__(self):
        if len(self.coords) != RANK:
            raise QuantumError(f"expected {RANK} coordinates")
        object.__setattr__(self, "coords", tuple(_U(c) for c in self.coords))

    @classmethod
    def zero(cls) -> "QClass":
        return cls((UniPoly(),) * RANK)

    @classmethod
    def embed(cls, x: ChowClass) -> "QClass":
        return cls(tuple(UniPoly([c]) for c in x.coords))

    @classmethod
    def from_q_expansion(cls, parts: Mapping[int, ChowClass]) -> "QClass":
        out = cls.zero()
        for k, x in parts.items():
            out = out + cls.embed(x).shift(k)
        return out

    def __add__(self, other: "QClass") -> "QClass":
        return QClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "QClass") -> "QClass":
        return QClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "QClass":
        return QClass(tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, QClass):
            return qmul(self, other)
        return QClass(tuple(a * other for a in self.coords))

    def __rmul__(self, other):
        return QClass(tuple(a * other for a in self.coords))

    def shift(self, k: int) -> "QClass":
        return QClass(tuple(a.shift(k) for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def max_q_degree(self) -> int:
        return max((a.degree for a in self.coords if a), default=-1)

    def q_coeff(self, k: int) -> ChowClass:
        return ChowClass(tuple(a[k] for a in self.coords))

    def at_q(self, value) -> ChowClass:
        v = Fraction(value)
        return ChowClass(tuple(a(v) for a in self.coords))

    def truncate(self) -> ChowClass:
        return self.q_coeff(0)

    def q_expansion(self) -> Dict[int, ChowClass]:
        return {k: self.q_coeff(k) for k in range(self.max_q_degree() + 1) if not self.q_coeff(k).is_zero()}

    def weighted_degrees(self) -> set:
        return {
            CODIMS[i] + 3 * k
            for i, a in enumerate(self.coords)
            for k, c in enumerate(a.coeffs)
            if c
        }

    def __str__(self):
        return format_qclass(self)


def format_qclass(x: QClass, labels: Sequence[str] = LABELS) -> str:
    terms = []
    for k in range(x.max_q_degree() + 1):
        for i, a in enumerate(x.coords):
            c = a[k]
            if c:
                qpart = "" if k == 0 else (" q" if k == 1 else f" q^{k}")
                terms.append(f"{c} *{qpart} {labels[i]}")
    return " + ".join(terms) if terms else "0"


def as_qclass(x: Union[ChowClass, QClass]) -> QClass:
    return x if isinstance(x, QClass) else QClass.embed(x)


# ---------------------------------------------------------------- quantization


class Quantizer:
    """Tian's rewriting: lift classical classes to polynomials in c1, c2, d2, q.

    For a word g w with g a generator, g * [w] = g [w] + sum_n q^n corr_n, where
    corr_n = sum_T I_n(g, [w], T) T^dual.  Hence [g w] lifts to
    g * lift(w) - sum_n q^n lift(corr_n), and the corrections have smaller
    codimension, so the recursion terminates.
    """

    def __init__(self, invariants: Mapping[Tuple[Tuple[str, str, str], int], Fraction]):
        self.invariants = dict(invariants)
        self._duals = {k: chow.dual_basis(k) for k in range(DIM + 1)}
        self._chain_cache: Dict[Tuple[str, ...], MultiPoly] = {}

    def invariant(self, i: int, j: int, k: int, n: int) -> Fraction:
        key = (_key(LABELS[i], LABELS[j], LABELS[k]), n)
        if key not in self.invariants:
            raise MissingInvariantError(
                f"degree {n} invariant ({LABELS[i]}, {LABELS[j]}, {LABELS[k]}) is not known"
            )
        return self.invariants[key]

    def correction(self, g: int, x: ChowClass) -> Dict[int, ChowClass]:
        """q^n coefficients of g * x - g x, for a generator index g and homogeneous x."""
        cx = x.codim
        out: Dict[int, ChowClass] = {}
        if cx is None:
            return out
        n = 1
        while True:
            ct = DIM + 3 * n - CODIMS[g] - cx
            if ct > DIM:
                break
            if ct >= 0:
                acc = ChowClass.zero()
                for t, dual in zip(BLOCKS[ct], self._duals[ct]):
                    val = sum(
                        (a * self.invariant(g, i, t, n) for i, a in enumerate(x.coords) if a),
                        Fraction(0),
                    )
                    if val:
                        acc = acc + val * dual
                if not acc.is_zero():
                    out[n] = acc
            n += 1
        return out

    def chain(self, word: Tuple[str, ...]) -> MultiPoly:
        if word in self._chain_cache:
            return self._chain_cache[word]
        if len(word) <= 1:
            p = _GEN_POLY[word[0]] if word else MultiPoly.constant(1)
        else:
            g, rest = word[0], word[1:]
            rest_class = chow.to_class(_word_poly(rest))
            p = _GEN_POLY[g] * self.chain(rest)
            for n, corr in self.correction(_GEN_INDEX[g], rest_class).items():
                p = p - q ** n * self.quantize(corr)
        self._chain_cache[word] = p
        return p

    def quantize_basis(self, i: int) -> MultiPoly:
        out = MultiPoly()
        for coef, word in BASIS_WORDS[i]:
            out = out + coef * self.chain(word)
        return out

    def quantize(self, x: ChowClass) -> MultiPoly:
        if not x.is_homogeneous():
            raise QuantumError("quantize needs a homogeneous class")
        out = MultiPoly()
        for i, a in enumerate(x.coords):
            if a:
                out = out + a * self.quantize_basis(i)
        return out

    def deform(self, relation: MultiPoly) -> MultiPoly:
        """Replace every monomial of a classical relation by its lift."""
        out = MultiPoly()
        for m, coef in relation.terms.items():
            if m[INDEX_OF_Q]:
                raise QuantumError("classical relation must be q-free")
            word = ("c1",) * m[0] + ("c2",) * m[1] + ("d2",) * m[2]
            out = out + coef * self.chain(word)
        return out


def _word_poly(word: Tuple[str, ...]) -> MultiPoly:
    p = MultiPoly.constant(1)
    for g in word:
        p = p * _GEN_POLY[g]
    return p


# ---------------------------------------------------------------- presentation


@dataclass(frozen=True)
class QuantumPresentation:
    relations: Tuple[MultiPoly, ...]
    gb: GroebnerBasis
    standard: Tuple[Tuple[int, int, int, int], ...]
    lifts: Tuple[MultiPoly, ...]
    degree2_invariant: Fraction
    to_standard: Tuple[Tuple[UniPoly, ...], ...]
    to_basis: Tuple[Tuple[UniPoly, ...], ...]
    table: Tuple[Tuple[QClass, ...], ...] = field(repr=False)

    def to_qclass(self, p: MultiPoly) -> QClass:
        return self.from_normal_form(normal_form(p, self.gb))

    def from_normal_form(self, nf: MultiPoly) -> QClass:
        v: List[UniPoly] = [UniPoly() for _ in self.standard]
        pos = {s: j for j, s in enumerate(self.standard)}
        for m, c in nf.terms.items():
            base = m[:3] + (0,)
            if base not in pos:
                raise InconsistencyError(f"normal form has a non-standard monomial {m}")
            j = pos[base]
            v[j] = v[j] + UniPoly.monomial(m[3], c)
        out = []
        for i in range(RANK):
            acc = UniPoly()
            for j in range(RANK):
                if v[j] and self.to_basis[j][i]:
                    acc = acc + v[j] * self.to_basis[j][i]
            out.append(acc)
        return QClass(tuple(out))


def _standard_section(gb: GroebnerBasis):
    for lm in gb.leading_monomials:
        if lm[INDEX_OF_Q]:
            raise InconsistencyError(f"leading monomial {lm} involves q; quotient is not visibly free")
    standard = []
    ranks = []
    for k in range(DIM + 3):
        s = gb.standard_monomials(k, nvars=3)
        ranks.append(len(s))
        standard.extend(s)
    if tuple(ranks[: DIM + 1]) != chow.GRADED_RANKS or any(ranks[DIM + 1:]):
        raise InconsistencyError(f"standard monomials coprime to q have ranks {ranks}")
    return tuple(standard)


def _check_classical_limit(relations: Sequence[MultiPoly]) -> None:
    for rq, rc in zip(relations, chow.CLASSICAL_RELATIONS):
        r0 = rq.at_q(0)
        # classical relations are stored with the same normalisation up to sign
        if r0 != rc and r0 != -rc:
            raise InconsistencyError(f"q = 0 image {r0} differs from {rc}")


def degree2_relation(lift, invariant) -> MultiPoly:
    """The relation R(I) obtained from c1 * (c1 * line) with the unknown set to ``invariant``.

    ``lift`` maps a classical class to a polynomial representing it.  Only lifts of
    classes of codimension at most 5 are used, so the degree-2 invariant is not an
    input.
    """
    line = lift(chow.named_class("line"))
    c1_cubed = lift(chow.monomial_class(3))
    c1d2 = lift(chow.monomial_class(1, 0, 0, 1))
    three_h2 = -3 * c2 ** 2 + 9 * c2 * d2 - 6 * d2 ** 2
    inv = Fraction(invariant)
    # c1 * line = pt + q (2/3 c1^3 - 5/3 c1 d2) + q^2 I [Y], multiplied by c1,
    # with c1 * pt = q (3 h2) + q^2 I c1 substituted
    return (
        c1 * c1 * line
        - q * three_h2
        - q ** 2 * inv * c1
        - q * c1 * (Fraction(2, 3) * c1_cubed - Fraction(5, 3) * c1d2)
        - q ** 2 * inv * c1
    )


def degree2_base_relation(lift) -> MultiPoly:
    """R1, the part of R(I) independent of the unknown: R(I) = R1 + (2 - 2I) q^2 c1."""
    return degree2_relation(lift, 0) - 2 * q ** 2 * c1


def solve_degree2(gb: GroebnerBasis, lift) -> Tuple[Fraction, MultiPoly]:
    """Return the forced invariant I and NF(R1)."""
    nf = normal_form(degree2_base_relation(lift), gb)
    coeff = nf.terms.get((1, 0, 0, 2), Fraction(0))
    if nf != coeff * q ** 2 * c1:
        raise InconsistencyError(f"NF(R1) = {nf} is not a multiple of q^2 c1")
    # NF(R(I)) = (coeff + 2 - 2I) q^2 c1 must vanish
    return (coeff + 2) / 2, nf


def _conversion(gb, standard, lifts):
    rows = []
    for p in lifts:
        nf = normal_form(p, gb)
        row = [UniPoly() for _ in standard]
        pos = {s: j for j, s in enumerate(standard)}
        for m, c in nf.terms.items():
            j = pos.get(m[:3] + (0,))
            if j is None:
                raise InconsistencyError(f"lift reduces to non-standard monomial {m}")
            row[j] = row[j] + UniPoly.monomial(m[3], c)
        rows.append(row)
    at_one = [[a(1) for a in row] for row in rows]
    try:
        inv = linalg.inverse(at_one)
    except linalg.SingularMatrixError as exc:
        raise InconsistencyError("lifts do not form a basis over Q[q]") from exc
    # homogeneity: entry (j, i) of the inverse carries q^((deg s_j - codim B_i) / 3)
    back = []
    for j, s in enumerate(standard):
        row = []
        for i in range(RANK):
            c = inv[j][i]
            if not c:
                row.append(UniPoly())
                continue
            e, r = divmod(wdeg(s) - CODIMS[i], 3)
            if r or e < 0:
                raise InconsistencyError("inverse conversion is not homogeneous")
            row.append(UniPoly.monomial(e, c))
        back.append(tuple(row))
    # check rows * back = identity over Q[q]
    for i in range(RANK):
        for k in range(RANK):
            acc = UniPoly()
            for j in range(RANK):
                if rows[i][j] and back[j][k]:
                    acc = acc + rows[i][j] * back[j][k]
            if acc != UniPoly([int(i == k)]):
                raise InconsistencyError("conversion matrices are not mutually inverse")
    return tuple(tuple(r) for r in rows), tuple(back)


@functools.lru_cache(maxsize=None)
def qh_setup() -> QuantumPresentation:
    relations = QUANTUM_RELATIONS
    _check_classical_limit(relations)
    gb = buchberger(relations)
    standard = _standard_section(gb)

    seed = Quantizer(SEED_INVARIANTS)
    low = [seed.quantize_basis(i) for i in range(RANK) if CODIMS[i] < DIM]

    def lift_low(x: ChowClass) -> MultiPoly:
        if any(x.coords[i] for i in BLOCKS[DIM]):
            raise QuantumError("only classes below the top degree are available here")
        return seed.quantize(x)

    inv2, _ = solve_degree2(gb, lift_low)
    full = dict(SEED_INVARIANTS)
    full[_key("c1", "line", "pt"), 2] = inv2
    quant = Quantizer(full)
    lifts = tuple(quant.quantize_basis(i) for i in range(RANK))
    if list(lifts[:-1]) != low:
        raise InconsistencyError("lifts changed after adding the degree-2 invariant")

    to_standard, to_basis = _conversion(gb, standard, lifts)
    pres = QuantumPresentation(
        relations=relations,
        gb=gb,
        standard=standard,
        lifts=lifts,
        degree2_invariant=inv2,
        to_standard=to_standard,
        to_basis=to_basis,
        table=(),
    )
    table = tuple(
        tuple(pres.to_qclass(lifts[i] * lifts[j]) for j in range(RANK)) for i in range(RANK)
    )
    object.__setattr__(pres, "table", table)
    return pres


@functools.lru_cache(maxsize=None)
def quantizer() -> Quantizer:
    """Quantizer carrying the seed invariants and the derived degree-2 value."""
    pres = qh_setup()
    full = dict(SEED_INVARIANTS)
    full[_key("c1", "line", "pt"), 2] = pres.degree2_invariant
    return Quantizer(full)


# ---------------------------------------------------------------- operations


def quantize(x: ChowClass) -> MultiPoly:
    return quantizer().quantize(x)


@functools.lru_cache(maxsize=None)
def _sparse_table():
    """Structure constants as integers over one common denominator.

    Returns (denominator, table) where table[i][j] lists (k, q power, numerator).
    """
    table = qh_setup().table
    den = 1
    for row in table:
        for x in row:
            for poly in x.coords:
                for c in poly.coeffs:
                    den = math.lcm(den, c.denominator)
    sparse = tuple(
        tuple(
            tuple(
                (k, e, int(c * den))
                for k, poly in enumerate(table[i][j].coords)
                for e, c in enumerate(poly.coeffs)
                if c
            )
            for j in range(RANK)
        )
        for i in range(RANK)
    )
    return den, sparse


def _scaled(x: QClass) -> Tuple[int, List[List[int]]]:
    den = 1
    for a in x.coords:
        for c in a.coeffs:
            den = math.lcm(den, c.denominator)
    return den, [[int(c * den) for c in a.coeffs] for a in x.coords]


def qmul(x: Union[ChowClass, QClass], y: Union[ChowClass, QClass]) -> QClass:
    x, y = as_qclass(x), as_qclass(y)
    # exact integer accumulation, one division at the end
    tden, table = _sparse_table()
    xden, xs = _scaled(x)
    yden, ys = _scaled(y)
    acc: List[Dict[int, int]] = [{} for _ in range(RANK)]
    for i, a in enumerate(xs):
        if not a:
            continue
        for j, b in enumerate(ys):
            if not b:
                continue
            entry = table[i][j]
            if not entry:
                continue
            for s, u in enumerate(a):
                if not u:
                    continue
                for t, v in enumerate(b):
                    if not v:
                        continue
                    uv = u * v
                    for k, e, c in entry:
                        d = acc[k]
                        n = s + t + e
                        d[n] = d.get(n, 0) + uv * c
    den = tden * xden * yden
    out = []
    for d in acc:
        top = max(d, default=-1)
        out.append(UniPoly([Fraction(d.get(n, 0), den) for n in range(top + 1)]))
    return QClass(tuple(out))


def gw(a: ChowClass, b: ChowClass, c: ChowClass, n: int) -> Fraction:
    """Three-point genus-0 invariant of curve degree n, read off from a * b."""
    if n < 0:
        raise QuantumError("curve degree must be non-negative")
    codims = [x.codim for x in (a, b, c)]
    if any(k is None for k in codims):
        return Fraction(0)
    if sum(codims) != DIM + 3 * n:
        return Fraction(0)
    return chow.pairing(qmul(a, b).q_coeff(n), c)


def deform_classical_relations(invariants=None) -> Tuple[MultiPoly, ...]:
    """Tian-deform each classical relation with the given degree-1 invariants."""
    quant = Quantizer(RELATION_INVARIANTS if invariants is None else invariants)
    return tuple(quant.deform(r) for r in chow.CLASSICAL_RELATIONS)


def verify_degree2_invariant(invariant=None) -> Fraction:
    """Rebuild R1 from the lifts, check NF(R1) = 2 q^2 c1 and return the forced value.

    With ``invariant`` given, return NF(R(invariant)) coefficient of q^2 c1 instead
    (zero exactly when the value is consistent with the ideal).
    """
    pres = qh_setup()
    seed = Quantizer(SEED_INVARIANTS)
    value, nf = solve_degree2(pres.gb, seed.quantize)
    if nf != 2 * q ** 2 * c1:
        raise InconsistencyError(f"NF(R1) = {nf}, expected 2 q^2 c1")
    if invariant is None:
        return value
    r = normal_form(degree2_relation(seed.quantize, invariant), pres.gb)
    return r.terms.get((1, 0, 0, 2), Fraction(0))


def semisimplicity_reduced_check(samples=None) -> bool:
    from . import spectra

    values = spectra.sample_q_values() if samples is None else samples
    return all(spectra.trace_det_at(Fraction(v)) != 0 for v in values)


# ---------------------------------------------------------------- Chevalley

CELLS_BY_CODIM: Dict[int, Tuple[str, ...]] = {
    0: ("[Y]",),
    1: ("c1",),
    2: ("e1", "e2", "e3"),
    3: ("f1", "f2", "f3"),
    4: ("h1", "h2", "h3"),
    5: ("line",),
    6: ("pt",),
}
CHEVALLEY_SOURCES = ("e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3", "line", "pt")


def cell_class(label: str) -> ChowClass:
    if label == "[Y]":
        return chow.named_class("m")
    return chow.named_class(label)


def to_cell_terms(x: QClass) -> List[Tuple[Fraction, int, str]]:
    """Expand in the cell basis: list of (coefficient, q power, cell label)."""
    terms = []
    for n in range(x.max_q_degree() + 1):
        part = x.q_coeff(n)
        for k in range(DIM + 1):
            block = part.block(k)
            if not any(block):
                continue
            labels = CELLS_BY_CODIM[k]
            mat = [list(cell_class(l).block(k)) for l in labels]
            try:
                inv = linalg.inverse(mat)
            except linalg.SingularMatrixError as exc:
                raise InconsistencyError(f"cell classes of codimension {k} are dependent") from exc
            coef = linalg.matvec(linalg.transpose(inv), block)
            for label, c in zip(labels, coef):
                if c:
                    terms.append((c, n, label))
    return terms


def format_cell_terms(terms: Sequence[Tuple[Fraction, int, str]]) -> str:
    if not terms:
        return "0"
    parts = []
    for c, n, label in terms:
        qpart = "" if n == 0 else ("q" if n == 1 else f"q^{n}")
        factors = [s for s in (qpart, label) if s]
        coef = "" if c == 1 else ("-" if c == -1 else f"{c}")
        parts.append(coef + ("" if coef in ("", "-") else " ") + " ".join(factors))
    return " + ".join(parts).replace("+ -", "- ")


def chevalley_table() -> List[Tuple[str, QClass]]:
    h = chow.named_class("p")
    return [(label, qmul(h, cell_class(label))) for label in CHEVALLEY_SOURCES]


def involution_preserves_ideal() -> bool:
    pres = qh_setup()
    for r in pres.relations:
        image = r.subs({"c2": 3 * d2 - c2})
        if not normal_form(image, pres.gb).is_zero():
            return False
    return True
