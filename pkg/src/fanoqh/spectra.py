"""The quantum ring at a fixed value of q: operators, trace form, eigenvalues."""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import chow, quantum
from .algebra import linalg
from .algebra.unipoly import (
    ComplexRoot,
    UniPoly,
    complex_roots,
    interpolate,
    squarefree_decomposition,
)
from .chow import CODIMS, RANK, ChowClass, InconsistencyError

DEFAULT_TOL = 1e-12
MATCH_TOL = 1e-9
FIXED_SAMPLES = (Fraction(1), Fraction(2), Fraction(1, 7), Fraction(-1), Fraction(5, 3))
SAMPLE_SEED = 20240613


@dataclass(frozen=True)
class FiniteAlgebra:
    """Structure constants at one value of q: constants[i][j] = coords of B_i * B_j."""

    q_value: Fraction
    constants: Tuple[Tuple[Tuple[Fraction, ...], ...], ...] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.constants)

    def product(self, x: ChowClass, y: ChowClass) -> ChowClass:
        out = [Fraction(0)] * RANK
        for i, a in enumerate(x.coords):
            if not a:
                continue
            for j, b in enumerate(y.coords):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(self.constants[i][j]):
                    if c:
                        out[k] += ab * c
        return ChowClass(tuple(out))

    def basis_operator(self, i: int) -> linalg.Matrix:
        return [[self.constants[i][j][k] for j in range(RANK)] for k in range(RANK)]


def _structure_constants(q_value: Fraction):
    table = quantum.qh_setup().table
    return tuple(
        tuple(tuple(a(q_value) for a in table[i][j].coords) for j in range(RANK))
        for i in range(RANK)
    )


def check_unit_and_commutativity(alg: FiniteAlgebra) -> None:
    consts = alg.constants
    for i in range(RANK):
        unit_row = tuple(Fraction(int(k == i)) for k in range(RANK))
        if consts[0][i] != unit_row or consts[i][0] != unit_row:
            raise InconsistencyError(f"[Y] is not a unit on basis element {i}")
        for j in range(i):
            if consts[i][j] != consts[j][i]:
                raise InconsistencyError(f"product of basis elements {i}, {j} is not commutative")


def check_associativity(alg: FiniteAlgebra) -> None:
    """L_i L_j = L_{B_i B_j} for every basis pair (the regular representation)."""
    ops = [alg.basis_operator(i) for i in range(RANK)]
    for i in range(RANK):
        for j in range(i, RANK):
            lhs = linalg.matmul(ops[i], ops[j])
            rhs = linalg.zeros(RANK)
            for k, c in enumerate(alg.constants[i][j]):
                if c:
                    rhs = linalg.matadd(rhs, linalg.scale(ops[k], c))
            if lhs != rhs:
                raise InconsistencyError(
                    f"associativity fails for basis elements {i}, {j} at q = {alg.q_value}"
                )


def check_homogeneity() -> None:
    """Each structure constant is a single power of q of the expected degree."""
    table = quantum.qh_setup().table
    for i in range(RANK):
        for j in range(RANK):
            for k, a in enumerate(table[i][j].coords):
                for e, c in enumerate(a.coeffs):
                    if c and CODIMS[i] + CODIMS[j] != CODIMS[k] + 3 * e:
                        raise InconsistencyError(f"structure constant ({i}, {j}, {k}) is not homogeneous")


@functools.lru_cache(maxsize=None)
def _family_checked() -> bool:
    # Structure constants are monomials c q^e (homogeneity), so each entry of
    # an associator is also a single monomial; vanishing at q = 1 therefore
    # gives associativity for every q.
    check_homogeneity()
    alg = FiniteAlgebra(Fraction(1), _structure_constants(Fraction(1)))
    check_unit_and_commutativity(alg)
    check_associativity(alg)
    return True


def specialize(q_value, verify: bool = True) -> FiniteAlgebra:
    qv = Fraction(q_value)
    alg = FiniteAlgebra(qv, _structure_constants(qv))
    if verify:
        _family_checked()
        check_unit_and_commutativity(alg)
    return alg


def mult_operator(alg: FiniteAlgebra, x: ChowClass) -> linalg.Matrix:
    """Matrix of y -> x * y; column j holds the coordinates of x * B_j."""
    m = linalg.zeros(RANK)
    for i, a in enumerate(x.coords):
        if not a:
            continue
        for j in range(RANK):
            for k, c in enumerate(alg.constants[i][j]):
                if c:
                    m[k][j] += a * c
    return m


def trace_gram(alg: FiniteAlgebra) -> linalg.Matrix:
    traces = [linalg.trace(alg.basis_operator(k)) for k in range(RANK)]
    return [
        [sum((c * t for c, t in zip(alg.constants[i][j], traces) if c), Fraction(0)) for j in range(RANK)]
        for i in range(RANK)
    ]


def trace_form_certificate(alg: FiniteAlgebra) -> Tuple[Fraction, bool]:
    d = linalg.det(trace_gram(alg))
    return d, d != 0


@functools.lru_cache(maxsize=None)
def trace_det_at(q_value: Fraction) -> Fraction:
    return trace_form_certificate(specialize(q_value))[0]


def vanishing_length(alg: FiniteAlgebra, x: ChowClass) -> int:
    """Dimension of the generalized 0-eigenspace of multiplication by x."""
    m = mult_operator(alg, x)
    return linalg.nullity(linalg.matpow(m, RANK))


@dataclass(frozen=True)
class SpectralReport:
    q_value: Fraction
    operator: linalg.Matrix = field(repr=False)
    char_poly: UniPoly
    squarefree_parts: Tuple[Tuple[UniPoly, int], ...]
    roots: Tuple[ComplexRoot, ...]
    trace_gram_det: Fraction
    semisimple: bool
    zero_eigenvalue_length: int

    def roots_with_multiplicity(self, m: int) -> List[ComplexRoot]:
        return [r for r in self.roots if r.multiplicity == m]

    def multiplicity_pattern(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for r in self.roots:
            out[r.multiplicity] = out.get(r.multiplicity, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "q": str(self.q_value),
            "char_poly": [str(c) for c in self.char_poly.coeffs],
            "roots": [{"re": r.re, "im": r.im, "mult": r.multiplicity} for r in self.roots],
            "trace_det": str(self.trace_gram_det),
            "semisimple": self.semisimple,
        }


def c1_spectrum(alg: FiniteAlgebra, tol: float = DEFAULT_TOL) -> SpectralReport:
    if tol <= 0:
        raise ValueError("tol must be positive")
    h = chow.named_class("p")
    m = mult_operator(alg, h)
    cp = linalg.char_poly(m)
    parts = tuple(squarefree_decomposition(cp))
    roots: List[ComplexRoot] = []
    for f, mult in parts:
        roots.extend(complex_roots(f, tol=tol, multiplicity=mult))
    roots.sort(key=lambda r: (r.re, r.im))
    if sum(r.multiplicity for r in roots) != RANK:
        raise InconsistencyError("root multiplicities do not add up to the rank")
    det, ss = trace_form_certificate(alg)
    zero_len = linalg.nullity(linalg.matpow(m, RANK))
    return SpectralReport(alg.q_value, m, cp, parts, tuple(roots), det, ss, zero_len)


def sample_q_values(count: int = 15, seed: int = SAMPLE_SEED) -> List[Fraction]:
    """The fixed samples followed by ``count`` seeded pseudo-random nonzero rationals."""
    rng = random.Random(seed)
    out = list(FIXED_SAMPLES)
    while len(out) < len(FIXED_SAMPLES) + count:
        v = Fraction(rng.randint(-60, 60), rng.randint(1, 25))
        if v and v not in out:
            out.append(v)
    return out


def trace_det_polynomial(points: int = 40) -> UniPoly:
    """det of the trace form as a polynomial in q, by exact interpolation at q = 1..points."""
    xs = [Fraction(k) for k in range(1, points + 1)]
    ys = [trace_form_certificate(specialize(x, verify=False))[0] for x in xs]
    return interpolate(xs, ys)


def match_roots(
    computed: Sequence[ComplexRoot],
    expected: Sequence[Tuple[float, float, int]],
    threshold: float = MATCH_TOL,
) -> Tuple[bool, float]:
    """Nearest-neighbour pairing; returns (all matched, worst distance)."""
    pool = list(computed)
    worst = 0.0
    for re, im, mult in expected:
        if not pool:
            return False, float("inf")
        target = complex(re, im)
        j = min(range(len(pool)), key=lambda i: abs(pool[i].value - target))
        r = pool.pop(j)
        dist = abs(r.value - target)
        worst = max(worst, dist)
        if dist >= threshold or r.multiplicity != mult:
            return False, worst
    return not pool, worst


def to_svg(report: SpectralReport, size: int = 480) -> str:
    """Scatter of the eigenvalues: blue circles for simple roots, red squares for double."""
    pad = 40
    extent = max([1.0] + [max(abs(r.re), abs(r.im)) for r in report.roots]) * 1.15
    scale = (size - 2 * pad) / (2 * extent)

    def px(x: float) -> float:
        return round(pad + (x + extent) * scale, 3)

    def py(y: float) -> float:
        return round(size - pad - (y + extent) * scale, 3)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="{pad}" y1="{py(0)}" x2="{size - pad}" y2="{py(0)}" stroke="black"/>',
        f'<line x1="{px(0)}" y1="{pad}" x2="{px(0)}" y2="{size - pad}" stroke="black"/>',
        f'<text x="{size - pad}" y="{py(0) - 6}" text-anchor="end" font-size="12">Real</text>',
        f'<text x="{px(0) + 6}" y="{pad - 8}" font-size="12">Imaginary</text>',
        f'<text x="{size / 2}" y="{size - 10}" text-anchor="middle" font-size="12">'
        f"eigenvalues of c1 at q = {report.q_value}</text>",
    ]
    for r in report.roots:
        x, y = px(r.re), py(r.im)
        if r.multiplicity == 1:
            lines.append(f'<circle cx="{x}" cy="{y}" r="5" fill="blue"/>')
        else:
            lines.append(
                f'<rect x="{round(x - 5, 3)}" y="{round(y - 5, 3)}" width="10" height="10" fill="red"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
