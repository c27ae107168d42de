"""Buchberger's algorithm and normal forms over Q."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .poly import (
    DEFAULT_ORDER,
    Monomial,
    MultiPoly,
    WeightedRevLex,
    mono_div,
    mono_divides,
    mono_lcm,
    wdeg,
)


class GroebnerError(RuntimeError):
    pass


@dataclass(frozen=True)
class GroebnerBasis:
    generators: Tuple[MultiPoly, ...]
    order: WeightedRevLex = DEFAULT_ORDER

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading(self.order)[0] for g in self.generators)

    def is_standard(self, m: Monomial) -> bool:
        return not any(mono_divides(lm, m) for lm in self.leading_monomials)

    def standard_monomials(self, degree: int, nvars: int = 4) -> List[Monomial]:
        """Standard monomials of one weighted degree, in decreasing order."""
        out = [m for m in monomials_of_degree(degree, nvars) if self.is_standard(m)]
        return sorted(out, key=self.order.key, reverse=True)

    def __len__(self):
        return len(self.generators)


def monomials_of_degree(degree: int, nvars: int = 4, weights=(1, 2, 2, 3)) -> List[Monomial]:
    """All monomials in the first ``nvars`` variables with the given weighted degree."""
    out: List[Monomial] = []

    def rec(i, remaining, prefix):
        if i == nvars:
            if remaining == 0:
                out.append(tuple(prefix) + (0,) * (4 - nvars))
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            rec(i + 1, remaining - e * w, prefix + [e])

    rec(0, degree, [])
    return out


def _reduce(p: MultiPoly, basis: Sequence[Tuple[Monomial, Fraction, MultiPoly]], order) -> MultiPoly:
    """Full reduction of ``p`` by ``basis`` given as (lm, lc, poly) triples."""
    rest: Dict[Monomial, Fraction] = dict(p.terms)
    result: Dict[Monomial, Fraction] = {}
    key = order.key
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        for lm, lc, g in basis:
            if mono_divides(lm, m):
                factor = c / lc
                shift = mono_div(m, lm)
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    s = rest.get(t, 0) - factor * gc
                    if s:
                        rest[t] = s
                    else:
                        rest.pop(t, None)
                break
        else:
            result[m] = c
            del rest[m]
    return MultiPoly._raw(result)


def normal_form(p: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    basis = [(g.leading(gb.order)) + (g,) for g in gb.generators]
    return _reduce(p, basis, gb.order)


def _spoly(f: MultiPoly, g: MultiPoly, order) -> MultiPoly:
    mf, cf = f.leading(order)
    mg, cg = g.leading(order)
    lcm = mono_lcm(mf, mg)
    return f.mul_term(mono_div(lcm, mf), 1 / cf) - g.mul_term(mono_div(lcm, mg), 1 / cg)


def buchberger(
    generators: Iterable[MultiPoly],
    order: WeightedRevLex = DEFAULT_ORDER,
    max_pairs: int = 100_000,
) -> GroebnerBasis:
    """Reduced Groebner basis with the normal selection strategy.

    Both Buchberger criteria are applied: pairs with coprime leading monomials
    are skipped, and so are pairs (i, j) for which some k has lm_k | lcm(i, j)
    with (i, k) and (j, k) already treated.
    """
    gens = [g.monic(order) for g in generators if not g.is_zero()]
    for g in gens:
        if not g.is_homogeneous():
            raise GroebnerError(f"generator is not weighted-homogeneous: {g}")
    if not gens:
        return GroebnerBasis((), order)

    basis: List[MultiPoly] = []
    lms: List[Monomial] = []
    triples: List[Tuple[Monomial, Fraction, MultiPoly]] = []

    def add(g: MultiPoly):
        g = g.monic(order)
        lm, lc = g.leading(order)
        basis.append(g)
        lms.append(lm)
        triples.append((lm, lc, g))

    for g in gens:
        r = _reduce(g, triples, order)
        if not r.is_zero():
            add(r)

    pairs = set(itertools.combinations(range(len(basis)), 2))
    done = set()
    treated = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: order.key(mono_lcm(lms[ij[0]], lms[ij[1]])))
        pairs.discard((i, j))
        done.add((i, j))
        treated += 1
        if treated > max_pairs:
            raise GroebnerError(f"pair ceiling {max_pairs} exceeded with {len(basis)} generators")
        lcm = mono_lcm(lms[i], lms[j])
        if all(a == 0 or b == 0 for a, b in zip(lms[i], lms[j])):
            continue
        if any(
            k not in (i, j)
            and mono_divides(lms[k], lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(basis))
        ):
            continue
        r = _reduce(_spoly(basis[i], basis[j], order), triples, order)
        if not r.is_zero():
            add(r)
            n = len(basis) - 1
            pairs.update((k, n) for k in range(n))

    return GroebnerBasis(tuple(_interreduce(basis, order)), order)


def _interreduce(basis: List[MultiPoly], order) -> List[MultiPoly]:
    # drop generators whose leading monomial is divisible by another's
    lms = [g.leading(order)[0] for g in basis]
    keep = []
    for i, g in enumerate(basis):
        if any(
            j != i and mono_divides(lms[j], lms[i]) and (lms[j] != lms[i] or j < i)
            for j in range(len(basis))
        ):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = [h.leading(order) + (h,) for k, h in enumerate(keep) if k != i]
        lm, lc = g.leading(order)
        tail = g - MultiPoly.monomial(lm, lc)
        reduced = MultiPoly.monomial(lm, lc) + _reduce(tail, others, order)
        out.append(reduced.monic(order))
    return sorted(out, key=lambda g: order.key(g.leading(order)[0]))


def is_groebner(gb: GroebnerBasis) -> bool:
    gens = gb.generators
    for f, g in itertools.combinations(gens, 2):
        if not normal_form(_spoly(f, g, gb.order), gb).is_zero():
            return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    lms = gb.leading_monomials
    for i, g in enumerate(gb.generators):
        if g.leading(gb.order)[1] != 1:
            return False
        for j, lm in enumerate(lms):
            if j != i and any(mono_divides(lm, m) for m in g.terms):
                return False
    return True


def hilbert_function(gb: GroebnerBasis, max_degree: int, nvars: int = 4) -> List[int]:
    return [len(gb.standard_monomials(d, nvars)) for d in range(max_degree + 1)]


__all__ = [
    "GroebnerBasis",
    "GroebnerError",
    "buchberger",
    "normal_form",
    "is_groebner",
    "is_reduced",
    "hilbert_function",
    "monomials_of_degree",
    "wdeg",
]
