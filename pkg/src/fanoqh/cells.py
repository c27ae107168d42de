"""Cell decomposition data: the 13 cells, their closure poset, and the c1 diagram.

The poset and edge weights live in ``data/cells.json`` together with a
SHA-256 of their canonical serialization; loading fails if they drift.
"""

from __future__ import annotations

import functools
import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Dict, FrozenSet, List, Optional, Tuple

from . import chow, quantum
from .chow import ChowClass

# cell label -> label used for the class in the Chevalley formulas
CELL_TO_CLASS = {"m": "[Y]", "p": "c1", "q_cell": "line", "n": "pt"}
CLASS_TO_CELL = {v: k for k, v in CELL_TO_CLASS.items()}
INVOLUTION_SWAP = {"e1": "e3", "e3": "e1", "f1": "f3", "f3": "f1", "h1": "h3", "h3": "h1"}
# order-reversing relabeling: dimension d <-> 6 - d
REVERSAL = {"m": "n", "n": "m", "p": "q_cell", "q_cell": "p",
            "e1": "h1", "e2": "h2", "e3": "h3", "h1": "e1", "h2": "e2", "h3": "e3",
            "f1": "f1", "f2": "f2", "f3": "f3"}


class CellDataError(ValueError):
    pass


def canonical_digest(payload: dict) -> str:
    body = {k: v for k, v in payload.items() if k != "sha256"}
    return hashlib.sha256(json.dumps(body, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def load_cell_data(text: Optional[str] = None) -> dict:
    if text is None:
        text = resources.files("fanoqh").joinpath("data/cells.json").read_text()
    payload = json.loads(text)
    digest = canonical_digest(payload)
    if payload.get("sha256") != digest:
        raise CellDataError(f"cell data checksum mismatch (stored {payload.get('sha256')}, actual {digest})")
    return payload


@dataclass(frozen=True)
class HassePoset:
    dims: Dict[str, int]
    covers: Tuple[Tuple[str, str], ...]  # (upper, lower)

    @classmethod
    def from_data(cls, payload: dict) -> "HassePoset":
        dims = {n["label"]: int(n["dim"]) for n in payload["nodes"]}
        covers = tuple((a, b) for a, b in payload["covers"])
        for a, b in covers:
            if a not in dims or b not in dims:
                raise CellDataError(f"cover ({a}, {b}) uses an unknown cell")
        return cls(dims, covers)

    @property
    def labels(self) -> List[str]:
        return list(self.dims)

    @functools.cached_property
    def _below(self) -> Dict[str, FrozenSet[str]]:
        children: Dict[str, List[str]] = {l: [] for l in self.dims}
        for a, b in self.covers:
            children[a].append(b)
        out: Dict[str, FrozenSet[str]] = {}
        for label in sorted(self.dims, key=self.dims.get):
            acc = {label}
            for c in children[label]:
                acc |= out[c]
            out[label] = frozenset(acc)
        return out

    def leq(self, b: str, a: str) -> bool:
        """b <= a in the closure order."""
        for x in (a, b):
            if x not in self.dims:
                raise CellDataError(f"unknown cell label {x!r}")
        return b in self._below[a]

    def maximal(self) -> List[str]:
        return [l for l in self.dims if not any(b == l for _, b in self.covers)]

    def minimal(self) -> List[str]:
        return [l for l in self.dims if not any(a == l for a, _ in self.covers)]

    def relabel(self, mapping: Dict[str, str], reverse: bool = False) -> set:
        out = set()
        for a, b in self.covers:
            a2, b2 = mapping.get(a, a), mapping.get(b, b)
            out.add((b2, a2) if reverse else (a2, b2))
        return out

    def render(self) -> str:
        lines = []
        for d in range(max(self.dims.values()), -1, -1):
            row = [l for l in self.dims if self.dims[l] == d]
            lines.append(f"dim {d}: " + "  ".join(row))
        lines.append("covers:")
        for a, b in self.covers:
            lines.append(f"  {a} > {b}")
        return "\n".join(lines)


@functools.lru_cache(maxsize=None)
def cell_data() -> dict:
    return load_cell_data()


@functools.lru_cache(maxsize=None)
def hasse_poset() -> HassePoset:
    return HassePoset.from_data(cell_data())


def chevalley_edges(payload: Optional[dict] = None) -> Dict[Tuple[str, str], int]:
    payload = cell_data() if payload is None else payload
    return {(a, b): int(w) for a, b, w in payload["chevalley_edges"]}


def cell_class(label: str, payload: Optional[dict] = None) -> ChowClass:
    payload = cell_data() if payload is None else payload
    if label not in payload["classes"]:
        raise CellDataError(f"unknown cell label {label!r}")
    return ChowClass.from_dict(payload["classes"][label], label=label)


def poset_query(a: str, b: str) -> bool:
    """True iff cell b lies in the closure of cell a."""
    return hasse_poset().leq(b, a)


def verify_cell_pairings() -> Tuple[bool, List[str]]:
    failures = []

    def expect(x: str, y: str, value: int):
        got = chow.pairing(cell_class(x), cell_class(y))
        if got != value:
            failures.append(f"pairing({x}, {y}) = {got}, expected {value}")

    for i in (1, 2, 3):
        for j in (1, 2, 3):
            expect(f"e{i}", f"h{j}", int(i == j))
            expect(f"f{i}", f"f{j}", int(i == j))
    expect("m", "n", 1)
    expect("p", "q_cell", 1)
    return not failures, failures


def verify_chevalley_diagram(mode: str = "classical") -> Tuple[bool, List[str]]:
    """Compare c1 times each cell with the stored diagram (classical) or the q-corrected formulas."""
    failures = []
    if mode == "classical":
        edges = chevalley_edges()
        poset = hasse_poset()
        h = chow.named_class("p")
        for label in poset.labels:
            if label == "n":
                continue
            terms = quantum.to_cell_terms(quantum.QClass.embed(h * cell_class(label)))
            got = {CLASS_TO_CELL.get(t, t): c for c, n, t in terms}
            want = {b: w for (a, b), w in edges.items() if a == label}
            for target in set(got) | set(want):
                if got.get(target, 0) != want.get(target, 0):
                    failures.append(
                        f"c1.{label}: coefficient of {target} is {got.get(target, 0)}, "
                        f"diagram says {want.get(target, 0)}"
                    )
    elif mode == "quantum":
        from . import verify

        golden = verify.load_golden()["chevalley"]
        for label, product in quantum.chevalley_table():
            got = {(t, n): c for c, n, t in quantum.to_cell_terms(product)}
            want = {(t, int(n)): Fraction(c) for c, n, t in golden[label]}
            if got != want:
                failures.append(
                    f"c1*{label} = {quantum.format_cell_terms(quantum.to_cell_terms(product))}, "
                    f"expected {quantum.format_cell_terms([(Fraction(c), int(n), t) for c, n, t in golden[label]])}"
                )
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return not failures, failures


def render_diagram() -> str:
    lines = ["c1 diagram (source > target: weight):"]
    for (a, b), w in chevalley_edges().items():
        lines.append(f"  {a} > {b}: {w}")
    return "\n".join(lines)
