"""Finite sup-lattices stored as explicit order tables."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence


class LatticeError(ValueError):
    pass


class ElementNotInLattice(LatticeError):
    pass


class SupLattice:
    """A finite complete lattice on string element ids.

    ``leq`` must be the full order relation.  Use :meth:`from_pairs` to
    build one from a generating relation.  Binary joins and meets are
    computed once by exhaustive scan when the table is a valid lattice.
    """

    def __init__(self, elements: Sequence[str], leq: Iterable[tuple[str, str]], check: bool = True):
        self.elements = tuple(str(e) for e in elements)
        if len(set(self.elements)) != len(self.elements):
            raise LatticeError("duplicate element ids")
        self._index = {e: i for i, e in enumerate(self.elements)}
        self._leq = frozenset((str(a), str(b)) for a, b in leq)
        for a, b in self._leq:
            if a not in self._index or b not in self._index:
                raise ElementNotInLattice(f"order pair ({a},{b}) mentions an unknown element")
        self._join2: dict[tuple[str, str], str] = {}
        self._meet2: dict[tuple[str, str], str] = {}
        self.bottom: str | None = None
        self.top: str | None = None
        violations = validate_lattice(self)
        if violations:
            if check:
                raise LatticeError("; ".join(violations))
            return
        self.bottom = _least(self, self.elements, self.elements)
        self.top = _greatest(self, self.elements, self.elements)
        for a, b in product(self.elements, repeat=2):
            ub = [u for u in self.elements if self.leq(a, u) and self.leq(b, u)]
            lb = [u for u in self.elements if self.leq(u, a) and self.leq(u, b)]
            self._join2[a, b] = _least(self, ub, ub)
            self._meet2[a, b] = _greatest(self, lb, lb)

    @classmethod
    def from_pairs(cls, elements: Sequence[str], pairs: Iterable[tuple[str, str]], check: bool = True) -> "SupLattice":
        """Close ``pairs`` reflexively and transitively, then build."""
        elements = [str(e) for e in elements]
        rel = {(str(a), str(b)) for a, b in pairs} | {(e, e) for e in elements}
        for k in elements:
            for i in elements:
                if (i, k) not in rel:
                    continue
                for j in elements:
                    if (k, j) in rel:
                        rel.add((i, j))
        return cls(elements, rel, check=check)

    @classmethod
    def chain(cls, n: int) -> "SupLattice":
        ids = [str(i) for i in range(n)]
        return cls(ids, [(a, b) for a in ids for b in ids if int(a) <= int(b)])

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SupLattice):
            return NotImplemented
        return self.elements == other.elements and self._leq == other._leq

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"SupLattice({list(self.elements)!r})"

    def pairs(self) -> list[tuple[str, str]]:
        return [(a, b) for a in self.elements for b in self.elements if (a, b) in self._leq]

    def _check(self, x: str) -> None:
        if x not in self._index:
            raise ElementNotInLattice(f"{x!r} is not an element of {self!r}")

    def leq(self, a: str, b: str) -> bool:
        return (a, b) in self._leq

    def join(self, xs: Iterable[str]) -> str:
        acc = self.bottom
        for x in xs:
            self._check(x)
            acc = self._join2[acc, x]
        return acc

    def meet(self, xs: Iterable[str]) -> str:
        acc = self.top
        for x in xs:
            self._check(x)
            acc = self._meet2[acc, x]
        return acc

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "leq": [list(p) for p in self.pairs()]}

    @classmethod
    def from_json(cls, data: dict) -> "SupLattice":
        return cls.from_pairs(data["elements"], [tuple(p) for p in data.get("leq", [])])


def _least(L: SupLattice, candidates, universe) -> str | None:
    for c in candidates:
        if all(L.leq(c, u) for u in universe):
            return c
    return None


def _greatest(L: SupLattice, candidates, universe) -> str | None:
    for c in candidates:
        if all(L.leq(u, c) for u in universe):
            return c
    return None


def join(L: SupLattice, S: Iterable[str]) -> str:
    return L.join(S)


def meet(L: SupLattice, S: Iterable[str]) -> str:
    return L.meet(S)


def validate_lattice(L: SupLattice) -> list[str]:
    """List every violated lattice axiom instance (empty list means valid).

    Existence of all joins is checked on the empty set and on all pairs,
    which suffices for finite posets.
    """
    out = []
    els = L.elements
    for x in els:
        if not L.leq(x, x):
            out.append(f"leq({x},{x}) false")
    for x, y in product(els, repeat=2):
        if x != y and L.leq(x, y) and L.leq(y, x):
            if x < y:
                out.append(f"antisymmetry fails for {x},{y}")
    for x, y, z in product(els, repeat=3):
        if L.leq(x, y) and L.leq(y, z) and not L.leq(x, z):
            out.append(f"transitivity fails at ({x},{y},{z})")
    if out:
        return out
    if _least(L, els, els) is None:
        out.append("join of {} undefined")
    for i, x in enumerate(els):
        for y in els[i + 1:]:
            ub = [u for u in els if L.leq(x, u) and L.leq(y, u)]
            if _least(L, ub, ub) is None:
                out.append(f"join of {{{x},{y}}} undefined")
    return out
