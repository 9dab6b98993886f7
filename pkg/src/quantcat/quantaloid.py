"""Quantaloids: composition, identities, residuation and adjoints.

Two regimes share one interface.  :class:`TableQuantaloid` holds finite hom
lattices and explicit composition tables; :class:`LawvereQuantale` is the
one-object quantale of extended non-negative rationals with truncated
addition, handled symbolically.

Raw methods take hom values plus the Q-objects involved.  ``comp(x, y, z,
g, f)`` composes ``f: x -> y`` with ``g: y -> z``.  ``lift(a, b, c, g, h)``
is the largest ``x: a -> b`` with ``g o x <= h`` for ``g: b -> c`` and
``h: a -> c``; ``ext(a, b, c, f, h)`` is the largest ``x: b -> c`` with
``x o f <= h`` for ``f: a -> b`` and ``h: a -> c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Iterable, Mapping, Sequence

from .lattice import ElementNotInLattice, LatticeError, SupLattice, validate_lattice


class QuantaloidError(ValueError):
    pass


class TypeMismatch(QuantaloidError):
    pass


class NotAdjoint(QuantaloidError):
    pass


class NotEnumerable(QuantaloidError):
    pass


class _Infinity:
    """The distinguished infinite distance; compares above every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self) -> int:
        return hash("quantcat.INF")

    def __eq__(self, other: object) -> bool:
        return other is self

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True


INF = _Infinity()


class Quantaloid:
    """Interface shared by the table-driven and symbolic quantaloids."""

    name = "quantaloid"
    objects: tuple[str, ...] = ()
    enumerable = False

    def leq(self, x: str, y: str, u, v) -> bool:
        raise NotImplementedError

    def join(self, x: str, y: str, values: Iterable) -> Any:
        raise NotImplementedError

    def meet(self, x: str, y: str, values: Iterable) -> Any:
        raise NotImplementedError

    def bottom(self, x: str, y: str) -> Any:
        return self.join(x, y, ())

    def top(self, x: str, y: str) -> Any:
        return self.meet(x, y, ())

    def comp(self, x: str, y: str, z: str, g, f) -> Any:
        raise NotImplementedError

    def unit(self, x: str) -> Any:
        raise NotImplementedError

    def lift(self, a: str, b: str, c: str, g, h) -> Any:
        raise NotImplementedError

    def ext(self, a: str, b: str, c: str, f, h) -> Any:
        raise NotImplementedError

    def contains(self, x: str, y: str, v) -> bool:
        raise NotImplementedError

    def elements(self, x: str, y: str) -> tuple:
        raise NotEnumerable(f"{self.name} has no finite hom enumeration")

    def render(self, v) -> str:
        return str(v)

    def check_object(self, x: str) -> None:
        if x not in self.objects:
            raise TypeMismatch(f"{x!r} is not an object of {self.name}")


class TableQuantaloid(Quantaloid):
    """A quantaloid given by finite hom lattices and composition tables.

    ``homs[(x, y)]`` is the lattice of arrows ``x -> y``;
    ``compose[(x, y, z)][(g, f)]`` is ``g o f``; ``identities[x]`` is ``1_x``.
    Construction validates every axiom and raises on violations unless
    ``check=False`` (used to build deliberately broken fixtures).
    """

    enumerable = True

    def __init__(
        self,
        objects: Sequence[str],
        homs: Mapping[tuple[str, str], SupLattice],
        compose: Mapping[tuple[str, str, str], Mapping[tuple[str, str], str]],
        identities: Mapping[str, str],
        name: str = "table",
        check: bool = True,
    ):
        self.name = name
        self.objects = tuple(objects)
        self.homs = {k: homs[k] for k in product(self.objects, repeat=2)}
        self.table = {k: dict(compose[k]) for k in product(self.objects, repeat=3)}
        self.identities = {x: identities[x] for x in self.objects}
        self._lift: dict = {}
        self._ext: dict = {}
        if check:
            problems = validate_quantaloid(self)
            if problems:
                raise QuantaloidError(f"{name}: " + "; ".join(problems[:10]))

    def __repr__(self) -> str:
        return f"TableQuantaloid({self.name!r}, objects={list(self.objects)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TableQuantaloid):
            return NotImplemented
        return (
            self is other
            or (self.objects == other.objects and self.homs == other.homs
                and self.table == other.table and self.identities == other.identities)
        )

    def __hash__(self) -> int:
        return hash((self.name, self.objects))

    def leq(self, x, y, u, v):
        return self.homs[x, y].leq(u, v)

    def join(self, x, y, values):
        return self.homs[x, y].join(values)

    def meet(self, x, y, values):
        return self.homs[x, y].meet(values)

    def bottom(self, x, y):
        return self.homs[x, y].bottom

    def top(self, x, y):
        return self.homs[x, y].top

    def comp(self, x, y, z, g, f):
        try:
            return self.table[x, y, z][g, f]
        except KeyError:
            raise ElementNotInLattice(f"no composite for {g!r} o {f!r} on {x}->{y}->{z}") from None

    def unit(self, x):
        return self.identities[x]

    def contains(self, x, y, v):
        return (x, y) in self.homs and v in self.homs[x, y]

    def elements(self, x, y):
        return self.homs[x, y].elements

    def lift(self, a, b, c, g, h):
        key = (a, b, c, g, h)
        r = self._lift.get(key)
        if r is None:
            Lh = self.homs[a, c]
            if h not in Lh:
                raise ElementNotInLattice(f"{h!r} not in hom({a},{c})")
            tab = self.table[a, b, c]
            r = self.homs[a, b].join(x for x in self.homs[a, b].elements if Lh.leq(tab[g, x], h))
            self._lift[key] = r
        return r

    def ext(self, a, b, c, f, h):
        key = (a, b, c, f, h)
        r = self._ext.get(key)
        if r is None:
            Lh = self.homs[a, c]
            if h not in Lh:
                raise ElementNotInLattice(f"{h!r} not in hom({a},{c})")
            tab = self.table[a, b, c]
            r = self.homs[b, c].join(x for x in self.homs[b, c].elements if Lh.leq(tab[x, f], h))
            self._ext[key] = r
        return r

    def to_json(self) -> dict:
        comp = {}
        for (x, y, z), tab in self.table.items():
            comp[f"{x}|{y}|{z}"] = [[g, f, r] for (g, f), r in tab.items()]
        return {
            "name": self.name,
            "objects": list(self.objects),
            "homs": {f"{x}|{y}": L.to_json() for (x, y), L in self.homs.items()},
            "compose": comp,
            "identities": dict(self.identities),
        }

    @classmethod
    def from_json(cls, data: Mapping, check: bool = True) -> "TableQuantaloid":
        objects = [str(o) for o in data["objects"]]
        homs = {}
        for key, lat in data["homs"].items():
            x, y = key.split("|")
            homs[x, y] = SupLattice.from_json(lat)
        compose = {}
        for key, rows in data["compose"].items():
            x, y, z = key.split("|")
            compose[x, y, z] = {(str(g), str(f)): str(r) for g, f, r in rows}
        missing = [k for k in product(objects, repeat=2) if k not in homs]
        missing += [k for k in product(objects, repeat=3) if k not in compose]
        if missing:
            raise QuantaloidError(f"missing hom or composition table for {missing[0]}")
        return cls(objects, homs, compose, {str(k): str(v) for k, v in data["identities"].items()},
                   name=data.get("name", "table"), check=check)


class LawvereQuantale(Quantaloid):
    """Extended non-negative rationals, ordered by reversed numeric order.

    Composition is addition with ``INF`` absorbing; the identity is 0; a
    join is a numeric infimum and a meet a numeric supremum.
    """

    name = "lawvere"
    objects = ("*",)
    enumerable = False

    def __repr__(self) -> str:
        return "LAWVERE"

    def __reduce__(self):
        return (_lawvere, ())

    def contains(self, x, y, v):
        return v is INF or (isinstance(v, Fraction) and v >= 0)

    def _check(self, v):
        if not (v is INF or (isinstance(v, Fraction) and v >= 0)):
            raise ElementNotInLattice(f"{v!r} is not an extended non-negative rational")

    def leq(self, x, y, u, v):
        return u >= v

    def join(self, x, y, values):
        acc = INF
        for v in values:
            self._check(v)
            if v < acc:
                acc = v
        return acc

    def meet(self, x, y, values):
        acc = Fraction(0)
        for v in values:
            self._check(v)
            if v > acc:
                acc = v
        return acc

    def bottom(self, x, y):
        return INF

    def top(self, x, y):
        return Fraction(0)

    def comp(self, x, y, z, g, f):
        if g is INF or f is INF:
            return INF
        return g + f

    def unit(self, x):
        return Fraction(0)

    def lift(self, a, b, c, g, h):
        return _monus(h, g)

    def ext(self, a, b, c, f, h):
        return _monus(h, f)

    def render(self, v):
        return "inf" if v is INF else f"{v.numerator}/{v.denominator}"


def _monus(h, g):
    """Smallest numeric x with g + x >= h."""
    if g is INF:
        return Fraction(0)
    if h is INF:
        return INF
    return max(h - g, Fraction(0))


LAWVERE = LawvereQuantale()


def _lawvere():
    return LAWVERE


def lawvere_value(v) -> Any:
    """Coerce an int, Fraction or the string ``"inf"`` to a Lawvere value."""
    if v is INF or v == "inf":
        return INF
    q = Fraction(v)
    if q < 0:
        raise ElementNotInLattice(f"negative distance {v!r}")
    return q


# ---------------------------------------------------------------------------
# arrow-level operations


@dataclass(frozen=True)
class Arrow:
    src: str
    dst: str
    value: Any


def arrow(Q: Quantaloid, src: str, dst: str, value) -> Arrow:
    Q.check_object(src)
    Q.check_object(dst)
    if not Q.contains(src, dst, value):
        raise ElementNotInLattice(f"{value!r} is not an arrow {src} -> {dst}")
    return Arrow(src, dst, value)


def identity(Q: Quantaloid, x: str) -> Arrow:
    return Arrow(x, x, Q.unit(x))


def arrow_leq(Q: Quantaloid, f: Arrow, g: Arrow) -> bool:
    if (f.src, f.dst) != (g.src, g.dst):
        raise TypeMismatch(f"{f} and {g} are not parallel")
    return Q.leq(f.src, f.dst, f.value, g.value)


def compose(Q: Quantaloid, g: Arrow, f: Arrow) -> Arrow:
    if f.dst != g.src:
        raise TypeMismatch(f"cannot compose {g.src}->{g.dst} after {f.src}->{f.dst}")
    return Arrow(f.src, g.dst, Q.comp(f.src, f.dst, g.dst, g.value, f.value))


def lifting(Q: Quantaloid, g: Arrow, h: Arrow) -> Arrow:
    """Largest ``x: h.src -> g.src`` with ``g o x <= h``."""
    if g.dst != h.dst:
        raise TypeMismatch(f"lifting needs a common codomain, got {g.dst} and {h.dst}")
    return Arrow(h.src, g.src, Q.lift(h.src, g.src, g.dst, g.value, h.value))


def extension(Q: Quantaloid, f: Arrow, h: Arrow) -> Arrow:
    """Largest ``x: f.dst -> h.dst`` with ``x o f <= h``."""
    if f.src != h.src:
        raise TypeMismatch(f"extension needs a common domain, got {f.src} and {h.src}")
    return Arrow(f.dst, h.dst, Q.ext(f.src, f.dst, h.dst, f.value, h.value))


def right_adjoint(Q: Quantaloid, f: Arrow) -> Arrow:
    """The right adjoint of ``f``, or raise :class:`NotAdjoint`.

    The candidate ``[f, 1]`` already satisfies the counit inequality, so
    only the unit needs checking.
    """
    g = lifting(Q, f, identity(Q, f.dst))
    if not arrow_leq(Q, identity(Q, f.src), compose(Q, g, f)):
        raise NotAdjoint(f"{f.value!r}: {f.src}->{f.dst} has no right adjoint")
    return g


def left_adjoint(Q: Quantaloid, f: Arrow) -> Arrow:
    g = extension(Q, f, identity(Q, f.src))
    if not arrow_leq(Q, identity(Q, f.dst), compose(Q, f, g)):
        raise NotAdjoint(f"{f.value!r}: {f.src}->{f.dst} has no left adjoint")
    return g


def has_right_adjoint(Q: Quantaloid, f: Arrow) -> bool:
    try:
        right_adjoint(Q, f)
    except NotAdjoint:
        return False
    return True


def arrows(Q: Quantaloid, src: str, dst: str) -> list[Arrow]:
    return [Arrow(src, dst, v) for v in Q.elements(src, dst)]


def all_arrows(Q: Quantaloid) -> list[Arrow]:
    return [a for x, y in product(Q.objects, repeat=2) for a in arrows(Q, x, y)]


def validate_quantaloid(Q: Quantaloid) -> list[str]:
    """Exhaustively check the quantaloid axioms of an enumerable instance."""
    if not Q.enumerable:
        return []
    out: list[str] = []
    objs = Q.objects
    for (x, y), L in Q.homs.items():
        for p in _lattice_problems(L):
            out.append(f"hom({x},{y}): {p}")
    if out:
        return out
    for x in objs:
        if Q.identities.get(x) not in Q.homs[x, x]:
            out.append(f"identity at {x} is not in hom({x},{x})")
    for x, y, z in product(objs, repeat=3):
        tab = Q.table[x, y, z]
        for g, f in product(Q.homs[y, z].elements, Q.homs[x, y].elements):
            r = tab.get((g, f))
            if r is None:
                out.append(f"composite {g} o {f} missing on {x}->{y}->{z}")
            elif r not in Q.homs[x, z]:
                out.append(f"composite {g} o {f} = {r} is not in hom({x},{z})")
    if out:
        return out
    for x, y in product(objs, repeat=2):
        for f in Q.homs[x, y].elements:
            if Q.table[x, y, y][Q.identities[y], f] != f:
                out.append(f"left unit law fails for {f} in hom({x},{y})")
            if Q.table[x, x, y][f, Q.identities[x]] != f:
                out.append(f"right unit law fails for {f} in hom({x},{y})")
    for w, x, y, z in product(objs, repeat=4):
        for f, g, h in product(Q.homs[w, x].elements, Q.homs[x, y].elements, Q.homs[y, z].elements):
            lhs = Q.table[w, y, z][h, Q.table[w, x, y][g, f]]
            rhs = Q.table[w, x, z][Q.table[x, y, z][h, g], f]
            if lhs != rhs:
                out.append(f"associativity fails at ({h},{g},{f}) on {w}->{x}->{y}->{z}")
    for x, y, z in product(objs, repeat=3):
        Lxy, Lyz, Lxz = Q.homs[x, y], Q.homs[y, z], Q.homs[x, z]
        tab = Q.table[x, y, z]
        for g in Lyz.elements:
            if tab[g, Lxy.bottom] != Lxz.bottom:
                out.append(f"{g} o - does not preserve the empty join on {x}->{y}->{z}")
            for u, v in _pairs(Lxy.elements):
                if tab[g, Lxy.join([u, v])] != Lxz.join([tab[g, u], tab[g, v]]):
                    out.append(f"{g} o - does not preserve the join of ({u},{v}) on {x}->{y}->{z}")
        for f in Lxy.elements:
            if tab[Lyz.bottom, f] != Lxz.bottom:
                out.append(f"- o {f} does not preserve the empty join on {x}->{y}->{z}")
            for u, v in _pairs(Lyz.elements):
                if tab[Lyz.join([u, v]), f] != Lxz.join([tab[u, f], tab[v, f]]):
                    out.append(f"- o {f} does not preserve the join of ({u},{v}) on {x}->{y}->{z}")
    return out


def _pairs(els):
    return [(u, v) for i, u in enumerate(els) for v in els[i + 1:]]


def _lattice_problems(L: SupLattice) -> list[str]:

    return validate_lattice(L)


# ---------------------------------------------------------------------------
# built-in instances


def _one_object(name: str, lattice: SupLattice, op, unit: str) -> TableQuantaloid:
    tab = {(g, f): op(g, f) for g in lattice.elements for f in lattice.elements}
    return TableQuantaloid(["*"], {("*", "*"): lattice}, {("*", "*", "*"): tab}, {"*": unit}, name=name)


def _make_bool() -> TableQuantaloid:
    L = SupLattice(["false", "true"], [("false", "false"), ("false", "true"), ("true", "true")])
    return _one_object("bool", L, lambda g, f: "true" if g == f == "true" else "false", "true")


BOOL = _make_bool()


@lru_cache(maxsize=None)
def chain(n: int) -> TableQuantaloid:
    """The n-element chain ``0 < ... < n-1`` with min as composition."""
    if n < 1:
        raise QuantaloidError("a chain quantale needs at least one element")
    L = SupLattice.chain(n)
    return _one_object(f"chain:{n}", L, lambda g, f: min(g, f, key=int), str(n - 1))


def builtin(name: str) -> Quantaloid:
    if name == "bool":
        return BOOL
    if name == "lawvere":
        return LAWVERE
    if name.startswith("chain:"):
        return chain(int(name.split(":", 1)[1]))
    raise QuantaloidError(f"unknown built-in quantaloid {name!r}")


__all__ = [
    "Arrow", "BOOL", "INF", "LAWVERE", "LatticeError", "LawvereQuantale", "NotAdjoint",
    "NotEnumerable", "Quantaloid", "QuantaloidError", "TableQuantaloid", "TypeMismatch",
    "all_arrows", "arrow", "arrow_leq", "arrows", "builtin", "chain", "compose", "extension",
    "has_right_adjoint", "identity", "left_adjoint", "lawvere_value", "lifting", "right_adjoint",
    "validate_quantaloid",
]
