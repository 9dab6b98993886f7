"""Presheaves, presheaf categories, weighted colimits and the free cocompletion.

A presheaf ``phi`` of type ``X`` on ``A`` is a distributor ``*_X -|-> A``;
its value at ``a`` is an arrow ``X -> t(a)`` and the action axiom reads
``A(a2, a) o phi(a) <= phi(a2)``.
"""

from __future__ import annotations

from itertools import product
from typing import Any, Hashable, Iterable, Mapping, Sequence

from .qcat import (
    Distributor,
    QCategory,
    QFunctor,
    TypeMismatch,
    dist_compose,
    dist_lifting,
    identity_dist,
    induced_left,
    induced_right,
    object_key,
    same_category,
    singleton,
)
from .quantaloid import NotEnumerable, QuantaloidError

DEFAULT_BUDGET = 20_000


class BaseMismatch(TypeMismatch):
    pass


class BudgetExceeded(QuantaloidError):
    def __init__(self, what: str, cardinality: int, budget: int):
        super().__init__(f"{what}: more than {budget} items (reached {cardinality})")
        self.cardinality = cardinality
        self.budget = budget


class NotCocomplete(QuantaloidError):
    def __init__(self, a: Hashable, message: str | None = None):
        super().__init__(message or f"no colimit witness for weight at {object_key(a)}")
        self.weight = a


class InvalidPresheaf(QuantaloidError):
    pass


class Presheaf:
    """Values ``phi(a): X -> t(a)`` stored in the order of ``base.objects``."""

    __slots__ = ("base", "q_type", "values", "_hash")

    def __init__(self, base: QCategory, q_type: str, values: Mapping[Hashable, Any] | Sequence[Any],
                 check: bool = False):
        self.base = base
        self.q_type = q_type
        if isinstance(values, Mapping):
            values = tuple(values[a] for a in base.objects)
        self.values = tuple(values)
        if len(self.values) != len(base.objects):
            raise InvalidPresheaf("value count does not match the base")
        self._hash = hash((q_type, self.values))
        if check:
            problems = validate_presheaf(self)
            if problems:
                raise InvalidPresheaf("; ".join(problems[:10]))

    def __call__(self, a: Hashable) -> Any:
        return self.values[self.base.index(a)]

    def items(self):
        return zip(self.base.objects, self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Presheaf):
            return NotImplemented
        return (self._hash == other._hash and self.q_type == other.q_type and self.values == other.values
                and same_category(self.base, other.base))

    def __hash__(self) -> int:
        return self._hash

    def key(self) -> str:
        Q = self.base.Q
        return f"{self.q_type}:" + ",".join(Q.render(v) for v in self.values)

    def __repr__(self) -> str:
        return f"Presheaf({self.key()})"

    def __str__(self) -> str:
        return self.key()


def validate_presheaf(phi: Presheaf) -> list[str]:
    A, Q, X = phi.base, phi.base.Q, phi.q_type
    out = []
    for a, v in phi.items():
        if not Q.contains(X, A.t(a), v):
            out.append(f"value at {a} is not an arrow {X}->{A.t(a)}")
    if out:
        return out
    for a2, a in product(A.objects, repeat=2):
        c = Q.comp(X, A.t(a), A.t(a2), A.hom(a2, a), phi(a))
        if not Q.leq(X, A.t(a2), c, phi(a2)):
            out.append(f"action axiom fails at ({a2},{a})")
    return out


def representable(A: QCategory, a: Hashable) -> Presheaf:
    key = ("rep", a)
    r = A._cache.get(key)
    if r is None:
        r = A._cache[key] = Presheaf(A, A.t(a), tuple(A.hom(b, a) for b in A.objects))
    return r


def bottom_presheaf(A: QCategory, X: str) -> Presheaf:
    return Presheaf(A, X, tuple(A.Q.bottom(X, A.t(b)) for b in A.objects))


def presheaf_join(A: QCategory, X: str, family: Iterable[Presheaf]) -> Presheaf:
    family = list(family)
    for phi in family:
        if phi.q_type != X:
            raise TypeMismatch(f"presheaf of type {phi.q_type} in a join of type {X}")
    Q = A.Q
    return Presheaf(A, X, tuple(Q.join(X, A.t(b), (phi.values[i] for phi in family))
                                for i, b in enumerate(A.objects)))


def presheaf_leq(psi: Presheaf, phi: Presheaf) -> bool:
    if psi.q_type != phi.q_type:
        return False
    A, Q, X = phi.base, phi.base.Q, phi.q_type
    return all(Q.leq(X, A.t(a), u, v) for a, u, v in zip(A.objects, psi.values, phi.values))


def presheaf_hom(psi: Presheaf, phi: Presheaf) -> Any:
    """The largest ``x: t(phi) -> t(psi)`` with ``psi(a) o x <= phi(a)`` for all ``a``."""
    if not same_category(psi.base, phi.base):
        raise BaseMismatch("presheaves live on different bases")
    A, Q = psi.base, psi.base.Q
    X, Y = phi.q_type, psi.q_type
    return Q.meet(X, Y, (Q.lift(X, Y, A.t(a), u, v) for a, u, v in zip(A.objects, psi.values, phi.values)))


def act(Phi: Distributor, phi: Presheaf) -> Presheaf:
    """``Phi (x) phi``: transport a presheaf on ``A`` along ``Phi: A -|-> B``."""
    if not same_category(Phi.dom, phi.base):
        raise BaseMismatch("distributor domain is not the presheaf base")
    A, B, Q, X = Phi.dom, Phi.cod, Phi.Q, phi.q_type
    vals = []
    for b in B.objects:
        tb = B.t(b)
        vals.append(Q.join(X, tb, (Q.comp(X, A.t(a), tb, Phi(b, a), v) for a, v in zip(A.objects, phi.values))))
    return Presheaf(B, X, tuple(vals))


def enumerate_presheaves(A: QCategory, budget: int = DEFAULT_BUDGET, types: Sequence[str] | None = None
                         ) -> list[Presheaf]:
    """All presheaves on ``A``, grouped by Q-object, by pruned backtracking."""
    Q = A.Q
    if not Q.enumerable:
        raise NotEnumerable(f"presheaves over {Q.name} cannot be enumerated")
    objs = A.objects
    n = len(objs)
    tys = [A.t(a) for a in objs]
    out: list[Presheaf] = []
    for X in (types if types is not None else Q.objects):
        domains = [Q.elements(X, tys[i]) for i in range(n)]
        homs = [[A.hom(objs[i], objs[j]) for j in range(n)] for i in range(n)]
        vals: list = [None] * n

        def ok(i: int, v) -> bool:
            ti = tys[i]
            for j in range(i + 1):
                vj = v if j == i else vals[j]
                tj = tys[j]
                # A(a_j, a_i) o phi(a_i) <= phi(a_j) and the reverse pair
                if not Q.leq(X, tj, Q.comp(X, ti, tj, homs[j][i], v), vj):
                    return False
                if not Q.leq(X, ti, Q.comp(X, tj, ti, homs[i][j], vj), v):
                    return False
            return True

        def dfs(i: int) -> None:
            if i == n:
                out.append(Presheaf(A, X, tuple(vals)))
                if len(out) > budget:
                    raise BudgetExceeded(f"presheaves on {A.name}", len(out), budget)
                return
            for v in domains[i]:
                if ok(i, v):
                    vals[i] = v
                    dfs(i + 1)
            vals[i] = None

        dfs(0)
    return out


class PresheafCategory(QCategory):
    """A full subcategory of ``P(A)``; all of ``P(A)`` when ``objects`` is omitted."""

    def __init__(self, base: QCategory, objects: Iterable[Presheaf] | None = None,
                 budget: int = DEFAULT_BUDGET, name: str | None = None):
        if objects is None:
            objs = enumerate_presheaves(base, budget)
            self.full = True
        else:
            objs = []
            seen = set()
            for phi in objects:
                if not same_category(phi.base, base):
                    raise BaseMismatch("member presheaf has a different base")
                if phi not in seen:
                    seen.add(phi)
                    objs.append(phi)
            self.full = False
        self.base = base
        self._homs: dict = {}
        super().__init__(base.Q, objs, {phi: phi.q_type for phi in objs}, None,
                         name=name or f"P({base.name})", check=False)

    def hom(self, psi: Presheaf, phi: Presheaf) -> Any:
        k = (psi, phi)
        r = self._homs.get(k)
        if r is None:
            r = self._homs[k] = presheaf_hom(psi, phi)
        return r

    def __contains__(self, phi: object) -> bool:
        try:
            self.index(phi)
        except (KeyError, TypeError):
            return False
        return True

    def member(self, phi: Presheaf) -> Presheaf:
        """The stored object equal to ``phi``."""
        try:
            return self.objects[self.index(phi)]
        except KeyError:
            raise NotCocomplete(phi, f"{phi.key()} is not an object of {self.name}") from None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if isinstance(other, PresheafCategory):
            return same_category(self.base, other.base) and self.objects == other.objects
        return super().__eq__(other)

    __hash__ = QCategory.__hash__


def presheaf_category(A: QCategory, budget: int = DEFAULT_BUDGET) -> PresheafCategory:
    """``P(A)``, memoized on ``A``."""
    P = A._cache.get("P")
    if P is None:
        P = A._cache["P"] = PresheafCategory(A, budget=budget)
    return P


def _target(A: QCategory, P: PresheafCategory | None, needed: Iterable[Presheaf]) -> PresheafCategory:
    if P is not None:
        return P
    if A.Q.enumerable:
        return presheaf_category(A)
    return PresheafCategory(A, needed)


def yoneda(A: QCategory, P: PresheafCategory | None = None) -> QFunctor:
    reps = [representable(A, a) for a in A.objects]
    P = _target(A, P, reps)
    return QFunctor(A, P, {a: P.member(r) for a, r in zip(A.objects, reps)}, name=f"Y_{A.name}", check=False)


free_unit = yoneda


def column(Phi: Distributor, b: Hashable) -> Presheaf:
    """``Phi(-, b)`` as a presheaf on ``Phi.cod``."""
    A = Phi.cod
    return Presheaf(A, Phi.dom.t(b), tuple(Phi(a, b) for a in A.objects))


def classify(Phi: Distributor, P: PresheafCategory | None = None) -> QFunctor:
    """The functor ``b -> Phi(-, b)`` into presheaves on ``Phi.cod``."""
    cols = {b: column(Phi, b) for b in Phi.dom.objects}
    P = _target(Phi.cod, P, cols.values())
    if not same_category(P.base, Phi.cod):
        raise BaseMismatch("presheaf category is over a different base")
    return QFunctor(Phi.dom, P, {b: P.member(c) for b, c in cols.items()},
                    name=f"cl({Phi.name})", check=False)


def declassify(F: QFunctor) -> Distributor:
    P = F.cod
    if not isinstance(P, PresheafCategory):
        raise TypeMismatch("declassify needs a functor into a presheaf category")
    A = P.base
    return Distributor(F.dom, A, {(a, b): F(b)(a) for a in A.objects for b in F.dom.objects},
                       name=f"dc({F.name})", check=False)


def colim_witnesses(Phi: Distributor, F: QFunctor) -> dict[Hashable, list[Hashable]]:
    """For each ``a``, every object ``k`` of the target with ``C(k, -) = [Phi(-, a), C(F-, -)]``."""
    if not same_category(Phi.cod, F.dom):
        raise TypeMismatch("weight codomain must be the diagram domain")
    A, C = Phi.dom, F.cod
    L = dist_lifting(Phi, induced_right(F))
    out = {}
    for a in A.objects:
        row = [L(a, c) for c in C.objects]
        out[a] = [k for k in C.objects_of_type(A.t(a))
                  if all(C.hom(k, c) == v for c, v in zip(C.objects, row))]
    return out


def colim(Phi: Distributor, F: QFunctor) -> QFunctor:
    """The ``Phi``-weighted colimit of ``F`` as a functor ``Phi.dom -> F.cod``.

    Colimits are unique up to isomorphism; the witness with the smallest
    canonical key is chosen.
    """
    wit = colim_witnesses(Phi, F)
    m = {}
    for a in Phi.dom.objects:
        if not wit[a]:
            raise NotCocomplete(a)
        m[a] = min(wit[a], key=object_key)
    return QFunctor(Phi.dom, F.cod, m, name=f"colim({Phi.name},{F.name})", check=False)


def colim_in_presheaf(Phi: Distributor, F: QFunctor) -> QFunctor:
    """Colimits in a presheaf category: ``classify(declassify(F) (x) Phi)``."""
    return classify(dist_compose(declassify(F), Phi), F.cod)


def kan_extension(F: QFunctor, G: QFunctor) -> QFunctor:
    """Pointwise left Kan extension of ``F: A -> B`` along ``G: A -> C``."""
    if not same_category(F.dom, G.dom):
        raise TypeMismatch("Kan extension needs a common domain")
    return colim(induced_right(G), F)


def free_functor(F: QFunctor, PA: PresheafCategory | None = None, PB: PresheafCategory | None = None
                 ) -> QFunctor:
    """``P(F)``: ``phi -> B(-, F-) (x) phi``."""
    PA = PA or presheaf_category(F.dom)
    PB = PB or presheaf_category(F.cod)
    Fl = induced_left(F)
    return QFunctor(PA, PB, {phi: PB.member(act(Fl, phi)) for phi in PA.objects},
                    name=f"P({F.name})", check=False)


def flatten(Phi: Presheaf, base: QCategory) -> Presheaf:
    """Collapse a presheaf on presheaves: ``a -> join_phi phi(a) o Phi(phi)``."""
    P, Q, X = Phi.base, base.Q, Phi.q_type
    vals = []
    for i, a in enumerate(base.objects):
        ta = base.t(a)
        vals.append(Q.join(X, ta, (Q.comp(X, phi.q_type, ta, phi.values[i], w)
                                   for phi, w in zip(P.objects, Phi.values))))
    return Presheaf(base, X, tuple(vals))


def free_mult(A: QCategory, budget: int = DEFAULT_BUDGET) -> QFunctor:
    """``M_A: P(P(A)) -> P(A)``, each weight sent to its colimit of the identity."""
    PA = presheaf_category(A, budget)
    PPA = presheaf_category(PA, budget)
    return QFunctor(PPA, PA, {Phi: PA.member(flatten(Phi, A)) for Phi in PPA.objects},
                    name=f"M_{A.name}", check=False)


def cocompletion_witness(C: QCategory, budget: int = DEFAULT_BUDGET) -> QFunctor | None:
    """A left adjoint to the Yoneda embedding of ``C``, or None."""
    P = presheaf_category(C, budget)
    Y = yoneda(C, P)
    m = {}
    for phi in P.objects:
        row = [P.hom(phi, Y(c)) for c in C.objects]
        found = [k for k in C.objects_of_type(phi.q_type)
                 if all(C.hom(k, c) == v for c, v in zip(C.objects, row))]
        if not found:
            return None
        m[phi] = min(found, key=object_key)
    L = QFunctor(P, C, m, name=f"sup_{C.name}", check=False)
    return L


def is_cocomplete(C: QCategory, budget: int = DEFAULT_BUDGET) -> bool:
    return cocompletion_witness(C, budget) is not None


def presheaf_as_distributor(phi: Presheaf) -> Distributor:

    S = singleton(phi.base.Q, phi.q_type)
    return Distributor(S, phi.base, {(a, "*"): v for a, v in phi.items()}, name="phi", check=False)


__all__ = [
    "BaseMismatch", "BudgetExceeded", "DEFAULT_BUDGET", "InvalidPresheaf", "NotCocomplete", "Presheaf",
    "PresheafCategory", "act", "bottom_presheaf", "classify", "cocompletion_witness", "colim",
    "colim_in_presheaf", "colim_witnesses", "column", "declassify", "enumerate_presheaves", "flatten",
    "free_functor", "free_mult", "free_unit", "identity_dist", "is_cocomplete", "kan_extension",
    "presheaf_as_distributor", "presheaf_category", "presheaf_hom", "presheaf_join", "presheaf_leq",
    "representable", "validate_presheaf", "yoneda",
]
