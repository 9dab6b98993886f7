"""Conical presheaves, the Hausdorff doctrine, and the Cauchy class.

A presheaf is conical when it is a join of representables.  The canonical
generator set of ``phi`` is every ``a`` of the right type whose
representable lies below ``phi``; any generating family sits inside it, so
``phi`` is conical exactly when the canonical set generates it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Sequence

from .doctrine import SubDoctrine, WeightClass
from .presheaf import (
    NotCocomplete,
    Presheaf,
    PresheafCategory,
    bottom_presheaf,
    colim,
    enumerate_presheaves,
    presheaf_as_distributor,
    presheaf_join,
    presheaf_leq,
    representable,
)
from .qcat import (
    Distributor,
    QCategory,
    QFunctor,
    TypeMismatch,
    dist_compose,
    dist_lifting,
    identity_dist,
)
from .quantaloid import INF, LAWVERE, Quantaloid, QuantaloidError


@dataclass(frozen=True)
class SubsetWeight:
    base: QCategory
    q_object: str
    members: tuple

    def __post_init__(self):
        for a in self.members:
            if self.base.t(a) != self.q_object:
                raise TypeMismatch(f"{a} does not have type {self.q_object}")


@dataclass(frozen=True)
class ConicalPresheaf:
    underlying: Presheaf
    generators: tuple


def subset(A: QCategory, members: Iterable[Hashable], q_object: str | None = None) -> SubsetWeight:
    members = tuple(members)
    if q_object is None:
        if not members:
            if len(A.Q.objects) != 1:
                raise TypeMismatch("an empty subset needs an explicit type")
            q_object = A.Q.objects[0]
        else:
            q_object = A.t(members[0])
    return SubsetWeight(A, q_object, members)


def generators(phi: Presheaf) -> tuple:
    """Every object whose representable lies below ``phi``."""
    A = phi.base
    return tuple(a for a in A.objects_of_type(phi.q_type) if presheaf_leq(representable(A, a), phi))


def conical_from_subset(S: SubsetWeight) -> ConicalPresheaf:
    A = S.base
    phi = presheaf_join(A, S.q_object, (representable(A, a) for a in S.members))
    return ConicalPresheaf(phi, generators(phi))


def conical_certificate(phi: Presheaf) -> ConicalPresheaf | None:
    G = generators(phi)
    A = phi.base
    if presheaf_join(A, phi.q_type, (representable(A, a) for a in G)) == phi:
        return ConicalPresheaf(phi, G)
    return None


def is_conical(phi: Presheaf) -> bool:
    return conical_certificate(phi) is not None


def conical_presheaves(A: QCategory, types: Sequence[str] | None = None) -> list[Presheaf]:
    """All conical presheaves on ``A``, closing the bottom under joins with representables.

    Order: by Q-object, then breadth-first from the bottom, adding
    representables in object order; so a presheaf appears in the layer of
    its smallest generating family.
    """
    out: list[Presheaf] = []
    for X in (types if types is not None else A.Q.objects):
        reps = [representable(A, a) for a in A.objects_of_type(X)]
        start = bottom_presheaf(A, X)
        seen = {start}
        layer = [start]
        out.append(start)
        while layer:
            nxt = []
            for phi in layer:
                for r in reps:
                    psi = presheaf_join(A, X, (phi, r))
                    if psi not in seen:
                        seen.add(psi)
                        nxt.append(psi)
                        out.append(psi)
            layer = nxt
    return out


def closed_form_hom(A: QCategory, G2: Sequence[Hashable], X2: str, G: Sequence[Hashable], X: str) -> Any:
    """``meet_{a2 in G2} join_{a in G} A(a2, a)``, an arrow ``X -> X2``."""
    Q = A.Q
    return Q.meet(X, X2, (Q.join(X, X2, (A.hom(a2, a) for a in G)) for a2 in G2))


def directed_hausdorff(Sprime: SubsetWeight, S: SubsetWeight) -> Any:
    """Over distances: ``sup_{a2 in Sprime} inf_{a in S} d(a2, a)``; 0 from an empty source."""
    if Sprime.base is not S.base and Sprime.base != S.base:
        raise TypeMismatch("subsets of different categories")
    return closed_form_hom(S.base, Sprime.members, Sprime.q_object, S.members, S.q_object)


def symmetrized_hausdorff(Sprime: SubsetWeight, S: SubsetWeight) -> Any:
    """The larger of the two directed distances; a convenience over distances only."""
    if S.base.Q is not LAWVERE:
        raise QuantaloidError("the symmetrized distance is only defined over distances")
    return LAWVERE.meet("*", "*", (directed_hausdorff(Sprime, S), directed_hausdorff(S, Sprime)))


# ---------------------------------------------------------------------------
# the Cauchy class


def cauchy_right_adjoint(phi: Presheaf) -> Distributor:
    """The largest ``psi`` with ``phi (x) psi <= A``, as a distributor ``A -|-> *_X``."""
    A = phi.base
    return dist_lifting(presheaf_as_distributor(phi), identity_dist(A))


def is_cauchy(phi: Presheaf) -> bool:
    d = presheaf_as_distributor(phi)
    psi = dist_lifting(d, identity_dist(phi.base))
    unit = dist_compose(psi, d)("*", "*")
    Q, X = phi.base.Q, phi.q_type
    return Q.leq(X, X, Q.unit(X), unit)


def _unique_representables(A: QCategory) -> list[Presheaf]:
    out, seen = [], set()
    for a in A.objects:
        r = representable(A, a)
        if r not in seen:
            seen.add(r)
            out.append(r)
    return out


def _is_representable(phi: Presheaf) -> bool:
    A = phi.base
    return any(representable(A, a) == phi for a in A.objects_of_type(phi.q_type))


def _cauchy_members(A: QCategory) -> list[Presheaf]:
    return [phi for phi in enumerate_presheaves(A) if is_cauchy(phi)]


CONICAL = WeightClass("conical", is_conical, conical_presheaves)
CAUCHY = WeightClass("cauchy", is_cauchy, _cauchy_members)
REPRESENTABLE = WeightClass("representable", _is_representable, _unique_representables)
ALL = WeightClass("all", lambda phi: True, None)


def weight_class_conical() -> WeightClass:
    return CONICAL


def weight_class_cauchy() -> WeightClass:
    return CAUCHY


def weight_class_representable() -> WeightClass:
    return REPRESENTABLE


def weight_class_all() -> WeightClass:
    return ALL


HAUSDORFF = SubDoctrine(CONICAL)


def hausdorff_category(A: QCategory) -> PresheafCategory:
    """``H(A)``: the conical presheaves on ``A`` with inherited homs."""
    return HAUSDORFF.obj(A)


def hausdorff_index(A: QCategory) -> dict[Presheaf, tuple]:
    """Each object of ``H(A)`` with its canonical generator set."""
    return {phi: generators(phi) for phi in hausdorff_category(A).objects}


def hausdorff_on_functor(F: QFunctor) -> QFunctor:
    return HAUSDORFF.functor(F)


def hausdorff_image(F: QFunctor, S: SubsetWeight) -> ConicalPresheaf:
    """Conical presheaf generated by the image of ``S`` under ``F``."""
    return conical_from_subset(SubsetWeight(F.cod, S.q_object, tuple(F(a) for a in S.members)))


def hausdorff_on_dist(Phi: Distributor) -> Distributor:
    """``H'(Phi)(psi, phi) = meet_{t} join_{s} Phi(t, s)`` over canonical generators."""
    HA, HB = hausdorff_category(Phi.dom), hausdorff_category(Phi.cod)
    Q = Phi.Q
    gA = {s: generators(s) for s in HA.objects}
    gB = {t: generators(t) for t in HB.objects}
    m = {}
    for psi in HB.objects:
        Y = psi.q_type
        for phi in HA.objects:
            X = phi.q_type
            m[psi, phi] = Q.meet(X, Y, (Q.join(X, Y, (Phi(t, s) for s in gA[phi])) for t in gB[psi]))
    return Distributor(HA, HB, m, name=f"H'({Phi.name})", check=False)


def hausdorff_unit(A: QCategory) -> QFunctor:
    return HAUSDORFF.unit(A)


def hausdorff_mult(A: QCategory) -> QFunctor:
    return HAUSDORFF.mult(A)


def cauchy_completion(A: QCategory) -> tuple[PresheafCategory, QFunctor]:
    D = SubDoctrine(CAUCHY)
    sl = D.slice(A)
    return sl.category, sl.unit


# ---------------------------------------------------------------------------
# conical colimits along free categories on posets


def free_qcategory_on_poset(Q: Quantaloid, X: str, elements: Sequence[Hashable], leq) -> QCategory:
    """Hom ``(i, j)`` is ``1_X`` when ``i <= j`` and bottom otherwise."""
    one, bot = Q.unit(X), Q.bottom(X, X)
    return QCategory(Q, list(elements), {i: X for i in elements},
                     {(i, j): one if leq(i, j) else bot for i in elements for j in elements},
                     name="I", check=True)


def order_leq(A: QCategory, a: Hashable, b: Hashable) -> bool:
    """``a <= b`` in the underlying order: same type and ``1 <= A(a, b)``."""
    X = A.t(a)
    return A.t(b) == X and A.Q.leq(X, X, A.Q.unit(X), A.hom(a, b))


def conical_colimit_by_order(A: QCategory, family: Sequence[Hashable], X: str) -> Hashable | None:
    """A supremum ``s`` of the family in ``A_X`` with ``A(s, -) = meet_i A(a_i, -)``, or None."""
    Q = A.Q
    objs = A.objects_of_type(X)
    ubs = [u for u in objs if all(order_leq(A, a, u) for a in family)]
    sups = [s for s in ubs if all(order_leq(A, s, u) for u in ubs)]
    for s in sups:
        if all(A.hom(s, c) == Q.meet(X, A.t(c), (A.hom(a, c) for a in family)) for c in A.objects):
            return s
    return None


def conical_colimit_by_weight(A: QCategory, family: Sequence[Hashable], X: str) -> Hashable | None:
    """The ``gamma``-weighted colimit of ``i -> a_i`` over the free category on the induced order."""

    idx = [f"i{k}" for k in range(len(family))]
    pick = dict(zip(idx, family))
    I = free_qcategory_on_poset(A.Q, X, idx, lambda i, j: order_leq(A, pick[i], pick[j]))
    F = QFunctor(I, A, pick, name="F")
    gamma = Presheaf(I, X, tuple(A.Q.unit(X) for _ in idx))
    try:
        return colim(presheaf_as_distributor(gamma), F)("*")
    except NotCocomplete:
        return None


def distance_value(v) -> str:
    return "inf" if v is INF else f"{v.numerator}/{v.denominator}"


__all__ = [
    "ALL", "CAUCHY", "CONICAL", "ConicalPresheaf", "HAUSDORFF", "REPRESENTABLE", "SubsetWeight",
    "cauchy_completion", "cauchy_right_adjoint", "closed_form_hom", "conical_certificate",
    "conical_colimit_by_order", "conical_colimit_by_weight", "conical_from_subset", "conical_presheaves",
    "directed_hausdorff", "free_qcategory_on_poset", "generators", "hausdorff_category",
    "hausdorff_image", "hausdorff_index", "hausdorff_mult", "hausdorff_on_dist", "hausdorff_on_functor",
    "hausdorff_unit", "is_cauchy", "is_conical", "order_leq", "subset", "symmetrized_hausdorff",
    "weight_class_all", "weight_class_cauchy", "weight_class_conical", "weight_class_representable",
]
