"""Weight classes, the sub-doctrines of P they generate, and their law checks.

A :class:`WeightClass` is a membership oracle plus an optional finite
enumerator.  :class:`SubDoctrine` turns it into the cocompletion doctrine
``C``: ``C(A)`` is the full subcategory of presheaves on ``A`` that are
members, ``I_A`` sends ``a`` to its representable and ``mu_A`` collapses a
member weight on ``C(A)`` to a presheaf on ``A``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .presheaf import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    NotCocomplete,
    Presheaf,
    PresheafCategory,
    act,
    column,
    colim,
    declassify,
    enumerate_presheaves,
    flatten,
    presheaf_as_distributor,
    presheaf_category,
    presheaf_hom,
    representable,
)
from .qcat import (
    Distributor,
    QCategory,
    QFunctor,
    all_functors,
    compose_functors,
    dist_compose,
    functor_iso,
    functor_leq,
    identity_functor,
    induced_left,
    is_adjoint_pair,
    is_fully_faithful,
    object_key,
)
from .quantaloid import NotEnumerable, QuantaloidError


class NotInClass(QuantaloidError):
    pass


@dataclass(frozen=True)
class WeightClass:
    name: str
    contains: Callable[[Presheaf], bool]
    enumerate_on: Callable[[QCategory], list[Presheaf]] | None = None

    def members(self, A: QCategory, budget: int = DEFAULT_BUDGET) -> list[Presheaf]:
        if self.enumerate_on is not None:
            found = self.enumerate_on(A)
        elif A.Q.enumerable:
            found = [phi for phi in enumerate_presheaves(A, budget) if self.contains(phi)]
        else:
            raise NotEnumerable(f"class {self.name} has no enumerator over {A.Q.name}")
        if len(found) > budget:
            raise BudgetExceeded(f"{self.name} members on {A.name}", len(found), budget)
        return found


@dataclass(frozen=True)
class LawResult:
    law: str
    fixture: str
    status: str
    counterexample: str | None = None

    def to_json(self) -> dict:
        d = {"law": self.law, "fixture": self.fixture, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


class DoctrineSlice:
    """``C(A)`` together with its unit ``I_A``."""

    def __init__(self, doctrine: "SubDoctrine", A: QCategory):
        self.doctrine = doctrine
        self.base = A
        members = doctrine.weight_class.members(A, doctrine.budget)
        self.category = PresheafCategory(A, members, name=f"{doctrine.weight_class.name}({A.name})")
        reps = {}
        for a in A.objects:
            r = representable(A, a)
            if r not in self.category:
                raise NotInClass(f"representable at {object_key(a)} is not a member of {doctrine.weight_class.name}")
            reps[a] = self.category.member(r)
        self.unit = QFunctor(A, self.category, reps, name=f"I_{A.name}", check=False)

    def embedding(self) -> QFunctor:
        """``J_A: C(A) -> P(A)``; needs an enumerable quantaloid."""
        P = presheaf_category(self.base, self.doctrine.budget)
        C = self.category
        return QFunctor(C, P, {t: P.member(t) for t in C.objects}, name=f"J_{self.base.name}", check=False)


class SubDoctrine:
    def __init__(self, weight_class: WeightClass, budget: int = DEFAULT_BUDGET):
        self.weight_class = weight_class
        self.budget = budget

    def __repr__(self) -> str:
        return f"SubDoctrine({self.weight_class.name!r})"

    def slice(self, A: QCategory) -> DoctrineSlice:
        key = ("slice", self.weight_class, self.budget)
        s = A._cache.get(key)
        if s is None:
            s = A._cache[key] = DoctrineSlice(self, A)
        return s

    def obj(self, A: QCategory) -> PresheafCategory:
        return self.slice(A).category

    def unit(self, A: QCategory) -> QFunctor:
        return self.slice(A).unit

    def functor(self, F: QFunctor) -> QFunctor:
        """``C(F): t -> B(-, F-) (x) t``."""
        CA, CB = self.obj(F.dom), self.obj(F.cod)
        Fl = induced_left(F)
        m = {}
        for t in CA.objects:
            s = act(Fl, t)
            if s not in CB:
                raise NotInClass(f"{self.weight_class.name}({F.name}) leaves the class at {t.key()}")
            m[t] = CB.member(s)
        return QFunctor(CA, CB, m, name=f"{self.weight_class.name}({F.name})", check=False)

    def mult(self, A: QCategory) -> QFunctor:
        """``mu_A: C(C(A)) -> C(A)``."""
        CA = self.obj(A)
        CCA = self.obj(CA)
        m = {}
        for T in CCA.objects:
            s = flatten(T, A)
            if s not in CA:
                raise NotInClass(f"multiplication leaves the class at {T.key()}")
            m[T] = CA.member(s)
        return QFunctor(CCA, CA, m, name=f"mu_{A.name}", check=False)

    def extend_to_dist(self, Phi: Distributor) -> Distributor:
        """``C'(Phi)(t, s) = P(B)(t, Phi (x) s)`` for ``t`` in ``C(B)`` and ``s`` in ``C(A)``."""
        CA, CB = self.obj(Phi.dom), self.obj(Phi.cod)
        moved = {s: act(Phi, s) for s in CA.objects}
        m = {(t, s): presheaf_hom(t, moved[s]) for t in CB.objects for s in CA.objects}
        return Distributor(CA, CB, m, name=f"{self.weight_class.name}'({Phi.name})", check=False)

    def factor_through(self, Phi: Distributor) -> QFunctor:
        """``I_Phi: A -> C(B)`` with ``J_B o I_Phi`` the classifying functor of ``Phi``."""
        CB = self.obj(Phi.cod)
        m = {}
        for a in Phi.dom.objects:
            c = column(Phi, a)
            if c not in CB:
                raise NotInClass(f"column at {object_key(a)} is not a member of {self.weight_class.name}")
            m[a] = CB.member(c)
        return QFunctor(Phi.dom, CB, m, name=f"I_{Phi.name}", check=False)


def dist_in_class(Phi: Distributor, C: WeightClass) -> bool:
    return all(C.contains(column(Phi, a)) for a in Phi.dom.objects)


def build_subcategory(A: QCategory, C: WeightClass, budget: int = DEFAULT_BUDGET) -> DoctrineSlice:
    return SubDoctrine(C, budget).slice(A)


# ---------------------------------------------------------------------------
# sampling


def random_functor_into(A: QCategory, targets: PresheafCategory, rng: random.Random,
                        attempts: int = 50) -> QFunctor | None:
    """A functor ``A -> targets`` found by randomized backtracking, or None."""
    objs = A.objects
    Q = A.Q
    choice: list = [None] * len(objs)

    def ok(i: int, v) -> bool:
        for j in range(i):
            u = choice[j]
            if not Q.leq(A.t(objs[i]), A.t(objs[j]), A.hom(objs[j], objs[i]), targets.hom(u, v)):
                return False
            if not Q.leq(A.t(objs[j]), A.t(objs[i]), A.hom(objs[i], objs[j]), targets.hom(v, u)):
                return False
        return Q.leq(A.t(objs[i]), A.t(objs[i]), A.hom(objs[i], objs[i]), targets.hom(v, v))

    budget = [attempts * max(1, len(objs))]

    def dfs(i: int) -> bool:
        if i == len(objs):
            return True
        cands = list(targets.objects_of_type(A.t(objs[i])))
        rng.shuffle(cands)
        for v in cands:
            budget[0] -= 1
            if budget[0] < 0:
                return False
            if ok(i, v):
                choice[i] = v
                if dfs(i + 1):
                    return True
        choice[i] = None
        return False

    if not dfs(0):
        return None
    return QFunctor(A, targets, dict(zip(objs, choice)), check=False)


def sample_class_distributor(A: QCategory, B: QCategory, C: WeightClass, rng: random.Random,
                             budget: int = DEFAULT_BUDGET, members: PresheafCategory | None = None
                             ) -> Distributor | None:
    """A random distributor ``A -|-> B`` whose columns are members of ``C``."""
    CB = members or PresheafCategory(B, C.members(B, budget), name=f"{C.name}({B.name})")
    F = random_functor_into(A, CB, rng)
    return None if F is None else declassify(F)


def saturation_check(C: WeightClass, fixtures: Sequence[tuple[str, QCategory]], budget: int = 500,
                     seed: int = 0) -> dict:
    """Refutation sampling for saturation of ``C``.

    Representable membership is checked on every fixture; then ``budget``
    composable pairs of member distributors are sampled and their composite
    is tested for membership.  Fixtures whose members cannot be listed only
    take part in the representable check.
    """
    rng = random.Random(f"saturation:{C.name}:{seed}")
    counterexamples = []
    member_cats = {}
    by_q: dict = {}
    for name, A in fixtures:
        for a in A.objects:
            if not C.contains(representable(A, a)):
                counterexamples.append(f"{name}: representable at {object_key(a)} is not a member")
        try:
            member_cats[name] = PresheafCategory(A, C.members(A), name=f"{C.name}({A.name})")
        except (NotEnumerable, BudgetExceeded):
            continue
        by_q.setdefault(id(A.Q), []).append((name, A))
    groups = list(by_q.values())
    samples = 0
    tries = 0
    while samples < budget and groups and tries < budget * 20:
        tries += 1
        group = groups[rng.randrange(len(groups))]
        (na, A), (nb, B), (nc, Cc) = (group[rng.randrange(len(group))] for _ in range(3))
        Phi = sample_class_distributor(A, B, C, rng, members=member_cats[nb])
        Psi = sample_class_distributor(B, Cc, C, rng, members=member_cats[nc])
        if Phi is None or Psi is None:
            continue
        samples += 1
        comp = dist_compose(Psi, Phi)
        for a in A.objects:
            if not C.contains(column(comp, a)):
                counterexamples.append(
                    f"{nc}<-{nb}<-{na}: composite column at {object_key(a)} = {column(comp, a).key()} not a member")
                break
    return {"class": C.name, "samples": samples, "counterexamples": counterexamples}


# ---------------------------------------------------------------------------
# doctrine laws


def _check(results: list, law: str, fixture: str, fn) -> None:
    try:
        cex = fn()
    except BudgetExceeded as e:
        results.append(LawResult(law, fixture, "skip", str(e)))
        return
    except (NotInClass, NotCocomplete, NotEnumerable) as e:
        results.append(LawResult(law, fixture, "fail", str(e)))
        return
    if cex is None:
        results.append(LawResult(law, fixture, "pass"))
    else:
        results.append(LawResult(law, fixture, "fail", cex))


def _first_mismatch(F: QFunctor, G: QFunctor) -> str | None:
    if not functor_iso(F, G):
        for a in F.dom.objects:
            if F(a) != G(a):
                return f"{F.name} and {G.name} differ at {object_key(a)}"
        return f"{F.name} and {G.name} are not isomorphic"
    return None


def member_colimits(B: QCategory, CB: PresheafCategory) -> dict | None:
    """For each member weight ``t`` on ``B``, its colimit of the identity, or None if one is missing."""
    one = identity_functor(B)
    out = {}
    for t in CB.objects:
        try:
            out[t] = colim(presheaf_as_distributor(t), one)("*")
        except NotCocomplete:
            return None
    return out


def left_adjoint_to_unit(D: SubDoctrine, B: QCategory, budget: int) -> QFunctor | None | str:
    """Exhaustive search for ``L -| I_B``; returns ``"skip"`` when the search space exceeds ``budget``."""
    CB = D.obj(B)
    size = 1
    for t in CB.objects:
        size *= max(1, len(B.objects_of_type(t.q_type)))
        if size > budget:
            return "skip"
    I = D.unit(B)
    for L in all_functors(CB, B):
        if is_adjoint_pair(L, I):
            return L
    return None


def doctrine_laws(D: SubDoctrine, fixtures: Sequence[tuple[str, QCategory]],
                  budget: int = DEFAULT_BUDGET) -> list[LawResult]:
    """Check the sub-doctrine laws (1)-(7) on every fixture."""
    results: list[LawResult] = []
    name = D.weight_class.name
    for fx, A in fixtures:
        def law1():
            I = D.unit(A)
            return None if is_fully_faithful(I) else f"I_{fx} is not fully faithful"

        def law2():
            sl = D.slice(A)
            CA = sl.category
            for t in CA.objects:
                rebuilt = Presheaf(A, t.q_type, tuple(CA.hom(sl.unit(a), t) for a in A.objects))
                if rebuilt != t:
                    return f"restricted Yoneda of {t.key()} is {rebuilt.key()}"
            if A.Q.enumerable:
                J = sl.embedding()
                if not is_fully_faithful(J):
                    return f"J_{fx} is not fully faithful"
            return None

        def law3():
            CA = D.obj(A)
            for T in enumerate_weights(D, CA, budget):
                s = flatten(T, A)
                if s not in CA:
                    return f"colimit of {T.key()} is {s.key()}, not a member"
            return None

        def law4():
            CA = D.obj(A)
            mu = D.mult(A)
            etaC = D.unit(CA)
            r = _first_mismatch(compose_functors(mu, etaC), identity_functor(CA))
            if r:
                return "left unit: " + r
            r = _first_mismatch(compose_functors(mu, D.functor(D.unit(A))), identity_functor(CA))
            if r:
                return "right unit: " + r
            r = _first_mismatch(compose_functors(mu, D.mult(CA)), compose_functors(mu, D.functor(mu)))
            if r:
                return "associativity: " + r
            return None

        def law5():
            CA = D.obj(A)
            lhs = D.functor(D.unit(A))
            rhs = D.unit(CA)
            if not functor_leq(lhs, rhs):
                for t in CA.objects:
                    X = t.q_type
                    if not A.Q.leq(X, X, A.Q.unit(X), D.obj(CA).hom(lhs(t), rhs(t))):
                        return f"KZ inequation fails at {t.key()}"
            return None

        def law6():
            CA = D.obj(A)
            cocomplete = member_colimits(A, CA) is not None
            L = left_adjoint_to_unit(D, A, budget)
            if L == "skip":
                raise BudgetExceeded(f"functors {name}({fx}) -> {fx}", budget + 1, budget)
            if cocomplete != (L is not None):
                return f"class-cocomplete={cocomplete} but left adjoint found={L is not None}"
            return None

        def law7():
            if not A.Q.enumerable:
                raise BudgetExceeded("class recovery needs an enumerable quantaloid", 0, 0)
            CA = D.obj(A)
            J = D.slice(A).embedding()
            images = {J(t) for t in CA.objects}
            expected = {phi for phi in enumerate_presheaves(A, budget) if D.weight_class.contains(phi)}
            if images != expected:
                extra = sorted((p.key() for p in images ^ expected))
                return f"class and doctrine images differ at {extra[0]}"
            return None

        for law, fn in (("1-unit-fully-faithful", law1), ("2-embedding", law2),
                        ("3-multiplication-factors", law3), ("4-monad", law4), ("5-kz", law5),
                        ("6-algebras", law6), ("7-class-recovery", law7)):
            _check(results, f"{name}:{law}", fx, fn)
    return results


def enumerate_weights(D: SubDoctrine, CA: PresheafCategory, budget: int) -> list[Presheaf]:
    """Member weights on ``C(A)``: the objects of ``C(C(A))``."""
    return list(D.obj(CA).objects)


def cotabulation_holds(D: SubDoctrine, Phi: Distributor) -> bool:
    """``Phi(b, a) = C(B)(I_B b, I_Phi a)``."""
    I_Phi = D.factor_through(Phi)
    I_B = D.unit(Phi.cod)
    CB = D.obj(Phi.cod)
    return all(Phi(b, a) == CB.hom(I_B(b), I_Phi(a)) for b in Phi.cod.objects for a in Phi.dom.objects)


__all__ = [
    "DoctrineSlice", "LawResult", "NotInClass", "SubDoctrine", "WeightClass", "build_subcategory",
    "cotabulation_holds", "dist_in_class", "doctrine_laws", "left_adjoint_to_unit", "member_colimits",
    "random_functor_into", "sample_class_distributor", "saturation_check",
]
