"""Q-categories, functors and distributors.

Hom convention: ``A.hom(a2, a)`` is an arrow ``t(a) -> t(a2)`` in Q, and a
distributor ``Phi: A -|-> B`` has entries ``Phi(b, a): t(a) -> t(b)``.
Objects may be any hashable value; strings for user data, presheaves for
presheaf categories.
"""

from __future__ import annotations

from itertools import product
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .quantaloid import Quantaloid, QuantaloidError, TypeMismatch


class InvalidCategory(QuantaloidError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations[:10]))
        self.violations = violations


class InvalidFunctor(InvalidCategory):
    pass


class InvalidDistributor(InvalidCategory):
    pass


def object_key(x: Hashable) -> str:
    """Canonical sort key, used wherever a deterministic choice is needed."""
    key = getattr(x, "key", None)
    return key() if callable(key) else str(x)


class QCategory:
    """A finite Q-category with a dense hom matrix."""

    def __init__(
        self,
        Q: Quantaloid,
        objects: Sequence[Hashable],
        types: Mapping[Hashable, str],
        hom: Mapping[tuple[Hashable, Hashable], Any],
        name: str = "A",
        check: bool = True,
    ):
        self.Q = Q
        self.name = name
        self.objects = tuple(objects)
        if len(set(self.objects)) != len(self.objects):
            raise InvalidCategory(["duplicate objects"])
        self.types = {a: types[a] for a in self.objects}
        self._hom = dict(hom) if hom is not None else None
        self._cache: dict = {}
        if check:
            problems = validate_category(self)
            if problems:
                raise InvalidCategory(problems)

    def __repr__(self) -> str:
        return f"QCategory({self.name!r}, {len(self.objects)} objects over {self.Q.name})"

    def __len__(self) -> int:
        return len(self.objects)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, QCategory):
            return NotImplemented
        return (
            self.Q == other.Q
            and self.objects == other.objects
            and self.types == other.types
            and all(self.hom(x, y) == other.hom(x, y) for x, y in product(self.objects, repeat=2))
        )

    def __hash__(self) -> int:
        return hash((len(self.objects), self.Q.name))

    def t(self, a: Hashable) -> str:
        return self.types[a]

    def hom(self, a2: Hashable, a: Hashable) -> Any:
        return self._hom[a2, a]

    def objects_of_type(self, X: str) -> tuple:
        return tuple(a for a in self.objects if self.types[a] == X)

    def index(self, a: Hashable) -> int:
        idx = self._cache.get("index")
        if idx is None:
            idx = self._cache["index"] = {x: i for i, x in enumerate(self.objects)}
        return idx[a]

    def leq(self, a2, a, u, v) -> bool:
        """Compare two arrows ``t(a) -> t(a2)``."""
        return self.Q.leq(self.types[a], self.types[a2], u, v)


def same_category(A: QCategory, B: QCategory) -> bool:
    return A is B or A == B


def singleton(Q: Quantaloid, X: str) -> QCategory:
    """The one-object category ``*_X`` whose only hom is the identity."""
    Q.check_object(X)
    return QCategory(Q, ["*"], {"*": X}, {("*", "*"): Q.unit(X)}, name=f"*_{X}", check=False)


def full_subcategory(A: QCategory, objects: Iterable[Hashable], name: str | None = None) -> QCategory:
    objs = list(objects)
    return QCategory(
        A.Q, objs, {a: A.t(a) for a in objs},
        {(x, y): A.hom(x, y) for x in objs for y in objs},
        name=name or f"{A.name}|sub", check=False,
    )


def validate_category(A: QCategory) -> list[str]:
    Q = A.Q
    out: list[str] = []
    for a in A.objects:
        if A.types[a] not in Q.objects:
            out.append(f"type of {a} is not an object of {Q.name}")
    if out:
        return out
    for a2, a in product(A.objects, repeat=2):
        try:
            v = A.hom(a2, a)
        except KeyError:
            out.append(f"hom({a2},{a}) missing")
            continue
        if not Q.contains(A.t(a), A.t(a2), v):
            out.append(f"hom({a2},{a})={v} is not an arrow {A.t(a)}->{A.t(a2)}")
    if out:
        return out
    for a in A.objects:
        X = A.t(a)
        if not Q.leq(X, X, Q.unit(X), A.hom(a, a)):
            out.append(f"identity axiom fails at {a}")
    for a3, a2, a in product(A.objects, repeat=3):
        x, y, z = A.t(a), A.t(a2), A.t(a3)
        c = Q.comp(x, y, z, A.hom(a3, a2), A.hom(a2, a))
        if not Q.leq(x, z, c, A.hom(a3, a)):
            out.append(f"composition axiom fails at ({a3},{a2},{a})")
    return out


# ---------------------------------------------------------------------------
# functors


class QFunctor:
    """A type-preserving object map between Q-categories."""

    def __init__(self, dom: QCategory, cod: QCategory, mapping: Mapping[Hashable, Hashable],
                 name: str = "F", check: bool = True):
        self.dom = dom
        self.cod = cod
        self.name = name
        self.mapping = {a: mapping[a] for a in dom.objects}
        if check:
            problems = validate_functor(self)
            if problems:
                raise InvalidFunctor(problems)

    def __call__(self, a: Hashable) -> Hashable:
        return self.mapping[a]

    def __repr__(self) -> str:
        return f"QFunctor({self.name!r}: {self.dom.name} -> {self.cod.name})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QFunctor):
            return NotImplemented
        return (same_category(self.dom, other.dom) and same_category(self.cod, other.cod)
                and self.mapping == other.mapping)

    def __hash__(self) -> int:
        return hash(tuple(self.mapping.items()))


def validate_functor(F: QFunctor) -> list[str]:
    A, B = F.dom, F.cod
    if A.Q != B.Q:
        return ["domain and codomain are over different quantaloids"]
    cod_objects = set(B.objects)
    out: list[str] = []
    for a in A.objects:
        fa = F.mapping.get(a)
        if fa not in cod_objects:
            out.append(f"F({a}) is not an object of {B.name}")
        elif B.t(fa) != A.t(a):
            out.append(f"F does not preserve the type of {a}")
    if out:
        return out
    for a2, a in product(A.objects, repeat=2):
        if not A.leq(a2, a, A.hom(a2, a), B.hom(F(a2), F(a))):
            out.append(f"functoriality fails at ({a2},{a})")
    return out


def identity_functor(A: QCategory) -> QFunctor:
    return QFunctor(A, A, {a: a for a in A.objects}, name=f"1_{A.name}", check=False)


def compose_functors(G: QFunctor, F: QFunctor) -> QFunctor:
    """``G o F``."""
    if not same_category(F.cod, G.dom):
        raise TypeMismatch(f"cannot compose {G.name} after {F.name}")
    return QFunctor(F.dom, G.cod, {a: G(F(a)) for a in F.dom.objects},
                    name=f"{G.name}.{F.name}", check=False)


def all_functors(A: QCategory, B: QCategory) -> list[QFunctor]:
    """Every functor ``A -> B`` by exhaustive search over object maps."""
    choices = [B.objects_of_type(A.t(a)) for a in A.objects]
    out = []
    for image in product(*choices):
        m = dict(zip(A.objects, image))
        if all(A.leq(x, y, A.hom(x, y), B.hom(m[x], m[y])) for x, y in product(A.objects, repeat=2)):
            out.append(QFunctor(A, B, m, check=False))
    return out


# ---------------------------------------------------------------------------
# distributors


class Distributor:
    """A matrix ``Phi(b, a): t(a) -> t(b)`` between Q-categories ``A -|-> B``."""

    def __init__(self, dom: QCategory, cod: QCategory, matrix: Mapping[tuple[Hashable, Hashable], Any],
                 name: str = "Phi", check: bool = True):
        self.dom = dom
        self.cod = cod
        self.name = name
        self.matrix = {(b, a): matrix[b, a] for b in cod.objects for a in dom.objects}
        if check:
            problems = validate_distributor(self)
            if problems:
                raise InvalidDistributor(problems)

    def __call__(self, b: Hashable, a: Hashable) -> Any:
        return self.matrix[b, a]

    def __repr__(self) -> str:
        return f"Distributor({self.name!r}: {self.dom.name} -|-> {self.cod.name})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Distributor):
            return NotImplemented
        return (same_category(self.dom, other.dom) and same_category(self.cod, other.cod)
                and self.matrix == other.matrix)

    def __hash__(self) -> int:
        return hash(tuple(self.matrix.values()))

    @property
    def Q(self) -> Quantaloid:
        return self.dom.Q


def validate_distributor(Phi: Distributor) -> list[str]:
    A, B, Q = Phi.dom, Phi.cod, Phi.dom.Q
    out: list[str] = []
    for b, a in product(B.objects, A.objects):
        if not Q.contains(A.t(a), B.t(b), Phi(b, a)):
            out.append(f"entry ({b},{a})={Phi(b, a)} is not an arrow {A.t(a)}->{B.t(b)}")
    if out:
        return out
    for b in B.objects:
        tb = B.t(b)
        for a2, a in product(A.objects, repeat=2):
            c = Q.comp(A.t(a), A.t(a2), tb, Phi(b, a2), A.hom(a2, a))
            if not Q.leq(A.t(a), tb, c, Phi(b, a)):
                out.append(f"action axiom fails at ({b},{a2},{a})")
    for a in A.objects:
        ta = A.t(a)
        for b, b2 in product(B.objects, repeat=2):
            c = Q.comp(ta, B.t(b2), B.t(b), B.hom(b, b2), Phi(b2, a))
            if not Q.leq(ta, B.t(b), c, Phi(b, a)):
                out.append(f"action axiom fails at ({b},{b2},{a})")
    return out


def _require_same(A: QCategory, B: QCategory, what: str) -> None:
    if not same_category(A, B):
        raise TypeMismatch(f"{what}: {A.name} and {B.name} differ")


def identity_dist(A: QCategory) -> Distributor:
    return Distributor(A, A, {(x, y): A.hom(x, y) for x in A.objects for y in A.objects},
                       name=f"1_{A.name}", check=False)


def bottom_dist(A: QCategory, B: QCategory) -> Distributor:
    Q = A.Q
    return Distributor(A, B, {(b, a): Q.bottom(A.t(a), B.t(b)) for b in B.objects for a in A.objects},
                       name="0", check=False)


def dist_compose(Psi: Distributor, Phi: Distributor) -> Distributor:
    """``(Psi (x) Phi)(c, a) = join_b Psi(c, b) o Phi(b, a)``."""
    _require_same(Phi.cod, Psi.dom, "dist_compose")
    A, B, C, Q = Phi.dom, Phi.cod, Psi.cod, Phi.Q
    m = {}
    for c in C.objects:
        tc = C.t(c)
        for a in A.objects:
            ta = A.t(a)
            m[c, a] = Q.join(ta, tc, (Q.comp(ta, B.t(b), tc, Psi(c, b), Phi(b, a)) for b in B.objects))
    return Distributor(A, C, m, name=f"{Psi.name}.{Phi.name}", check=False)


def dist_join(family: Sequence[Distributor], dom: QCategory | None = None,
              cod: QCategory | None = None) -> Distributor:
    family = list(family)
    if not family:
        if dom is None or cod is None:
            raise TypeMismatch("an empty join needs explicit domain and codomain")
        return bottom_dist(dom, cod)
    A, B = family[0].dom, family[0].cod
    for Phi in family[1:]:
        _require_same(A, Phi.dom, "dist_join")
        _require_same(B, Phi.cod, "dist_join")
    Q = A.Q
    m = {(b, a): Q.join(A.t(a), B.t(b), (P(b, a) for P in family)) for b in B.objects for a in A.objects}
    return Distributor(A, B, m, name="join", check=False)


def dist_leq(Phi: Distributor, Psi: Distributor) -> bool:
    _require_same(Phi.dom, Psi.dom, "dist_leq")
    _require_same(Phi.cod, Psi.cod, "dist_leq")
    A, B, Q = Phi.dom, Phi.cod, Phi.Q
    return all(Q.leq(A.t(a), B.t(b), Phi(b, a), Psi(b, a)) for b in B.objects for a in A.objects)


def dist_lifting(Psi: Distributor, Theta: Distributor) -> Distributor:
    """Largest ``X: A -|-> B`` with ``Psi (x) X <= Theta``, for ``Psi: B -|-> C``, ``Theta: A -|-> C``."""
    _require_same(Psi.cod, Theta.cod, "dist_lifting")
    B, A, C, Q = Psi.dom, Theta.dom, Psi.cod, Psi.Q
    m = {}
    for b in B.objects:
        tb = B.t(b)
        for a in A.objects:
            ta = A.t(a)
            m[b, a] = Q.meet(ta, tb, (Q.lift(ta, tb, C.t(c), Psi(c, b), Theta(c, a)) for c in C.objects))
    return Distributor(A, B, m, name=f"[{Psi.name},{Theta.name}]", check=False)


def dist_extension(Phi: Distributor, Theta: Distributor) -> Distributor:
    """Largest ``X: B -|-> C`` with ``X (x) Phi <= Theta``, for ``Phi: A -|-> B``, ``Theta: A -|-> C``."""
    _require_same(Phi.dom, Theta.dom, "dist_extension")
    A, B, C, Q = Phi.dom, Phi.cod, Theta.cod, Phi.Q
    m = {}
    for c in C.objects:
        tc = C.t(c)
        for b in B.objects:
            tb = B.t(b)
            m[c, b] = Q.meet(tb, tc, (Q.ext(A.t(a), tb, tc, Phi(b, a), Theta(c, a)) for a in A.objects))
    return Distributor(B, C, m, name=f"{{{Phi.name},{Theta.name}}}", check=False)


def induced_left(F: QFunctor) -> Distributor:
    """``B(-, F-) : A -|-> B``."""
    A, B = F.dom, F.cod
    return Distributor(A, B, {(b, a): B.hom(b, F(a)) for b in B.objects for a in A.objects},
                       name=f"{F.name}_*", check=False)


def induced_right(F: QFunctor) -> Distributor:
    """``B(F-, -) : B -|-> A``."""
    A, B = F.dom, F.cod
    return Distributor(B, A, {(a, b): B.hom(F(a), b) for a in A.objects for b in B.objects},
                       name=f"{F.name}^*", check=False)


def functor_leq(F: QFunctor, G: QFunctor) -> bool:
    """The local preorder on parallel functors: ``1 <= B(Fa, Ga)`` for every ``a``."""
    _require_same(F.dom, G.dom, "functor_leq")
    _require_same(F.cod, G.cod, "functor_leq")
    B, Q = F.cod, F.cod.Q
    for a in F.dom.objects:
        X = F.dom.t(a)
        if not Q.leq(X, X, Q.unit(X), B.hom(F(a), G(a))):
            return False
    return True


def functor_iso(F: QFunctor, G: QFunctor) -> bool:
    return functor_leq(F, G) and functor_leq(G, F)


def is_iso(A: QCategory, x: Hashable, y: Hashable) -> bool:
    X = A.t(x)
    if A.t(y) != X:
        return False
    one = A.Q.unit(X)
    return A.Q.leq(X, X, one, A.hom(x, y)) and A.Q.leq(X, X, one, A.hom(y, x))


def is_fully_faithful(F: QFunctor) -> bool:
    A, B = F.dom, F.cod
    return all(A.hom(x, y) == B.hom(F(x), F(y)) for x, y in product(A.objects, repeat=2))


def is_adjoint_pair(F: QFunctor, G: QFunctor) -> bool:
    """``F -| G``, i.e. ``B(F-, -) = A(-, G-)``."""
    _require_same(F.dom, G.cod, "is_adjoint_pair")
    _require_same(F.cod, G.dom, "is_adjoint_pair")
    A, B = F.dom, F.cod
    return all(B.hom(F(a), b) == A.hom(a, G(b)) for a in A.objects for b in B.objects)


def is_essentially_surjective(F: QFunctor) -> bool:
    images = set(F.mapping.values())
    B = F.cod
    return all(b in images or any(is_iso(B, b, fa) for fa in images) for b in B.objects)


def is_equivalence(F: QFunctor) -> bool:
    return is_fully_faithful(F) and is_essentially_surjective(F)


def map_matrix(A: QCategory, B: QCategory, f: Callable[[Hashable, Hashable], Any], name: str = "Phi",
               check: bool = False) -> Distributor:
    """Build a distributor ``A -|-> B`` from an entry function ``f(b, a)``."""
    return Distributor(A, B, {(b, a): f(b, a) for b in B.objects for a in A.objects}, name=name, check=check)
