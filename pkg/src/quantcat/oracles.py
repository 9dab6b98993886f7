"""Exhaustive reference computations that the fast paths are checked against.

Each function searches the whole finite space instead of using the
closed forms in the main modules.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Any, Hashable

from .lattice import SupLattice
from .presheaf import Presheaf, representable
from .qcat import Distributor, QCategory, QFunctor, all_functors, compose_functors, functor_leq
from .quantaloid import INF, LAWVERE, Quantaloid


def lub(L: SupLattice, S) -> str | None:
    S = list(S)
    ubs = [u for u in L.elements if all(L.leq(s, u) for s in S)]
    least = [u for u in ubs if all(L.leq(u, v) for v in ubs)]
    return least[0] if least else None


def glb(L: SupLattice, S) -> str | None:
    S = list(S)
    lbs = [u for u in L.elements if all(L.leq(u, s) for s in S)]
    great = [u for u in lbs if all(L.leq(v, u) for v in lbs)]
    return great[0] if great else None


def greatest(Q: Quantaloid, x: str, y: str, candidates) -> Any:
    cands = list(candidates)
    top = [c for c in cands if all(Q.leq(x, y, d, c) for d in cands)]
    return top[0] if top else None


def lifting(Q: Quantaloid, a: str, b: str, c: str, g, h) -> Any:
    """Greatest ``x: a -> b`` with ``g o x <= h``, by scanning ``hom(a, b)``."""
    return greatest(Q, a, b, (x for x in Q.elements(a, b) if Q.leq(a, c, Q.comp(a, b, c, g, x), h)))


def extension(Q: Quantaloid, a: str, b: str, c: str, f, h) -> Any:
    return greatest(Q, b, c, (x for x in Q.elements(b, c) if Q.leq(a, c, Q.comp(a, b, c, x, f), h)))


def lawvere_lifting(g, h) -> Any:
    """Smallest numeric ``x`` with ``g + x >= h``, searched among the only possible breakpoints."""
    cands = [Fraction(0), INF]
    if g is not INF and h is not INF:
        cands.append(h - g)
    ok = [x for x in cands if x is INF or x >= 0
          if LAWVERE.leq("*", "*", LAWVERE.comp("*", "*", "*", g, x), h)]
    return min(ok)


def all_matrices(A: QCategory, B: QCategory):
    Q = A.Q
    keys = [(b, a) for b in B.objects for a in A.objects]
    domains = [Q.elements(A.t(a), B.t(b)) for b, a in keys]
    for vals in product(*domains):
        yield dict(zip(keys, vals))


def _mat_comp(Q, A, B, C, psi, phi):
    return {(c, a): Q.join(A.t(a), C.t(c), (Q.comp(A.t(a), B.t(b), C.t(c), psi[c, b], phi[b, a])
                                             for b in B.objects))
            for c in C.objects for a in A.objects}


def _mat_leq(Q, A, B, m1, m2):
    return all(Q.leq(A.t(a), B.t(b), m1[b, a], m2[b, a]) for b in B.objects for a in A.objects)


def _greatest_matrix(Q, A, B, mats):
    top = [m for m in mats if all(_mat_leq(Q, A, B, n, m) for n in mats)]
    return top[0] if top else None


def dist_lifting(Psi: Distributor, Theta: Distributor) -> dict:
    """Greatest matrix ``X: A -> B`` with ``Psi . X <= Theta``."""
    Q, A, B, C = Psi.Q, Theta.dom, Psi.dom, Psi.cod
    ok = [m for m in all_matrices(A, B) if _mat_leq(Q, A, C, _mat_comp(Q, A, B, C, Psi.matrix, m), Theta.matrix)]
    return _greatest_matrix(Q, A, B, ok)


def dist_extension(Phi: Distributor, Theta: Distributor) -> dict:
    Q, A, B, C = Phi.Q, Phi.dom, Phi.cod, Theta.cod
    ok = [m for m in all_matrices(B, C) if _mat_leq(Q, A, C, _mat_comp(Q, A, B, C, m, Phi.matrix), Theta.matrix)]
    return _greatest_matrix(Q, B, C, ok)


def conical_witness(phi: Presheaf) -> tuple | None:
    """Some subset of same-typed objects whose representables join to ``phi``."""
    A, Q, X = phi.base, phi.base.Q, phi.q_type
    objs = A.objects_of_type(X)
    reps = {a: representable(A, a) for a in objs}
    for r in range(len(objs) + 1):
        for S in combinations(objs, r):
            vals = tuple(Q.join(X, A.t(b), (reps[a](b) for a in S)) for b in A.objects)
            if vals == phi.values:
                return S
    return None


def presheaf_right_adjoint(phi: Presheaf) -> dict | None:
    """Exhaustive search for ``psi: A -|-> *_X`` with ``phi -| psi``."""
    A, Q, X = phi.base, phi.base.Q, phi.q_type
    objs = A.objects
    domains = [Q.elements(A.t(a), X) for a in objs]
    one = Q.unit(X)
    for vals in product(*domains):
        psi = dict(zip(objs, vals))
        # action axiom: psi(a2) o A(a2, a) <= psi(a)
        if not all(Q.leq(A.t(a), X, Q.comp(A.t(a), A.t(a2), X, psi[a2], A.hom(a2, a)), psi[a])
                   for a2 in objs for a in objs):
            continue
        unit = Q.join(X, X, (Q.comp(X, A.t(a), X, psi[a], phi(a)) for a in objs))
        if not Q.leq(X, X, one, unit):
            continue
        if all(Q.leq(A.t(a), A.t(b), Q.comp(A.t(a), X, A.t(b), phi(b), psi[a]), A.hom(b, a))
               for b in objs for a in objs):
            return psi
    return None


def least_extensions(F: QFunctor, G: QFunctor) -> list[QFunctor]:
    """The least functors ``K: C -> B`` with ``F <= K o G``, by scanning every functor."""
    cands = [K for K in all_functors(G.cod, F.cod) if functor_leq(F, compose_functors(K, G))]
    return [K for K in cands if all(functor_leq(K, L) for L in cands)]


def functors_between(A: QCategory, B: QCategory) -> list[QFunctor]:
    return all_functors(A, B)


def is_equivalent_to_some(A: QCategory, x: Hashable, ys) -> bool:
    X = A.t(x)
    one = A.Q.unit(X)
    return any(A.t(y) == X and A.Q.leq(X, X, one, A.hom(x, y)) and A.Q.leq(X, X, one, A.hom(y, x)) for y in ys)
