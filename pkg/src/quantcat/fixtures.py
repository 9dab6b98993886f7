"""Deterministic fixture generators: preorders, metric spaces, quantaloids, categories.

Every random generator takes a ``random.Random``; callers seed it with a
string so runs are reproducible across processes.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .lattice import SupLattice
from .doctrine import random_functor_into
from .presheaf import Presheaf
from .qcat import Distributor, QCategory, QFunctor
from .quantaloid import BOOL, INF, LAWVERE, Quantaloid, TableQuantaloid, chain


def rng_for(*parts) -> random.Random:
    return random.Random(":".join(str(p) for p in parts))


# ---------------------------------------------------------------------------
# preorders and metric spaces


def preorder_category(elements: Sequence[str], leq, name: str = "P") -> QCategory:
    """``hom(x, y)`` is true iff ``x <= y``, so representables are principal downsets."""
    return QCategory(
        BOOL, list(elements), {e: "*" for e in elements},
        {(x, y): "true" if leq(x, y) else "false" for x in elements for y in elements},
        name=name,
    )


def _transitive(n: int, rel: set) -> bool:
    return all((i, k) in rel for i, j in rel for k in range(n) if (j, k) in rel)


@lru_cache(maxsize=None)
def _preorder_relations(n: int) -> tuple:
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    out = []
    for bits in product((0, 1), repeat=len(off)):
        rel = {(i, i) for i in range(n)} | {p for p, b in zip(off, bits) if b}
        if _transitive(n, rel):
            out.append(frozenset(rel))
    return tuple(out)


def all_preorders(n: int) -> list[QCategory]:
    """Every preorder on ``n`` labeled elements (1, 1, 4, 29, 355 for n = 0..4)."""
    names = [f"x{i}" for i in range(n)]
    out = []
    for k, rel in enumerate(_preorder_relations(n)):
        out.append(preorder_category(names, lambda x, y, r=rel: (int(x[1:]), int(y[1:])) in r, name=f"pre{n}.{k}"))
    return out


def chain_preorder(n: int) -> QCategory:
    names = [f"x{i}" for i in range(n)]
    return preorder_category(names, lambda x, y: int(x[1:]) <= int(y[1:]), name=f"chain{n}")


def discrete_preorder(n: int) -> QCategory:
    names = [f"x{i}" for i in range(n)]
    return preorder_category(names, lambda x, y: x == y, name=f"discrete{n}")


def metric_space(points: Sequence[str], d, name: str = "M", check: bool = True) -> QCategory:
    """``hom(x, y) = d(x, y)``; the composition axiom is the triangle inequality."""
    return QCategory(LAWVERE, list(points), {p: "*" for p in points},
                     {(x, y): d(x, y) for x in points for y in points}, name=name, check=check)


def line_space(coords: Sequence[int | Fraction], name: str = "line") -> QCategory:
    pts = [str(c) for c in coords]
    val = {str(c): Fraction(c) for c in coords}
    return metric_space(pts, lambda x, y: abs(val[x] - val[y]), name=name)


def two_point_space() -> QCategory:
    return metric_space(["p", "q"], lambda x, y: Fraction(0) if x == y else Fraction(1), name="two")


def _shortest_paths(n: int, d: list[list]) -> None:
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = LAWVERE.comp("*", "*", "*", d[k][j], d[i][k])
                if via < d[i][j]:
                    d[i][j] = via


def random_metric_space(rng: random.Random, n: int, symmetric: bool = True, allow_inf: bool = False,
                        name: str = "M") -> QCategory:
    """Random rational distances closed under shortest paths; zero diagonal."""
    d = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j or (symmetric and j < i):
                continue
            if allow_inf and rng.random() < 0.15:
                v = INF
            else:
                v = Fraction(rng.randint(1, 12), rng.randint(1, 3))
            d[i][j] = v
            if symmetric:
                d[j][i] = v
    _shortest_paths(n, d)
    pts = [f"p{i}" for i in range(n)]
    return metric_space(pts, lambda x, y: d[int(x[1:])][int(y[1:])], name=name)


# ---------------------------------------------------------------------------
# random categories, presheaves, distributors, functors over any quantaloid


def _random_value(Q: Quantaloid, x: str, y: str, rng: random.Random, bias_bottom: float = 0.4):
    if Q is LAWVERE:
        if rng.random() < bias_bottom * 0.5:
            return INF
        return Fraction(rng.randint(0, 8), rng.randint(1, 2))
    els = Q.elements(x, y)
    if rng.random() < bias_bottom:
        return Q.bottom(x, y)
    return els[rng.randrange(len(els))]


def random_category(Q: Quantaloid, n: int, rng: random.Random, name: str = "A",
                    types: Sequence[str] | None = None) -> QCategory:
    """A random matrix closed up to a category: identities joined in, then ``A v A.A`` to a fixpoint."""
    objs = [f"a{i}" for i in range(n)]
    ty = {a: (types[i] if types else Q.objects[rng.randrange(len(Q.objects))]) for i, a in enumerate(objs)}
    hom = {(x, y): _random_value(Q, ty[y], ty[x], rng) for x in objs for y in objs}
    for a in objs:
        hom[a, a] = Q.join(ty[a], ty[a], (hom[a, a], Q.unit(ty[a])))
    changed = True
    while changed:
        changed = False
        for x, y, z in product(objs, repeat=3):
            c = Q.comp(ty[z], ty[y], ty[x], hom[x, y], hom[y, z])
            j = Q.join(ty[z], ty[x], (hom[x, z], c))
            if j != hom[x, z]:
                hom[x, z] = j
                changed = True
    return QCategory(Q, objs, ty, hom, name=name)


def random_presheaf(A: QCategory, rng: random.Random, X: str | None = None) -> Presheaf:
    """``A (x) v`` for a random value column ``v``; satisfies the action axiom by construction."""
    Q = A.Q
    X = X or Q.objects[rng.randrange(len(Q.objects))]
    v = {a: _random_value(Q, X, A.t(a), rng, 0.5) for a in A.objects}
    vals = []
    for a2 in A.objects:
        t2 = A.t(a2)
        vals.append(Q.join(X, t2, (Q.comp(X, A.t(a), t2, A.hom(a2, a), v[a]) for a in A.objects)))
    return Presheaf(A, X, tuple(vals))


def random_distributor(A: QCategory, B: QCategory, rng: random.Random, name: str = "Phi") -> Distributor:
    """``B (x) M (x) A`` for a random matrix ``M``."""
    Q = A.Q
    M = {(b, a): _random_value(Q, A.t(a), B.t(b), rng, 0.5) for b in B.objects for a in A.objects}
    MA = {}
    for b in B.objects:
        for a in A.objects:
            MA[b, a] = Q.join(A.t(a), B.t(b), (Q.comp(A.t(a), A.t(a2), B.t(b), M[b, a2], A.hom(a2, a))
                                               for a2 in A.objects))
    out = {}
    for b in B.objects:
        for a in A.objects:
            out[b, a] = Q.join(A.t(a), B.t(b), (Q.comp(A.t(a), B.t(b2), B.t(b), B.hom(b, b2), MA[b2, a])
                                                for b2 in B.objects))
    return Distributor(A, B, out, name=name, check=False)


def random_functor(A: QCategory, B: QCategory, rng: random.Random) -> QFunctor | None:

    return random_functor_into(A, B, rng)


# ---------------------------------------------------------------------------
# finite quantaloids


def _one_object(name: str, L: SupLattice, table: dict, unit: str, check: bool = True) -> TableQuantaloid:
    return TableQuantaloid(["*"], {("*", "*"): L}, {("*", "*", "*"): table}, {"*": unit}, name=name, check=check)


@lru_cache(maxsize=None)
def chain_quantale_tables(n: int) -> tuple:
    """Every quantale structure on the ``n``-chain ``0 < ... < n-1``.

    Composition on a chain preserves joins iff it is monotone in each
    variable and sends 0 to 0; candidates are enumerated by backtracking
    with those constraints and a fixed unit, then filtered for
    associativity.
    """
    out = []
    els = list(range(n))
    for u in els[1:]:
        cells = [(g, f) for g in range(1, n) for f in range(1, n) if g != u and f != u]
        base = {}
        for x in els:
            base[0, x] = base[x, 0] = 0
        for x in els:
            base[u, x] = base[x, u] = x
        tab = dict(base)

        def fits(g, f, v):
            for (g2, f2), w in tab.items():
                if g2 == g and f2 <= f and w > v:
                    return False
                if g2 == g and f2 >= f and w < v:
                    return False
                if f2 == f and g2 <= g and w > v:
                    return False
                if f2 == f and g2 >= g and w < v:
                    return False
            return True

        def dfs(k):
            if k == len(cells):
                if all(tab[tab[h, g], f] == tab[h, tab[g, f]] for h in els for g in els for f in els):
                    out.append((u, tuple(sorted(tab.items()))))
                return
            g, f = cells[k]
            for v in els:
                if fits(g, f, v):
                    tab[g, f] = v
                    dfs(k + 1)
                    del tab[g, f]

        if all(fits(g, f, v) for (g, f), v in base.items()):
            dfs(0)
    return tuple(out)


def chain_quantales(n: int) -> list[TableQuantaloid]:
    L = SupLattice.chain(n)
    out = []
    for k, (u, items) in enumerate(chain_quantale_tables(n)):
        table = {(str(g), str(f)): str(v) for (g, f), v in items}
        out.append(_one_object(f"chainq{n}.{k}", L, table, str(u)))
    return out


def truncated_sum_chain(n: int) -> TableQuantaloid:
    """``{0 < ... < n-1}`` read as distances ``n-1-i``, composition adds distances and caps at ``n-1``."""
    L = SupLattice.chain(n)
    top = n - 1
    table = {(str(g), str(f)): str(max(0, g + f - top)) for g in range(n) for f in range(n)}
    return _one_object(f"lukasiewicz{n}", L, table, str(top))


def powerset_quantale(monoid: str) -> TableQuantaloid:
    """Subsets of a two-element monoid ``{e, m}`` with pointwise product; ``monoid`` is ``"z2"`` or ``"idem"``."""
    mul = {("e", "e"): "e", ("e", "m"): "m", ("m", "e"): "m",
           ("m", "m"): "e" if monoid == "z2" else "m"}
    subsets = ["{}", "{e}", "{m}", "{e,m}"]
    members = {"{}": set(), "{e}": {"e"}, "{m}": {"m"}, "{e,m}": {"e", "m"}}
    name_of = {frozenset(v): k for k, v in members.items()}
    L = SupLattice.from_pairs(subsets, [(a, b) for a in subsets for b in subsets if members[a] <= members[b]])
    table = {(g, f): name_of[frozenset(mul[x, y] for x in members[g] for y in members[f])]
             for g in subsets for f in subsets}
    return _one_object(f"powerset-{monoid}", L, table, "{e}")


def downset_frame(n_points: int, leq_pairs: Sequence[tuple[int, int]], name: str) -> TableQuantaloid:
    """The frame of downsets of a finite poset, with meet as composition."""
    pts = range(n_points)
    rel = set(leq_pairs) | {(i, i) for i in pts}
    downs = []
    for r in range(n_points + 1):
        for S in combinations(pts, r):
            s = set(S)
            if all(x in s for y in s for x in pts if (x, y) in rel):
                downs.append(frozenset(s))
    ids = {d: "{" + ",".join(str(x) for x in sorted(d)) + "}" for d in downs}
    els = [ids[d] for d in downs]
    L = SupLattice.from_pairs(els, [(ids[a], ids[b]) for a in downs for b in downs if a <= b])
    table = {(ids[a], ids[b]): ids[a & b] for a in downs for b in downs}
    return _one_object(name, L, table, ids[frozenset(pts)])


def karoubi(Q: TableQuantaloid, idempotents: Sequence[str], name: str) -> TableQuantaloid:
    """Split the given idempotents of a one-object quantale into a multi-object quantaloid.

    ``hom(e, e2)`` holds the ``f`` with ``e2 o f o e = f``; composition is
    inherited and ``e`` is the identity at its object.
    """
    c = Q.table["*", "*", "*"]
    L0 = Q.homs["*", "*"]
    objs = [f"o{k}" for k in range(len(idempotents))]
    idem = dict(zip(objs, idempotents))
    for e in idempotents:
        if c[e, e] != e:
            raise ValueError(f"{e} is not idempotent")
    homs, compose = {}, {}
    for x, y in product(objs, repeat=2):
        els = [f for f in L0.elements if c[c[idem[y], f], idem[x]] == f]
        homs[x, y] = SupLattice(els, [(a, b) for a in els for b in els if L0.leq(a, b)])
    for x, y, z in product(objs, repeat=3):
        compose[x, y, z] = {(g, f): c[g, f] for g in homs[y, z].elements for f in homs[x, y].elements}
    return TableQuantaloid(objs, homs, compose, idem, name=name)


def random_table_quantaloids(rng: random.Random, count: int, max_size: int = 5) -> list[TableQuantaloid]:
    """A deterministic assortment of finite quantaloids with homs of at most ``max_size`` elements."""
    pool: list[TableQuantaloid] = []
    for n in (2, 3, 4):
        pool.extend(chain_quantales(n))
    pool.extend(truncated_sum_chain(n) for n in (3, 4, 5))
    pool.extend([powerset_quantale("z2"), powerset_quantale("idem")])
    pool.append(downset_frame(2, [], "frame-2x2"))
    pool.append(downset_frame(3, [(0, 1)], "frame-v"))
    pool.append(downset_frame(3, [(0, 2), (1, 2)], "frame-w"))
    multi = []
    for Q in pool:
        c = Q.table["*", "*", "*"]
        idem = [e for e in Q.homs["*", "*"].elements if c[e, e] == e and e != Q.bottom("*", "*")]
        if len(idem) >= 2:
            multi.append(karoubi(Q, idem[-2:], name=f"{Q.name}-split"))
    pool = [Q for Q in pool + multi if all(len(L) <= max_size for L in Q.homs.values())]
    rng.shuffle(pool)
    chosen = pool[:count]
    have_multi = any(len(Q.objects) > 1 for Q in chosen)
    if not have_multi:
        extra = [Q for Q in pool if len(Q.objects) > 1]
        if extra:
            chosen = chosen[:-1] + [extra[0]] if chosen else [extra[0]]
    return chosen


def small_quantaloids() -> list[Quantaloid]:
    return [BOOL, chain(2), chain(3), chain(4)]
