"""Law suites: named property checks over deterministic fixtures.

Each check returns a list of counterexample strings (empty means pass).
``run_suite`` wraps them into :class:`LawResult` entries; the ``budget``
is the number of seeded random instances drawn per randomized law.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable

from . import oracles
from .doctrine import LawResult, SubDoctrine, cotabulation_holds, dist_in_class, doctrine_laws, saturation_check
from .hausdorff import (
    ALL,
    CAUCHY,
    CONICAL,
    HAUSDORFF,
    REPRESENTABLE,
    cauchy_completion,
    closed_form_hom,
    conical_colimit_by_order,
    conical_colimit_by_weight,
    conical_from_subset,
    directed_hausdorff,
    generators,
    hausdorff_category,
    hausdorff_image,
    hausdorff_on_dist,
    hausdorff_on_functor,
    is_cauchy,
    is_conical,
    subset,
)
from .lattice import SupLattice, validate_lattice
from .presheaf import (
    NotCocomplete,
    Presheaf,
    classify,
    colim,
    colim_in_presheaf,
    declassify,
    enumerate_presheaves,
    free_functor,
    free_mult,
    kan_extension,
    presheaf_category,
    presheaf_hom,
    representable,
    yoneda,
)
from .qcat import (
    Distributor,
    QCategory,
    QFunctor,
    compose_functors,
    dist_compose,
    dist_extension,
    dist_join,
    dist_leq,
    dist_lifting,
    functor_iso,
    functor_leq,
    identity_dist,
    identity_functor,
    induced_left,
    induced_right,
    is_equivalence,
    is_fully_faithful,
    object_key,
    validate_distributor,
)
from .quantaloid import (
    BOOL,
    INF,
    LAWVERE,
    Quantaloid,
    TableQuantaloid,
    chain,
    validate_quantaloid,
)
from . import fixtures as fx

SUITES = ("lattice", "quantaloid", "dist", "presheaf", "doctrine", "hausdorff")


@dataclass
class LawReport:
    suite: str
    seed: int
    budget: int
    entries: list[LawResult] = field(default_factory=list)

    @property
    def failures(self) -> list[LawResult]:
        return [e for e in self.entries if e.status == "fail"]

    def to_json(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "budget": self.budget,
                "entries": [e.to_json() for e in self.entries]}


class _Collector:
    def __init__(self):
        self.entries: list[LawResult] = []

    def add(self, law: str, fixture: str, cexs: Iterable[str]) -> None:
        cexs = list(cexs)
        self.entries.append(LawResult(law, fixture, "fail" if cexs else "pass", cexs[0] if cexs else None))

    def skip(self, law: str, fixture: str, why: str) -> None:
        self.entries.append(LawResult(law, fixture, "skip", why))


# ---------------------------------------------------------------------------
# lattices


def lattice_fixtures() -> list[tuple[str, SupLattice]]:
    out = [(f"chain{n}", SupLattice.chain(n)) for n in range(1, 6)]
    out.append(("diamond", SupLattice.from_pairs(["bot", "x", "y", "top"],
                                                  [("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")])))
    out.append(("pentagon", SupLattice.from_pairs(["0", "a", "b", "c", "1"],
                                                   [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])))
    out.append(("m3", SupLattice.from_pairs(["0", "a", "b", "c", "1"],
                                             [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])))
    for Q in (fx.powerset_quantale("z2"), fx.downset_frame(3, [(0, 1)], "frame-v")):
        out.append((Q.name, Q.homs["*", "*"]))
    return out


def lattice_counterexamples(L: SupLattice) -> list[str]:
    out = list(validate_lattice(L))
    els = L.elements
    for r in range(len(els) + 1):
        for S in combinations(els, r):
            if L.join(S) != oracles.lub(L, S):
                out.append(f"join of {set(S)} is not the least upper bound")
            if L.meet(S) != oracles.glb(L, S):
                out.append(f"meet of {set(S)} is not the greatest lower bound")
    for x, y, z in product(els, repeat=3):
        if L.join([x, L.join([y, z])]) != L.join([L.join([x, y]), z]):
            out.append(f"join not associative at ({x},{y},{z})")
        if L.meet([x, L.meet([y, z])]) != L.meet([L.meet([x, y]), z]):
            out.append(f"meet not associative at ({x},{y},{z})")
    for x, y in product(els, repeat=2):
        if L.join([x, y]) != L.join([y, x]) or L.meet([x, y]) != L.meet([y, x]):
            out.append(f"join or meet not commutative at ({x},{y})")
    for x in els:
        if L.join([x, x]) != x or L.meet([x, x]) != x:
            out.append(f"join or meet not idempotent at {x}")
    return out


def lattice_suite(budget: int, seed: int) -> list[LawResult]:
    c = _Collector()
    for name, L in lattice_fixtures():
        c.add("lattice:bounds-and-algebra", name, lattice_counterexamples(L))
    return c.entries


# ---------------------------------------------------------------------------
# quantaloids


def residuation_counterexamples(Q: TableQuantaloid) -> list[str]:
    out = []
    for a, b, c in product(Q.objects, repeat=3):
        for g, h in product(Q.elements(b, c), Q.elements(a, c)):
            lg = Q.lift(a, b, c, g, h)
            if lg != oracles.lifting(Q, a, b, c, g, h):
                out.append(f"lifting [{g},{h}] on {a},{b},{c} is not the greatest solution")
            for x in Q.elements(a, b):
                if Q.leq(a, c, Q.comp(a, b, c, g, x), h) != Q.leq(a, b, x, lg):
                    out.append(f"lifting Galois law fails at g={g} x={x} h={h} on {a},{b},{c}")
        for f, h in product(Q.elements(a, b), Q.elements(a, c)):
            ef = Q.ext(a, b, c, f, h)
            if ef != oracles.extension(Q, a, b, c, f, h):
                out.append(f"extension {{{f},{h}}} on {a},{b},{c} is not the greatest solution")
            for x in Q.elements(b, c):
                if Q.leq(a, c, Q.comp(a, b, c, x, f), h) != Q.leq(b, c, x, ef):
                    out.append(f"extension Galois law fails at f={f} x={x} h={h} on {a},{b},{c}")
    return out


def _right_adjoint(Q: Quantaloid, x: str, y: str, f):
    """Right adjoint value ``y -> x`` of ``f: x -> y``, or None."""
    g = Q.lift(y, x, y, f, Q.unit(y))
    return g if Q.leq(x, x, Q.unit(x), Q.comp(x, y, x, g, f)) else None


def _left_adjoint(Q: Quantaloid, x: str, y: str, f):
    g = Q.ext(x, y, x, f, Q.unit(x))
    return g if Q.leq(y, y, Q.unit(y), Q.comp(y, x, y, f, g)) else None


def adjoint_residual_counterexamples(Q: TableQuantaloid) -> list[str]:
    """Liftings through maps with right adjoints are composites, hence join-preserving; dually."""
    out = []
    for a, b, c in product(Q.objects, repeat=3):
        for g in Q.elements(b, c):
            gs = _right_adjoint(Q, b, c, g)
            if gs is None:
                continue
            hs = Q.elements(a, c)
            for h in hs:
                if Q.lift(a, b, c, g, h) != Q.comp(a, c, b, gs, h):
                    out.append(f"[{g},{h}] differs from {gs} o {h} on {a},{b},{c}")
            for h1, h2 in product(hs, repeat=2):
                if Q.lift(a, b, c, g, Q.join(a, c, (h1, h2))) != Q.join(
                        a, b, (Q.lift(a, b, c, g, h1), Q.lift(a, b, c, g, h2))):
                    out.append(f"[{g},-] does not preserve the join of ({h1},{h2})")
            if Q.lift(a, b, c, g, Q.bottom(a, c)) != Q.bottom(a, b):
                out.append(f"[{g},-] does not preserve the empty join")
        for f in Q.elements(a, b):
            fl = _left_adjoint(Q, a, b, f)
            if fl is None:
                continue
            for h in Q.elements(a, c):
                if Q.ext(a, b, c, f, h) != Q.comp(b, a, c, h, fl):
                    out.append(f"{{{f},{h}}} differs from {h} o {fl} on {a},{b},{c}")
    return out


def lifting_square_counterexamples(Q: TableQuantaloid) -> tuple[list[str], int]:
    """Squares ``f: A->D, g: B->D, i: C->E, j: D->E`` with ``h = j o g``.

    Returns the counterexamples and how many squares met the hypotheses
    of the equality case.
    """
    out, strict = [], 0
    for A, B, C, D, E in product(Q.objects, repeat=5):
        for f, g, i, j in product(Q.elements(A, D), Q.elements(B, D), Q.elements(C, E), Q.elements(D, E)):
            h = Q.comp(B, D, E, j, g)
            lhs = Q.comp(A, B, C, Q.lift(B, C, E, i, h), Q.lift(A, B, D, g, f))
            rhs = Q.lift(A, C, E, i, Q.comp(A, D, E, j, f))
            if not Q.leq(A, C, lhs, rhs):
                out.append(f"[i,h] o [g,f] <= [i,j o f] fails at f={f} g={g} i={i} j={j}")
                continue
            adj = [_right_adjoint(Q, A, D, f), _right_adjoint(Q, B, D, g), _right_adjoint(Q, B, E, h),
                   _right_adjoint(Q, C, E, i), _right_adjoint(Q, D, E, j)]
            if any(x is None for x in adj):
                continue
            if Q.comp(D, B, D, g, adj[1]) != Q.unit(D):
                continue
            strict += 1
            if lhs != rhs:
                out.append(f"equality case fails at f={f} g={g} i={i} j={j}")
    return out, strict


def embedding_lifting_counterexamples(Q: TableQuantaloid) -> list[str]:
    """``[f o x, f o y] = [x, y]`` whenever ``f`` has a right adjoint with ``f* o f = 1``."""
    out = []
    for X, A, B in product(Q.objects, repeat=3):
        for f in Q.elements(A, B):
            fs = _right_adjoint(Q, A, B, f)
            if fs is None or Q.comp(A, B, A, fs, f) != Q.unit(A):
                continue
            for x, y in product(Q.elements(X, A), repeat=2):
                lhs = Q.lift(X, X, B, Q.comp(X, A, B, f, x), Q.comp(X, A, B, f, y))
                if lhs != Q.lift(X, X, A, x, y):
                    out.append(f"[f o x, f o y] differs from [x,y] at f={f} x={x} y={y}")
    return out


def lawvere_spot_checks(rng, n: int) -> list[str]:
    out = []

    def value():
        r = rng.random()
        if r < 0.1:
            return INF
        return Fraction(rng.randint(0, 20), rng.randint(1, 4))

    for _ in range(n):
        g, h, x = value(), value(), value()
        lg = LAWVERE.lift("*", "*", "*", g, h)
        if lg != oracles.lawvere_lifting(g, h):
            out.append(f"lifting [{g},{h}] differs from the breakpoint search")
        if LAWVERE.leq("*", "*", LAWVERE.comp("*", "*", "*", g, x), h) != LAWVERE.leq("*", "*", x, lg):
            out.append(f"lifting Galois law fails at g={g} x={x} h={h}")
        ef = LAWVERE.ext("*", "*", "*", g, h)
        if LAWVERE.leq("*", "*", LAWVERE.comp("*", "*", "*", x, g), h) != LAWVERE.leq("*", "*", x, ef):
            out.append(f"extension Galois law fails at f={g} x={x} h={h}")
        has = _right_adjoint(LAWVERE, "*", "*", g) is not None
        if has != (g == 0):
            out.append(f"right adjoint detection wrong at {g}")
    return out


def quantaloid_instances(seed: int, count: int) -> list[TableQuantaloid]:
    base = [BOOL, chain(2), chain(3), chain(4)]
    return base + fx.random_table_quantaloids(fx.rng_for("quantaloids", seed), count)


def quantaloid_suite(budget: int, seed: int) -> list[LawResult]:
    c = _Collector()
    for Q in quantaloid_instances(seed, min(6, max(1, budget))):
        c.add("quantaloid:axioms", Q.name, validate_quantaloid(Q))
        c.add("quantaloid:residuation", Q.name, residuation_counterexamples(Q))
        c.add("quantaloid:residuals-through-adjoints", Q.name, adjoint_residual_counterexamples(Q))
        cex, _ = lifting_square_counterexamples(Q)
        c.add("quantaloid:lifting-square", Q.name, cex)
        c.add("quantaloid:lifting-along-embeddings", Q.name, embedding_lifting_counterexamples(Q))
    c.add("quantaloid:lawvere-residuation", "lawvere", lawvere_spot_checks(fx.rng_for("lawvere", seed), budget))
    return c.entries


# ---------------------------------------------------------------------------
# distributors


def _random_setting(rng, k: int):
    qs: list[Quantaloid] = [BOOL, chain(3), LAWVERE]
    tables = fx.random_table_quantaloids(rng, 2, max_size=4)
    qs.extend(tables)
    return qs[k % len(qs)]


def dist_counterexamples(Q: Quantaloid, rng) -> list[str]:
    out = []
    sizes = [rng.randint(1, 3) for _ in range(4)]
    A, B, C, D = (fx.random_category(Q, n, rng, name=nm) for n, nm in zip(sizes, "ABCD"))
    Phi = fx.random_distributor(A, B, rng, "Phi")
    Phi2 = fx.random_distributor(A, B, rng, "Phi2")
    Psi = fx.random_distributor(B, C, rng, "Psi")
    Chi = fx.random_distributor(C, D, rng, "Chi")
    for d in (Phi, Phi2, Psi, Chi):
        if validate_distributor(d):
            out.append(f"generated {d.name} violates the action axioms")
    if dist_compose(Chi, dist_compose(Psi, Phi)) != dist_compose(dist_compose(Chi, Psi), Phi):
        out.append("composition is not associative")
    if dist_compose(identity_dist(B), Phi) != Phi or dist_compose(Phi, identity_dist(A)) != Phi:
        out.append("identity distributors are not neutral")
    if validate_distributor(dist_compose(Psi, Phi)):
        out.append("composite violates the action axioms")
    j = dist_join([Phi, Phi2])
    if dist_compose(Psi, j) != dist_join([dist_compose(Psi, Phi), dist_compose(Psi, Phi2)]):
        out.append("composition does not preserve binary joins")
    if dist_compose(Psi, dist_join([], A, B)) != dist_join([], A, C):
        out.append("composition does not preserve the empty join")
    Theta = fx.random_distributor(A, C, rng, "Theta")
    L = dist_lifting(Psi, Theta)
    if not dist_leq(dist_compose(Psi, L), Theta):
        out.append("lifting does not solve Psi (x) X <= Theta")
    if validate_distributor(L):
        out.append("lifting violates the action axioms")
    for X in (Phi, Phi2, j):
        if dist_leq(dist_compose(Psi, X), Theta) != dist_leq(X, L):
            out.append(f"lifting Galois law fails at {X.name}")
    Ups = fx.random_distributor(A, C, rng, "Ups")
    E = dist_extension(Phi, Ups)
    if not dist_leq(dist_compose(E, Phi), Ups):
        out.append("extension does not solve X (x) Phi <= Theta")
    for X in (Psi, fx.random_distributor(B, C, rng, "Psi2")):
        if dist_leq(dist_compose(X, Phi), Ups) != dist_leq(X, E):
            out.append(f"extension Galois law fails at {X.name}")
    F = fx.random_functor(A, B, rng)
    G = fx.random_functor(B, C, rng)
    if F is not None:
        Fl, Fr = induced_left(F), induced_right(F)
        if not dist_leq(identity_dist(A), dist_compose(Fr, Fl)):
            out.append("unit of the induced adjunction fails")
        if not dist_leq(dist_compose(Fl, Fr), identity_dist(B)):
            out.append("counit of the induced adjunction fails")
        if G is not None and induced_left(compose_functors(G, F)) != dist_compose(induced_left(G), Fl):
            out.append("induced_left is not functorial")
    return out


def brute_dist_residuation(rng, count: int) -> list[str]:
    """Liftings and extensions against exhaustive search over BOOL matrices."""
    out = []
    for k in range(count):
        A, B, C = (fx.random_category(BOOL, rng.randint(1, 2), rng, name=n) for n in "ABC")
        Psi = fx.random_distributor(B, C, rng, "Psi")
        Theta = fx.random_distributor(A, C, rng, "Theta")
        if dist_lifting(Psi, Theta).matrix != oracles.dist_lifting(Psi, Theta):
            out.append(f"case {k}: lifting differs from exhaustive search")
        Phi = fx.random_distributor(A, B, rng, "Phi")
        if dist_extension(Phi, Theta).matrix != oracles.dist_extension(Phi, Theta):
            out.append(f"case {k}: extension differs from exhaustive search")
    return out


def dist_suite(budget: int, seed: int) -> list[LawResult]:
    c = _Collector()
    rng = fx.rng_for("dist", seed)
    cex = []
    for k in range(budget):
        Q = _random_setting(fx.rng_for("dist-q", seed, k), k)
        cex.extend(f"#{k} over {Q.name}: {m}" for m in dist_counterexamples(Q, rng))
    c.add("dist:quantaloid-and-residuation", f"random x{budget}", cex)
    c.add("dist:brute-residuation", "bool", brute_dist_residuation(fx.rng_for("dist-brute", seed), min(budget, 40)))
    return c.entries


# ---------------------------------------------------------------------------
# presheaves


def enumerable_fixtures(max_size: int = 4) -> list[tuple[str, QCategory]]:
    out = []
    for n in range(1, min(max_size, 3) + 1):
        out.extend((A.name, A) for A in fx.all_preorders(n))
    if max_size >= 4:
        out.extend((A.name, A) for A in fx.all_preorders(4))
    for q in (2, 3, 4):
        rng = fx.rng_for("chain-fixtures", q)
        for n in range(1, max_size + 1):
            out.append((f"chain{q}-cat{n}", fx.random_category(chain(q), n, rng, name=f"chain{q}-cat{n}")))
    return out


def yoneda_counterexamples(A: QCategory, presheaves) -> list[str]:
    out = []
    for a in A.objects:
        r = representable(A, a)
        for phi in presheaves:
            if presheaf_hom(r, phi) != phi(a):
                out.append(f"{A.name}: hom(y({a}), {phi.key()}) = {presheaf_hom(r, phi)}, expected {phi(a)}")
    return out


def yoneda_lawvere(seed: int, count: int) -> list[str]:
    out = []
    for k in range(count):
        rng = fx.rng_for("yoneda-lawvere", seed, k)
        A = fx.random_metric_space(rng, rng.randint(1, 4), symmetric=rng.random() < 0.5,
                                   allow_inf=True, name=f"M{k}")
        phi = fx.random_presheaf(A, rng)
        out.extend(yoneda_counterexamples(A, [phi]))
    return out


def classification_counterexamples(seed: int, count: int) -> list[str]:
    out = []
    for k in range(count):
        rng = fx.rng_for("classify", seed, k)
        Q = [BOOL, chain(3), LAWVERE][k % 3]
        if Q is LAWVERE:
            A = fx.random_metric_space(rng, rng.randint(1, 3), name="A")
            B = fx.random_metric_space(rng, rng.randint(1, 3), name="B")
        else:
            A, B = fx.random_category(Q, rng.randint(1, 3), rng, "A"), fx.random_category(Q, rng.randint(1, 3), rng, "B")
        Phi = fx.random_distributor(B, A, rng)
        F = classify(Phi)
        if declassify(F) != Phi:
            out.append(f"case {k}: declassify(classify(Phi)) differs from Phi")
        if classify(declassify(F), F.cod) != F:
            out.append(f"case {k}: classify(declassify(F)) differs from F")
    return out


def colimit_counterexamples(seed: int, count: int) -> list[str]:
    """Search-based colimits in presheaf categories agree with the closed form."""
    out = []
    for k in range(count):
        rng = fx.rng_for("colim", seed, k)
        Q = [BOOL, chain(3)][k % 2]
        A, B, C = (fx.random_category(Q, rng.randint(1, 2), rng, name=n) for n in "ABC")
        Phi = fx.random_distributor(A, B, rng)
        P = presheaf_category(C)
        F = fx.random_functor(B, P, rng)
        if F is None:
            continue
        K = colim(Phi, F)
        if not universal_property_holds(Phi, F, K):
            out.append(f"case {k}: colimit fails its universal property")
        if not functor_iso(K, colim_in_presheaf(Phi, F)):
            out.append(f"case {k}: search and closed-form colimits disagree")
    return out


def universal_property_holds(Phi: Distributor, F: QFunctor, K: QFunctor) -> bool:
    """``C(K-, -) = [Phi, C(F-, -)]`` exactly."""
    return induced_right(K) == dist_lifting(Phi, induced_right(F))


def kan_counterexamples(seed: int, count: int) -> tuple[list[str], int]:
    """Kan extensions against the exhaustive least-functor search; returns (counterexamples, decided cases)."""
    out, decided = [], 0
    attempts = 0
    while decided < count and attempts < count * 20:
        attempts += 1
        rng = fx.rng_for("kan", seed, attempts)
        A, B, C = (fx.random_category(BOOL, rng.randint(1, 3), rng, name=n) for n in "ABC")
        F = fx.random_functor(A, B, rng)
        G = fx.random_functor(A, C, rng)
        if F is None or G is None:
            continue
        decided += 1
        least = oracles.least_extensions(F, G)
        try:
            K = kan_extension(F, G)
        except NotCocomplete:
            # a least functor need not be pointwise, so only the existing case is compared
            continue
        if not universal_property_holds(induced_right(G), F, K):
            out.append(f"case {attempts}: Kan extension fails its universal property")
        if not functor_leq(F, compose_functors(K, G)):
            out.append(f"case {attempts}: F <= K o G fails")
        if not least or not any(functor_iso(K, L) for L in least):
            out.append(f"case {attempts}: Kan extension is not the least functor found by search")
    return out, decided


def free_doctrine_counterexamples(A: QCategory, budget: int = 20_000) -> list[str]:
    """Monad laws and the KZ inequation for presheaf cocompletion on ``A``."""
    out = []
    PA = presheaf_category(A, budget)
    PPA = presheaf_category(PA, budget)
    M = free_mult(A, budget)
    YA = yoneda(A, PA)
    YPA = yoneda(PA, PPA)
    PY = free_functor(YA, PA, PPA)
    if not functor_iso(compose_functors(M, YPA), identity_functor(PA)):
        out.append("M o Y_P(A) is not the identity")
    if not functor_iso(compose_functors(M, PY), identity_functor(PA)):
        out.append("M o P(Y_A) is not the identity")
    PPPA = presheaf_category(PPA, budget)
    MP = free_mult(PA, budget)
    PM = free_functor(M, PPPA, PPA)
    if not functor_iso(compose_functors(M, MP), compose_functors(M, PM)):
        out.append("M o M_P(A) differs from M o P(M)")
    if not functor_leq(PY, YPA):
        out.append("KZ inequation P(Y_A) <= Y_P(A) fails")
    if not is_fully_faithful(YA):
        out.append("Yoneda embedding is not fully faithful")
    return out


def presheaf_suite(budget: int, seed: int) -> list[LawResult]:
    c = _Collector()
    cex = []
    for name, A in enumerable_fixtures(3):
        cex.extend(yoneda_counterexamples(A, enumerate_presheaves(A)))
    c.add("presheaf:yoneda", "enumerable |A|<=3", cex)
    c.add("presheaf:yoneda", "lawvere", yoneda_lawvere(seed, budget))
    c.add("presheaf:classification", f"random x{budget}", classification_counterexamples(seed, budget))
    c.add("presheaf:colimits", f"random x{min(budget, 60)}", colimit_counterexamples(seed, min(budget, 60)))
    kcex, _ = kan_counterexamples(seed, min(budget, 30))
    c.add("presheaf:kan-extension", "bool", kcex)
    for A in fx.all_preorders(1) + fx.all_preorders(2):
        c.add("presheaf:free-monad-kz", A.name, free_doctrine_counterexamples(A))
    return c.entries


# ---------------------------------------------------------------------------
# doctrines


def doctrine_fixtures() -> list[tuple[str, QCategory]]:
    return [(A.name, A) for A in fx.all_preorders(1) + fx.all_preorders(2)]


def extension_counterexamples(D: SubDoctrine, Phi: Distributor, Phi2: Distributor, Psi: Distributor
                              ) -> dict[str, list[str]]:
    """Normality, laxity, join preservation and the square with induced distributors."""
    out: dict[str, list[str]] = {"normal": [], "lax": [], "joins": [], "square": []}
    A, B = Phi.dom, Phi.cod
    for X in (A, B):
        if D.extend_to_dist(identity_dist(X)) != identity_dist(D.obj(X)):
            out["normal"].append(f"extension of the identity on {X.name} is not the identity")
    lhs = dist_compose(D.extend_to_dist(Psi), D.extend_to_dist(Phi))
    if not dist_leq(lhs, D.extend_to_dist(dist_compose(Psi, Phi))):
        out["lax"].append("extend(Psi) (x) extend(Phi) <= extend(Psi (x) Phi) fails")
    joined = D.extend_to_dist(dist_join([Phi, Phi2]))
    if joined != dist_join([D.extend_to_dist(Phi), D.extend_to_dist(Phi2)]):
        bad = next((k for k, v in joined.matrix.items()
                    if v != dist_join([D.extend_to_dist(Phi), D.extend_to_dist(Phi2)]).matrix[k]), None)
        out["joins"].append(f"binary join not preserved at ({object_key(bad[0])},{object_key(bad[1])})")
    if D.extend_to_dist(dist_join([], A, B)) != dist_join([], D.obj(A), D.obj(B)):
        out["joins"].append("empty join not preserved")
    return out


def square_counterexamples(D: SubDoctrine, F: QFunctor) -> list[str]:
    if D.extend_to_dist(induced_left(F)) != induced_left(D.functor(F)):
        return [f"extend(F_*) differs from C(F)_* for {F.dom.name} -> {F.cod.name}"]
    return []


def naturality_counterexamples(D: SubDoctrine, F: QFunctor) -> list[str]:
    """``P(F) o J_A = J_B o C(F)`` objectwise."""
    JA = D.slice(F.dom).embedding()
    JB = D.slice(F.cod).embedding()
    PF = free_functor(F, JA.cod, JB.cod)
    CF = D.functor(F)
    for t in D.obj(F.dom).objects:
        if PF(JA(t)) != JB(CF(t)):
            return [f"naturality of J fails at {t.key()}"]
    return []


def doctrine_suite(budget: int, seed: int) -> list[LawResult]:
    c = _Collector()
    entries = []
    for cls in (REPRESENTABLE, CONICAL, CAUCHY, ALL):
        entries.extend(doctrine_laws(SubDoctrine(cls), doctrine_fixtures()))
    two = fx.two_point_space()
    line = fx.line_space([0, 1, 4])
    for cls in (REPRESENTABLE, CONICAL):
        entries.extend(r for r in doctrine_laws(SubDoctrine(cls), [("lawvere-two", two), ("lawvere-line", line)])
                       if r.status != "skip")
    c.entries.extend(entries)
    fixtures_sat = sat_fixtures(seed)
    for cls in (CONICAL, CAUCHY, REPRESENTABLE):
        rep = saturation_check(cls, fixtures_sat, budget=budget, seed=seed)
        c.add("doctrine:saturation", cls.name, rep["counterexamples"])
    for cls in (CONICAL, ALL):
        D = SubDoctrine(cls)
        buckets = {"normal": [], "lax": [], "joins": [], "square": [], "naturality": [], "cotabulation": []}
        for k in range(budget):
            rng = fx.rng_for("extend", cls.name, seed, k)
            Q = [BOOL, chain(3)][k % 2]
            A, B, C = (fx.random_category(Q, rng.randint(1, 2), rng, name=n) for n in "ABC")
            Phi, Phi2 = fx.random_distributor(A, B, rng, "Phi"), fx.random_distributor(A, B, rng, "Phi2")
            Psi = fx.random_distributor(B, C, rng, "Psi")
            for key, v in extension_counterexamples(D, Phi, Phi2, Psi).items():
                buckets[key].extend(f"#{k}: {m}" for m in v)
            F = fx.random_functor(A, B, rng)
            if F is not None:
                buckets["square"].extend(f"#{k}: {m}" for m in square_counterexamples(D, F))
                buckets["naturality"].extend(f"#{k}: {m}" for m in naturality_counterexamples(D, F))
            if dist_in_class(Phi, cls):
                if not cotabulation_holds(D, Phi):
                    buckets["cotabulation"].append(f"#{k}: cotabulation identity fails")
        for key, v in buckets.items():
            c.add(f"doctrine:extension-{key}", cls.name, v)
    return c.entries


def sat_fixtures(seed: int) -> list[tuple[str, QCategory]]:
    out = [(A.name, A) for A in fx.all_preorders(1) + fx.all_preorders(2)]
    rng = fx.rng_for("saturation-fixtures", seed)
    out.extend((f"bool-cat3.{k}", fx.random_category(BOOL, 3, rng, name=f"bool-cat3.{k}")) for k in range(3))
    out.extend((f"chain3-cat{k}", fx.random_category(chain(3), 1 + k % 3, rng, name=f"chain3-cat{k}"))
               for k in range(4))
    out.extend((f"metric{k}", fx.random_metric_space(rng, 1 + k % 3, name=f"metric{k}")) for k in range(4))
    out.append(("lawvere-two", fx.two_point_space()))
    return out


# ---------------------------------------------------------------------------
# Hausdorff


def hausdorff_three_way(A: QCategory) -> list[str]:
    """``presheaf_hom`` = closed form = extension of the identity, on every pair of subsets."""
    out = []
    H = hausdorff_category(A)
    ext = HAUSDORFF.extend_to_dist(identity_dist(A))
    gen = {}
    for X in A.Q.objects:
        for S in _subsets(A.objects_of_type(X)):
            gen[X, S] = conical_from_subset(subset(A, S, X)).underlying
    for (X2, S2), (X, S) in product(gen, repeat=2):
        p2, p = gen[X2, S2], gen[X, S]
        a = presheaf_hom(p2, p)
        b = closed_form_hom(A, S2, X2, S, X)
        c = ext(H.member(p2), H.member(p))
        if not (a == b == c):
            out.append(f"{A.name}: {list(S2)} -> {list(S)}: hom {a}, closed form {b}, extension {c}")
    return out


def _subsets(objs) -> list[tuple]:
    return [S for r in range(len(objs) + 1) for S in combinations(objs, r)]


def conical_brute_counterexamples(A: QCategory, presheaves) -> list[str]:
    out = []
    for phi in presheaves:
        if is_conical(phi) != (oracles.conical_witness(phi) is not None):
            out.append(f"{A.name}: is_conical disagrees with subset search at {phi.key()}")
    return out


def cauchy_brute_counterexamples(A: QCategory) -> list[str]:
    out = []
    for phi in enumerate_presheaves(A):
        if is_cauchy(phi) != (oracles.presheaf_right_adjoint(phi) is not None):
            out.append(f"{A.name}: is_cauchy disagrees with adjoint search at {phi.key()}")
    return out


def metric_profile_counterexamples(A: QCategory) -> list[str]:
    out = []
    for x, y in product(A.objects, repeat=2):
        if directed_hausdorff(subset(A, [x]), subset(A, [y])) != A.hom(x, y):
            out.append(f"{A.name}: delta({{{x}}},{{{y}}}) differs from d({x},{y})")
    for S in _subsets(A.objects):
        if directed_hausdorff(subset(A, S, "*"), subset(A, S, "*")) != 0:
            out.append(f"{A.name}: delta(S,S) is not 0 for {list(S)}")
    for S3, S2, S in product(_subsets(A.objects)[1:], repeat=3):
        d31 = directed_hausdorff(subset(A, S3), subset(A, S))
        bound = LAWVERE.comp("*", "*", "*", directed_hausdorff(subset(A, S3), subset(A, S2)),
                             directed_hausdorff(subset(A, S2), subset(A, S)))
        if not d31 <= bound:
            out.append(f"{A.name}: triangle fails at {list(S3)},{list(S2)},{list(S)}")
    return out


def sup_colimit_counterexamples(A: QCategory) -> list[str]:
    """Sups with matching homs exist iff the constant-weight colimit over the free category does."""
    out = []
    for X in A.Q.objects:
        objs = A.objects_of_type(X)
        for S in _subsets(objs):
            by_order = conical_colimit_by_order(A, S, X)
            by_weight = conical_colimit_by_weight(A, S, X)
            if (by_order is None) != (by_weight is None):
                out.append(f"{A.name}: conditions disagree on {list(S)}")
            elif by_order is not None and not oracles.is_equivalent_to_some(A, by_order, [by_weight]):
                out.append(f"{A.name}: colimits of {list(S)} are not isomorphic")
    return out


def hprime_counterexamples(Phi: Distributor) -> list[str]:
    if hausdorff_on_dist(Phi) != HAUSDORFF.extend_to_dist(Phi):
        return [f"closed form of H'({Phi.name}) differs from the extension"]
    return []


def functor_action_counterexamples(F: QFunctor) -> list[str]:
    out = []
    HF = hausdorff_on_functor(F)
    HA = hausdorff_category(F.dom)
    for phi in HA.objects:
        img = hausdorff_image(F, subset(F.dom, generators(phi), phi.q_type)).underlying
        if HF(phi) != img:
            out.append(f"H(F) at {phi.key()} differs from the image of its generators")
    return out


def hausdorff_fixtures(seed: int, count: int) -> list[QCategory]:
    out = [fx.line_space([0, 1, 4]), fx.two_point_space()]
    for k in range(count):
        rng = fx.rng_for("hausdorff-space", seed, k)
        out.append(fx.random_metric_space(rng, rng.randint(1, 6), symmetric=k % 2 == 0,
                                          allow_inf=k % 3 == 0, name=f"space{k}"))
    return out


def hausdorff_suite(budget: int, seed: int) -> list[LawResult]:
    c = _Collector()
    spaces = hausdorff_fixtures(seed, min(budget, 12))
    bool_small = [A for n in range(1, 4) for A in fx.all_preorders(n)]
    c.add("hausdorff:three-way", "lawvere", [m for A in spaces for m in hausdorff_three_way(A)])
    c.add("hausdorff:three-way", "bool |A|<=3", [m for A in bool_small for m in hausdorff_three_way(A)])
    c.add("hausdorff:metric-profile", "lawvere", [m for A in spaces if len(A) <= 4
                                                   for m in metric_profile_counterexamples(A)])
    line = fx.line_space([0, 1, 4])
    got = (directed_hausdorff(subset(line, ["0", "1"]), subset(line, ["4"])),
           directed_hausdorff(subset(line, ["4"]), subset(line, ["0", "1"])))
    c.add("hausdorff:line-example", "line{0,1,4}", [] if got == (4, 3) else [f"got {got}"])
    two = fx.two_point_space()
    half = Presheaf(two, "*", (Fraction(1, 2), Fraction(1, 2)))
    c.add("hausdorff:conical-negative", "lawvere-two", [] if not is_conical(half) else ["(1/2,1/2) judged conical"])
    c.add("hausdorff:conical-brute", "bool |A|<=3",
          [m for A in bool_small for m in conical_brute_counterexamples(A, enumerate_presheaves(A))])
    c.add("hausdorff:cauchy-brute", "bool |A|<=3", [m for A in bool_small for m in cauchy_brute_counterexamples(A)])
    cex = []
    for A in bool_small:
        CA, inc = cauchy_completion(A)
        if not is_equivalence(inc):
            cex.append(f"{A.name}: Cauchy completion inclusion is not an equivalence")
    c.add("hausdorff:cauchy-completion", "bool |A|<=3", cex)
    c.add("hausdorff:sup-as-weighted-colimit", "bool |A|<=3", [m for A in bool_small for m in sup_colimit_counterexamples(A)])
    hp, fa = [], []
    for k in range(budget):
        rng = fx.rng_for("hprime", seed, k)
        if k % 2:
            A = fx.random_metric_space(rng, rng.randint(1, 3), symmetric=False, name="A")
            B = fx.random_metric_space(rng, rng.randint(1, 3), symmetric=False, name="B")
        else:
            A, B = fx.random_category(BOOL, rng.randint(1, 3), rng, "A"), fx.random_category(BOOL, rng.randint(1, 3), rng, "B")
        hp.extend(f"#{k}: {m}" for m in hprime_counterexamples(fx.random_distributor(A, B, rng)))
        F = fx.random_functor(A, B, rng)
        if F is not None:
            fa.extend(f"#{k}: {m}" for m in functor_action_counterexamples(F))
    c.add("hausdorff:hprime-closed-form", f"random x{budget}", hp)
    c.add("hausdorff:functor-action", f"random x{budget}", fa)
    return c.entries


# ---------------------------------------------------------------------------


RUNNERS: dict[str, Callable[[int, int], list[LawResult]]] = {
    "lattice": lattice_suite,
    "quantaloid": quantaloid_suite,
    "dist": dist_suite,
    "presheaf": presheaf_suite,
    "doctrine": doctrine_suite,
    "hausdorff": hausdorff_suite,
}


def run_suite(suite: str, budget: int, seed: int) -> LawReport:
    names = SUITES if suite == "all" else (suite,)
    report = LawReport(suite, seed, budget)
    for name in names:
        report.entries.extend(RUNNERS[name](budget, seed))
    report.entries.sort(key=lambda e: (e.law, e.fixture))
    return report
