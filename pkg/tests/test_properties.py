from fractions import Fraction
from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from quantcat import fixtures as fx
from quantcat import io
from quantcat.hausdorff import HAUSDORFF, conical_from_subset, directed_hausdorff, is_conical, subset
from quantcat.presheaf import presheaf_hom, presheaf_join, representable
from quantcat.qcat import dist_compose, dist_leq, dist_lifting, dist_extension, validate_category
from quantcat.quantaloid import INF, LAWVERE

fractions = st.fractions(min_value=0, max_value=20, max_denominator=12)
values = st.one_of(fractions, st.just(INF))
seeds = st.integers(min_value=0, max_value=10**6)

settings.register_profile("quantcat", max_examples=60, deadline=None)
settings.load_profile("quantcat")


def leq(u, v):
    return LAWVERE.leq("*", "*", u, v)


def comp(g, f):
    return LAWVERE.comp("*", "*", "*", g, f)


@given(values, values, values)
def test_lawvere_residuation(g, x, h):
    assert leq(comp(g, x), h) == leq(x, LAWVERE.lift("*", "*", "*", g, h))
    assert leq(comp(x, g), h) == leq(x, LAWVERE.ext("*", "*", "*", g, h))


@given(values, values, values)
def test_lawvere_composition_associative_and_join_preserving(f, g, h):
    assert comp(h, comp(g, f)) == comp(comp(h, g), f)
    assert comp(h, LAWVERE.join("*", "*", [f, g])) == LAWVERE.join("*", "*", [comp(h, f), comp(h, g)])


@given(seeds)
def test_random_metric_spaces_are_categories(seed):
    rng = fx.rng_for("prop-metric", seed)
    A = fx.random_metric_space(rng, rng.randint(1, 5), symmetric=rng.random() < 0.5, allow_inf=True)
    assert validate_category(A) == []


@given(seeds)
def test_distributor_residuation(seed):
    rng = fx.rng_for("prop-dist", seed)
    A, B, C = (fx.random_metric_space(rng, rng.randint(1, 3), symmetric=False, name=n) for n in "ABC")
    Phi = fx.random_distributor(A, B, rng)
    Psi = fx.random_distributor(B, C, rng)
    Theta = fx.random_distributor(A, C, rng)
    assert dist_leq(dist_compose(Psi, dist_lifting(Psi, Theta)), Theta)
    assert dist_leq(dist_compose(dist_extension(Phi, Theta), Phi), Theta)
    assert dist_leq(Phi, dist_lifting(Psi, dist_compose(Psi, Phi)))


@given(seeds)
def test_yoneda_on_distances(seed):
    rng = fx.rng_for("prop-yoneda", seed)
    A = fx.random_metric_space(rng, rng.randint(1, 4), symmetric=False, allow_inf=True)
    phi = fx.random_presheaf(A, rng)
    for a in A.objects:
        assert presheaf_hom(representable(A, a), phi) == phi(a)


@st.composite
def space_and_subsets(draw):
    rng = fx.rng_for("prop-space", draw(seeds))
    A = fx.random_metric_space(rng, draw(st.integers(1, 5)), symmetric=draw(st.booleans()))
    pick = st.lists(st.sampled_from(A.objects), unique=True, min_size=1)
    return A, draw(pick), draw(pick), draw(pick)


@given(space_and_subsets())
def test_directed_distance_is_sup_inf(case):
    A, S2, S, _ = case
    expect = max(min(A.hom(a2, a) for a in S) for a2 in S2)
    assert directed_hausdorff(subset(A, S2), subset(A, S)) == expect


@given(space_and_subsets())
def test_directed_distance_triangle(case):
    A, S3, S2, S = case
    d = lambda X, Y: directed_hausdorff(subset(A, X), subset(A, Y))
    assert d(S3, S) <= comp(d(S3, S2), d(S2, S))


@given(space_and_subsets())
def test_conical_values_are_pointwise_min(case):
    A, S, T, _ = case
    phi = conical_from_subset(subset(A, S)).underlying
    assert all(phi(x) == min(A.hom(x, a) for a in S) for x in A.objects)
    joined = presheaf_join(A, "*", [phi, conical_from_subset(subset(A, T)).underlying])
    assert is_conical(joined)
    assert joined == conical_from_subset(subset(A, list(S) + [t for t in T if t not in S])).underlying


@given(seeds)
def test_hprime_is_lax(seed):
    rng = fx.rng_for("prop-lax", seed)
    A, B, C = (fx.random_metric_space(rng, rng.randint(1, 3), symmetric=False, name=n) for n in "ABC")
    Phi, Psi = fx.random_distributor(A, B, rng), fx.random_distributor(B, C, rng)
    E = HAUSDORFF.extend_to_dist
    assert dist_leq(dist_compose(E(Psi), E(Phi)), E(dist_compose(Psi, Phi)))


@given(st.lists(st.lists(values, min_size=3, max_size=3), min_size=3, max_size=3))
def test_generalized_metric_loads_and_round_trips(rows):
    data = {"points": ["a", "b", "c"], "profile": "generalized",
            "distances": [[io.render_distance(v) for v in r] for r in rows]}
    A = io.metric_space_from_json(data)
    assert validate_category(A) == []
    assert all(A.hom(x, x) == 0 for x in A.objects)
    for x, y in product(A.objects, repeat=2):
        assert leq(rows["abc".index(x)]["abc".index(y)], A.hom(x, y))
    assert io.category_from_json(io.parse_json(io.dumps(io.category_to_json(A)))) == A


@given(fractions)
def test_distance_render_parse(v):
    assert io.parse_distance(io.render_distance(v)) == v
    assert isinstance(io.parse_distance(io.render_distance(v)), Fraction)
