import pytest

from quantcat import fixtures as fx
from quantcat.doctrine import (
    NotInClass,
    SubDoctrine,
    WeightClass,
    cotabulation_holds,
    dist_in_class,
    doctrine_laws,
    saturation_check,
)
from quantcat.hausdorff import ALL, CONICAL, HAUSDORFF, REPRESENTABLE, hausdorff_on_dist
from quantcat.presheaf import presheaf_category, representable
from quantcat.qcat import dist_join, identity_dist, is_equivalence, map_matrix, singleton
from quantcat.quantaloid import BOOL

SMALL = [(A.name, A) for n in range(1, 3) for A in fx.all_preorders(n)]


def _reps_and_top(phi):
    A = phi.base
    return any(phi == representable(A, a) for a in A.objects) or all(v == "true" for v in phi.values)


BROKEN = WeightClass("reps-and-top", _reps_and_top)


def test_representable_class_is_the_identity_doctrine():
    D = SubDoctrine(REPRESENTABLE)
    assert all(r.status == "pass" for r in doctrine_laws(D, SMALL))
    for _, A in SMALL:
        assert is_equivalence(D.unit(A))


def test_all_class_rebuilds_presheaves():
    D = SubDoctrine(ALL)
    for _, A in SMALL:
        assert D.obj(A).objects == presheaf_category(A).objects


def test_conical_laws_pass():
    assert all(r.status == "pass" for r in doctrine_laws(HAUSDORFF, SMALL))


def test_broken_class_reports_named_failures():
    fixtures = SMALL + [(A.name, A) for A in fx.all_preorders(3)]
    failed = {r.law for r in doctrine_laws(SubDoctrine(BROKEN), fixtures) if r.status == "fail"}
    assert failed == {"reps-and-top:4-monad", "reps-and-top:5-kz"}
    rep = saturation_check(BROKEN, fixtures, budget=200, seed=1)
    assert rep["counterexamples"]


def test_conical_class_is_saturated_on_samples():
    rep = saturation_check(CONICAL, SMALL, budget=100, seed=3)
    assert rep["samples"] == 100
    assert rep["counterexamples"] == []


def test_extension_is_normal():
    for _, A in SMALL:
        assert HAUSDORFF.extend_to_dist(identity_dist(A)) == identity_dist(HAUSDORFF.obj(A))


def test_extension_does_not_preserve_joins():
    # two distributors from one point into a two-point antichain, each hitting one point
    A = singleton(BOOL, "*")
    B = fx.discrete_preorder(2)
    Phi1 = map_matrix(A, B, lambda b, a: "true" if b == "x0" else "false", name="Phi1")
    Phi2 = map_matrix(A, B, lambda b, a: "true" if b == "x1" else "false", name="Phi2")
    joined = HAUSDORFF.extend_to_dist(dist_join([Phi1, Phi2]))
    separate = dist_join([HAUSDORFF.extend_to_dist(Phi1), HAUSDORFF.extend_to_dist(Phi2)])
    assert joined != separate
    both = next(t for t in HAUSDORFF.obj(B).objects if t.values == ("true", "true"))
    point = next(s for s in HAUSDORFF.obj(A).objects if s.values == ("true",))
    assert joined(both, point) == "true"
    assert separate(both, point) == "false"
    # the empty join fails too: the bottom distributor still reaches the empty presheaf
    empty = dist_join([], A, B)
    assert HAUSDORFF.extend_to_dist(empty) != dist_join([], HAUSDORFF.obj(A), HAUSDORFF.obj(B))
    assert hausdorff_on_dist(dist_join([Phi1, Phi2])) == joined


def test_cotabulation_and_factorization():
    rng = fx.rng_for("doctrine-unit", 0)
    D = SubDoctrine(ALL)
    for _ in range(10):
        A, B = fx.random_category(BOOL, 2, rng, "A"), fx.random_category(BOOL, 2, rng, "B")
        Phi = fx.random_distributor(A, B, rng)
        assert dist_in_class(Phi, ALL)
        assert cotabulation_holds(D, Phi)


def test_factor_through_rejects_non_members():
    A = singleton(BOOL, "*")
    B = fx.discrete_preorder(2)
    Phi = map_matrix(A, B, lambda b, a: "true")
    assert not dist_in_class(Phi, REPRESENTABLE)
    with pytest.raises(NotInClass):
        SubDoctrine(REPRESENTABLE).factor_through(Phi)
