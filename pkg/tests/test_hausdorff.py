from fractions import Fraction
from itertools import product

import pytest

from quantcat import fixtures as fx
from quantcat import laws, oracles
from quantcat.hausdorff import (
    HAUSDORFF,
    cauchy_completion,
    conical_certificate,
    conical_from_subset,
    conical_presheaves,
    directed_hausdorff,
    free_qcategory_on_poset,
    generators,
    hausdorff_category,
    hausdorff_index,
    hausdorff_on_dist,
    hausdorff_on_functor,
    is_cauchy,
    is_conical,
    subset,
    symmetrized_hausdorff,
)
from quantcat.presheaf import Presheaf, bottom_presheaf, enumerate_presheaves, representable
from quantcat.qcat import (
    QFunctor,
    identity_dist,
    identity_functor,
    induced_left,
    is_equivalence,
    is_fully_faithful,
    singleton,
)
from quantcat.quantaloid import BOOL, INF, QuantaloidError, TypeMismatch

LINE = fx.line_space([0, 1, 4])
TWO = fx.two_point_space()


def test_conical_from_subset_on_line():
    phi = conical_from_subset(subset(LINE, ["0", "4"]))
    assert phi.underlying.values == (0, 1, 0)
    assert phi.generators == ("0", "4")
    assert conical_from_subset(subset(LINE, [])).underlying == bottom_presheaf(LINE, "*")
    assert conical_from_subset(subset(LINE, ["1"])).underlying == representable(LINE, "1")


def test_downsets_are_conical():
    A = fx.chain_preorder(3)
    for S in [("x0",), ("x0", "x2"), ()]:
        phi = conical_from_subset(subset(A, S, "*")).underlying
        top = max((int(a[1]) for a in S), default=-1)
        assert phi.values == tuple("true" if i <= top else "false" for i in range(3))
    assert all(is_conical(p) for p in enumerate_presheaves(fx.discrete_preorder(3)))


def test_half_half_is_not_conical():
    half = Presheaf(TWO, "*", (Fraction(1, 2), Fraction(1, 2)))
    assert not is_conical(half)
    assert conical_certificate(half) is None
    assert generators(half) == ()
    assert oracles.conical_witness(half) is None


def test_hausdorff_category_sizes():
    assert len(hausdorff_category(fx.chain_preorder(2))) == 3
    assert len(hausdorff_category(singleton(BOOL, "*"))) == 2
    H = hausdorff_category(TWO)
    assert len(H) == 4
    keys = sorted(p.key() for p in H.objects)
    assert keys == ["*:0/1,0/1", "*:0/1,1/1", "*:1/1,0/1", "*:inf,inf"]
    assert len(conical_presheaves(LINE)) == len(hausdorff_category(LINE)) == 8


def test_hausdorff_index_lists_maximal_generators():
    idx = hausdorff_index(fx.chain_preorder(2))
    assert sorted(idx.values()) == [(), ("x0",), ("x0", "x1")]


def test_directed_values_on_line():
    assert directed_hausdorff(subset(LINE, ["0", "1"]), subset(LINE, ["4"])) == 4
    assert directed_hausdorff(subset(LINE, ["4"]), subset(LINE, ["0", "1"])) == 3
    assert symmetrized_hausdorff(subset(LINE, ["0", "1"]), subset(LINE, ["4"])) == 4
    assert directed_hausdorff(subset(LINE, [], "*"), subset(LINE, ["4"])) == 0
    assert directed_hausdorff(subset(LINE, ["4"]), subset(LINE, [], "*")) is INF


def test_directed_matches_presheaf_hom():
    for S2, S in product([("0",), ("0", "1"), ("1", "4"), ("0", "1", "4")], repeat=2):
        p2 = conical_from_subset(subset(LINE, S2)).underlying
        p = conical_from_subset(subset(LINE, S)).underlying
        assert hausdorff_category(LINE).hom(p2, p) == directed_hausdorff(subset(LINE, S2), subset(LINE, S))


def test_symmetrized_only_for_distances():
    A = fx.chain_preorder(2)
    with pytest.raises(QuantaloidError):
        symmetrized_hausdorff(subset(A, ["x0"]), subset(A, ["x1"]))


def test_subset_type_checked():
    with pytest.raises(TypeMismatch):
        subset(LINE, ["0"], "other")


def test_hprime_identity_and_singletons():
    assert hausdorff_on_dist(identity_dist(LINE)) == identity_dist(hausdorff_category(LINE))
    rng = fx.rng_for("hausdorff-unit", 0)
    A = fx.random_metric_space(rng, 3, symmetric=False, name="A")
    B = fx.random_metric_space(rng, 2, symmetric=False, name="B")
    Phi = fx.random_distributor(A, B, rng)
    E = hausdorff_on_dist(Phi)
    for b, a in product(B.objects, A.objects):
        t = conical_from_subset(subset(B, [b])).underlying
        s = conical_from_subset(subset(A, [a])).underlying
        assert E(t, s) == Phi(b, a)
    assert E == HAUSDORFF.extend_to_dist(Phi)


def test_functor_action():
    assert hausdorff_on_functor(identity_functor(LINE)) == identity_functor(hausdorff_category(LINE))
    c = fx.chain_preorder(3)
    const = QFunctor(c, fx.chain_preorder(2), {a: "x1" for a in c.objects})
    HF = hausdorff_on_functor(const)
    image = representable(const.cod, "x1")
    for phi in hausdorff_category(c).objects:
        expect = bottom_presheaf(const.cod, "*") if phi == bottom_presheaf(c, "*") else image
        assert HF(phi) == expect
    assert HAUSDORFF.extend_to_dist(induced_left(const)) == induced_left(HF)


def test_cauchy_examples():
    A = fx.discrete_preorder(2)
    for a in A.objects:
        assert is_cauchy(representable(A, a))
    top = Presheaf(A, "*", ("true", "true"))
    assert not is_cauchy(top)
    assert oracles.presheaf_right_adjoint(top) is None
    assert not is_cauchy(bottom_presheaf(A, "*"))


def test_cauchy_completion_of_preorders_is_equivalent():
    for A in fx.all_preorders(3):
        CA, inc = cauchy_completion(A)
        assert is_equivalence(inc)
    CA, inc = cauchy_completion(singleton(BOOL, "*"))
    assert len(CA) == 1


def test_cauchy_completion_can_grow():
    # seeded fixture over a split table quantaloid with an extra Cauchy presheaf
    Q = fx.random_table_quantaloids(fx.rng_for("cc", 0), 10)[5]
    rng = fx.rng_for("cc", 9, 0)
    A = fx.random_category(Q, rng.randint(1, 2), rng, name="A")
    assert len(Q.objects) == 2
    CA, inc = cauchy_completion(A)
    assert len(CA) > len(A)
    assert is_fully_faithful(inc)
    assert not is_equivalence(inc)
    assert laws.cauchy_brute_counterexamples(A) == []


def test_free_category_on_poset():
    I = free_qcategory_on_poset(BOOL, "*", ["i", "j"], lambda i, j: i == j or (i, j) == ("i", "j"))
    assert I.hom("i", "j") == "true" and I.hom("j", "i") == "false"
    for A in fx.all_preorders(3):
        assert laws.sup_colimit_counterexamples(A) == []
