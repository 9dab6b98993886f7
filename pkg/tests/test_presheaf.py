from fractions import Fraction

import pytest

from quantcat import fixtures as fx
from quantcat.presheaf import (
    BaseMismatch,
    BudgetExceeded,
    InvalidPresheaf,
    NotCocomplete,
    Presheaf,
    bottom_presheaf,
    classify,
    colim,
    declassify,
    enumerate_presheaves,
    free_mult,
    is_cocomplete,
    kan_extension,
    presheaf_category,
    presheaf_hom,
    representable,
    yoneda,
)
from quantcat.qcat import (
    QFunctor,
    compose_functors,
    dist_lifting,
    functor_leq,
    induced_right,
    is_fully_faithful,
    map_matrix,
    singleton,
)
from quantcat.quantaloid import BOOL, NotEnumerable, chain


def test_presheaf_counts():
    assert len(enumerate_presheaves(singleton(BOOL, "*"))) == 2
    assert len(enumerate_presheaves(fx.chain_preorder(2))) == 3
    assert len(enumerate_presheaves(fx.discrete_preorder(2))) == 4
    assert len(enumerate_presheaves(fx.chain_preorder(3))) == 4
    # downsets of a 4-element antichain
    assert len(enumerate_presheaves(fx.discrete_preorder(4))) == 16


def test_presheaves_on_chain_are_downsets():
    keys = [p.key() for p in enumerate_presheaves(fx.chain_preorder(2))]
    assert keys == ["*:false,false", "*:true,false", "*:true,true"]


def test_lawvere_presheaf_hom():
    two = fx.two_point_space()
    p = Presheaf(two, "*", (Fraction(0), Fraction(1)))
    q = Presheaf(two, "*", (Fraction(1), Fraction(0)))
    assert presheaf_hom(p, q) == 1
    assert presheaf_hom(p, p) == 0
    assert presheaf_hom(representable(two, "p"), q) == q("p")


def test_action_axiom_enforced():
    two = fx.two_point_space()
    with pytest.raises(InvalidPresheaf):
        # values 0 and 5 are more than d(p, q) = 1 apart
        Presheaf(two, "*", (Fraction(0), Fraction(5)), check=True)


def test_budget_and_enumerability():
    with pytest.raises(BudgetExceeded):
        enumerate_presheaves(fx.discrete_preorder(4), budget=10)
    with pytest.raises(NotEnumerable):
        enumerate_presheaves(fx.two_point_space())


def test_base_mismatch():
    a = representable(fx.chain_preorder(2), "x0")
    b = representable(fx.discrete_preorder(2), "x0")
    with pytest.raises(BaseMismatch):
        presheaf_hom(a, b)


def test_yoneda_fully_faithful():
    for A in fx.all_preorders(3):
        assert is_fully_faithful(yoneda(A))


def test_classify_round_trip():
    rng = fx.rng_for("presheaf-unit", 0)
    A, B = fx.random_category(chain(3), 2, rng, "A"), fx.random_category(chain(3), 3, rng, "B")
    Phi = fx.random_distributor(B, A, rng)
    assert declassify(classify(Phi)) == Phi


def test_colimit_in_a_chain_is_a_join():
    # conical weight on a discrete 2-object diagram into the 3-chain: the join of the two images
    C = fx.chain_preorder(3)
    D = fx.discrete_preorder(2)
    F = QFunctor(D, C, {"x0": "x0", "x1": "x1"})
    one = singleton(BOOL, "*")
    Phi = map_matrix(one, D, lambda d, s: "true")
    K = colim(Phi, F)
    assert K("*") == "x1"
    assert induced_right(K) == dist_lifting(Phi, induced_right(F))


def test_missing_colimit():
    D = fx.discrete_preorder(2)
    F = QFunctor(D, D, {"x0": "x0", "x1": "x1"})
    Phi = map_matrix(singleton(BOOL, "*"), D, lambda d, s: "true")
    with pytest.raises(NotCocomplete):
        colim(Phi, F)
    assert not is_cocomplete(D)
    assert is_cocomplete(fx.chain_preorder(3))


def test_kan_extension_is_least():
    A = fx.discrete_preorder(1)
    B = fx.chain_preorder(3)
    C = fx.chain_preorder(2)
    F = QFunctor(A, B, {"x0": "x1"})
    G = QFunctor(A, C, {"x0": "x1"})
    K = kan_extension(F, G)
    # nothing is forced below x1, so the least extension sends x0 to the bottom
    assert K("x0") == "x0" and K("x1") == "x1"
    assert functor_leq(F, compose_functors(K, G))


def test_multiplication_is_left_inverse_of_unit():
    A = fx.chain_preorder(2)
    P = presheaf_category(A)
    M = free_mult(A)
    YP = yoneda(P)
    for phi in P.objects:
        assert M(YP(phi)) == phi


def test_bottom_presheaf():
    A = fx.chain_preorder(2)
    assert bottom_presheaf(A, "*").values == ("false", "false")
