from fractions import Fraction
from itertools import product

import pytest

from quantcat import fixtures as fx
from quantcat import oracles
from quantcat.lattice import SupLattice
from quantcat.quantaloid import (
    BOOL,
    INF,
    LAWVERE,
    NotAdjoint,
    NotEnumerable,
    TableQuantaloid,
    TypeMismatch,
    arrow,
    builtin,
    chain,
    compose,
    extension,
    left_adjoint,
    lifting,
    right_adjoint,
    validate_quantaloid,
)


def L(v):
    return arrow(LAWVERE, "*", "*", v)


def test_lawvere_residuals():
    assert lifting(LAWVERE, L(Fraction(2)), L(Fraction(5))).value == 3
    assert extension(LAWVERE, L(Fraction(1)), L(Fraction(4))).value == 3
    assert lifting(LAWVERE, L(Fraction(5)), L(Fraction(2))).value == 0
    assert lifting(LAWVERE, L(INF), L(Fraction(2))).value == 0
    assert lifting(LAWVERE, L(Fraction(2)), L(INF)).value is INF
    assert compose(LAWVERE, L(Fraction(1, 2)), L(Fraction(1, 3))).value == Fraction(5, 6)
    assert compose(LAWVERE, L(INF), L(Fraction(0))).value is INF


def test_lawvere_order_is_reversed():
    assert LAWVERE.leq("*", "*", Fraction(5), Fraction(2))
    assert not LAWVERE.leq("*", "*", Fraction(2), Fraction(5))
    assert LAWVERE.join("*", "*", [Fraction(3), Fraction(1)]) == 1
    assert LAWVERE.meet("*", "*", [Fraction(3), Fraction(1)]) == 3
    assert LAWVERE.join("*", "*", []) is INF
    assert LAWVERE.meet("*", "*", []) == 0


def test_lawvere_residual_matches_breakpoint_search():
    vals = [Fraction(0), Fraction(1, 3), Fraction(1), Fraction(7, 2), INF]
    for g, h in product(vals, repeat=2):
        assert LAWVERE.lift("*", "*", "*", g, h) == oracles.lawvere_lifting(g, h)


def test_adjoints_in_lawvere():
    with pytest.raises(NotAdjoint):
        right_adjoint(LAWVERE, L(Fraction(1)))
    assert right_adjoint(LAWVERE, L(Fraction(0))).value == 0
    with pytest.raises(NotAdjoint):
        left_adjoint(LAWVERE, L(INF))


def test_bool_is_implication():
    for g, h in product(["false", "true"], repeat=2):
        expect = "true" if g == "false" or h == "true" else "false"
        assert BOOL.lift("*", "*", "*", g, h) == expect
        assert BOOL.ext("*", "*", "*", g, h) == expect


def test_residuals_agree_with_exhaustive_search():
    for Q in [BOOL, chain(3), chain(4)] + fx.random_table_quantaloids(fx.rng_for("q-unit", 0), 4):
        for a, b, c in product(Q.objects, repeat=3):
            for g, h in product(Q.elements(b, c), Q.elements(a, c)):
                assert Q.lift(a, b, c, g, h) == oracles.lifting(Q, a, b, c, g, h)
            for f, h in product(Q.elements(a, b), Q.elements(a, c)):
                assert Q.ext(a, b, c, f, h) == oracles.extension(Q, a, b, c, f, h)


def test_compose_checks_types():
    Q = fx.random_table_quantaloids(fx.rng_for("q-unit", 1), 1)[0]
    x, y = Q.objects[:2]
    f = arrow(Q, x, y, Q.bottom(x, y))
    with pytest.raises(TypeMismatch):
        compose(Q, f, f)


def test_broken_table_is_rejected():
    lat = SupLattice.chain(3)
    good = {(g, f): min(g, f) for g in lat.elements for f in lat.elements}
    Q = TableQuantaloid(["*"], {("*", "*"): lat}, {("*", "*", "*"): good}, {"*": "2"})
    assert validate_quantaloid(Q) == []
    bad = dict(good)
    bad["1", "1"] = "2"
    with pytest.raises(Exception):
        TableQuantaloid(["*"], {("*", "*"): lat}, {("*", "*", "*"): bad}, {"*": "2"})
    unchecked = TableQuantaloid(["*"], {("*", "*"): lat}, {("*", "*", "*"): bad}, {"*": "2"}, check=False)
    assert validate_quantaloid(unchecked)


def test_json_round_trip_and_builtins():
    for Q in fx.random_table_quantaloids(fx.rng_for("q-unit", 2), 3):
        assert TableQuantaloid.from_json(Q.to_json()) == Q
    assert builtin("bool") is BOOL
    assert builtin("lawvere") is LAWVERE
    assert builtin("chain:3") is chain(3)


def test_lawvere_is_not_enumerable():
    with pytest.raises(NotEnumerable):
        LAWVERE.elements("*", "*")
