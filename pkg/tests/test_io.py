from decimal import Decimal
from fractions import Fraction

import pytest

from quantcat import fixtures as fx
from quantcat import io
from quantcat.qcat import InvalidCategory
from quantcat.quantaloid import INF, LAWVERE


def test_parse_distance_is_exact():
    assert io.parse_distance(3) == 3
    assert io.parse_distance("2/3") == Fraction(2, 3)
    assert io.parse_distance(Decimal("0.1")) == Fraction(1, 10)
    assert io.parse_distance("inf") is INF
    assert io.parse_json("[0.1]")[0] == Decimal("0.1")
    for bad in (-1, "x", True, None, "1/0"):
        with pytest.raises(io.ParseError):
            io.parse_distance(bad)


def test_render():
    assert io.render_distance(Fraction(4)) == "4/1"
    assert io.render_distance(INF) == "inf"


def test_metric_profiles():
    data = {"points": ["x", "y", "z"], "distances": [[0, 1, 10], [1, 0, 1], [10, 1, 0]]}
    with pytest.raises(io.TriangleViolation) as e:
        io.metric_space_from_json(data)
    assert "triangle inequality fails at (x,y,z)" in e.value.violations
    A = io.metric_space_from_json({**data, "profile": "generalized"})
    assert A.hom("x", "z") == 2
    one = io.metric_space_from_json({"points": ["p"], "distances": [[0]]})
    assert one.hom("p", "p") == 0
    with pytest.raises(io.ParseError):
        io.metric_space_from_json({"points": ["x", "y"], "distances": [[0, 1]]})
    with pytest.raises(io.ParseError):
        io.metric_space_from_json({**data, "profile": "other"})


def test_metric_from_decimals_is_exact():
    text = '{"points": ["a", "b"], "distances": [[0, 0.1], [0.2, 0]]}'
    A = io.category_from_json(io.parse_json(text))
    assert A.Q is LAWVERE
    assert A.hom("a", "b") == Fraction(1, 10)


def test_preorder_loading():
    chain = {"kind": "preorder", "elements": ["a", "b"], "leq": [["a", "a"], ["a", "b"], ["b", "b"]]}
    A = io.category_from_json(chain)
    assert A.hom("a", "b") == "true" and A.hom("b", "a") == "false"
    hole = {"kind": "preorder", "elements": ["a", "b", "c"],
            "leq": [["a", "a"], ["b", "b"], ["c", "c"], ["a", "b"], ["b", "c"], ["c", "a"]]}
    with pytest.raises(InvalidCategory):
        io.category_from_json(hole)
    closed = io.category_from_json({**hole, "close": True})
    assert all(closed.hom(x, y) == "true" for x in "abc" for y in "abc")


def test_round_trips():
    rng = fx.rng_for("io-unit", 0)
    for A in [fx.line_space([0, 1, 4]), fx.random_category(fx.chain_quantales(3)[0], 3, rng, "C")]:
        assert io.category_from_json(io.parse_json(io.dumps(io.category_to_json(A)))) == A
    A, B = fx.random_metric_space(rng, 2, name="A"), fx.random_metric_space(rng, 2, allow_inf=True, name="B")
    Phi = fx.random_distributor(A, B, rng)
    assert io.distributor_from_json(io.distributor_to_json(Phi)) == Phi
    phi = fx.random_presheaf(B, rng)
    assert io.presheaf_from_json(io.presheaf_to_json(phi)) == phi


def test_load_any_dispatch():
    assert io.load_any({"elements": ["0", "1"], "leq": [["0", "1"]]})[0] == "lattice"
    assert io.load_any({"points": ["p"], "distances": [[0]]})[0] == "metric"
    assert io.load_any({"kind": "preorder", "elements": ["a"], "leq": [["a", "a"]]})[0] == "category"
    Q = fx.random_table_quantaloids(fx.rng_for("io-unit", 1), 1)[0]
    kind, loaded = io.load_any(Q.to_json())
    assert kind == "quantaloid" and loaded == Q


def test_bad_json():
    with pytest.raises(io.ParseError):
        io.parse_json("{")
    with pytest.raises(io.ParseError):
        io.read_json("/nonexistent/file.json")
    with pytest.raises(io.ParseError):
        io.load_quantaloid("nope")
