import pytest

from quantcat.lattice import ElementNotInLattice, LatticeError, SupLattice, join, meet, validate_lattice

DIAMOND = SupLattice.from_pairs(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])


def test_diamond_joins_and_meets():
    assert DIAMOND.join(["a", "b"]) == "1"
    assert DIAMOND.meet(["a", "b"]) == "0"
    assert DIAMOND.join([]) == "0"
    assert DIAMOND.meet([]) == "1"
    assert join(DIAMOND, ["0", "a"]) == "a"
    assert meet(DIAMOND, ["1", "b"]) == "b"
    assert (DIAMOND.bottom, DIAMOND.top) == ("0", "1")


def test_chain():
    L = SupLattice.chain(4)
    assert L.join(["1", "3"]) == "3"
    assert L.meet(["1", "3"]) == "1"
    assert len(L) == 4


def test_not_a_lattice_is_rejected():
    # two maximal elements and no top
    with pytest.raises(LatticeError):
        SupLattice.from_pairs(["0", "a", "b"], [("0", "a"), ("0", "b")])
    bad = SupLattice.from_pairs(["0", "a", "b"], [("0", "a"), ("0", "b")], check=False)
    assert validate_lattice(bad)


def test_unknown_element():
    with pytest.raises(ElementNotInLattice):
        DIAMOND.join(["a", "z"])
    assert "z" not in DIAMOND
    with pytest.raises(ElementNotInLattice):
        SupLattice(["a"], [("a", "b")])


def test_json_round_trip():
    assert SupLattice.from_json(DIAMOND.to_json()) == DIAMOND
