from fractions import Fraction

import pytest

from cherednik import characters as C
from cherednik import serialize as S
from cherednik.dunkl import SparsePolynomial


def test_fraction_roundtrip():
    for x in (Fraction(3, 4), Fraction(-5), Fraction(0), Fraction(22, 7)):
        assert S.parse_fraction(S.fraction_str(x)) == x
    assert S.fraction_str(Fraction(4, 8)) == "1/2"
    assert S.fraction_str(Fraction(5, 1)) == "5"


def test_parse_fraction_rejects_garbage():
    with pytest.raises(ValueError):
        S.parse_fraction("a/b")
    with pytest.raises(ValueError):
        S.parse_fraction("1/0")


def test_parse_partition():
    assert S.parse_partition("3,1") == (3, 1)
    assert S.parse_partition("") == ()
    assert S.parse_partition(" 4 , 2 ") == (4, 2)
    with pytest.raises(ValueError):
        S.parse_partition("1,2")
    with pytest.raises(ValueError):
        S.parse_partition("x")


def test_partition_encodings():
    assert S.partition_key((3, 1)) == "[3,1]"
    assert S.partition_key(()) == "[]"
    assert S.partition_json((2, 2)) == [2, 2]


def test_character_vector_json_order():
    cv = {(1, 1, 1): 2, (3,): 1, (2, 1): 4}
    encoded = S.character_vector_json(cv)
    assert list(encoded) == ["[3]", "[2,1]", "[1,1,1]"]
    assert encoded["[2,1]"] == 4


def test_graded_character_json():
    gc = C.ch_verma((2,), Fraction(1, 2), 1)
    encoded = S.graded_character_json(gc)
    assert encoded["base_weight"] == "-1/2"
    assert encoded["layers"]["0"] == {"[2]": 1}
    assert encoded["layers"]["1"] == {"[2]": 1, "[1,1]": 1}


def test_poly_json():
    f = SparsePolynomial(2, {(1, 0): Fraction(1), (0, 1): Fraction(-1, 3)})
    assert S.poly_json(f) == [
        {"exponents": [1, 0], "coeff": "1"},
        {"exponents": [0, 1], "coeff": "-1/3"},
    ]
