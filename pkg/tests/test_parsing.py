import pytest

from burnside_beta import BurnsideElement
from burnside_beta.group_core import direct_product, symmetric_group, wreath_product
from burnside_beta.parsing import (ParseError, format_s2, parse_element, parse_group, parse_hom,
                                   parse_operator, parse_operator2)
from burnside_beta.rings import QI, ZI, Gaussian

S2, S3 = symmetric_group(2), symmetric_group(3)


@pytest.mark.parametrize("text,order", [("S3", 6), ("e", 1), ("C4", 4), ("S2xS3", 12), ("S2wrS2", 8),
                                        ("(S2xS2)", 4), ("perm(4): (0 1 2 3), (0 2)", 8)])
def test_group_specs(text, order):
    assert parse_group(text).order == order


def test_group_specs_use_cached_objects():
    assert parse_group("S2xS2") is direct_product(S2, S2)
    assert parse_group("S2wrS2") is wreath_product(2, S2)


@pytest.mark.parametrize("text", ["", "S", "T3", "S2x", "perm(3): (0 5)"])
def test_bad_group_specs(text):
    with pytest.raises(ParseError):
        parse_group(text)


def test_homs():
    assert parse_hom("sign", S3, S2).kernel().order == 3
    assert parse_hom("incl", S2, S3).is_injective()
    assert parse_hom("triv", S3, S2).kernel().order == 6
    V = direct_product(S2, S3)
    assert parse_hom("proj2", V, S3).is_surjective()


def test_elements():
    t = BurnsideElement.basis(S2.trivial_subgroup())
    one = BurnsideElement.one(S2)
    assert parse_element("2*t + 1", S2) == t.scale(2) + one
    assert parse_element("[H1_1] - [H2_1]", S2) == t - one
    assert parse_element("[S2/e]", S2) == t
    assert parse_element("3[G]", S3) == BurnsideElement.one(S3).scale(3)


def test_gaussian_elements():
    x = parse_element("(1-i)/2*t + i", S2)
    assert x.ring == QI
    y = parse_element("i*t - 1", S2)
    assert y.ring == ZI
    assert y == BurnsideElement.basis(S2.trivial_subgroup(), ZI).scale(Gaussian(0, 1)) - BurnsideElement.one(S2, ZI)
    assert format_s2(x * x) == "t - 1"


def test_operators():
    x = parse_operator("[S2/e] + [S3/S3]")
    assert sorted(x.keys()) == [2, 3]
    z = parse_operator2("[S1xS1/e]")
    assert z.degree == (1, 1)


def test_bad_elements():
    with pytest.raises(ParseError):
        parse_element("[H5_1]", S3)
    with pytest.raises(ParseError):
        parse_element("2**t", S2)
