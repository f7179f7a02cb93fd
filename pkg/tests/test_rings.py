from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from burnside_beta.config import NotIntegral
from burnside_beta.rings import QI, ZI, Gaussian, ZMod, ring_from_tag, ring_map

gauss = st.builds(Gaussian, st.integers(-50, 50), st.integers(-50, 50))


@given(gauss, gauss, gauss)
def test_gaussian_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a * b).norm() == a.norm() * b.norm()


def test_i_squared():
    i = Gaussian(0, 1)
    assert i * i == Gaussian(-1, 0)
    assert str(i) == "i" and str(-i) == "-i"


def test_parsing_and_coercion():
    assert ZI.parse("2-3i") == Gaussian(2, -3)
    assert QI.parse("1/2+1/2i") == Gaussian(Fraction(1, 2), Fraction(1, 2))
    with pytest.raises(NotIntegral):
        ZI.coerce(Gaussian(Fraction(1, 2), 0))
    assert ZMod(5).coerce(12) == 2


def test_tags_and_maps():
    assert ring_from_tag("Z/6") == ZMod(6)
    assert ring_map(ZMod(6), ZMod(3))(5) == 2
    with pytest.raises(ValueError):
        ring_map(ZMod(3), ZMod(6))
    with pytest.raises(ValueError):
        ring_from_tag("R")
