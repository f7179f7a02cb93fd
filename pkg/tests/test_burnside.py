import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnside_beta import BurnsideElement, decompose, from_marks, subgroup_classes
from burnside_beta.burnside import basis_elements, extend_coefficients, mul, mul_via_sets, subgroup_for_label
from burnside_beta.config import NotIntegral
from burnside_beta.group_core import cyclic_group, direct_product, symmetric_group
from burnside_beta.gset import cosets
from burnside_beta.parsing import parse_group
from burnside_beta.rings import ZI, Gaussian, ZMod

S2, S3, S4 = (symmetric_group(m) for m in (2, 3, 4))


@pytest.mark.parametrize("spec,count", [("S1", 1), ("S2", 2), ("S3", 4), ("S4", 11), ("S5", 19),
                                        ("C6", 4), ("S2xS2", 5), ("perm(4): (0 1 2 3), (0 2)", 8)])
def test_class_counts(spec, count):
    assert len(subgroup_classes(parse_group(spec))) == count


def _brute_mark(G, K, H):
    """|(G/H)^K| by testing every coset gH for k g H = g H."""
    n = 0
    for coset in {frozenset(G.mul(g, int(h)) for h in H.members) for g in range(G.order)}:
        g = next(iter(coset))
        if all(G.mul(int(k), g) in coset for k in K.members):
            n += 1
    return n


@pytest.mark.parametrize("G", [S3, S4, direct_product(S2, S2)], ids=str)
def test_marks_match_brute_force(G):
    tab = subgroup_classes(G)
    reps = tab.class_reps
    for i, j in itertools.product(range(len(reps)), repeat=2):
        assert tab.marks[i][j] == _brute_mark(G, reps[i], reps[j])


def test_marks_are_upper_triangular_and_label_order():
    tab = subgroup_classes(S4)
    n = len(tab)
    assert all(tab.marks[i][j] == 0 for i in range(n) for j in range(i))
    orders = [S.order for S in tab.class_reps]
    assert orders == sorted(orders)
    assert [lab for lab, _, _ in tab.legend()][:2] == ["H1_1", "H2_1"]
    assert subgroup_for_label(S4, "H24_1").order == 24


def test_s3_multiplication_table():
    e, c2, c3, s3 = basis_elements(S3)
    assert e * e == e.scale(6)
    assert c2 * c2 == c2 + e
    assert c3 * c3 == c3.scale(2)
    assert c2 * c3 == e
    assert s3 * c2 == c2


@pytest.mark.parametrize("G", [S2, S3, S4, direct_product(S2, S2)], ids=str)
def test_double_coset_product_matches_sets(G):
    basis = basis_elements(G)
    for x, y in itertools.product(basis, repeat=2):
        assert mul(x, y) == mul_via_sets(x, y)


def test_from_marks_round_trip():
    x = BurnsideElement.basis(S4.subgroup([1])).scale(3) - BurnsideElement.basis(S4.trivial_subgroup())
    assert from_marks(S4, x.marks()) == x
    with pytest.raises(NotIntegral):
        from_marks(S2, [1, 0])


def test_decompose_cosets():
    H = S3.subgroup([1])
    assert decompose(cosets(S3, H)) == BurnsideElement.basis(H)
    assert BurnsideElement.basis(H).cardinality() == 3


def test_coefficient_rings():
    t = BurnsideElement.basis(S2.trivial_subgroup(), ZI)
    one = BurnsideElement.one(S2, ZI)
    i = Gaussian(0, 1)
    x = t.scale(i) + one
    # (it + 1)^2 = -t^2 + 2it + 1 = (2i - 2)t + 1
    assert x * x == t.scale(Gaussian(-2, 2)) + one
    y = extend_coefficients(BurnsideElement.basis(S2.trivial_subgroup()).scale(5), ZMod(5))
    assert not y


coefficients = st.lists(st.integers(-6, 6), min_size=4, max_size=4)


def _elem(cs):
    return sum((b.scale(c) for b, c in zip(basis_elements(S3), cs)), BurnsideElement.zero(S3))


@settings(max_examples=60, deadline=None)
@given(coefficients, coefficients, coefficients)
def test_ring_axioms(a, b, c):
    x, y, z = _elem(a), _elem(b), _elem(c)
    one = BurnsideElement.one(S3)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * one == x
    assert x - x == BurnsideElement.zero(S3)


@settings(max_examples=60, deadline=None)
@given(coefficients, coefficients)
def test_marks_are_multiplicative(a, b):
    x, y = _elem(a), _elem(b)
    assert (x * y).marks() == [u * v for u, v in zip(x.marks(), y.marks())]
    assert (x + y).marks() == [u + v for u, v in zip(x.marks(), y.marks())]


def test_cyclic_group_marks():
    # A(C_p) for p prime: [C_p/e]^2 = p [C_p/e]
    C5 = cyclic_group(5)
    free = BurnsideElement.basis(C5.trivial_subgroup())
    assert free * free == free.scale(5)
