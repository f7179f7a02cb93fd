
import numpy as np
import pytest

from burnside_beta.config import SetTooLarge, override
from burnside_beta.group_core import direct_product, sign_hom, symmetric_group, wreath_product
from burnside_beta.gset import (GSet, coinduce_deflate, cosets, diagonal_power_set, disjoint_union,
                                external_set_product, induce, power_set, set_product)

S2, S3 = symmetric_group(2), symmetric_group(3)


def _brute_orbits(X):
    """Orbit count from the full action table, without the library's components."""
    table = X.table
    seen, count = set(), 0
    for x in range(len(X)):
        if x in seen:
            continue
        count += 1
        seen.update(int(v) for v in table[:, x])
    return count


def test_coset_spaces():
    for H in (S3.trivial_subgroup(), S3.subgroup([1]), S3.whole()):
        X = cosets(S3, H)
        X.check_action()
        assert len(X) == 6 // H.order
        assert X.num_orbits() == 1
        assert X.stabilizer(0).order == H.order


def test_fixed_points_brute_force():
    H = S3.subgroup([1])
    X = cosets(S3, H)
    for K in (S3.trivial_subgroup(), H, S3.whole()):
        brute = sum(all(X.table[int(k), x] == x for k in K.members) for x in range(len(X)))
        assert X.fixed_points(K) == brute


def test_product_and_union_orbits():
    X = cosets(S3, S3.subgroup([1]))
    Y = cosets(S3, S3.trivial_subgroup())
    P = set_product(X, Y)
    assert len(P) == 18
    assert P.num_orbits() == _brute_orbits(P) == 3
    U = disjoint_union(X, Y, X)
    assert len(U) == 12 and U.num_orbits() == 3


def test_power_set_counts():
    X = GSet.trivial(symmetric_group(1), 3)
    P = power_set(X, 2)
    assert P.group is wreath_product(2, symmetric_group(1))
    assert len(P) == 9
    # 3 diagonal points plus 3 unordered pairs
    assert P.num_orbits() == 6


def test_power_set_action_is_valid():
    X = cosets(S2, S2.trivial_subgroup())
    P = power_set(X, 2)
    P.check_action()
    assert P.num_orbits() == _brute_orbits(P)


def test_diagonal_power_set():
    X = cosets(S2, S2.trivial_subgroup())
    D = diagonal_power_set(X, 2)
    assert D.group is direct_product(S2, S2)
    assert len(D) == 4
    assert D.num_orbits() == _brute_orbits(D)


def test_external_product():
    X, Y = cosets(S2, S2.trivial_subgroup()), cosets(S3, S3.trivial_subgroup())
    E = external_set_product(X, Y)
    assert E.group is direct_product(S2, S3)
    assert len(E) == 12 and E.num_orbits() == 1


def test_induce_and_coinduce():
    H = S3.subgroup([1])
    Hg, incl = H.as_group()
    X = GSet.trivial(Hg, 1)
    assert len(induce(H, X)) == 3
    Y = cosets(S3, S3.trivial_subgroup())
    Z = coinduce_deflate(sign_hom(3), Y)
    assert Z.group is S2
    assert len(Z) == 2 and Z.num_orbits() == 1


def test_set_size_bound():
    X = GSet.trivial(symmetric_group(1), 10)
    with override(set_size=50):
        with pytest.raises(SetTooLarge):
            power_set(X, 2)


def test_pullback_along_projection():
    V = direct_product(S2, S3)
    X = cosets(S3, S3.subgroup([1])).pullback(V.projections[1])
    assert X.group is V and len(X) == 3
    for g in range(V.order):
        image = V.projections[1](g)
        assert np.array_equal(X.action_of(g), cosets(S3, S3.subgroup([1])).action_of(image))
