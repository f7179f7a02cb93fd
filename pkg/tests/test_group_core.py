import itertools
import math

import numpy as np
import pytest

from burnside_beta.config import GroupTooLarge, override
from burnside_beta.group_core import (GroupHom, cyclic_group, direct_product, double_coset_reps,
                                      juxtaposition, parse_cycles, perm_to_cycles, product_hom,
                                      relative_delta, sign_hom, symmetric_group, wreath_map,
                                      wreath_product, young_inclusion)
from burnside_beta.parsing import parse_group


@pytest.mark.parametrize("m", range(1, 6))
def test_symmetric_group_is_all_permutations(m):
    G = symmetric_group(m)
    assert G.order == math.factorial(m)
    rows = {tuple(int(v) for v in r) for r in G.elements}
    assert rows == set(itertools.permutations(range(m)))


def test_multiplication_acts_on_the_left():
    G = symmetric_group(3)
    for a, b in itertools.product(range(G.order), repeat=2):
        ga, gb = G.elements[a], G.elements[b]
        assert np.array_equal(G.elements[G.mul(a, b)], ga[gb])


def test_constructors_are_cached():
    assert symmetric_group(3) is symmetric_group(3)
    S2 = symmetric_group(2)
    assert direct_product(S2, S2) is direct_product(S2, S2)
    assert wreath_product(2, S2) is wreath_product(2, S2)


@pytest.mark.parametrize("m,base,order", [(2, 1, 2), (2, 2, 8), (3, 2, 48), (2, 3, 72)])
def test_wreath_orders(m, base, order):
    W = wreath_product(m, symmetric_group(base))
    assert W.order == order == math.factorial(m) * math.factorial(base) ** m
    assert W.projection.is_surjective()
    assert W.delta.is_injective()


def test_wreath_action_on_pairs():
    # block permutations move whole copies of the base set
    W = wreath_product(2, symmetric_group(3))
    sigma = np.array([1, 0])
    g = np.array([[1, 0, 2], [0, 1, 2]])
    row = W.join(sigma[None], g[None])[0]
    for i, x in itertools.product(range(2), range(3)):
        j = int(sigma[i])
        assert row[3 * i + x] == 3 * j + g[j][x]
    s2, g2 = W.split(row[None, :])
    assert np.array_equal(s2[0], sigma)
    assert np.array_equal(g2[0], g)


def test_sign_hom():
    sg = sign_hom(4)
    assert sg.kernel().order == 12
    assert sg.is_surjective()


def test_cyclic_and_product():
    C6 = cyclic_group(6)
    assert C6.order == 6
    assert sorted(set(int(o) for o in C6.element_orders)) == [1, 2, 3, 6]
    V = direct_product(symmetric_group(2), symmetric_group(2))
    assert V.order == 4
    assert all(p.is_surjective() for p in V.projections)


def test_group_order_bound():
    # explicit generators bypass the constructor cache
    with override(group_order=100):
        with pytest.raises(GroupTooLarge):
            parse_group("perm(6): (0 1), (0 1 2 3 4 5)")


def test_cycles_round_trip():
    p = parse_cycles("(0 2)(1 3 4)", 5)
    assert perm_to_cycles(p) == [(0, 2), (1, 3, 4)]


def _brute_double_cosets(G, H, K):
    seen, count = set(), 0
    for g in range(G.order):
        if g in seen:
            continue
        count += 1
        for h in H.members:
            for k in K.members:
                seen.add(G.mul(G.mul(int(h), g), int(k)))
    return count


@pytest.mark.parametrize("m", [3, 4])
def test_double_cosets_match_brute_force(m):
    G = symmetric_group(m)
    H = young_inclusion([m - 1, 1]).image_subgroup()
    K = young_inclusion([1] * (m - 2) + [2]).image_subgroup()
    for A, B in [(H, H), (H, K), (K, K), (G.trivial_subgroup(), H)]:
        assert len(double_coset_reps(G, A, B)) == _brute_double_cosets(G, A, B)


def test_young_and_juxtaposition_are_injective():
    e = symmetric_group(1)
    assert young_inclusion([2, 1]).is_injective()
    assert juxtaposition(1, 2, e).is_injective()
    assert juxtaposition(2, 1, symmetric_group(2)).target is wreath_product(3, symmetric_group(2))


def test_relative_delta_and_wreath_map_are_homs():
    S2 = symmetric_group(2)
    f = relative_delta(2, S2, S2)
    f.verify()
    assert f.is_injective()
    w = wreath_map(2, sign_hom(3))
    w.verify()
    assert w.is_surjective()


def test_product_hom_and_identity():
    S3 = symmetric_group(3)
    f = product_hom(GroupHom.identity(S3), sign_hom(3))
    assert f.source.order == 36 and f.target.order == 12
    assert f.kernel().order == 3
