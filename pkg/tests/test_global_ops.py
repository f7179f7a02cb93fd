import itertools
import math

import pytest

from burnside_beta import BurnsideElement, decompose, subgroup_classes
from burnside_beta.burnside import basis_elements
from burnside_beta.config import NoPowerStructure, RingMismatch
from burnside_beta.global_ops import (deflate, exp_sequence, external_product, pairing, pairing_composite,
                                      power, power_symmetric, restrict, restricted_power, transfer)
from burnside_beta.group_core import (direct_product, inclusion_hom, juxtaposition, sign_hom,
                                      symmetric_group, wreath_product)
from burnside_beta.gset import coinduce_deflate, cosets, induce, power_set, set_product
from burnside_beta.rings import ZI

E, S2, S3 = (symmetric_group(m) for m in (1, 2, 3))


def _reps(G):
    return subgroup_classes(G).class_reps


@pytest.mark.parametrize("alpha", [inclusion_hom(S2, S3), sign_hom(3), direct_product(S2, S3).projections[1]],
                         ids=["incl", "sign", "proj"])
def test_restriction_matches_pullback(alpha):
    for H in _reps(alpha.target):
        expected = decompose(cosets(alpha.target, H).pullback(alpha))
        assert restrict(alpha, BurnsideElement.basis(H)) == expected


def test_transfer_matches_induction():
    H = S3.subgroup([1])
    Hg, _ = H.as_group()
    for L in _reps(Hg):
        assert transfer(H, BurnsideElement.basis(L)) == decompose(induce(H, cosets(Hg, L)))


@pytest.mark.parametrize("f", [sign_hom(3), direct_product(S2, S3).projections[0]], ids=["sign", "proj"])
def test_deflation_matches_balanced_product(f):
    for L in _reps(f.source):
        assert deflate(f, BurnsideElement.basis(L)) == decompose(coinduce_deflate(f, cosets(f.source, L)))


def test_transfer_rejects_ambient_element():
    with pytest.raises(RingMismatch):
        transfer(S3.subgroup([1]), BurnsideElement.one(S3))


def test_powers_match_power_sets():
    for G in (E, S2, S3):
        for H in _reps(G):
            for m in range(4):
                if G.order ** m * math.factorial(m) > 2000:
                    continue
                assert power(BurnsideElement.basis(H), m) == decompose(power_set(cosets(G, H), m))


def test_power_of_n_points():
    # X = n points: n fixed diagonal pairs and binomial(n, 2) swapped pairs
    t = BurnsideElement.basis(S2.trivial_subgroup())
    one = BurnsideElement.one(S2)
    for n in range(6):
        x = BurnsideElement.one(E).scale(n)
        assert power_symmetric(x, 2) == one.scale(n) + t.scale(math.comb(n, 2))


def test_negative_powers():
    t = BurnsideElement.basis(S2.trivial_subgroup())
    minus_one = -BurnsideElement.one(E)
    assert power_symmetric(minus_one, 2) == t - BurnsideElement.one(S2)
    # P^m(0) = 0 for m > 0, and the sequence of x - x is the unit sequence
    seq = exp_sequence(BurnsideElement.zero(S2), 3)
    assert [bool(x) for x in seq.entries] == [True, False, False, False]


def test_power_respects_sum_of_negatives():
    x = BurnsideElement.basis(S2.trivial_subgroup())
    seq_x = exp_sequence(x, 3)
    seq_neg = exp_sequence(-x, 3)
    total = seq_x.star(seq_neg)
    assert all(not total[m] for m in range(1, 4))


def test_exponential_condition():
    for G in (E, S2):
        for x in basis_elements(G) + [-b for b in basis_elements(G)]:
            assert exp_sequence(x, 3).check_exponential().ok


def test_restricted_power_is_diagonal_restriction():
    for x in basis_elements(S2) + [BurnsideElement.one(S2) - BurnsideElement.basis(S2.trivial_subgroup())]:
        for m in range(4):
            assert restricted_power(x, m) == restrict(wreath_product(m, S2).delta, power(x, m))


def test_powers_need_integral_input():
    with pytest.raises(NoPowerStructure):
        power(BurnsideElement.one(S2, ZI), 2)


def _pairing_oracle(P, M, K, H):
    """``(P/M x K/H)/K`` as a G-set, built from coset spaces."""
    prK, prG = P.projections
    both = set_product(cosets(P, M), cosets(K, H).pullback(prK))
    return decompose(coinduce_deflate(prG, both))


@pytest.mark.parametrize("K,G", [(S2, E), (S2, S2), (S3, S2), (S2, S3)], ids=str)
def test_pairing_matches_orbit_sets(K, G):
    P = direct_product(K, G)
    for M in _reps(P):
        r = BurnsideElement.basis(M)
        for H in _reps(K):
            x = BurnsideElement.basis(H)
            assert pairing(r, x) == _pairing_oracle(P, M, K, H) == pairing_composite(r, x)


def test_pairing_unit():
    for G in (S2, S3):
        for r in basis_elements(G):
            lifted = restrict(direct_product(E, G).projections[1], r)
            assert pairing(lifted, BurnsideElement.one(E)) == r


def test_internal_product_rule_fails_for_orbit_counting():
    # <1, t.t> = <1, 2t> = 2, while <1, t> <1, t> = 1
    P = direct_product(S2, E)
    one = BurnsideElement.one(P)
    t = BurnsideElement.basis(S2.trivial_subgroup())
    assert pairing(one * one, t * t) == BurnsideElement.one(E).scale(2)
    assert pairing(one, t) * pairing(one, t) == BurnsideElement.one(E)


def test_juxtaposition_of_powers():
    x = BurnsideElement.basis(S2.trivial_subgroup()) + BurnsideElement.one(S2)
    for i, j in itertools.product(range(3), repeat=2):
        lhs = restrict(juxtaposition(i, j, S2), power(x, i + j))
        assert lhs == external_product(power(x, i), power(x, j))
