import itertools

import pytest

from burnside_beta import BurnsideElement, OperatorElement
from burnside_beta.beta import (Phi, basis_operators, check_morphisms, check_plethysm_associativity,
                                find_transfer_counterexample, plethysm, theta, theta2, theta2_closed,
                                theta_closed, times2, transfer_product)
from burnside_beta.burnside import basis_elements, extend_coefficients
from burnside_beta.config import NoPowerStructure
from burnside_beta.global_ops import transfer
from burnside_beta.group_core import inclusion_hom, symmetric_group
from burnside_beta.rings import ZMod

E, S2, S3 = (symmetric_group(m) for m in (1, 2, 3))
t = BurnsideElement.basis(S2.trivial_subgroup())
one = BurnsideElement.one(S2)
sym2 = OperatorElement.basis(S2.whole())
free2 = OperatorElement.basis(S2.trivial_subgroup())


def test_operator_units():
    u, e = OperatorElement.one(), OperatorElement.unit_e()
    for x in basis_operators(3):
        assert transfer_product(u, x) == x
        assert plethysm(e, x) == x
        assert plethysm(x, e) == x


def test_transfer_product_of_points():
    e = OperatorElement.unit_e()
    assert transfer_product(e, e) == free2


def test_symmetric_square_of_symmetric_square():
    # Sym^2 o Sym^2 is the wreath product Sigma_2 wr Sigma_2 of order 8 inside Sigma_4
    comp = plethysm(sym2, sym2)
    assert comp.degree == 4
    [(H, c)] = list(comp[4].items())
    assert H.order == 8 and c == 1


def test_theta_on_the_free_orbit():
    # X = Sigma_2 acting freely on itself: X x X is two free orbits, Sym^2 X = {aa, bb} + {ab}
    assert theta(free2, t) == t.scale(2)
    assert theta(sym2, t) == t + one
    assert theta(OperatorElement.unit_e(), t) == t
    assert theta(OperatorElement.one(), t) == one


@pytest.mark.parametrize("G", [E, S2, S3], ids=str)
def test_theta_routes_agree(G):
    for x in basis_operators(3):
        for a in basis_elements(G):
            closed = theta_closed(x, a)
            assert theta(x, a) == closed
            assert theta(x, a, method="full") == closed


def test_theta_of_virtual_elements():
    for x in basis_operators(2):
        a, b = t, one
        assert theta(x + sym2, a - b) == theta(x, a - b) + theta(sym2, a - b)


def test_phi_and_times2():
    z = Phi(sym2)
    assert sorted(z.keys()) == [(0, 2), (1, 1), (2, 0)]
    assert times2(sym2, free2).degree == (2, 2)


@pytest.mark.parametrize("G", [E, S2], ids=str)
def test_theta2_routes_agree(G):
    ops = basis_operators(2)
    for x, y in itertools.product(ops, repeat=2):
        z = times2(x, y)
        for c, d in itertools.product(basis_elements(G), repeat=2):
            assert theta2(z, c, d) == theta2_closed(z, c, d) == theta(x, c) * theta(y, d)


def test_additivity_through_phi():
    for x in basis_operators(3):
        for c, d in itertools.product(basis_elements(S2), repeat=2):
            assert theta(x, c + d) == theta2(Phi(x), c, d)


def test_restriction_is_a_beta_morphism():
    incl = inclusion_hom(E, S2)
    rep = check_morphisms(incl, ops=basis_operators(2))
    assert rep.ok


def test_transfer_is_not_a_beta_morphism():
    found = find_transfer_counterexample()
    assert found is not None
    assert found["transfer_of_theta"] != found["theta_of_transfer"]
    # the symmetric square also separates them: tr(Sym^2 1) = t, Sym^2(tr 1) = t + 1
    e_sub = inclusion_hom(E, S2)
    pt = BurnsideElement.one(E)
    assert transfer(e_sub, theta(sym2, pt)) == t
    assert theta(sym2, transfer(e_sub, pt)) == t + one


def test_associativity_probe_is_a_report():
    rep = check_plethysm_associativity(basis_operators(2))
    assert rep.count("assoc") > 0
    assert any("probed" in n for n in rep.notes)


def test_theta_modulo_n():
    a = extend_coefficients(t, ZMod(3))
    assert theta(sym2, a) == extend_coefficients(t + one, ZMod(3))
    with pytest.raises(NoPowerStructure):
        theta(sym2, extend_coefficients(BurnsideElement.one(E), ZMod(2)))
