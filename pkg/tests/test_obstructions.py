import math

import pytest

from burnside_beta.obstructions import (OBSTRUCTED, TRUNCATED_OK, check_induced_candidate, obstruction_gaussian,
                                        obstruction_zmodn, prime_factors, quadratic_law)
from burnside_beta.group_core import symmetric_group
from burnside_beta.rings import QI, ZI, ZZ, Gaussian


def test_prime_factors():
    assert prime_factors(12) == [2, 3]
    assert prime_factors(97) == [97]


@pytest.mark.parametrize("n", [2, 4, 6])
def test_even_moduli_have_no_truncated_range(n):
    rep = obstruction_zmodn(n)
    assert rep.verdict == OBSTRUCTED


@pytest.mark.parametrize("n", [3, 5])
def test_odd_primes_keep_truncated_operations(n):
    rep = obstruction_zmodn(n)
    assert rep.verdict == f"{OBSTRUCTED}; {TRUNCATED_OK}"
    coefs = [e["lhs"] for e in rep.entries if e["axiom"] == "binomial"]
    assert coefs == [math.comb(n, n)]


def test_binomial_entries_for_six():
    rep = obstruction_zmodn(6)
    assert [e["rhs"] for e in rep.entries if e["axiom"] == "binomial"] == [15, 20]
    assert rep.ok


def test_square_of_two_points_breaks_mod_two():
    # P^2(x + 2y) and P^2(x) differ by a free orbit count that is odd for x = 0, y = 1
    rep = check_induced_candidate(symmetric_group(1), 2, 2)
    assert not rep.ok
    rep1 = check_induced_candidate(symmetric_group(1), 2, 1)
    assert rep1.ok


def test_quadratic_law_rings():
    for ring, a, b in [(ZZ, 3, -2), (ZI, Gaussian(1, 2), Gaussian(0, -1)), (QI, Gaussian(1, 0) / 2, Gaussian(0, 1))]:
        lhs, rhs = quadratic_law(a, b, ring)
        assert lhs == rhs


def test_gaussian_witnesses():
    rep = obstruction_gaussian()
    assert rep.ok
    assert rep.verdict.startswith("no square root of t-1 over Z[i]")
    assert "inverting 2" in rep.verdict
    assert "witness over Q(i): (1/2-1/2i)*t + (i)" in rep.notes
    assert "witness over Q(i): (1/2+1/2i)*t + (-i)" in rep.notes
