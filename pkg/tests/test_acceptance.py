"""Acceptance suite: one test per criterion, each printing a single verdict line."""

import math
import time

import numpy as np

from burnside_beta import (BurnsideElement, OperatorElement, check_additive_axioms, check_beta_axioms,
                           check_pairing_axioms, check_power_identities, decompose, obstruction_gaussian,
                           obstruction_zmodn, power, subgroup_classes, theta)
from burnside_beta.burnside import mul, mul_via_sets
from burnside_beta.config import bounds
from burnside_beta.global_ops import power_symmetric
from burnside_beta.group_core import direct_product, symmetric_group, wreath_product
from burnside_beta.gset import GSet, power_set
from burnside_beta.obstructions import free_class_coefficient, quadratic_law
from burnside_beta.rings import ZI, ZZ, Gaussian

E, S2, S3 = (symmetric_group(m) for m in (1, 2, 3))


def _points(n):
    return BurnsideElement.one(E).scale(n)


def _failure_digest(rep, limit=3):
    return "; ".join(f"{f['axiom']} {f['instance']}" for f in rep.failures[:limit])


def test_quadratic_law(verdict):
    rng = np.random.default_rng(20261015)
    t0 = time.perf_counter()
    bad = []
    for _ in range(100):
        a, b = (int(v) for v in rng.integers(-50, 51, size=2))
        lhs, rhs = quadratic_law(a, b, ZZ)
        if lhs != rhs:
            bad.append(("Z", a, b))
    for _ in range(100):
        ar, ai, br, bi = (int(v) for v in rng.integers(-20, 21, size=4))
        lhs, rhs = quadratic_law(Gaussian(ar, ai), Gaussian(br, bi), ZI)
        if lhs != rhs:
            bad.append(("Zi", ar, ai, br, bi))
    elapsed = time.perf_counter() - t0
    verdict(1, "quadratic law in A(Sigma_2) over Z and Z[i]", not bad and elapsed < 1,
            f"200 pairs, {elapsed:.2f}s")
    assert not bad
    assert elapsed < 1


def _trivial_set(n):
    return GSet(E, [np.arange(n)] * len(E.generators), n)


def test_binomial_coefficients(verdict):
    t0 = time.perf_counter()
    problems, skipped = [], 0
    for p in (2, 3, 5):
        for n in range(1, 13):
            recursion = free_class_coefficient(power(_points(n), p))
            if n ** p <= bounds.set_size:
                orbits = free_class_coefficient(decompose(power_set(_trivial_set(n), p)))
                if orbits != recursion:
                    problems.append(("oracle", n, p, orbits, recursion))
            else:
                skipped += 1
            if recursion != math.comb(n, p):
                problems.append(("binomial", n, p, recursion))
            if n % p == 0:
                if recursion % (n // p):
                    problems.append(("n/p", n, p))
                if recursion % n == 0:
                    problems.append(("n divides", n, p))
    elapsed = time.perf_counter() - t0
    verdict(2, "free-class coefficient of P^p(n) is binomial(n, p)", not problems and elapsed < 120,
            f"{elapsed:.1f}s, {skipped} oracle cases skipped")
    assert not problems
    assert elapsed < 120


def test_power_of_minus_one(verdict):
    t = BurnsideElement.basis(S2.trivial_subgroup())
    value = power_symmetric(-_points(1), 2)
    ok = value == t - BurnsideElement.one(S2)
    verdict(3, "P^2(-1) = t - 1", ok, str(value))
    assert ok


def test_zmodn_obstruction(verdict):
    t0 = time.perf_counter()
    got = {n: obstruction_zmodn(n).verdict for n in range(2, 7)}
    elapsed = time.perf_counter() - t0
    obstructed = all("obstructed" in got[n] for n in range(2, 7))
    truncated = {n for n in got if "truncated operations pass below p" in got[n]}
    ok = obstructed and {3, 5} <= truncated and elapsed < 120
    verdict(4, "Z/n obstruction and truncated operations", ok, f"truncated ok for {sorted(truncated)}")
    assert obstructed
    assert {3, 5} <= truncated
    assert elapsed < 120


def test_gaussian_obstruction(verdict):
    t0 = time.perf_counter()
    rep = obstruction_gaussian()
    elapsed = time.perf_counter() - t0
    roots = [e for e in rep.entries if e["axiom"] == "integral-square-roots"]
    witnesses = [e for e in rep.entries if e["axiom"] == "rational-witness" and e["status"] == "pass"]
    ok = rep.ok and roots and roots[0]["lhs"] == [] and len(witnesses) >= 1 and elapsed < 1
    verdict(5, "t - 1 is not a square over Z[i], is one over Q(i)", bool(ok),
            f"{len(witnesses)} witnesses")
    assert rep.ok
    assert roots[0]["lhs"] == []
    assert witnesses
    assert elapsed < 1


def test_beta_ring_axioms(verdict):
    t0 = time.perf_counter()
    reports = [check_beta_axioms(G) for G in (E, S2, S3)]
    elapsed = time.perf_counter() - t0
    failures = sum(len(r.failures) for r in reports)
    checks = sum(len(r.entries) for r in reports)
    verdict(6, "beta-ring axioms i-v on e, Sigma_2, Sigma_3", failures == 0 and elapsed < 600,
            f"{checks} checks, {failures} failures, {elapsed:.0f}s")
    assert failures == 0, _failure_digest(next(r for r in reports if r.failures))
    assert elapsed < 600


def test_additive_axioms(verdict):
    t0 = time.perf_counter()
    reports = [check_additive_axioms(G) for G in (E, S2, S3)]
    elapsed = time.perf_counter() - t0
    failures = sum(len(r.failures) for r in reports)
    checks = sum(len(r.entries) for r in reports)
    verdict(7, "additive beta-ring axioms on e, Sigma_2, Sigma_3", failures == 0 and elapsed < 600,
            f"{checks} checks, {failures} failures, {elapsed:.0f}s")
    assert failures == 0, _failure_digest(next(r for r in reports if r.failures))
    assert elapsed < 600


def test_theta_closed_form(verdict):
    t0 = time.perf_counter()
    bad, count = [], 0
    for G in (E, S2, S3):
        basis = [BurnsideElement.basis(H) for H in subgroup_classes(G).class_reps]
        for n in range(1, 4):
            for H in subgroup_classes(symmetric_group(n)).class_reps:
                x = OperatorElement.basis(H)
                for a in basis:
                    count += 1
                    full, closed = theta(x, a, method="full"), theta(x, a, method="closed")
                    if full != closed or theta(x, a) != closed:
                        bad.append((str(G), n, H.order, str(a)))
    elapsed = time.perf_counter() - t0
    verdict(8, "theta via D_G o P equals X^n/H", not bad and elapsed < 300, f"{count} cases, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 300


def test_power_identities(verdict):
    t0 = time.perf_counter()
    rep = check_power_identities()
    elapsed = time.perf_counter() - t0
    need = {"exponential", "naturality", "sum-formula"}
    ok = rep.ok and need <= set(rep.axioms()) and elapsed < 300
    verdict(9, "exponential law, naturality, sum formula", ok,
            f"{len(rep.entries)} checks, {len(rep.failures)} failures")
    assert rep.ok, _failure_digest(rep)
    assert need <= set(rep.axioms())
    assert elapsed < 300


def test_pairing_axioms(verdict):
    # the literal product axiom v fails for the Burnside pairing; this criterion is expected red
    t0 = time.perf_counter()
    rep = check_pairing_axioms()
    elapsed = time.perf_counter() - t0
    required = ["i", "ii", "iii", "iv", "v", "vi", "vii"]
    missing = [a for a in required if rep.count(a) == 0]
    failing = {a: len(rep.failures_for(a)) for a in required if rep.failures_for(a)}
    cosets = [e["lhs"] for e in rep.entries if e["axiom"] == "double-coset"]
    ok = not missing and not failing and cosets == [1] and elapsed < 600
    verdict(10, "deflation pairing axioms i-vii, one double coset", ok,
            f"failing axioms {failing}, double cosets {cosets}")
    assert not missing
    assert cosets == [1]
    assert not failing, _failure_digest(rep)
    assert elapsed < 600


def _random_element(rng, G, n_classes):
    coeffs = rng.integers(-4, 5, size=n_classes)
    tab = subgroup_classes(G)
    return sum((BurnsideElement.basis(H).scale(int(c)) for H, c in zip(tab.class_reps, coeffs)),
               BurnsideElement.zero(G))


def test_oracle_equivalence(verdict):
    t0 = time.perf_counter()
    groups = [S2, S3, symmetric_group(4), direct_product(S2, S2), wreath_product(2, S2)]
    bad, pairs = [], 0
    for G in groups:
        basis = [BurnsideElement.basis(H) for H in subgroup_classes(G).class_reps]
        for x in basis:
            for y in basis:
                pairs += 1
                if mul(x, y) != mul_via_sets(x, y):
                    bad.append((str(G), str(x), str(y)))
    rng = np.random.default_rng(11)
    hom_bad = 0
    for k in range(500):
        G = groups[k % len(groups)]
        n = len(subgroup_classes(G))
        x, y = _random_element(rng, G, n), _random_element(rng, G, n)
        mx, my = x.marks(), y.marks()
        if (x * y).marks() != [a * b for a, b in zip(mx, my)] or (x + y).marks() != [a + b for a, b in zip(mx, my)]:
            hom_bad += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and not hom_bad and elapsed < 120
    verdict(11, "double-coset product equals product sets; marks are a ring map", ok,
            f"{pairs} basis pairs, 500 random pairs, {elapsed:.1f}s")
    assert not bad
    assert hom_bad == 0
    assert elapsed < 120
