"""Why the power operations on Burnside rings do not pass to Z/n or Z[i] coefficients.

Over ``Z/n`` the free-class coefficient of ``P^p(n)`` in ``A(Sigma_p)`` is
``binomial(n, p)``, which ``n`` does not divide when ``p | n``.  Over ``Z[i]``
a power structure would make ``P^2(i)`` a square root of ``P^2(-1) = t - 1``,
and ``t - 1`` has no square root in ``A(Sigma_2) (x) Z[i]``.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .burnside import BurnsideElement, basis_elements, decompose, extend_coefficients, registry
from .config import bounds
from .global_ops import power, power_symmetric
from .group_core import PermGroup, symmetric_group
from .gset import GSet, power_set
from .reports import Report
from .rings import QI, ZZ, ZI, Gaussian, ZMod

OBSTRUCTED = "obstructed"
TRUNCATED_OK = "truncated operations pass below p"


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _trivial_set(n: int) -> GSet:
    G = symmetric_group(1)
    return GSet(G, [np.arange(n)] * len(G.generators), n)


def free_class_coefficient(x: BurnsideElement) -> object:
    return x.coeffs.get(registry(x.group).classify(x.group.trivial_subgroup()), x.ring.zero)


def _npoints(n: int) -> BurnsideElement:
    return BurnsideElement.one(symmetric_group(1)).scale(n)


def obstruction_zmodn(n: int, truncated: bool = True) -> Report:
    """Test whether the power operations of ``A`` descend to ``A (x) Z/n``.

    For each prime ``p | n`` the free-class coefficient of ``P^p(n)`` is computed
    by the power recursion and by the orbits of ``[n]^p``, and compared with
    ``binomial(n, p)``.  Below the smallest prime the truncated operations are
    tested for well-definedness modulo ``n``.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    rep = Report(f"power operations on A (x) Z/{n}")
    obstructed = False
    for p in prime_factors(n):
        if p > bounds.symmetric_degree:
            rep.notes.append(f"p = {p} skipped: Sigma_{p} beyond the symmetric degree bound")
            continue
        P = power_symmetric(_npoints(n), p)
        coef = free_class_coefficient(P)
        inst = {"n": n, "p": p}
        rep.check("binomial", inst, coef, math.comb(n, p))
        if n ** p <= bounds.set_size:
            oracle = decompose(power_set(_trivial_set(n), p))
            rep.check("orbit-oracle", inst, oracle, power(_npoints(n), p))
        else:
            rep.notes.append(f"orbit oracle for p = {p} skipped: {n}^{p} points exceed the set bound")
        rep.check("divisible-by-n/p", inst, coef % (n // p), 0)
        rep.check("not-divisible-by-n", dict(inst, coefficient=coef, modulus=n), coef % n != 0, True)
        if coef % n:
            obstructed = True
            rep.notes.append(f"p = {p}: free-class coefficient {coef} is not divisible by {n}")
    verdicts = []
    if obstructed:
        verdicts.append(OBSTRUCTED)
    if truncated:
        p = min(prime_factors(n))
        ok = True
        for k in range(1, min(p, bounds.symmetric_degree + 1)):
            P = power(_npoints(n), k)
            bad = [c for c in P.coeffs.values() if c % n]
            rep.check("truncated-divisible", {"n": n, "k": k}, bad, [])
            ok &= not bad
        sub = check_induced_candidate(symmetric_group(1), n, p - 1)
        rep.extend(sub)
        if ok and sub.ok and p > 2:
            verdicts.append(TRUNCATED_OK)
    rep.verdict = "; ".join(verdicts) if verdicts else "no obstruction found"
    return rep


_candidate_cache: dict = {}


def check_induced_candidate(G: PermGroup, n: int, degree: int) -> Report:
    """Check ``P^m(x + n y) = P^m(x)`` modulo ``n`` for ``1 <= m <= degree``.

    ``x`` runs over zero and the signed basis of ``A(G)``, ``y`` over the basis.
    Passing means reduction mod ``n`` gives well-defined operations in these
    degrees.
    """
    key = (id(G), n, degree)
    if key in _candidate_cache:
        return _candidate_cache[key]
    R = ZMod(n)
    rep = Report(f"power operations modulo {n} on A({G}) up to degree {degree}")
    basis = basis_elements(G)
    xs = [BurnsideElement.zero(G)] + basis + [-b for b in basis]
    for m in range(1, degree + 1):
        for x in xs:
            px = extend_coefficients(power(x, m), R)
            for y in basis:
                lhs = extend_coefficients(power(x + y.scale(n), m), R)
                rep.check("descends", {"G": str(G), "n": n, "m": m, "x": str(x), "y": str(y)}, lhs, px)
    _candidate_cache[key] = rep
    return rep


def quadratic_law(a, b, ring=ZZ) -> tuple[BurnsideElement, BurnsideElement]:
    """``(a t + b)^2`` and ``2a(a+b) t + b^2`` in ``A(Sigma_2)`` over ``ring``."""
    S2 = symmetric_group(2)
    t = BurnsideElement.basis(S2.trivial_subgroup(), ring)
    one = BurnsideElement.one(S2, ring)
    a, b = ring(a), ring(b)
    x = t.scale(a) + one.scale(b)
    return x * x, t.scale(2 * a * (a + b)) + one.scale(b * b)


def _gaussians(radius: int):
    for re_, im in itertools.product(range(-radius, radius + 1), repeat=2):
        yield Gaussian(re_, im)


def obstruction_gaussian() -> Report:
    """Show that ``t - 1`` is not a square in ``A(Sigma_2) (x) Z[i]`` but is one over ``Q(i)``."""
    S2 = symmetric_group(2)
    rep = Report("square roots of P^2(-1) in A(Sigma_2) (x) Z[i]")
    t = BurnsideElement.basis(S2.trivial_subgroup())
    one = BurnsideElement.one(S2)
    target = t - one
    rep.check("P2(-1)", {"x": "-1"}, power_symmetric(-_npoints(1), 2), target)

    # (a t + b)^2 = 2a(a+b) t + b^2, so b^2 = -1 and 2a(a+b) = 1
    roots = [b for b in _gaussians(1) if b * b == Gaussian(-1, 0)]
    rep.check("roots-of-minus-one", {"ring": "Zi"}, sorted(map(str, roots)), ["-i", "i"])
    solutions = []
    for b in roots:
        # |2a(a+b)| = 1 forces |a| <= 1; every candidate is tried
        for a in _gaussians(1):
            lhs, _ = quadratic_law(a, b, ZI)
            if lhs == extend_coefficients(target, ZI):
                solutions.append((a, b))
    rep.check("integral-square-roots", {"ring": "Zi"}, [f"{a}*t+{b}" for a, b in solutions], [])
    rep.notes.append("2a(a+b) = 1 has no solution since 1 is not in 2Z[i]")

    # over Q(i): a = (-b + 1)/2 solves 2a^2 + 2ab - 1 = 0 when b^2 = -1
    witnesses = []
    for b in roots:
        a = (Gaussian(1, 0) - b) / 2
        lhs, _ = quadratic_law(a, b, QI)
        ok = rep.check("rational-witness", {"a": str(a), "b": str(b)}, lhs, extend_coefficients(target, QI))
        if ok:
            witnesses.append({"a": str(a), "b": str(b)})
    rep.notes.extend(f"witness over Q(i): ({w['a']})*t + ({w['b']})" for w in witnesses)
    rep.verdict = "no square root of t-1 over Z[i]"
    if witnesses:
        rep.verdict += "; a square root exists after inverting 2"
    return rep


__all__ = ["OBSTRUCTED", "TRUNCATED_OK", "obstruction_zmodn", "obstruction_gaussian",
           "check_induced_candidate", "quadratic_law", "free_class_coefficient", "prime_factors"]
