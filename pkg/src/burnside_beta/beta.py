"""The operator rings B = sum_m A(Sigma_m) and B^2 = sum_{p,q} A(Sigma_p x Sigma_q),
plethysm, and the beta-operations they induce on Burnside rings.

``theta(x)(a)`` pairs the restricted powers ``(delta_n)^* P^n(a)`` in
``A(Sigma_n x G)`` against the components ``x_n``; the full route through
``A(Sigma_n wr G)`` and the orbit-set closed form ``X^n/H`` are kept as
cross-checks.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping

import numpy as np

from .burnside import BurnsideElement, decompose, extend_coefficients, registry, subgroup_classes
from .config import DegreeExceeded, NoPowerStructure, RingMismatch, bounds
from .global_ops import (ExpSequence, _cache, _young_maps, deflate, exp_sequence, external_product,
                         external_product_many, pairing, restrict, restricted_pair, transfer)
from .group_core import (GroupHom, PermGroup, Subgroup, direct_product, product_hom, symmetric_group,
                         wreath_product, young_inclusion)
from .gset import GSet, coinduce_deflate, cosets, diagonal_power_set, disjoint_union, set_product
from .obstructions import (OBSTRUCTED, TRUNCATED_OK, check_induced_candidate, obstruction_gaussian,
                           obstruction_zmodn, quadratic_law)
from .rings import ZZ, IntegersMod


def _sym(m: int) -> PermGroup:
    return symmetric_group(m)


def _bisym(p: int, q: int) -> PermGroup:
    return direct_product(_sym(p), _sym(q))


class _Graded:
    """Finite sum of integral Burnside elements indexed by a degree key."""

    def __init__(self, parts: Mapping | None = None):
        clean = {}
        for key, x in (parts or {}).items():
            if x.ring != ZZ:
                raise RingMismatch("operator components must have integer coefficients")
            if x.group is not self._group(key):
                raise ValueError(f"component {key} lives over {x.group}, expected {self._group(key)}")
            if x:
                clean[key] = x
        self.parts = clean

    def _group(self, key) -> PermGroup:
        raise NotImplementedError

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.parts
        return type(other) is type(self) and other.parts == self.parts

    def __hash__(self):
        return hash(frozenset((k, v) for k, v in self.parts.items()))

    def __bool__(self):
        return bool(self.parts)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.parts)
        for k, v in other.parts.items():
            out[k] = out[k] + v if k in out else v
        return type(self)(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -v for k, v in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return type(self)({k: v.scale(c) for k, v in self.parts.items()})

    def __getitem__(self, key) -> BurnsideElement:
        return self.parts.get(key) or BurnsideElement.zero(self._group(key))

    def keys(self):
        return sorted(self.parts)

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"<{k}>({v})" for k, v in sorted(self.parts.items()))

    def to_json(self):
        return {str(k): v.to_json() for k, v in sorted(self.parts.items())}


class OperatorElement(_Graded):
    """An element of B: ``parts[m]`` lies in ``A(Sigma_m)``."""

    def _group(self, m):
        return _sym(m)

    @classmethod
    def from_element(cls, x: BurnsideElement) -> "OperatorElement":
        return cls({x.group.degree: x})

    @classmethod
    def basis(cls, H: Subgroup, coef: int = 1) -> "OperatorElement":
        return cls.from_element(BurnsideElement.basis(H, ZZ, coef))

    @classmethod
    def one(cls) -> "OperatorElement":
        return cls.from_element(BurnsideElement.one(_sym(0)))

    @classmethod
    def unit_e(cls) -> "OperatorElement":
        """``e = 1`` in ``A(Sigma_1)``, the identity operation."""
        return cls.from_element(BurnsideElement.one(_sym(1)))

    @property
    def degree(self) -> int:
        return max(self.parts, default=0)

    def __mul__(self, other):
        if isinstance(other, OperatorElement):
            return transfer_product(self, other)
        return self.scale(other)

    def __str__(self):
        if not self.parts:
            return "0"
        return " + ".join(f"[{v}]_S{m}" for m, v in sorted(self.parts.items()))


class OperatorElement2(_Graded):
    """An element of B^2: ``parts[(p, q)]`` lies in ``A(Sigma_p x Sigma_q)``."""

    def _group(self, key):
        return _bisym(*key)

    @property
    def degree(self) -> tuple[int, int]:
        return (max((k[0] for k in self.parts), default=0), max((k[1] for k in self.parts), default=0))

    def __mul__(self, other):
        if isinstance(other, OperatorElement2):
            return transfer_product2(self, other)
        return self.scale(other)


def basis_operators(max_degree: int) -> list[OperatorElement]:
    """``[Sigma_m/H]`` for ``m <= max_degree`` and every class of subgroups ``H``."""
    out = []
    for m in range(max_degree + 1):
        out.extend(OperatorElement.basis(H) for H in subgroup_classes(_sym(m)).class_reps)
    return out


def transfer_product(x: OperatorElement, y: OperatorElement) -> OperatorElement:
    """``x . y = tr_{Sigma_k x Sigma_l}^{Sigma_{k+l}}(x x y)``."""
    out: dict[int, BurnsideElement] = {}
    for k, a in x.parts.items():
        for l, b in y.parts.items():
            if k + l > bounds.symmetric_degree:
                raise DegreeExceeded(f"product lands in degree {k + l}")
            z = deflate(young_inclusion([k, l]), external_product(a, b))
            out[k + l] = out[k + l] + z if k + l in out else z
    return OperatorElement(out)


def _block_shuffle(p1, q1, p2, q2) -> GroupHom:
    """``(Sigma_p1 x Sigma_q1) x (Sigma_p2 x Sigma_q2) -> Sigma_{p1+p2} x Sigma_{q1+q2}``."""
    A, B = _bisym(p1, q1), _bisym(p2, q2)
    src = direct_product(A, B)
    tgt = _bisym(p1 + p2, q1 + q2)

    def fn(rows):
        ab, cd = src.split(rows)
        a, b = A.split(ab)
        c, d = B.split(cd)
        return tgt.join([np.concatenate([a, c + p1], axis=1), np.concatenate([b, d + q1], axis=1)])
    return GroupHom.from_rows(src, tgt, fn, check=False, name="shuffle")


_shuffles: dict[tuple, GroupHom] = {}


def transfer_product2(x: OperatorElement2, y: OperatorElement2) -> OperatorElement2:
    out: dict[tuple[int, int], BurnsideElement] = {}
    for (p1, q1), a in x.parts.items():
        for (p2, q2), b in y.parts.items():
            key = (p1, q1, p2, q2)
            if key not in _shuffles:
                _shuffles[key] = _block_shuffle(*key)
            z = deflate(_shuffles[key], external_product(a, b))
            deg = (p1 + p2, q1 + q2)
            out[deg] = out[deg] + z if deg in out else z
    return OperatorElement2(out)


def Phi(x: OperatorElement) -> OperatorElement2:
    """``x_m -> sum_{p+q=m} Phi_{p,q}^* x_m``."""
    out = {}
    for m, a in x.parts.items():
        for p in range(m + 1):
            out[(p, m - p)] = restrict(young_inclusion([p, m - p]), a)
    return OperatorElement2(out)


def times2(x: OperatorElement, y: OperatorElement) -> OperatorElement2:
    """``x (x) y -> x x y`` into B^2."""
    out: dict[tuple[int, int], BurnsideElement] = {}
    for p, a in x.parts.items():
        for q, b in y.parts.items():
            out[(p, q)] = external_product(a, b)
    return OperatorElement2(out)


# -- plethysm -----------------------------------------------------------------


def _compositions(k: int, n: int):
    if n == 0:
        if k == 0:
            yield ()
        return
    for first in range(k + 1):
        for rest in _compositions(k - first, n - 1):
            yield (first,) + rest


_push_maps: dict[tuple, GroupHom] = {}


def _pushforward(ks: tuple, ls: tuple) -> GroupHom:
    """``prod Sigma_{k_i} wr Sigma_{l_i} -> Sigma_N`` on the ``sum k_i l_i`` block points.

    Factors with ``l_i = 0`` act on no points of the target.
    """
    key = (ks, ls)
    hit = _push_maps.get(key)
    if hit is not None:
        return hit
    Ws = [wreath_product(k, _sym(l)) for k, l in zip(ks, ls)]
    W = direct_product(*Ws)
    N = sum(k * l for k, l in zip(ks, ls))
    S = _sym(N)

    def fn(rows):
        parts = W.split(rows)
        cols, off = [], 0
        for part, k, l in zip(parts, ks, ls):
            if l > 0 and k > 0:
                cols.append(part + off)
                off += k * l
        if not cols:
            return np.zeros((len(rows), 0), dtype=np.int64)
        return np.concatenate(cols, axis=1)
    hit = _push_maps[key] = GroupHom.from_rows(W, S, fn, check=False, name="push")
    return hit


def plethysm(x: OperatorElement, y: OperatorElement | Iterable[BurnsideElement]) -> OperatorElement:
    """``x * y``.

    ``y`` may be an operator (split by degree) or any list of homogeneous
    summands; the result does not depend on the split.
    """
    ys = list(y.parts.values()) if isinstance(y, OperatorElement) else [v for v in y if v]
    out = OperatorElement()
    for k, xk in x.parts.items():
        for H, c in xk.items():
            out = out + _plethysm_basis(H, tuple(ys)).scale(c)
    return out


def _y_key(ys):
    return tuple((v.group.degree, frozenset(v.coeffs.items())) for v in ys)


_pleth_cache: dict[tuple, OperatorElement] = {}


def _plethysm_basis(H: Subgroup, ys: tuple) -> OperatorElement:
    k = H.parent.degree
    x = BurnsideElement.basis(H)
    key = (k, registry(H.parent).classify(H), _y_key(ys))
    hit = _pleth_cache.get(key)
    if hit is not None:
        return hit
    ls = tuple(v.group.degree for v in ys)
    out = OperatorElement()
    for ks in _compositions(k, len(ys)):
        N = sum(a * b for a, b in zip(ks, ls))
        if N > bounds.derived_degree or N > bounds.symmetric_degree:
            raise DegreeExceeded(f"plethysm term lands in degree {N}")
        powers = [exp_sequence(v, kk)[kk] for v, kk in zip(ys, ks)]
        prod = external_product_many(powers)
        young = young_inclusion(list(ks))
        proj = product_hom(*[wreath_product(kk, _sym(l)).projection for kk, l in zip(ks, ls)])
        pulled = restrict(proj, restrict(young, x))
        term = deflate(_pushforward(ks, ls), prod * pulled)
        out = out + OperatorElement({N: term})
    _pleth_cache[key] = out
    return out


# -- duality and beta-operations -----------------------------------------------


def D_G(s: ExpSequence, x: OperatorElement) -> BurnsideElement:
    """``sum_n <(delta_n)^* s_n, x_n>``."""
    if x.degree > s.N:
        raise DegreeExceeded(f"operator of degree {x.degree} needs a sequence of length {x.degree + 1}")
    total = BurnsideElement.zero(s.base, s.ring)
    for n, xn in x.parts.items():
        sn = s[n] if s.restricted else restrict(wreath_product(n, s.base).delta, s[n])
        total = total + pairing(sn, xn)
    return total


def _theta_basis(G: PermGroup, n: int, idx: int, a: BurnsideElement) -> BurnsideElement:
    cache = _cache(G, "_theta_cache")
    key = (n, idx, frozenset(a.coeffs.items()))
    hit = cache.get(key)
    if hit is None:
        q = exp_sequence(a, n, restricted=True)[n]
        hit = cache[key] = pairing(q, BurnsideElement(_sym(n), {idx: 1}))
    return hit


def theta(x: OperatorElement, a: BurnsideElement, method: str = "restricted") -> BurnsideElement:
    """The beta-operation ``theta(x)(a)``.

    ``method`` is ``"restricted"`` (powers restricted to ``Sigma_n x G``),
    ``"full"`` (powers in ``Sigma_n wr G`` then ``D_G``) or ``"closed"``
    (orbit sets ``X^n/H``, needs an actual G-set).
    """
    if a.ring != ZZ:
        return _theta_reduced(x, a, method)
    if method == "full":
        return D_G(exp_sequence(a, x.degree), x)
    if method == "closed":
        return theta_closed(x, a)
    if method != "restricted":
        raise ValueError(f"unknown method {method!r}")
    G = a.group
    total = BurnsideElement.zero(G)
    for n, xn in x.parts.items():
        if n > bounds.derived_degree:
            raise DegreeExceeded(f"operator degree {n} exceeds {bounds.derived_degree}")
        for idx, c in xn.coeffs.items():
            total = total + _theta_basis(G, n, idx, a).scale(c)
    return total


def _theta_reduced(x: OperatorElement, a: BurnsideElement, method: str) -> BurnsideElement:
    """theta on ``A(G) (x) Z/n`` through integral lifts, when the reduction is well defined."""
    R = a.ring
    if not isinstance(R, IntegersMod):
        raise NoPowerStructure(f"no power operations on A(G) with coefficients in {R}")
    rep = check_induced_candidate(a.group, R.n, max(x.degree, 1))
    if not rep.ok:
        raise NoPowerStructure(f"power operations do not descend to {R} in degrees <= {x.degree}")
    lift = BurnsideElement(a.group, dict(a.coeffs), ZZ)
    return extend_coefficients(theta(x, lift, method), R)


def set_of(a: BurnsideElement) -> GSet:
    """A G-set representing a non-negative integral element."""
    if a.ring != ZZ or any(c < 0 for c in a.coeffs.values()):
        raise ValueError("closed forms need an actual G-set (non-negative integral element)")
    G = a.group
    pieces = [cosets(G, H) for H, c in a.items() for _ in range(c)]
    if not pieces:
        return GSet(G, [np.zeros(0, dtype=np.int64)] * len(G.generators), 0)
    return disjoint_union(*pieces)


def orbit_quotient(H: Subgroup, Y: GSet) -> BurnsideElement:
    """``Y/H`` as a G-set, for ``Y`` a ``(K x G)``-set and ``H <= K``."""
    P = Y.group
    K, G = P.factors
    Hg, incl = H.as_group()
    j = product_hom(incl, GroupHom.identity(G))
    pulled = Y.pullback(j)
    return decompose(coinduce_deflate(j.source.projections[1], pulled))


def theta_closed(x: OperatorElement, a: BurnsideElement) -> BurnsideElement:
    """``theta([Sigma_n/H])(X) = X^n/H`` extended linearly in ``x``."""
    X = set_of(a)
    total = BurnsideElement.zero(a.group)
    for n, xn in x.parts.items():
        Y = diagonal_power_set(X, n)
        for H, c in xn.items():
            total = total + orbit_quotient(H, Y).scale(c)
    return total


def theta2(z: OperatorElement2, c: BurnsideElement, d: BurnsideElement) -> BurnsideElement:
    """``sum_{p,q} <Delta^*(Q^p(c) x Q^q(d)), z_{p,q}>`` with ``Q^m = (delta_m)^* P^m``."""
    if c.group is not d.group:
        raise RingMismatch("arguments over different groups")
    G = c.group
    p_max, q_max = z.degree
    sc = exp_sequence(c, p_max, restricted=True)
    sd = exp_sequence(d, q_max, restricted=True)
    cache = _cache(G, "_theta2_cache")
    ck, dk = frozenset(c.coeffs.items()), frozenset(d.coeffs.items())
    total = BurnsideElement.zero(G)
    for (p, q), zpq in z.parts.items():
        for idx, coef in zpq.coeffs.items():
            key = (p, q, idx, ck, dk)
            hit = cache.get(key)
            if hit is None:
                pair = restricted_pair(sc[p], sd[q])
                hit = cache[key] = pairing(pair, BurnsideElement(_bisym(p, q), {idx: 1}))
            total = total + hit.scale(coef)
    return total


def theta2_closed(z: OperatorElement2, c: BurnsideElement, d: BurnsideElement) -> BurnsideElement:
    """``theta^2([Sigma_p x Sigma_q / H])(X, Y) = (X^p x Y^q)/H``."""
    X, Y = set_of(c), set_of(d)
    G = c.group
    total = BurnsideElement.zero(G)
    for (p, q), zpq in z.parts.items():
        h1, h2, _ = _young_maps(p, q, G)
        prod = set_product(diagonal_power_set(X, p).pullback(h1), diagonal_power_set(Y, q).pullback(h2))
        for H, coef in zpq.items():
            total = total + orbit_quotient(H, prod).scale(coef)
    return total


# -- sample grids and checkers ------------------------------------------------


def pairwise_sums(items: list) -> list:
    """The items followed by the sums of all unordered pairs of distinct items."""
    return list(items) + [a + b for a, b in itertools.combinations(items, 2)]


def element_samples(G: PermGroup) -> list[BurnsideElement]:
    return pairwise_sums([BurnsideElement.basis(H) for H in subgroup_classes(G).class_reps])


def operator_samples(max_degree: int | None = None) -> list[OperatorElement]:
    max_degree = bounds.operator_degree if max_degree is None else max_degree
    return pairwise_sums(basis_operators(max_degree))


def _ops_label(x: OperatorElement) -> str:
    return str(x)


def check_beta_axioms(G: PermGroup, ops=None, elems=None, derived_degree: int | None = None):
    """Evaluate the five beta-ring axioms on a grid of operators and elements."""
    from .reports import Report

    ops = operator_samples() if ops is None else ops
    elems = element_samples(G) if elems is None else elems
    dbound = bounds.derived_degree if derived_degree is None else derived_degree
    rep = Report(f"beta-ring axioms on A({G})")
    rep.notes.append(f"composites are evaluated when their degree is at most {dbound}")
    one, e = OperatorElement.one(), OperatorElement.unit_e()
    unit = BurnsideElement.one(G)
    skipped = 0
    for a in elems:
        rep.check("iv", {"a": str(a)}, theta(one, a), unit)
        rep.check("v", {"a": str(a)}, theta(e, a), a)
    for x, y in itertools.product(ops, repeat=2):
        tx = {id(a): theta(x, a) for a in elems}
        ty = {id(a): theta(y, a) for a in elems}
        s = x + y
        p = transfer_product(x, y) if x.degree + y.degree <= dbound else None
        if x.degree * y.degree <= dbound:
            pl = plethysm(x, y)
        else:
            pl = None
            skipped += 1
        for a in elems:
            inst = {"x": str(x), "y": str(y), "a": str(a)}
            rep.check("i", inst, theta(s, a), tx[id(a)] + ty[id(a)])
            if p is not None:
                rep.check("ii", inst, theta(p, a), tx[id(a)] * ty[id(a)])
            if pl is not None:
                rep.check("iii", inst, theta(pl, a), theta(x, ty[id(a)]))
    if skipped:
        rep.notes.append(f"{skipped} operator pairs skipped for the composition law (degree product > {dbound})")
    return rep


def check_additive_axioms(G: PermGroup, ops=None, elems=None):
    """``theta^2(x x y)(c,d) = theta(x)(c) theta(y)(d)`` and ``theta(x)(c+d) = theta^2(Phi x)(c,d)``."""
    from .reports import Report

    ops = operator_samples() if ops is None else ops
    elems = element_samples(G) if elems is None else elems
    rep = Report(f"additive beta-ring axioms on A({G})")
    for x in ops:
        phx = Phi(x)
        for c, d in itertools.product(elems, repeat=2):
            rep.check("additive-ii", {"x": str(x), "c": str(c), "d": str(d)},
                      theta(x, c + d), theta2(phx, c, d))
    for x, y in itertools.product(ops, repeat=2):
        z = times2(x, y)
        for c, d in itertools.product(elems, repeat=2):
            rep.check("additive-i", {"x": str(x), "y": str(y), "c": str(c), "d": str(d)},
                      theta2(z, c, d), theta(x, c) * theta(y, d))
    return rep


def check_morphisms(phi: GroupHom, ops=None, elems=None, pairs=True):
    """``phi^* theta_G(x)(a) = theta_K(x)(phi^* a)`` (and the same for theta^2)."""
    from .reports import Report

    ops = operator_samples() if ops is None else ops
    elems = element_samples(phi.target) if elems is None else elems
    rep = Report(f"restriction along {phi.source} -> {phi.target} as a beta-morphism")
    for x in ops:
        for a in elems:
            rep.check("theta", {"x": str(x), "a": str(a)},
                      restrict(phi, theta(x, a)), theta(x, restrict(phi, a)))
    if pairs:
        for x, y in itertools.product(ops[:4], repeat=2):
            z = times2(x, y) + Phi(x + y)
            for c, d in itertools.product(elems[:3], repeat=2):
                rep.check("theta2", {"z": str(z), "c": str(c), "d": str(d)},
                          restrict(phi, theta2(z, c, d)), theta2(z, restrict(phi, c), restrict(phi, d)))
    return rep


def find_transfer_counterexample(groups: Iterable[PermGroup] | None = None, max_degree: int = 2):
    """Search small cases for ``tr(theta(x)(a)) != theta(x)(tr a)``; returns the first hit or None."""
    groups = list(groups) if groups is not None else [_sym(2), _sym(3)]
    for G in groups:
        for H in subgroup_classes(G).class_reps:
            if H.order == G.order:
                continue
            Hg, incl = H.as_group()
            for K in subgroup_classes(Hg).class_reps:
                a = BurnsideElement.basis(K)
                for x in basis_operators(max_degree):
                    lhs = transfer(incl, theta(x, a))
                    rhs = theta(x, transfer(incl, a))
                    if lhs != rhs:
                        return {"group": str(G), "subgroup_order": H.order, "x": str(x), "a": str(a),
                                "transfer_of_theta": lhs, "theta_of_transfer": rhs}
    return None


def check_plethysm_associativity(samples: list[OperatorElement] | None = None, derived_degree: int | None = None):
    """Report ``x*(y*z)`` against ``(x*y)*z``; informational, nothing is asserted."""
    from .reports import Report

    dbound = bounds.derived_degree if derived_degree is None else derived_degree
    samples = basis_operators(2) if samples is None else samples
    rep = Report("plethysm associativity probe")
    rep.notes.append("associativity is probed, not claimed")
    for x, y, z in itertools.product(samples, repeat=3):
        if x.degree * y.degree * z.degree > dbound:
            continue
        rep.check("assoc", {"x": str(x), "y": str(y), "z": str(z)},
                  plethysm(x, plethysm(y, z)), plethysm(plethysm(x, y), z))
    return rep


__all__ = ["OperatorElement", "OperatorElement2", "basis_operators", "transfer_product", "transfer_product2",
           "Phi", "times2", "plethysm", "D_G", "theta", "theta_closed", "theta2", "theta2_closed",
           "check_beta_axioms", "check_additive_axioms", "check_morphisms", "find_transfer_counterexample",
           "check_plethysm_associativity", "OBSTRUCTED", "TRUNCATED_OK", "check_induced_candidate",
           "obstruction_gaussian", "obstruction_zmodn", "quadratic_law"]
