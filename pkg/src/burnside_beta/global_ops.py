"""Restriction, transfer, deflation, external products, power operations and the
deflation pairing on Burnside rings, plus checkers for the identities they satisfy.

All operations are linear extensions of formulas on basis classes ``[G/H]``;
the per-basis results are cached on the group or homomorphism involved.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .burnside import BurnsideElement, decompose, registry
from .config import NoPowerStructure, RingMismatch
from .group_core import (GroupHom, PermGroup, ProductGroup, Subgroup, direct_product, juxtaposition,
                     orbit_decomposition, product_hom, relative_delta, symmetric_group, wreath_map,
                     wreath_product, young_inclusion)
from .gset import cosets, diagonal_power_set, power_set
from .rings import ZZ, Ring


def _cache(obj, name: str) -> dict:
    d = obj.__dict__.get(name)
    if d is None:
        d = {}
        setattr(obj, name, d)
    return d


def _apply_linear(x: BurnsideElement, target: PermGroup, basis_image) -> BurnsideElement:
    """Extend ``basis_image(class index) -> {target class: int}`` linearly."""
    R = x.ring
    out: dict[int, object] = defaultdict(lambda: R.zero)
    for k, c in x.coeffs.items():
        for j, n in basis_image(k).items():
            out[j] = R.add(out[j], R.mul(c, n))
    return BurnsideElement(target, out, R)


def restrict(alpha: GroupHom, x: BurnsideElement) -> BurnsideElement:
    """``alpha^*``: pull an element of ``A(K)`` back along ``alpha: G -> K``."""
    if x.group is not alpha.target:
        raise RingMismatch(f"element lives over {x.group}, not over {alpha.target}")
    src_reg, tgt_reg = registry(alpha.source), registry(alpha.target)
    cache = _cache(alpha, "_restrict_cache")

    def basis(k):
        hit = cache.get(k)
        if hit is None:
            hit = defaultdict(int)
            for _, stab in orbit_decomposition(alpha.source.whole(), tgt_reg.reps[k], f=alpha):
                hit[src_reg.classify(stab)] += 1
            cache[k] = hit = dict(hit)
        return hit
    return _apply_linear(x, alpha.source, basis)


def deflate(f: GroupHom, x: BurnsideElement) -> BurnsideElement:
    """``f_*``: ``[G/L] -> [K/f(L)]``, the class of ``K x_G G/L``."""
    if x.group is not f.source:
        raise RingMismatch(f"element lives over {x.group}, not over {f.source}")
    src_reg, tgt_reg = registry(f.source), registry(f.target)
    cache = _cache(f, "_deflate_cache")

    def basis(k):
        hit = cache.get(k)
        if hit is None:
            hit = cache[k] = {tgt_reg.classify(f.image_subgroup(src_reg.reps[k])): 1}
        return hit
    return _apply_linear(x, f.target, basis)


def transfer(along: Subgroup | GroupHom, x: BurnsideElement) -> BurnsideElement:
    """Induction ``G x_H -`` from a subgroup ``H`` (or along an injective hom)."""
    if isinstance(along, Subgroup):
        H, incl = along.as_group()
        if x.group is along.parent:
            raise RingMismatch("transfer expects an element over the subgroup, not the ambient group")
        along = incl
    if not along.is_injective():
        raise ValueError("transfer needs an injective homomorphism")
    return deflate(along, x)


def external_product(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """``[G/H] x [K/L] = [(G x K)/(H x L)]``."""
    if x.ring != y.ring:
        raise RingMismatch(f"coefficient rings {x.ring} and {y.ring} differ")
    P = direct_product(x.group, y.group)
    rx, ry, rp = registry(x.group), registry(y.group), registry(P)
    cache = _cache(P, "_external_cache")
    R = x.ring
    out: dict[int, object] = defaultdict(lambda: R.zero)
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            k = cache.get((i, j))
            if k is None:
                k = cache[(i, j)] = rp.classify(P.product_subgroup([rx.reps[i], ry.reps[j]]))
            out[k] = R.add(out[k], R.mul(a, b))
    return BurnsideElement(P, out, R)


def external_product_many(elements) -> BurnsideElement:
    """``x_1 x ... x x_n`` over ``direct_product(G_1, ..., G_n)``."""
    elements = list(elements)
    R = elements[0].ring if elements else ZZ
    if any(x.ring != R for x in elements):
        raise RingMismatch("coefficient rings differ")
    P = direct_product(*[x.group for x in elements])
    regs = [registry(x.group) for x in elements]
    rp = registry(P)
    cache = _cache(P, "_external_cache_n")
    out: dict[int, object] = defaultdict(lambda: R.zero)
    terms = [[(R.one, ())]]
    for x in elements:
        terms.append([(R.mul(c, a), key + (i,)) for c, key in terms[-1] for i, a in x.coeffs.items()])
    for c, key in terms[-1]:
        k = cache.get(key)
        if k is None:
            k = cache[key] = rp.classify(P.product_subgroup([reg.reps[i] for reg, i in zip(regs, key)]))
        out[k] = R.add(out[k], c)
    return BurnsideElement(P, out, R)


def diagonal_product(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Internal product as restriction of the external one along the diagonal."""
    from .group_core import diagonal

    return restrict(diagonal(x.group), external_product(x, y))


def pullback_identification(x: BurnsideElement, f: GroupHom) -> BurnsideElement:
    """Transport along an isomorphism ``f: G -> K`` (``x`` over ``G``)."""
    if not (f.is_injective() and f.is_surjective()):
        raise ValueError("not an isomorphism")
    return deflate(f, x)


# -- power operations ---------------------------------------------------------


def juxtapose_subgroups(A: Subgroup, B: Subgroup, G: PermGroup) -> Subgroup:
    """The image of ``A x B`` under ``Sigma_p wr G x Sigma_q wr G -> Sigma_{p+q} wr G``."""
    Wp, Wq = A.parent, B.parent
    W = wreath_product(Wp.m + Wq.m, G)
    ra = Wp.elements[A.members]
    rb = Wq.elements[B.members] + Wp.degree
    rows = np.concatenate([np.repeat(ra, len(rb), axis=0), np.tile(rb, (len(ra), 1))], axis=1)
    return Subgroup(W, W.index_many(rows) if W.degree else np.array([0]))


def _young_maps(p: int, q: int, G: PermGroup):
    """Maps out of ``(Sigma_p x Sigma_q) x G``: the two legs of the diagonal into
    ``Sigma_p x G`` and ``Sigma_q x G``, and the juxtaposition ``J`` into ``Sigma_{p+q} x G``."""
    cache = _cache(G, "_young_maps")
    hit = cache.get((p, q))
    if hit is not None:
        return hit
    Sp, Sq, Sm = symmetric_group(p), symmetric_group(q), symmetric_group(p + q)
    SpSq = direct_product(Sp, Sq)
    src = direct_product(SpSq, G)
    A, B = direct_product(Sp, G), direct_product(Sq, G)

    def leg(which, target):
        def fn(rows):
            pq, g = src.split(rows)
            return target.join([SpSq.split(pq)[which], g])
        return GroupHom.from_rows(src, target, fn, check=False, name=f"leg{which + 1}")
    SmG = direct_product(Sm, G)
    J = GroupHom(src, SmG, SmG.index_many(src.elements), check=False, name=f"young_{p},{q}")
    cache[(p, q)] = hit = (leg(0, A), leg(1, B), J)
    return hit


def restricted_pair(c: BurnsideElement, d: BurnsideElement) -> BurnsideElement:
    """``Delta_G^*(c x d)`` in ``A((Sigma_p x Sigma_q) x G)`` for ``c`` over ``Sigma_p x G``
    and ``d`` over ``Sigma_q x G``.

    Computed from the orbits of ``(Sigma_p x Sigma_q) x G`` on products of coset
    spaces, so the product ``(Sigma_p x G) x (Sigma_q x G)`` is never built.
    """
    from .gset import set_product

    if c.ring != d.ring:
        raise RingMismatch("coefficient rings differ")
    Pc, Pd = c.group, d.group
    p, q = Pc.factors[0].degree, Pd.factors[0].degree
    G = Pc.factors[1]
    h1, h2, _ = _young_maps(p, q, G)
    rc, rd = registry(Pc), registry(Pd)
    cache = _cache(G, "_restricted_pair_cache")
    R = c.ring
    out: dict[int, object] = defaultdict(lambda: R.zero)
    for i, a in c.coeffs.items():
        for j, b in d.coeffs.items():
            key = (p, q, i, j)
            hit = cache.get(key)
            if hit is None:
                X = cosets(Pc, rc.reps[i]).pullback(h1)
                Y = cosets(Pd, rd.reps[j]).pullback(h2)
                hit = cache[key] = decompose(set_product(X, Y)).coeffs
            ab = R.mul(a, b)
            for k, n in hit.items():
                out[k] = R.add(out[k], R.mul(ab, n))
    return BurnsideElement(h1.source, out, R)


@dataclass
class ExpSequence:
    """Truncated sequence ``(x_0, ..., x_N)``.

    Full sequences have ``x_m`` over ``Sigma_m wr G``; restricted ones
    (``restricted=True``) carry ``(delta_m)^* x_m`` over ``Sigma_m x G``.
    """

    base: PermGroup
    entries: list
    restricted: bool = False

    @property
    def N(self) -> int:
        return len(self.entries) - 1

    @property
    def ring(self) -> Ring:
        return self.entries[0].ring

    def __getitem__(self, m: int) -> BurnsideElement:
        return self.entries[m]

    def __len__(self):
        return len(self.entries)

    def group(self, m: int) -> PermGroup:
        return ambient(self.base, m, self.restricted)

    def _combine(self, p, i, q, j) -> dict[int, int]:
        G = self.base
        cache = _cache(G, "_combine_restricted" if self.restricted else "_combine_full")
        key = (p, i, q, j)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if not self.restricted:
            Wp, Wq = wreath_product(p, G), wreath_product(q, G)
            S = juxtapose_subgroups(registry(Wp).reps[i], registry(Wq).reps[j], G)
            hit = {registry(S.parent).classify(S): 1}
        else:
            A, B = direct_product(symmetric_group(p), G), direct_product(symmetric_group(q), G)
            a = BurnsideElement(A, {i: 1})
            b = BurnsideElement(B, {j: 1})
            _, _, J = _young_maps(p, q, G)
            hit = deflate(J, restricted_pair(a, b)).coeffs
        cache[key] = hit
        return hit

    def _sum_term(self, other: "ExpSequence", m: int, skip_p0: bool = False) -> BurnsideElement:
        R = self.ring
        out: dict[int, object] = defaultdict(lambda: R.zero)
        for p in range(1 if skip_p0 else 0, m + 1):
            q = m - p
            for i, c in self.entries[p].coeffs.items():
                for j, d in other.entries[q].coeffs.items():
                    cd = R.mul(c, d)
                    for k, n in self._combine(p, i, q, j).items():
                        out[k] = R.add(out[k], R.mul(cd, n))
        return BurnsideElement(self.group(m), out, R)

    def star(self, other: "ExpSequence") -> "ExpSequence":
        """Sequence of the sum: ``x_m = sum_{p+q=m} tr(a_p x b_q)``."""
        if other.base is not self.base or other.restricted != self.restricted:
            raise RingMismatch("sequences over different bases")
        N = min(self.N, other.N)
        return ExpSequence(self.base, [self._sum_term(other, m) for m in range(N + 1)], self.restricted)

    def inverse(self) -> "ExpSequence":
        """The sequence of the negative, solved degree by degree from ``x * (-x) = 1``."""
        R = self.ring
        out = ExpSequence(self.base, [unit(self.base, 0, self.restricted, R)], self.restricted)
        for m in range(1, self.N + 1):
            out.entries.append(BurnsideElement.zero(self.group(m), R))
            out.entries[m] = -self._sum_term(out, m, skip_p0=True)
        return out

    def power(self, n: int) -> "ExpSequence":
        """``n``-fold star product (``n`` may be negative)."""
        if n < 0:
            return self.power(-n).inverse()
        result = ExpSequence.unit(self.base, self.N, self.restricted, self.ring)
        base = self
        while n:
            if n & 1:
                result = result.star(base)
            n >>= 1
            if n:
                base = base.star(base)
        return result

    @classmethod
    def unit(cls, G: PermGroup, N: int, restricted=False, ring: Ring = ZZ) -> "ExpSequence":
        """Sequence of ``0``: ``1`` in degree 0 and zero above."""
        entries = [unit(G, 0, restricted, ring)] + [BurnsideElement.zero(ambient(G, m, restricted), ring)
                                                    for m in range(1, N + 1)]
        return cls(G, entries, restricted)

    def truncate(self, N: int) -> "ExpSequence":
        return ExpSequence(self.base, self.entries[:N + 1], self.restricted)

    def restrict_diagonal(self) -> "ExpSequence":
        """Apply ``(delta_m)^*`` entrywise."""
        if self.restricted:
            return self
        return ExpSequence(self.base, [restrict(wreath_product(m, self.base).delta, x)
                                       for m, x in enumerate(self.entries)], True)

    def check_exponential(self, report=None):
        """``Phi_{p,q}^* x_{p+q} = x_p x x_q`` for all ``p + q <= N`` (full sequences only)."""
        from .reports import Report

        report = report or Report("exponential condition")
        G = self.base
        for m in range(self.N + 1):
            for p in range(m + 1):
                lhs = restrict(juxtaposition(p, m - p, G), self.entries[m])
                rhs = external_product(self.entries[p], self.entries[m - p])
                report.check("exponential", {"group": str(G), "p": p, "q": m - p}, lhs, rhs)
        return report


def ambient(G: PermGroup, m: int, restricted: bool = False) -> PermGroup:
    if restricted:
        return direct_product(symmetric_group(m), G)
    return wreath_product(m, G)


def unit(G: PermGroup, m: int, restricted=False, ring: Ring = ZZ) -> BurnsideElement:
    return BurnsideElement.one(ambient(G, m, restricted), ring)


def _basis_sequence(G: PermGroup, k: int, N: int, restricted: bool) -> ExpSequence:
    """``(P^m[G/H_k])_m`` from the orbits of ``(G/H_k)^m``."""
    cache = _cache(registry(G), "_basis_restricted" if restricted else "_basis_full")
    have = cache.setdefault(k, [])
    if len(have) <= N:
        X = cosets(G, registry(G).reps[k])
        for m in range(len(have), N + 1):
            Y = diagonal_power_set(X, m) if restricted else power_set(X, m)
            have.append(decompose(Y))
    return ExpSequence(G, have[:N + 1], restricted)


def exp_sequence(x: BurnsideElement, N: int, restricted: bool = False) -> ExpSequence:
    """``(P^0 x, ..., P^N x)``, or their diagonal restrictions when ``restricted``."""
    if x.ring != ZZ:
        raise NoPowerStructure(f"power operations need integral input, got coefficients in {x.ring}")
    G = x.group
    cache = _cache(G, "_exp_cache")
    key = (frozenset(x.coeffs.items()), restricted)
    hit = cache.get(key)
    if hit is not None and hit.N >= N:
        return hit.truncate(N)
    seq = ExpSequence.unit(G, N, restricted)
    for k in sorted(x.coeffs):
        seq = seq.star(_basis_sequence(G, k, N, restricted).power(x.coeffs[k]))
    cache[key] = seq
    return seq


def power(x: BurnsideElement, m: int) -> BurnsideElement:
    """``P^m(x)`` in ``A(Sigma_m wr G)``."""
    return exp_sequence(x, m)[m]


def restricted_power(x: BurnsideElement, m: int) -> BurnsideElement:
    """``(delta_m)^* P^m(x)`` in ``A(Sigma_m x G)``."""
    return exp_sequence(x, m, restricted=True)[m]


# -- the deflation pairing ------------------------------------------------------


def _pair_basis(P: ProductGroup, i: int, j: int) -> dict[int, int]:
    cache = _cache(P, "_pair_cache")
    hit = cache.get((i, j))
    if hit is not None:
        return hit
    K, G = P.factors
    prK, prG = P.projections
    rG = registry(G)
    hit = defaultdict(int)
    for _, stab in orbit_decomposition(registry(P).reps[i], registry(K).reps[j], f=prK):
        hit[rG.classify(prG.image_subgroup(stab))] += 1
    cache[(i, j)] = hit = dict(hit)
    return hit


def _split_pair_group(r: BurnsideElement, K: PermGroup | None):
    P = r.group
    if not isinstance(P, ProductGroup) or len(P.factors) != 2:
        raise RingMismatch(f"pairing needs an element over a product K x G, got {P}")
    if K is not None and P.factors[0] is not K:
        raise RingMismatch("first factor does not match the Burnside argument")
    return P


def pairing(r: BurnsideElement, x: BurnsideElement) -> BurnsideElement:
    """``<r, x>`` for ``r`` over ``K x G`` and integral ``x`` over ``K``; lands in ``A(G)``.

    On basis classes ``<[(K x G)/M], [K/H]>`` sums ``[G/pr_G Stab_M(kH)]`` over the
    ``M``-orbits of ``K/H``.
    """
    if x.ring != ZZ:
        raise RingMismatch("the Burnside argument of the pairing must be integral")
    P = _split_pair_group(r, x.group)
    K, G = P.factors
    R = r.ring
    out: dict[int, object] = defaultdict(lambda: R.zero)
    for i, c in r.coeffs.items():
        for j, n in x.coeffs.items():
            cn = R.mul(c, n)
            for k, m in _pair_basis(P, i, j).items():
                out[k] = R.add(out[k], R.mul(cn, m))
    return BurnsideElement(G, out, R)


def pairing_composite(r: BurnsideElement, x: BurnsideElement) -> BurnsideElement:
    """``(pr_G)_* Delta_K^* (r x x)``: the pairing assembled from the generic operations."""
    if x.ring != ZZ:
        raise RingMismatch("the Burnside argument of the pairing must be integral")
    P = _split_pair_group(r, x.group)
    K, G = P.factors
    xr = x if r.ring == ZZ else BurnsideElement(K, x.coeffs, r.ring)
    PK = direct_product(P, K)
    delta = GroupHom.from_rows(P, PK, lambda rows: PK.join([rows, P.split(rows)[0]]), check=False,
                               name="Delta_K")
    return deflate(P.projections[1], restrict(delta, external_product(r, xr)))


def lift_to_product(r: BurnsideElement, K: PermGroup) -> BurnsideElement:
    """``pr_G^* r`` over ``K x G`` for ``r`` over ``G`` (with ``K`` trivial: the identification)."""
    P = direct_product(K, r.group)
    return restrict(P.projections[1], r)


# -- checkers -----------------------------------------------------------------


def _class_reps(G: PermGroup) -> list[Subgroup]:
    from .burnside import subgroup_classes

    return subgroup_classes(G).class_reps


def _basis_el(G: PermGroup) -> list[BurnsideElement]:
    return [BurnsideElement.basis(H) for H in _class_reps(G)]


def _pairing_corpus():
    """Groups and homomorphisms the pairing axioms are evaluated on (all of order at most 24)."""
    from .group_core import cyclic_group, hom_from_images, inclusion_hom, sign_hom

    e, S2, S3, S4 = (symmetric_group(m) for m in (1, 2, 3, 4))
    C3 = cyclic_group(3)
    V = direct_product(S2, S2)
    D8 = wreath_product(2, S2)
    triv = GroupHom.trivial
    maps = [
        inclusion_hom(e, S2), _named(triv(S2, e), "S2->e"), inclusion_hom(S2, S3), sign_hom(3),
        _named(triv(S3, e), "S3->e"),
        GroupHom.from_rows(S2, V, lambda r: V.join([r, r]), name="diag"),
    ]
    subgroups = [
        (inclusion_hom(e, S2), [e, S2, S3]), (inclusion_hom(S2, S3), [e, S2]),
        (hom_from_images(C3, S3, [g for g in C3.generators], name="C3<S3"), [e, S2]),
        (inclusion_hom(S3, S4), [e]), (inclusion_hom(D8, S4), [e]),
        (young_inclusion([2, 2]), [e]),
    ]
    # the quotient Sigma_4 -> Sigma_3 by the Klein four group, from the action on pair partitions
    S4_S3 = hom_from_images(S4, S3, [_pair_partition_action(g) for g in S4.generators], name="S4->S3")
    surjections = [
        (sign_hom(3), [e, S2]), (_named(triv(S2, e), "S2->e"), [e, S2, S3]),
        (_named(triv(S3, e), "S3->e"), [e, S2]),
        (_named(V.projections[0], "pr1"), [e, S2]), (S4_S3, [e]),
    ]
    return {"maps": maps, "subgroups": subgroups, "surjections": surjections,
            "groups": [e, S2, C3, S3, V, S4], "small": [e, S2, S3]}


def _pair_partition_action(g: np.ndarray) -> np.ndarray:
    parts = [frozenset({frozenset({0, 1}), frozenset({2, 3})}),
             frozenset({frozenset({0, 2}), frozenset({1, 3})}),
             frozenset({frozenset({0, 3}), frozenset({1, 2})})]
    image = [parts.index(frozenset(frozenset(int(g[i]) for i in pair) for pair in P)) for P in parts]
    return np.array(image, dtype=np.int64)


def _fiber_diagonal(K: PermGroup, G: PermGroup) -> GroupHom:
    """``(K x K) x G -> (K x G) x (K x G)``, ``(k1, k2, g) -> ((k1, g), (k2, g))``."""
    KK = direct_product(K, K)
    src = direct_product(KK, G)
    KG = direct_product(K, G)
    tgt = direct_product(KG, KG)

    def fn(rows):
        kk, g = src.split(rows)
        k1, k2 = KK.split(kk)
        return tgt.join([KG.join([k1, g]), KG.join([k2, g])])
    return GroupHom.from_rows(src, tgt, fn, check=False, name="fiber_diag")


def check_pairing_axioms(corpus=None, vii_cases=None):
    """Evaluate the deflation-pairing axioms i)-vii) for the Burnside pairing.

    Axiom v is checked twice: literally, with internal products in ``A(K x G)``
    and ``A(K)``, and in its external form over ``(K x K) x G``.  The reversed
    relation of axiom ii is read as ``<res r, y> = <r, tr y>``.
    """
    from .group_core import double_coset_reps
    from .reports import Report

    C = corpus or _pairing_corpus()
    rep = Report("deflation pairing axioms for the Burnside pairing")
    rep.notes.append("ii-reversed is read as <res^{KxG}_{LxG} r, y>_{L,G} = <r, tr_L^K y>_{K,G}")
    rep.notes.append("v is the literal internal form; v-external pairs r x s over (K x K) x G with x x y")

    for G in C["groups"]:
        K = symmetric_group(1)
        for r in _basis_el(G):
            lifted = restrict(direct_product(K, G).projections[1], r)
            rep.check("iv", {"G": str(G), "r": str(r)}, pairing(lifted, BurnsideElement.one(K)), r)

    for K in C["small"]:
        for G in C["small"]:
            P = direct_product(K, G)
            rs, xs = _basis_el(P), _basis_el(K)
            for r in rs:
                for x in xs:
                    inst = {"K": str(K), "G": str(G), "r": str(r), "x": str(x)}
                    rep.check("composite", inst, pairing(r, x), pairing_composite(r, x))
            for r, s in zip(rs, rs[1:] + rs[:1]):
                for x, y in zip(xs, xs[1:] + xs[:1]):
                    inst = {"K": str(K), "G": str(G), "r": str(r), "s": str(s), "x": str(x), "y": str(y)}
                    rep.check("biadditive", inst, pairing(r + s, x + y),
                              pairing(r, x) + pairing(r, y) + pairing(s, x) + pairing(s, y))
            prK = P.projections[0]
            diag = _fiber_diagonal(K, G)
            for r in rs:
                for s in rs:
                    for x in xs:
                        for y in xs:
                            inst = {"K": str(K), "G": str(G), "r": str(r), "s": str(s), "x": str(x), "y": str(y)}
                            pr, ps = pairing(r, x), pairing(s, y)
                            rep.check("v", inst, pairing(r * s, x * y), pr * ps)
                            rs_ext = restrict(diag, external_product(r, s))
                            rep.check("v-external", inst, pairing(rs_ext, external_product(x, y)), pr * ps)
                    for x in xs:
                        for y in xs:
                            inst = {"K": str(K), "G": str(G), "r": str(r), "x": str(x), "y": str(y)}
                            rep.check("vi", inst, pairing(r * restrict(prK, y), x), pairing(r, y * x))

    for alpha in C["maps"]:
        G, L = alpha.source, alpha.target
        for K in C["small"]:
            Ka = product_hom(GroupHom.identity(K), alpha)
            for r in _basis_el(direct_product(K, L)):
                for x in _basis_el(K):
                    inst = {"alpha": alpha.name, "K": str(K), "r": str(r), "x": str(x)}
                    rep.check("i", inst, pairing(restrict(Ka, r), x), restrict(alpha, pairing(r, x)))

    for incl, Gs in C["subgroups"]:
        L, K = incl.source, incl.target
        for G in Gs:
            up = product_hom(incl, GroupHom.identity(G))
            for r in _basis_el(direct_product(L, G)):
                for x in _basis_el(K):
                    inst = {"L": incl.name, "G": str(G), "r": str(r), "x": str(x)}
                    rep.check("ii", inst, pairing(transfer(up, r), x), pairing(r, restrict(incl, x)))
            for r in _basis_el(direct_product(K, G)):
                for y in _basis_el(L):
                    inst = {"L": incl.name, "G": str(G), "r": str(r), "y": str(y)}
                    rep.check("ii-reversed", inst, pairing(restrict(up, r), y), pairing(r, transfer(incl, y)))

    for alpha, Gs in C["surjections"]:
        L, K = alpha.source, alpha.target
        for G in Gs:
            aG = product_hom(alpha, GroupHom.identity(G))
            for r in _basis_el(direct_product(K, G)):
                for x in _basis_el(K):
                    inst = {"alpha": alpha.name, "G": str(G), "r": str(r), "x": str(x)}
                    rep.check("iii", inst, pairing(restrict(aG, r), restrict(alpha, x)), pairing(r, x))

    for n, k, G in (vii_cases or _vii_cases()):
        _check_vii(rep, n, k, G)

    for G in (symmetric_group(2),):
        W = wreath_product(2, G)
        H = W.delta.image_subgroup()
        J = juxtaposition(1, 1, G).image_subgroup()
        reps = double_coset_reps(W, H, J)
        rep.check("double-coset", {"G": str(G), "n": 2, "p": 1, "q": 1}, len(reps), 1)
    return rep


def _vii_cases():
    e, S2, S3 = (symmetric_group(m) for m in (1, 2, 3))
    return [(2, 1, e), (2, 2, e), (2, 2, S2), (3, 2, e), (2, 3, e), (3, 1, S2), (2, 2, S3)]


def _check_vii(rep, n: int, k: int, G: PermGroup):
    """``<delta^* P^n<r, y>, x> = <delta_rel^*(P^n(r) . (Sigma_n wr pr)^* P^n(y)), (Sigma_n wr p)^* x>``."""
    Sk, Sn = symmetric_group(k), symmetric_group(n)
    KG = direct_product(Sk, G)
    Wk = wreath_product(n, Sk)
    wpr = wreath_map(n, KG.projections[0])
    drel = relative_delta(n, Sk, G)
    for r in _basis_el(KG):
        Pr = power(r, n)
        for y in _basis_el(Sk):
            left_inner = restricted_power(pairing(r, y), n)
            right_inner = restrict(drel, Pr * restrict(wpr, power(y, n)))
            for x in _basis_el(Sn):
                inst = {"n": n, "k": k, "G": str(G), "r": str(r), "y": str(y), "x": str(x)}
                rep.check("vii", inst, pairing(left_inner, x), pairing(right_inner, restrict(Wk.projection, x)))


def _named(f: GroupHom, name: str) -> GroupHom:
    f.name = name
    return f


def _power_corpus():
    from .group_core import inclusion_hom, sign_hom

    e, S2, S3 = (symmetric_group(m) for m in (1, 2, 3))
    V = direct_product(S2, S2)
    return {
        "groups": [(e, 4), (S2, 3), (S3, 3)],
        "maps": [inclusion_hom(e, S2), inclusion_hom(S2, S3), sign_hom(3),
                 _named(GroupHom.trivial(S2, e), "S2->e"),
                 GroupHom.from_rows(S2, V, lambda r: V.join([r, r]), name="diag")],
        "naturality_degree": 3,
        "sum_degree": 3,
    }


def _power_samples(G: PermGroup) -> list[BurnsideElement]:
    basis = _basis_el(G)
    out = list(basis) + [-b for b in basis]
    out += [a + b for i, a in enumerate(basis) for b in basis[i:]]
    out += [a - b for i, a in enumerate(basis) for b in basis[i + 1:]]
    return out


def check_power_identities(corpus=None):
    """Check (a) ``Phi_{i,j}^* P^{i+j}(x) = P^i(x) x P^j(x)``, (b) naturality
    ``(Sigma_n wr phi)^* P^n(c) = P^n(phi^* c)``, and (c) the sum formula, against
    power sets of disjoint unions for actual sets and through the library's
    recursion for virtual summands."""
    from .gset import disjoint_union
    from .reports import Report

    C = corpus or _power_corpus()
    rep = Report("power operation identities")
    for G, N in C["groups"]:
        for x in _power_samples(G):
            seq = exp_sequence(x, N)
            for m in range(seq.N + 1):
                for i in range(m + 1):
                    lhs = restrict(juxtaposition(i, m - i, G), seq[m])
                    rhs = external_product(seq[i], seq[m - i])
                    rep.check("exponential", {"G": str(G), "x": str(x), "i": i, "j": m - i}, lhs, rhs)
    for phi in C["maps"]:
        H, G = phi.source, phi.target
        for c in _power_samples(G):
            pc = restrict(phi, c)
            for n in range(C["naturality_degree"] + 1):
                if H.order ** n * math.factorial(n) > 2000 or G.order ** n * math.factorial(n) > 2000:
                    continue
                lhs = restrict(wreath_map(n, phi), power(c, n))
                rep.check("naturality", {"phi": phi.name, "c": str(c), "n": n}, lhs, power(pc, n))
    for G, _ in C["groups"]:
        reps = _class_reps(G)
        for m in range(C["sum_degree"] + 1):
            for i, H in enumerate(reps):
                for K in reps[i:]:
                    c, d = BurnsideElement.basis(H), BurnsideElement.basis(K)
                    inst = {"G": str(G), "c": str(c), "d": str(d), "m": m}
                    rhs = _sum_formula(c, d, m)
                    X = disjoint_union(cosets(G, H), cosets(G, K))
                    rep.check("sum-formula", inst, decompose(power_set(X, m)), rhs)
                    rep.check("sum-formula-virtual", inst, power(c, m), _sum_formula(c - d, d, m))
    return rep


def _sum_formula(c: BurnsideElement, d: BurnsideElement, m: int) -> BurnsideElement:
    """``sum_{p+q=m} tr_{Sigma_p wr G x Sigma_q wr G}^{Sigma_m wr G}(P^p(c) x P^q(d))``."""
    G = c.group
    total = BurnsideElement.zero(wreath_product(m, G))
    for p in range(m + 1):
        total = total + transfer(juxtaposition(p, m - p, G), external_product(power(c, p), power(d, m - p)))
    return total


def power_symmetric(x: BurnsideElement, m: int) -> BurnsideElement:
    """``P^m(x)`` for ``x`` over the trivial group, moved from ``Sigma_m wr e`` to ``Sigma_m``."""
    if x.group.order != 1:
        raise ValueError("power_symmetric needs an element over the trivial group")
    return deflate(wreath_product(m, x.group).projection, power(x, m))
