"""Finite G-sets given by the action of each generator.

A :class:`GSet` stores one image array per group generator; the action of an
arbitrary element is recovered along the generator word recorded by the group's
closure, so a dense ``|G| x |X|`` table is only built when asked for.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .config import DEBUG, SetTooLarge, bounds
from .group_core import GroupHom, PermGroup, Subgroup, direct_product, wreath_product


def _check_size(n: int):
    if n > bounds.set_size:
        raise SetTooLarge(f"G-set with {n} points exceeds bound {bounds.set_size}")


class GSet:
    """A finite left G-set ``{0, ..., size-1}``."""

    def __init__(self, group: PermGroup, gen_act: Sequence[np.ndarray], size: int | None = None):
        self.group = group
        if size is None:
            size = len(gen_act[0]) if len(gen_act) else 0
        self.size = int(size)
        _check_size(self.size)
        if len(gen_act) != len(group.generators):
            raise ValueError("need one action array per generator")
        self.gen_act = np.asarray(gen_act, dtype=np.int64).reshape(len(group.generators), self.size)
        for a in self.gen_act:
            if not np.array_equal(np.sort(a), np.arange(self.size)):
                raise ValueError("generator does not act bijectively")
        if DEBUG:
            self.check_action()

    def __repr__(self):
        return f"<GSet of {self.group} size={self.size}>"

    def __len__(self):
        return self.size

    @classmethod
    def trivial(cls, group: PermGroup, size: int = 1) -> "GSet":
        return cls(group, [np.arange(size)] * len(group.generators), size)

    # -- action -------------------------------------------------------------
    def images(self, points) -> np.ndarray:
        """``out[g, j] = g . points[j]`` for every group element ``g``."""
        G = self.group
        pts = np.atleast_1d(np.asarray(points, dtype=np.int64))
        out = np.empty((G.order, len(pts)), dtype=np.int64)
        out[0] = pts
        for level in G.bfs_levels:
            out[level] = self.gen_act[G.via[level][:, None], out[G.parent[level]]]
        return out

    @cached_property
    def table(self) -> np.ndarray:
        """Dense table ``act[g, x] = g . x``."""
        _check_size(self.group.order * self.size)
        return self.images(np.arange(self.size))

    def action_of(self, g: int) -> np.ndarray:
        if "table" in self.__dict__:
            return self.table[g]
        out = np.arange(self.size)
        for s in reversed(self.group.word(int(g))):
            out = self.gen_act[s][out]
        return out

    def check_action(self):
        """Verify ``(s g) . x = s . (g . x)`` for generators ``s`` and all ``g``."""
        G = self.group
        T = self.table
        if not np.array_equal(T[0], np.arange(self.size)):
            raise ValueError("identity does not act trivially")
        allg = np.arange(G.order)
        for s, a in zip(G.generator_indices, self.gen_act):
            if not np.array_equal(T[G.mul_many(s, allg)], a[T]):
                raise ValueError("action table is not associative")

    # -- orbits -------------------------------------------------------------
    @cached_property
    def _components(self) -> np.ndarray:
        n = self.size
        if n == 0:
            return np.zeros(0, dtype=np.int64)
        if len(self.gen_act) == 0:
            return np.arange(n)
        src = np.tile(np.arange(n), len(self.gen_act))
        graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, self.gen_act.ravel())), shape=(n, n))
        _, comp = connected_components(graph, directed=True, connection="weak")
        return comp

    @cached_property
    def orbit_reps(self) -> np.ndarray:
        comp = self._components
        _, first = np.unique(comp, return_index=True)
        return np.sort(first)

    def orbit_sizes(self) -> np.ndarray:
        comp = self._components
        return np.bincount(comp)[comp[self.orbit_reps]]

    def stabilizer(self, x: int) -> Subgroup:
        img = self.images([x])[:, 0]
        return Subgroup(self.group, np.nonzero(img == x)[0])

    def orbits(self) -> list[tuple[int, Subgroup]]:
        """``(representative, stabilizer)`` for each orbit."""
        reps = self.orbit_reps
        sizes = self.orbit_sizes()
        out = []
        chunk = max(1, 2_000_000 // max(self.group.order, 1))
        for start in range(0, len(reps), chunk):
            block = reps[start:start + chunk]
            img = self.images(block)
            for j, x in enumerate(block):
                stab = Subgroup(self.group, np.nonzero(img[:, j] == x)[0])
                if stab.index != sizes[start + j]:
                    raise AssertionError("orbit-stabilizer count mismatch")
                out.append((int(x), stab))
        return out

    def num_orbits(self) -> int:
        return len(self.orbit_reps)

    def fixed_points(self, H: Subgroup) -> int:
        if H.parent is not self.group:
            raise ValueError("subgroup of a different group")
        fixed = np.ones(self.size, dtype=bool)
        for h in H.generators:
            fixed &= self.action_of(h) == np.arange(self.size)
        return int(fixed.sum())

    # -- constructions ------------------------------------------------------
    def pullback(self, alpha: GroupHom) -> "GSet":
        """Restriction along ``alpha: K -> G``: the K-set with ``k.x = alpha(k).x``."""
        if alpha.target is not self.group:
            raise ValueError("homomorphism target is not the acting group")
        acts = [self.action_of(alpha.image[s]) for s in alpha.source.generator_indices]
        return GSet(alpha.source, acts, self.size)


def cosets(G: PermGroup, H: Subgroup) -> GSet:
    """``G/H`` with left translation; point ``c`` is the coset labelled ``c``."""
    if H.parent is not G:
        raise ValueError("H is not a subgroup of G")
    label, reps = H.coset_data
    acts = [label[G.mul_many(s, reps)] for s in G.generator_indices]
    return GSet(G, acts, len(reps))


def pullback(alpha: GroupHom, Y: GSet) -> GSet:
    return Y.pullback(alpha)


def orbits(X: GSet):
    return X.orbits()


def fixed_points(X: GSet, H: Subgroup) -> int:
    return X.fixed_points(H)


def disjoint_union(*sets: GSet) -> GSet:
    G = sets[0].group
    if any(X.group is not G for X in sets):
        raise ValueError("G-sets over different groups")
    offs = np.cumsum([0] + [X.size for X in sets])
    acts = [np.concatenate([X.gen_act[s] + o for X, o in zip(sets, offs)]) if sets else np.zeros(0)
            for s in range(len(G.generators))]
    return GSet(G, acts, int(offs[-1]))


def external_set_product(X: GSet, Y: GSet) -> GSet:
    """``X x Y`` as a ``G x K``-set; point ``(x, y)`` is ``x + |X| y``."""
    P = direct_product(X.group, Y.group)
    _check_size(X.size * Y.size)
    xs = np.tile(np.arange(X.size), Y.size)
    ys = np.repeat(np.arange(Y.size), X.size)
    pg, pk = P.projections
    acts = []
    for s in P.generator_indices:
        ax = X.action_of(pg.image[s])
        ay = Y.action_of(pk.image[s])
        acts.append(ax[xs] + X.size * ay[ys])
    return GSet(P, acts, X.size * Y.size)


def set_product(X: GSet, Y: GSet) -> GSet:
    """Cartesian product with the diagonal action."""
    if X.group is not Y.group:
        raise ValueError("G-sets over different groups")
    _check_size(X.size * Y.size)
    xs = np.tile(np.arange(X.size), Y.size)
    ys = np.repeat(np.arange(Y.size), X.size)
    acts = [X.gen_act[s][xs] + X.size * Y.gen_act[s][ys] for s in range(len(X.group.generators))]
    return GSet(X.group, acts, X.size * Y.size)


def power_set(X: GSet, m: int) -> GSet:
    """``X^m`` over ``Sigma_m wr G``: ``(sigma; g).(x_1..x_m)_j = g_j . x_{sigma^-1(j)}``.

    The tuple ``(x_0, ..., x_{m-1})`` is the point ``sum x_j |X|^j``.
    """
    G = X.group
    W = wreath_product(m, G)
    n = X.size
    _check_size(n ** m)
    N = n ** m
    digits = (np.arange(N)[:, None] // (n ** np.arange(m))[None, :]) % n if m else np.zeros((1, 0), dtype=np.int64)
    weights = n ** np.arange(m)
    acts = []
    for s in W.generator_indices:
        sigma, g = W.split(W.elements[s])
        sigma = sigma[0]
        gidx = W.base_indices(g)[0]
        inv = np.argsort(sigma)
        y = np.empty_like(digits)
        for j in range(m):
            y[:, j] = X.action_of(gidx[j])[digits[:, inv[j]]]
        acts.append(y @ weights if m else np.zeros(1, dtype=np.int64))
    return GSet(W, acts, N)


def diagonal_power_set(X: GSet, m: int) -> GSet:
    """``X^m`` over ``Sigma_m x G``, ``(sigma, g).(x)_j = g . x_{sigma^-1(j)}``.

    Agrees with the pullback of :func:`power_set` along ``delta_m`` but never
    builds the wreath product.
    """
    from .group_core import symmetric_group

    G = X.group
    P = direct_product(symmetric_group(m), G)
    n = X.size
    N = n ** m
    _check_size(N)
    digits = (np.arange(N)[:, None] // (n ** np.arange(m))[None, :]) % n if m else np.zeros((1, 0), dtype=np.int64)
    weights = n ** np.arange(m)
    ps, pg = P.projections
    acts = []
    for s in P.generator_indices:
        sigma = P.factors[0].elements[ps.image[s]]
        ag = X.action_of(pg.image[s])
        inv = np.argsort(sigma)
        y = ag[digits[:, inv]] if m else digits
        acts.append(y @ weights if m else np.zeros(1, dtype=np.int64))
    return GSet(P, acts, N)


def coinduce_deflate(f: GroupHom, X: GSet) -> GSet:
    """``K x_G X`` for ``f: G -> K``: the quotient of ``K x X`` by ``(k f(g), x) ~ (k, g x)``."""
    G, K = f.source, f.target
    if X.group is not G:
        raise ValueError("X is not a G-set for the source of f")
    n = X.size
    _check_size(K.order * n)
    ks = np.repeat(np.arange(K.order), n)
    xs = np.tile(np.arange(n), K.order)
    src, dst = [], []
    for s, a in zip(G.generator_indices, X.gen_act):
        # (k f(s), x) ~ (k, s x)
        src.append(K.mul_many(ks, f.image[s]) * n + xs)
        dst.append(ks * n + a[xs])
    src = np.concatenate(src) if src else np.zeros(0, dtype=np.int64)
    dst = np.concatenate(dst) if dst else np.zeros(0, dtype=np.int64)
    total = K.order * n
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(total, total))
    ncls, comp = connected_components(graph, directed=True, connection="weak")
    acts = []
    for s in K.generator_indices:
        moved = K.mul_many(s, ks) * n + xs
        perm = np.empty(ncls, dtype=np.int64)
        perm[comp] = comp[moved]
        acts.append(perm)
    return GSet(K, acts, ncls)


def induce(H: Subgroup, X: GSet) -> GSet:
    """``G x_H X`` for an ``H``-set ``X`` (``X.group`` must be ``H.as_group()[0]``)."""
    Hg, incl = H.as_group()
    if X.group is not Hg:
        raise ValueError("X must be a G-set for H.as_group()")
    return coinduce_deflate(incl, X)


@dataclass
class VirtualGSet:
    """Formal integer combination of G-sets over one group."""

    group: PermGroup
    terms: list[tuple[GSet, int]] = field(default_factory=list)

    def __post_init__(self):
        for X, _ in self.terms:
            if X.group is not self.group:
                raise ValueError("all terms must share the group")

    def __add__(self, other: "VirtualGSet") -> "VirtualGSet":
        return VirtualGSet(self.group, self.terms + other.terms)

    def __neg__(self) -> "VirtualGSet":
        return VirtualGSet(self.group, [(X, -k) for X, k in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def fixed_points(self, H: Subgroup) -> int:
        return sum(k * X.fixed_points(H) for X, k in self.terms)

    def cardinality(self) -> int:
        return sum(k * X.size for X, k in self.terms)


def all_tuples(n: int, m: int):
    return itertools.product(range(n), repeat=m)
