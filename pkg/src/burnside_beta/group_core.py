"""Finite permutation groups stored fully enumerated.

Permutations are integer arrays of images and act on the left, so the product
``g*h`` is the array ``g[h]`` (apply ``h`` first).  Every group is built by a
breadth-first closure from its generators, which also records for each element
a word in the generators; G-sets use those words to act without a dense table.
"""

from __future__ import annotations

import itertools
import math
import re
import threading
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from .config import GroupTooLarge, bounds

_KEY_DEGREE_LIMIT = 15  # degree**degree must fit in int64


def as_perm(images: Iterable[int], degree: int | None = None) -> np.ndarray:
    p = np.asarray(list(images), dtype=np.int64)
    if degree is not None and len(p) != degree:
        raise ValueError(f"permutation has {len(p)} images, expected {degree}")
    if sorted(p.tolist()) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p.tolist()}")
    return p


def cycles_to_perm(cycles: Sequence[Sequence[int]], degree: int) -> np.ndarray:
    p = np.arange(degree, dtype=np.int64)
    seen: set[int] = set()
    for cyc in cycles:
        for a in cyc:
            if not 0 <= a < degree or a in seen:
                raise ValueError(f"bad cycle {tuple(cyc)} for degree {degree}")
            seen.add(a)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            p[a] = b
    return p


def perm_to_cycles(p: np.ndarray) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = int(p[start])
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = int(p[x])
        out.append(tuple(cyc))
    return out


def format_perm(p: np.ndarray) -> str:
    cycles = perm_to_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> np.ndarray:
    """Parse ``"(0 1)(2 3)"`` (spaces or commas inside a cycle)."""
    cycles = []
    for body in _CYCLE_RE.findall(text):
        parts = [s for s in re.split(r"[\s,]+", body.strip()) if s]
        if parts:
            cycles.append([int(s) for s in parts])
    rest = _CYCLE_RE.sub("", text).strip()
    if rest:
        raise ValueError(f"cannot parse permutation {text!r}")
    return cycles_to_perm(cycles, degree)


class PermGroup:
    """A finite permutation group with all elements enumerated.

    ``elements[0]`` is the identity.  Element ``i > 0`` equals
    ``generators[via[i]] * elements[parent[i]]``.
    """

    def __init__(self, degree, generators, elements, parent, via, name=None):
        self.degree = int(degree)
        self.generators = [np.asarray(g, dtype=np.int64) for g in generators]
        elements = np.asarray(elements, dtype=np.int64)
        self.elements = np.ascontiguousarray(elements.reshape(len(elements), self.degree))
        self.order = len(self.elements)
        self.parent = np.asarray(parent, dtype=np.int64)
        self.via = np.asarray(via, dtype=np.int64)
        self.name = name
        self._lock = threading.RLock()
        self._build_lookup()
        self.generator_indices = [int(self.index(g)) for g in self.generators]
        self.inverse = self.index_many(np.argsort(self.elements, axis=1))

    def __repr__(self):
        return f"<PermGroup {self.name or '?'} order={self.order} degree={self.degree}>"

    def __str__(self):
        return self.name or f"perm({self.degree})"

    # -- element lookup ----------------------------------------------------
    def _build_lookup(self):
        if 0 < self.degree <= _KEY_DEGREE_LIMIT:
            self._weights = self.degree ** np.arange(self.degree, dtype=np.int64)
            keys = self.elements @ self._weights
            self._key_order = np.argsort(keys, kind="stable")
            self._sorted_keys = keys[self._key_order]
            self._dict = None
        else:
            self._weights = None
            self._dict = {row.tobytes(): i for i, row in enumerate(self.elements)}

    def index_many(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows, dtype=np.int64)
        if self.degree == 0:
            return np.zeros(len(rows) if rows.ndim > 1 else 1, dtype=np.int64)
        rows = rows.reshape(-1, self.degree)
        if self._weights is not None:
            keys = rows @ self._weights
            pos = np.searchsorted(self._sorted_keys, keys)
            pos = np.minimum(pos, self.order - 1)
            if not np.array_equal(self._sorted_keys[pos], keys):
                raise KeyError("permutation not in group")
            return self._key_order[pos]
        try:
            return np.array([self._dict[r.tobytes()] for r in rows], dtype=np.int64)
        except KeyError:
            raise KeyError("permutation not in group") from None

    def index(self, perm) -> int:
        return int(self.index_many(np.asarray(perm, dtype=np.int64)[None, :])[0])

    def contains_perm(self, perm) -> bool:
        try:
            self.index(perm)
        except KeyError:
            return False
        return True

    # -- arithmetic --------------------------------------------------------
    @cached_property
    def _table(self):
        if self.order > 600:
            return None
        E = self.elements
        n = self.order
        rows = np.take_along_axis(np.repeat(E, n, axis=0), np.tile(E, (n, 1)), axis=1)
        return self.index_many(rows).reshape(n, n)

    def mul_many(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        tab = self._table
        if tab is not None:
            return tab[a, b]
        flat_a, flat_b = a.ravel(), b.ravel()
        rows = np.take_along_axis(self.elements[flat_a], self.elements[flat_b], axis=1)
        return self.index_many(rows).reshape(a.shape)

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_many(a, b))

    def conj_many(self, g, h) -> np.ndarray:
        """Indices of ``g h g^-1`` (broadcast over ``g`` and ``h``)."""
        g = np.asarray(g, dtype=np.int64)
        return self.mul_many(self.mul_many(g, h), self.inverse[g])

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([math.lcm(*ct) if ct else 1 for ct in self._cycle_types], dtype=np.int64)

    @cached_property
    def _cycle_type_data(self):
        n, d = self.order, self.degree
        if d == 0:
            return np.zeros(1, dtype=np.int64), [()]
        E = self.elements
        cur = E.copy()
        length = np.zeros((n, d), dtype=np.int64)
        ident = np.arange(d)
        for k in range(1, d + 1):
            hit = (cur == ident) & (length == 0)
            length[hit] = k
            cur = np.take_along_axis(E, cur, axis=1)
        counts = np.stack([(length == k).sum(axis=1) // k for k in range(1, d + 1)], axis=1)
        uniq, ids = np.unique(counts, axis=0, return_inverse=True)
        types = []
        for row in uniq:
            ct = []
            for k, c in enumerate(row, start=1):
                if k > 1:
                    ct.extend([k] * int(c))
            types.append(tuple(ct))
        return ids.reshape(-1), types

    @property
    def cycle_type_ids(self) -> np.ndarray:
        return self._cycle_type_data[0]

    @property
    def _cycle_types(self):
        ids, types = self._cycle_type_data
        return [types[i] for i in ids]

    @property
    def num_cycle_types(self) -> int:
        return len(self._cycle_type_data[1])

    @cached_property
    def bfs_levels(self) -> list[np.ndarray]:
        """Element indices grouped by word length (parents always lie one level up)."""
        depth = np.zeros(self.order, dtype=np.int64)
        for i in range(1, self.order):
            depth[i] = depth[self.parent[i]] + 1
        return [np.nonzero(depth == k)[0] for k in range(1, int(depth.max(initial=0)) + 1)]

    def word(self, g: int) -> list[int]:
        """Generator indices ``[s_1, ..., s_k]`` with ``g = gens[s_1] ... gens[s_k]``."""
        out = []
        while g != 0:
            out.append(int(self.via[g]))
            g = int(self.parent[g])
        return out

    # -- subgroups ---------------------------------------------------------
    def closure_indices(self, gens: Iterable[int]) -> np.ndarray:
        gens = np.unique(np.asarray(list(gens), dtype=np.int64))
        gens = gens[gens != 0]
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        frontier = np.array([0], dtype=np.int64)
        while len(frontier):
            prods = self.mul_many(gens[:, None], frontier[None, :]).ravel()
            prods = np.unique(prods)
            new = prods[~mask[prods]]
            mask[new] = True
            frontier = new
        return np.nonzero(mask)[0]

    def subgroup(self, gens: Iterable[int]) -> "Subgroup":
        gens = [int(g) for g in gens]
        return Subgroup(self, self.closure_indices(gens), generators=[g for g in gens if g != 0])

    def subgroup_from_perms(self, perms) -> "Subgroup":
        perms = list(perms)
        if not perms:
            return self.trivial_subgroup()
        return self.subgroup(self.index_many(np.array(perms)))

    def whole(self) -> "Subgroup":
        with self._lock:
            if "_whole" not in self.__dict__:
                self._whole = Subgroup(self, np.arange(self.order), generators=self.generator_indices)
            return self._whole

    def trivial_subgroup(self) -> "Subgroup":
        with self._lock:
            if "_trivial" not in self.__dict__:
                self._trivial = Subgroup(self, np.array([0]), generators=[])
            return self._trivial

    def find_conjugator(self, H: "Subgroup", K: "Subgroup") -> int | None:
        """Some ``g`` with ``g H g^-1 = K``, or None."""
        if H.order != K.order:
            return None
        if H.key == K.key:
            return 0
        if np.any(np.bincount(self.cycle_type_ids[H.members], minlength=self.num_cycle_types)
                  != np.bincount(self.cycle_type_ids[K.members], minlength=self.num_cycle_types)):
            return None
        ok = np.ones(self.order, dtype=bool)
        allg = np.arange(self.order)
        for h in H.generators:
            cand = allg[ok]
            ok[cand] = K.mask[self.conj_many(cand, h)]
            if not ok.any():
                return None
        return int(np.argmax(ok))


class Subgroup:
    """Subgroup of a PermGroup, stored as a sorted array of element indices."""

    def __init__(self, parent: PermGroup, members, generators=None, check=False):
        members = np.unique(np.asarray(members, dtype=np.int64))
        self.parent = parent
        self.members = members
        self.order = len(members)
        if self.order == 0 or members[0] != 0:
            raise ValueError("subgroup must contain the identity")
        if parent.order % self.order:
            raise ValueError(f"Lagrange violated: {self.order} does not divide {parent.order}")
        self._gens = None if generators is None else [int(g) for g in generators if g != 0]
        if check:
            closed = parent.closure_indices(self.members)
            if len(closed) != self.order:
                raise ValueError("member set is not closed under multiplication")

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent}>"

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.key == self.key

    def __hash__(self):
        return hash((id(self.parent), self.key))

    def __len__(self):
        return self.order

    def __contains__(self, g) -> bool:
        return bool(self.mask[int(g)])

    @cached_property
    def key(self) -> bytes:
        return self.members.tobytes()

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.members] = True
        return m

    @property
    def generators(self) -> list[int]:
        if self._gens is None:
            self._gens = self._greedy_generators()
        return self._gens

    def _greedy_generators(self) -> list[int]:
        G = self.parent
        order = self.members[np.argsort(-G.element_orders[self.members], kind="stable")]
        gens: list[int] = []
        have = np.zeros(G.order, dtype=bool)
        have[0] = True
        count = 1
        for g in order:
            if count == self.order:
                break
            if not have[g]:
                gens.append(int(g))
                idx = G.closure_indices(gens)
                have[:] = False
                have[idx] = True
                count = len(idx)
        return gens

    def perms(self) -> np.ndarray:
        return self.parent.elements[self.members]

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.members].all())

    def conjugate(self, g: int) -> "Subgroup":
        G = self.parent
        mem = G.conj_many(g, self.members)
        gens = G.conj_many(g, np.asarray(self.generators, dtype=np.int64)) if self.generators else []
        return Subgroup(G, mem, generators=list(np.atleast_1d(gens)))

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.members[other.mask[self.members]])

    @cached_property
    def coset_data(self) -> tuple[np.ndarray, np.ndarray]:
        """(label, reps): ``label[g]`` numbers the left coset ``gH``; ``reps[c]`` is its least element."""
        G = self.parent
        label = np.full(G.order, -1, dtype=np.int64)
        reps = []
        if self.order == 1:
            return np.arange(G.order), np.arange(G.order)
        for g in range(G.order):
            if label[g] >= 0:
                continue
            coset = G.mul_many(g, self.members)
            label[coset] = len(reps)
            reps.append(g)
        return label, np.array(reps, dtype=np.int64)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def as_group(self) -> tuple[PermGroup, "GroupHom"]:
        """This subgroup as a standalone PermGroup plus its inclusion hom."""
        cached = self.__dict__.get("_as_group")
        if cached is not None:
            return cached
        G = self.parent
        gens = [G.elements[g] for g in self.generators]
        H = closure(G.degree, gens, name=f"<{self.order}-subgroup of {G}>")
        incl = GroupHom(H, G, G.index_many(H.elements), check=False)
        self._as_group = (H, incl)
        return self._as_group


class GroupHom:
    """Homomorphism stored as the full element map ``image[i]`` (target index)."""

    def __init__(self, source: PermGroup, target: PermGroup, image, check=True, name=None):
        self.source = source
        self.target = target
        self.image = np.asarray(image, dtype=np.int64)
        self.name = name
        if len(self.image) != source.order:
            raise ValueError("image map has wrong length")
        if check:
            self.verify()

    def __repr__(self):
        return f"<GroupHom {self.name or ''} {self.source} -> {self.target}>"

    def verify(self):
        """Full check: ``f(s*g) = f(s)*f(g)`` for every generator ``s`` and element ``g``."""
        S, T = self.source, self.target
        if self.image[0] != 0:
            raise ValueError("identity not mapped to identity")
        allg = np.arange(S.order)
        for s in S.generator_indices:
            lhs = self.image[S.mul_many(s, allg)]
            rhs = T.mul_many(self.image[s], self.image)
            if not np.array_equal(lhs, rhs):
                raise ValueError("map is not a homomorphism")

    @classmethod
    def from_rows(cls, source, target, fn: Callable[[np.ndarray], np.ndarray], check=True, name=None):
        rows = fn(source.elements)
        return cls(source, target, target.index_many(rows), check=check, name=name)

    def __call__(self, g: int) -> int:
        return int(self.image[g])

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """``self o inner``."""
        if inner.target is not self.source:
            raise ValueError("homomorphisms are not composable")
        return GroupHom(inner.source, self.target, self.image[inner.image], check=False)

    def image_subgroup(self, S: Subgroup | None = None) -> Subgroup:
        S = S if S is not None else self.source.whole()
        gens = self.image[np.asarray(S.generators, dtype=np.int64)] if S.generators else []
        return Subgroup(self.target, self.image[S.members], generators=list(np.atleast_1d(gens)))

    def preimage(self, T: Subgroup) -> Subgroup:
        return Subgroup(self.source, np.nonzero(T.mask[self.image])[0])

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, np.nonzero(self.image == 0)[0])

    def is_injective(self) -> bool:
        return len(np.unique(self.image)) == self.source.order

    def is_surjective(self) -> bool:
        return len(np.unique(self.image)) == self.target.order

    @classmethod
    def identity(cls, G: PermGroup) -> "GroupHom":
        return cls(G, G, np.arange(G.order), check=False, name="id")

    @classmethod
    def trivial(cls, G: PermGroup, K: PermGroup) -> "GroupHom":
        return cls(G, K, np.zeros(G.order, dtype=np.int64), check=False, name="triv")


# -- constructors --------------------------------------------------------


def closure(degree: int, generators, bound: int | None = None, name: str | None = None,
            cls=PermGroup, **extra) -> PermGroup:
    """Enumerate the group generated by ``generators`` by breadth-first search."""
    bound = bounds.group_order if bound is None else bound
    gens = [as_perm(g, degree) for g in generators]
    ident = np.arange(degree, dtype=np.int64)
    walk = [g for g in gens if not np.array_equal(g, ident)]
    walk_ids = [i for i, g in enumerate(gens) if not np.array_equal(g, ident)]
    seen = {ident.tobytes(): 0}
    elems = [ident]
    parent = [-1]
    via = [-1]
    frontier = [0]
    while frontier:
        new = []
        for i in frontier:
            p = elems[i]
            for s, g in zip(walk_ids, walk):
                q = g[p]
                k = q.tobytes()
                if k not in seen:
                    seen[k] = len(elems)
                    elems.append(q)
                    parent.append(i)
                    via.append(s)
                    new.append(seen[k])
                    if len(elems) > bound:
                        raise GroupTooLarge(f"group order exceeds bound {bound}")
        frontier = new
    G = cls.__new__(cls)
    for k, v in extra.items():
        setattr(G, k, v)
    PermGroup.__init__(G, degree, gens, np.array(elems).reshape(len(elems), degree), parent, via, name=name)
    return G


_cache_lock = threading.RLock()
_symmetric: dict[int, PermGroup] = {}
_cyclic: dict[int, PermGroup] = {}
_products: dict[tuple, "ProductGroup"] = {}
_wreaths: dict[tuple, "WreathGroup"] = {}


def symmetric_group(m: int) -> PermGroup:
    """Sigma_m in its natural action (Sigma_0 acts on no points, Sigma_1 on one)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > bounds.symmetric_degree:
        raise GroupTooLarge(f"Sigma_{m} exceeds symmetric degree bound {bounds.symmetric_degree}")
    with _cache_lock:
        if m not in _symmetric:
            gens = []
            if m >= 2:
                gens.append(cycles_to_perm([(0, 1)], m))
            if m >= 3:
                gens.append(cycles_to_perm([tuple(range(m))], m))
            _symmetric[m] = closure(m, gens, name=f"S{m}")
        return _symmetric[m]


def trivial_group() -> PermGroup:
    """The trivial group acting on one point (same object as Sigma_1)."""
    return symmetric_group(1)


def cyclic_group(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("n must be positive")
    with _cache_lock:
        if n not in _cyclic:
            gens = [cycles_to_perm([tuple(range(n))], n)] if n > 1 else []
            _cyclic[n] = closure(n, gens, name=f"C{n}")
        return _cyclic[n]


def _rows2d(rows, degree: int) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.int64)
    return rows.reshape(1, degree) if rows.ndim == 1 else rows


class ProductGroup(PermGroup):
    """Direct product acting on the disjoint union of the factors' points."""

    factors: tuple[PermGroup, ...]
    offsets: tuple[int, ...]

    def split(self, rows: np.ndarray) -> list[np.ndarray]:
        rows = _rows2d(rows, self.degree)
        return [rows[:, o:o + F.degree] - o for F, o in zip(self.factors, self.offsets)]

    def join(self, parts: Sequence[np.ndarray]) -> np.ndarray:
        n = len(parts[0]) if parts else 1
        out = np.empty((n, self.degree), dtype=np.int64)
        for P, F, o in zip(parts, self.factors, self.offsets):
            out[:, o:o + F.degree] = np.asarray(P).reshape(n, F.degree) + o
        return out

    @cached_property
    def projections(self) -> list[GroupHom]:
        out = []
        for i, F in enumerate(self.factors):
            out.append(GroupHom.from_rows(self, F, lambda r, i=i: self.split(r)[i], check=False,
                                          name=f"pr{i + 1}"))
        return out

    @cached_property
    def inclusions(self) -> list[GroupHom]:
        out = []
        for i, F in enumerate(self.factors):
            def fn(r, i=i):
                parts = [np.tile(np.arange(G.degree), (len(r), 1)) for G in self.factors]
                parts[i] = r
                return self.join(parts)
            out.append(GroupHom.from_rows(F, self, fn, check=False, name=f"incl{i + 1}"))
        return out

    def product_subgroup(self, subs: Sequence[Subgroup]) -> Subgroup:
        """The subgroup ``S_1 x ... x S_n``."""
        mems = [S.parent.elements[S.members] for S in subs]
        grids = np.meshgrid(*[np.arange(len(m)) for m in mems], indexing="ij")
        parts = [m[g.ravel()] for m, g in zip(mems, grids)]
        members = self.index_many(self.join(parts)) if parts else np.array([0])
        gens = []
        for i, S in enumerate(subs):
            for g in S.generators:
                parts = [np.arange(F.degree)[None, :] for F in self.factors]
                parts[i] = S.parent.elements[g][None, :]
                gens.append(int(self.index(self.join(parts)[0])))
        return Subgroup(self, members, generators=gens)


def direct_product(*groups: PermGroup) -> ProductGroup:
    """``G_1 x ... x G_n`` on the disjoint union of point sets (cached per factor tuple)."""
    key = tuple(id(G) for G in groups)
    with _cache_lock:
        if key in _products:
            return _products[key]
        offsets = [0]
        for G in groups:
            offsets.append(offsets[-1] + G.degree)
        degree = offsets[-1]
        gens = []
        for i, G in enumerate(groups):
            for g in G.generators:
                p = np.arange(degree, dtype=np.int64)
                p[offsets[i]:offsets[i + 1]] = g + offsets[i]
                gens.append(p)
        total = math.prod(G.order for G in groups)
        if total > bounds.group_order:
            raise GroupTooLarge(f"product order {total} exceeds bound {bounds.group_order}")
        name = "x".join(_wrap(G.name) for G in groups) if groups else "S0"
        P = closure(degree, gens, name=name, cls=ProductGroup,
                    factors=tuple(groups), offsets=tuple(offsets[:-1]))
        _products[key] = P
        return P


def _wrap(name):
    name = name or "?"
    return f"({name})" if "x" in name else name


def diagonal(G: PermGroup) -> GroupHom:
    GG = direct_product(G, G)
    return GroupHom.from_rows(G, GG, lambda r: GG.join([r, r]), check=False, name="diag")


class WreathGroup(PermGroup):
    """``Sigma_m wr G`` acting on ``m`` blocks of ``block`` points.

    Action convention: ``(sigma; g_1..g_m).(i, x) = (sigma(i), g_{sigma(i)} x)``.
    """

    m: int
    base: PermGroup
    block: int

    def split(self, rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return ``sigma`` (n, m) and block permutations ``g`` (n, m, block)."""
        rows = _rows2d(rows, self.degree)
        m, d = self.m, self.block
        n = len(rows)
        if m == 0:
            return np.zeros((n, 0), dtype=np.int64), np.zeros((n, 0, d), dtype=np.int64)
        r = rows.reshape(n, m, d)
        sigma = r[:, :, 0] // d
        g = np.empty_like(r)
        ar = np.arange(n)[:, None]
        g[ar, sigma, :] = r - (sigma * d)[:, :, None]
        return sigma, g

    def join(self, sigma: np.ndarray, g: np.ndarray) -> np.ndarray:
        sigma = np.asarray(sigma, dtype=np.int64)
        n, m = sigma.shape
        d = self.block
        g = np.asarray(g, dtype=np.int64).reshape(n, m, d)
        ar = np.arange(n)[:, None]
        out = sigma[:, :, None] * d + g[ar, sigma, :]
        return out.reshape(n, m * d)

    def base_indices(self, g: np.ndarray) -> np.ndarray:
        """Indices in ``base`` of the block permutations returned by :meth:`split`."""
        n, m, d = g.shape
        if self.base.degree == 0:
            return np.zeros((n, m), dtype=np.int64)
        return self.base.index_many(g.reshape(n * m, d)).reshape(n, m)

    @cached_property
    def projection(self) -> GroupHom:
        """``Sigma_m wr p_G``: the block permutation."""
        S = symmetric_group(self.m)
        return GroupHom.from_rows(self, S, lambda r: self.split(r)[0], check=False, name="block")

    @cached_property
    def block_inclusion(self) -> GroupHom:
        S = symmetric_group(self.m)
        d = self.block
        return GroupHom.from_rows(
            S, self, lambda r: self.join(r, np.tile(np.arange(d), (len(r), self.m, 1))),
            check=False, name="blocks")

    @cached_property
    def base_inclusion(self) -> GroupHom:
        Gm = direct_product(*([self.base] * self.m))
        d = self.block

        def fn(r):
            n = len(r)
            if self.base.degree == 0:
                g = np.tile(np.arange(d), (n, self.m, 1))
            else:
                g = np.stack(Gm.split(r), axis=1) if self.m else np.zeros((n, 0, d), dtype=np.int64)
            return self.join(np.tile(np.arange(self.m), (n, 1)), g)
        return GroupHom.from_rows(Gm, self, fn, check=False, name="base")

    @cached_property
    def delta(self) -> GroupHom:
        """The diagonal inclusion ``Sigma_m x G -> Sigma_m wr G``, ``(s, g) -> (s; g, ..., g)``."""
        S = symmetric_group(self.m)
        SG = direct_product(S, self.base)
        d = self.block

        def fn(r):
            s, g = SG.split(r)
            n = len(r)
            if self.base.degree == 0:
                g = np.tile(np.arange(d), (n, 1))
            return self.join(s, np.repeat(g[:, None, :], self.m, axis=1))
        return GroupHom.from_rows(SG, self, fn, check=False, name=f"delta_{self.m}")


def wreath_product(m: int, G: PermGroup) -> WreathGroup:
    """``Sigma_m wr G`` (cached).  ``G`` of degree 0 is treated as acting on one point."""
    key = (m, id(G))
    with _cache_lock:
        if key in _wreaths:
            return _wreaths[key]
        d = max(G.degree, 1)
        total = math.factorial(m) * G.order ** m
        if total > bounds.group_order:
            raise GroupTooLarge(f"Sigma_{m} wr {G} has order {total} > {bounds.group_order}")
        gens = []
        S = symmetric_group(m)
        for s in S.generators:
            p = (s[:, None] * d + np.arange(d)[None, :]).reshape(-1)
            gens.append(p)
        if m >= 1 and G.degree > 0:
            for g in G.generators:
                p = np.arange(m * d, dtype=np.int64)
                p[:d] = g
                gens.append(p)
        W = closure(m * d, gens, name=f"S{m}wr{_wrap(G.name)}", cls=WreathGroup, m=m, base=G, block=d)
        if W.order != total:
            raise AssertionError("wreath product has unexpected order")
        _wreaths[key] = W
        return W


def juxtaposition(i: int, j: int, G: PermGroup) -> GroupHom:
    """``Phi_{i,j}: (Sigma_i wr G) x (Sigma_j wr G) -> Sigma_{i+j} wr G``."""
    Wi, Wj, W = wreath_product(i, G), wreath_product(j, G), wreath_product(i + j, G)
    P = direct_product(Wi, Wj)
    return GroupHom(P, W, W.index_many(P.elements), check=False, name=f"Phi_{i},{j}")


def young_inclusion(parts: Sequence[int]) -> GroupHom:
    """``Phi_(k): Sigma_k1 x ... x Sigma_kn -> Sigma_(k1+...+kn)`` by juxtaposition."""
    P = direct_product(*[symmetric_group(k) for k in parts])
    S = symmetric_group(sum(parts))
    return GroupHom(P, S, S.index_many(P.elements), check=False, name="young")


def wreath_map(m: int, phi: GroupHom) -> GroupHom:
    """``Sigma_m wr phi: Sigma_m wr K -> Sigma_m wr G``."""
    WK, WG = wreath_product(m, phi.source), wreath_product(m, phi.target)

    def fn(rows):
        sigma, g = WK.split(rows)
        n = len(rows)
        idx = WK.base_indices(g)
        img = phi.image[idx]
        if phi.target.degree == 0:
            gg = np.tile(np.arange(WG.block), (n, m, 1))
        else:
            gg = phi.target.elements[img.reshape(-1)].reshape(n, m, WG.block)
        return WG.join(sigma, gg)
    return GroupHom.from_rows(WK, WG, fn, check=False, name=f"S{m}wr({phi.name})")


def relative_delta(n: int, K: PermGroup, G: PermGroup) -> GroupHom:
    """``delta_n^{K,G}: (Sigma_n wr K) x G -> Sigma_n wr (K x G)``."""
    WK = wreath_product(n, K)
    KG = direct_product(K, G)
    W = wreath_product(n, KG)
    src = direct_product(WK, G)

    def fn(rows):
        w, g = src.split(rows)
        sigma, k = WK.split(w)
        num = len(rows)
        blocks = np.empty((num, n, KG.degree), dtype=np.int64)
        for j in range(n):
            kj = k[:, j, :] if K.degree else np.zeros((num, 0), dtype=np.int64)
            blocks[:, j, :] = KG.join([kj, g])
        return W.join(sigma, blocks)
    return GroupHom.from_rows(src, W, fn, check=False, name=f"delta_{n}^rel")


def is_conjugate(H: Subgroup, K: Subgroup) -> tuple[bool, int | None]:
    if H.parent is not K.parent:
        raise ValueError("subgroups of different groups")
    g = H.parent.find_conjugator(H, K)
    return g is not None, g


def orbit_decomposition(M: Subgroup, H: Subgroup, f: GroupHom | None = None):
    """Orbits of ``M`` acting on the left cosets ``K/H`` through ``f: M.parent -> K``.

    Returns a list of ``(c, stab)``: ``c`` is a coset representative in ``K`` and
    ``stab`` the stabilizer of ``cH`` inside ``M`` (a Subgroup of ``M.parent``).
    These ``c`` are double coset representatives for ``f(M) \\ K / H``.
    """
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    K = H.parent
    label, reps = H.coset_data
    ncos = len(reps)
    image = f.image if f is not None else None
    gens = np.asarray(M.generators, dtype=np.int64)
    if image is not None:
        gens = image[gens] if len(gens) else gens
    if len(gens) and ncos > 1:
        tgt = label[K.mul_many(gens[:, None], reps[None, :])]
        src = np.tile(np.arange(ncos), len(gens))
        graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, tgt.ravel())), shape=(ncos, ncos))
        _, comp = connected_components(graph, directed=True, connection="weak")
    else:
        comp = np.arange(ncos)
    _, first = np.unique(comp, return_index=True)
    first = np.sort(first)
    mem = M.members
    mem_img = image[mem] if image is not None else mem
    out = []
    for c in first:
        elt = int(reps[c])
        moved = label[K.mul_many(mem_img, elt)]
        out.append((elt, Subgroup(M.parent, mem[moved == c])))
    return out


def double_coset_reps(G: PermGroup, H: Subgroup, K: Subgroup) -> list[int]:
    """One representative per double coset ``H g K``."""
    if H.parent is not G or K.parent is not G:
        raise ValueError("subgroups must belong to G")
    return [c for c, _ in orbit_decomposition(H, K)]


def all_perms(m: int):
    return [np.array(p) for p in itertools.permutations(range(m))]


def product_hom(*homs: GroupHom) -> GroupHom:
    """``f_1 x ... x f_n`` between the direct products of sources and targets."""
    src = direct_product(*[f.source for f in homs])
    tgt = direct_product(*[f.target for f in homs])

    def fn(rows):
        parts = src.split(rows)
        out = []
        for f, part in zip(homs, parts):
            idx = f.source.index_many(part) if f.source.degree else np.zeros(len(rows), dtype=np.int64)
            out.append(f.target.elements[f.image[idx]])
        return tgt.join(out)
    return GroupHom.from_rows(src, tgt, fn, check=False, name="x".join(f.name or "f" for f in homs))


def hom_from_images(source: PermGroup, target: PermGroup, gen_images: Sequence, name=None) -> GroupHom:
    """Extend generator images (target permutations) to a hom; raises if not well defined."""
    gimg = [target.index(p) for p in gen_images]
    if len(gimg) != len(source.generators):
        raise ValueError("need one image per generator")
    image = np.zeros(source.order, dtype=np.int64)
    for level in source.bfs_levels:
        image[level] = target.mul_many(np.asarray(gimg)[source.via[level]], image[source.parent[level]])
    return GroupHom(source, target, image, check=True, name=name)


def inclusion_hom(H: PermGroup, G: PermGroup, name=None) -> GroupHom:
    """The inclusion of ``H`` into ``G`` when ``H``'s permutations, padded by fixed points, lie in ``G``."""
    if H.degree > G.degree:
        raise ValueError("cannot include a group of larger degree")

    def fn(rows):
        rows = _rows2d(rows, H.degree)
        pad = np.tile(np.arange(H.degree, G.degree, dtype=np.int64), (len(rows), 1))
        return np.concatenate([rows, pad], axis=1)
    return GroupHom.from_rows(H, G, fn, check=True, name=name or f"{H}<{G}")


def sign_hom(m: int) -> GroupHom:
    """``Sigma_m -> Sigma_2`` sending odd permutations to the transposition."""
    S, T = symmetric_group(m), symmetric_group(2)
    cts = S._cycle_type_data
    parity = np.array([sum(c - 1 for c in cts[1][i]) % 2 for i in cts[0]])
    return GroupHom(S, T, parity, check=True, name="sign")
