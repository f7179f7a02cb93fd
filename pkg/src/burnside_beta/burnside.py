"""Burnside rings A(G) tensor C.

Conjugacy classes of subgroups are discovered lazily: every group carries a
:class:`ClassRegistry` that assigns a stable integer to each class the first
time a subgroup of it shows up.  Elements store coefficients keyed by those
integers, so two elements are equal exactly when their coefficient maps agree.
The full :class:`SubgroupClassTable` (all classes, canonical labels, table of
marks) is only built for groups under the lattice bound.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .config import GroupTooLarge, NotIntegral, RingMismatch, bounds
from .group_core import PermGroup, Subgroup, format_perm, orbit_decomposition
from .gset import GSet, VirtualGSet
from .rings import ZZ, Ring, ring_from_tag, ring_map


class ClassRegistry:
    """Conjugacy classes of subgroups of one group, numbered in discovery order."""

    def __init__(self, group: PermGroup):
        self.group = group
        self.reps: list[Subgroup] = []
        self._by_key: dict[bytes, int] = {}
        self._by_invariant: dict[tuple, list[int]] = defaultdict(list)
        self._mult: dict[tuple[int, int], dict[int, int]] = {}
        self._marks: dict[tuple[int, int], int] = {}

    def __len__(self):
        return len(self.reps)

    def _invariant(self, S: Subgroup) -> tuple:
        G = self.group
        ct = np.bincount(G.cycle_type_ids[S.members], minlength=G.num_cycle_types)
        return (S.order, ct.tobytes())

    def classify(self, S: Subgroup) -> int:
        """Registry index of the class of ``S`` (registering it if new)."""
        if S.parent is not self.group:
            raise ValueError("subgroup of a different group")
        hit = self._by_key.get(S.key)
        if hit is not None:
            return hit
        with self.group._lock:
            inv = self._invariant(S)
            for idx in self._by_invariant[inv]:
                if self.group.find_conjugator(S, self.reps[idx]) is not None:
                    self._by_key[S.key] = idx
                    return idx
            idx = len(self.reps)
            self.reps.append(S)
            self._by_invariant[inv].append(idx)
            self._by_key[S.key] = idx
            return idx

    def order(self, idx: int) -> int:
        return self.reps[idx].order

    def product(self, i: int, j: int) -> dict[int, int]:
        """``[G/H_i] * [G/H_j]`` by the double coset formula."""
        key = (min(i, j), max(i, j))
        hit = self._mult.get(key)
        if hit is not None:
            return hit
        out: dict[int, int] = defaultdict(int)
        for _, stab in orbit_decomposition(self.reps[key[0]], self.reps[key[1]]):
            out[self.classify(stab)] += 1
        self._mult[key] = dict(out)
        return self._mult[key]

    def mark(self, k: int, j: int) -> int:
        """``|(G/H_j)^{H_k}|``."""
        key = (k, j)
        hit = self._marks.get(key)
        if hit is None:
            hit = mark(self.reps[k], self.reps[j])
            self._marks[key] = hit
        return hit


def mark(K: Subgroup, H: Subgroup) -> int:
    """Number of fixed points of ``K`` on ``G/H``."""
    G = H.parent
    if K.order > H.order or H.order % K.order:
        return 0
    ok = np.ones(G.order, dtype=bool)
    allg = np.arange(G.order)
    for k in K.generators:
        cand = allg[ok]
        # g^-1 k g in H
        ok[cand] = H.mask[G.conj_many(G.inverse[cand], k)]
    return int(ok.sum()) // H.order


def registry(G: PermGroup) -> ClassRegistry:
    with G._lock:
        reg = G.__dict__.get("_registry")
        if reg is None:
            reg = G._registry = ClassRegistry(G)
        return reg


class SubgroupClassTable:
    """All conjugacy classes of subgroups with canonical representatives and marks."""

    def __init__(self, group: PermGroup, class_reps: list[Subgroup] | None = None, marks=None):
        """Compute the table, or adopt ``class_reps`` (canonical, in table order) and
        ``marks`` loaded from a cache."""
        G = group
        if G.order > bounds.lattice:
            raise GroupTooLarge(f"subgroup lattice of order-{G.order} group exceeds bound {bounds.lattice}")
        self.group = G
        reg = registry(G)
        if class_reps is None:
            found = _all_subgroup_classes(G)
            canon = [_canonical_member_set(S) for S in found]
            order = sorted(range(len(found)), key=lambda i: (len(canon[i]), canon[i].tolist()))
            class_reps = [Subgroup(G, canon[i]) for i in order]
        self.class_reps = class_reps
        self.labels: list[str] = []
        count: dict[int, int] = defaultdict(int)
        for S in self.class_reps:
            count[S.order] += 1
            self.labels.append(f"H{S.order}_{count[S.order]}")
        self.reg_index = [reg.classify(S) for S in self.class_reps]
        if len(set(self.reg_index)) != len(self.reg_index):
            raise AssertionError("duplicate classes in subgroup table")
        self.position = {r: p for p, r in enumerate(self.reg_index)}
        n = len(self.class_reps)
        if marks is not None:
            self.marks = np.array(marks, dtype=object).reshape(n, n)
            for i in range(n):
                for j in range(n):
                    reg._marks[(self.reg_index[i], self.reg_index[j])] = int(self.marks[i, j])
            return
        self.marks = np.zeros((n, n), dtype=object)
        for i in range(n):
            for j in range(i, n):
                self.marks[i, j] = reg.mark(self.reg_index[i], self.reg_index[j])

    def __len__(self):
        return len(self.class_reps)

    def label_of(self, reg_idx: int) -> str:
        return self.labels[self.position[reg_idx]]

    def index_of_label(self, label: str) -> int:
        return self.reg_index[self.labels.index(label)]

    def legend(self) -> list[tuple[str, int, list[str]]]:
        out = []
        for lab, S in zip(self.labels, self.class_reps):
            gens = [format_perm(self.group.elements[g]) for g in S.generators]
            out.append((lab, S.order, gens))
        return out


def _all_subgroup_classes(G: PermGroup) -> list[Subgroup]:
    """One subgroup per conjugacy class: cyclic subgroups closed under joins with cyclics."""
    reg = ClassRegistry(G)
    cyclic: dict[bytes, Subgroup] = {}
    for g in range(G.order):
        C = G.subgroup([g])
        cyclic.setdefault(C.key, C)
    cyc = list(cyclic.values())
    for C in cyc:
        reg.classify(C)
    done = 0
    while done < len(reg.reps):
        H = reg.reps[done]
        done += 1
        seen: set[bytes] = set()
        for C in cyc:
            g = C.generators[0] if C.generators else 0
            if g == 0 or H.mask[g]:
                continue
            J = Subgroup(G, G.closure_indices(H.generators + [g]), generators=H.generators + [g])
            if J.key in seen:
                continue
            seen.add(J.key)
            reg.classify(J)
    return reg.reps


def _canonical_member_set(S: Subgroup) -> np.ndarray:
    """Lexicographically smallest sorted member-index set in the conjugacy class of ``S``."""
    G = S.parent
    conj = G.conj_many(np.arange(G.order)[:, None], S.members[None, :])
    conj.sort(axis=1)
    best = np.lexsort(conj.T[::-1])[0]
    return conj[best]


def subgroup_classes(G: PermGroup) -> SubgroupClassTable:
    with G._lock:
        tab = G.__dict__.get("_class_table")
        if tab is None:
            tab = G._class_table = SubgroupClassTable(G)
        return tab


def install_class_table(G: PermGroup, table: SubgroupClassTable) -> None:
    with G._lock:
        G._class_table = table


def has_class_table(G: PermGroup) -> bool:
    return G.order <= bounds.lattice


class BurnsideElement:
    """An element of ``A(G) (x) C``; coefficients keyed by registry class index."""

    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: PermGroup, coeffs: Mapping[int, object] | None = None, ring: Ring = ZZ):
        self.group = group
        self.ring = ring
        out = {}
        for k, v in (coeffs or {}).items():
            v = ring.coerce(v)
            if not ring.is_zero(v):
                out[int(k)] = v
        self.coeffs = out

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, G: PermGroup, ring: Ring = ZZ):
        return cls(G, {}, ring)

    @classmethod
    def one(cls, G: PermGroup, ring: Ring = ZZ):
        return cls.basis(G.whole(), ring)

    @classmethod
    def basis(cls, H: Subgroup, ring: Ring = ZZ, coef=1):
        """The class ``coef * [G/H]``."""
        return cls(H.parent, {registry(H.parent).classify(H): coef}, ring)

    # -- basic protocol -----------------------------------------------------
    @property
    def registry(self) -> ClassRegistry:
        return registry(self.group)

    def _compatible(self, other: "BurnsideElement"):
        if not isinstance(other, BurnsideElement):
            raise TypeError(f"expected BurnsideElement, got {type(other).__name__}")
        if other.group is not self.group:
            raise RingMismatch(f"elements of A({self.group}) and A({other.group})")
        if other.ring != self.ring:
            raise RingMismatch(f"coefficient rings {self.ring} and {other.ring} differ")

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return other.group is self.group and other.ring == self.ring and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((id(self.group), frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._compatible(other)
        out = dict(self.coeffs)
        R = self.ring
        for k, v in other.coeffs.items():
            out[k] = R.add(out.get(k, R.zero), v)
        return BurnsideElement(self.group, out, R)

    __radd__ = __add__

    def __neg__(self):
        R = self.ring
        return BurnsideElement(self.group, {k: R.neg(v) for k, v in self.coeffs.items()}, R)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BurnsideElement":
        R = self.ring
        c = R.coerce(c)
        return BurnsideElement(self.group, {k: R.mul(c, v) for k, v in self.coeffs.items()}, R)

    def __mul__(self, other):
        if isinstance(other, BurnsideElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = BurnsideElement.one(self.group, self.ring)
        for _ in range(k):
            out = out * self
        return out

    def items(self):
        """``(Subgroup rep, coefficient)`` pairs in a deterministic order."""
        reg = self.registry
        return [(reg.reps[k], self.coeffs[k]) for k in self._ordered_keys()]

    def _ordered_keys(self):
        reg = self.registry
        if has_class_table(self.group):
            tab = subgroup_classes(self.group)
            return sorted(self.coeffs, key=lambda k: tab.position[k])
        return sorted(self.coeffs, key=lambda k: (reg.order(k), k))

    def coefficient(self, H: Subgroup):
        return self.coeffs.get(self.registry.classify(H), self.ring.zero)

    def is_integral(self) -> bool:
        return self.ring == ZZ

    def cardinality(self):
        """Image under ``A(G) -> C``, ``[G/H] -> |G/H|``."""
        R = self.ring
        total = R.zero
        for k, v in self.coeffs.items():
            total = R.add(total, R.mul(v, self.group.order // self.registry.order(k)))
        return total

    # -- marks --------------------------------------------------------------
    def marks_at(self, subgroups: Iterable[Subgroup]) -> list:
        R = self.ring
        reg = self.registry
        out = []
        for K in subgroups:
            kk = reg.classify(K)
            total = R.zero
            for j, v in self.coeffs.items():
                total = R.add(total, R.mul(v, reg.mark(kk, j)))
            out.append(total)
        return out

    def marks(self) -> list:
        """Mark vector indexed by the canonical class table."""
        return self.marks_at(subgroup_classes(self.group).class_reps)

    # -- display ------------------------------------------------------------
    def label(self, k: int) -> str:
        return class_label(self.group, k)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        R = self.ring
        for k in self._ordered_keys():
            c = R.fmt(self.coeffs[k])
            lab = f"[{self.label(k)}]"
            if c == "1":
                parts.append(lab)
            elif c == "-1":
                parts.append("-" + lab)
            elif any(ch in c[1:] for ch in "+-") or "i" in c:
                parts.append(f"({c})*{lab}")
            else:
                parts.append(f"{c}*{lab}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"<A({self.group}) {self.ring}: {self}>"

    def to_json(self, group_spec: str | None = None) -> dict:
        R = self.ring
        return {
            "group": group_spec or str(self.group),
            "coeff": R.tag,
            "terms": [{"class": self.label(k), "coef": R.fmt(self.coeffs[k])} for k in self._ordered_keys()],
        }

    def dumps(self, group_spec: str | None = None) -> str:
        return json.dumps(self.to_json(group_spec))


def class_label(G: PermGroup, k: int) -> str:
    reg = registry(G)
    if has_class_table(G):
        return subgroup_classes(G).label_of(k)
    S = reg.reps[k]
    gens = ",".join(format_perm(G.elements[g]) for g in S.generators) or "()"
    return f"H{S.order}<{gens}>"


def subgroup_for_label(G: PermGroup, label: str) -> Subgroup:
    if has_class_table(G):
        tab = subgroup_classes(G)
        if label not in tab.labels:
            raise ValueError(f"unknown class label {label!r} for {G}; see the class legend")
        return tab.class_reps[tab.labels.index(label)]
    raise ValueError(f"class labels need a class table; {G} exceeds the lattice bound")


def element_from_json(G: PermGroup, data: dict) -> BurnsideElement:
    R = ring_from_tag(data.get("coeff", "Z"))
    coeffs: dict[int, object] = defaultdict(lambda: R.zero)
    reg = registry(G)
    for term in data.get("terms", []):
        k = reg.classify(subgroup_for_label(G, term["class"]))
        coeffs[k] = R.add(coeffs[k], R.parse(str(term["coef"])))
    return BurnsideElement(G, coeffs, R)


def decompose(X: GSet | VirtualGSet, ring: Ring = ZZ) -> BurnsideElement:
    """Orbit decomposition of a (virtual) G-set."""
    if isinstance(X, VirtualGSet):
        total = BurnsideElement.zero(X.group, ring)
        for Y, k in X.terms:
            total = total + decompose(Y, ring).scale(k)
        return total
    reg = registry(X.group)
    coeffs: dict[int, int] = defaultdict(int)
    for _, stab in X.orbits():
        coeffs[reg.classify(stab)] += 1
    return BurnsideElement(X.group, coeffs, ring)


def from_marks(G: PermGroup, vec, ring: Ring = ZZ) -> BurnsideElement:
    """Inverse of the mark map by back-substitution on the triangular table of marks."""
    tab = subgroup_classes(G)
    n = len(tab)
    vec = list(vec)
    if len(vec) != n:
        raise ValueError(f"expected {n} marks, got {len(vec)}")
    c = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        rest = Fraction(vec[i]) - sum(tab.marks[i, j] * c[j] for j in range(i + 1, n))
        c[i] = rest / tab.marks[i, i]
        if c[i].denominator != 1:
            raise NotIntegral("mark vector is not in the image of the mark map")
    return BurnsideElement(G, {tab.reg_index[i]: int(c[i]) for i in range(n)}, ring)


def mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product by the double coset formula on basis pairs (cached per group)."""
    x._compatible(y)
    R = x.ring
    reg = x.registry
    out: dict[int, object] = defaultdict(lambda: R.zero)
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            ab = R.mul(a, b)
            for k, n in reg.product(i, j).items():
                out[k] = R.add(out[k], R.mul(ab, n))
    return BurnsideElement(x.group, out, R)


def mul_via_sets(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product computed from concrete product sets (cross-check path, integral input)."""
    from .gset import cosets, set_product

    x._compatible(y)
    G = x.group
    total = BurnsideElement.zero(G, x.ring)
    for H, a in x.items():
        for K, b in y.items():
            total = total + decompose(set_product(cosets(G, H), cosets(G, K)), x.ring).scale(x.ring.mul(a, b))
    return total


def extend_coefficients(x: BurnsideElement, ring: Ring, fn=None) -> BurnsideElement:
    """Apply a ring map to every coefficient (defaults to the canonical map)."""
    fn = fn or ring_map(x.ring, ring)
    return BurnsideElement(x.group, {k: fn(v) for k, v in x.coeffs.items()}, ring)


def basis_elements(G: PermGroup, ring: Ring = ZZ) -> list[BurnsideElement]:
    return [BurnsideElement.basis(S, ring) for S in subgroup_classes(G).class_reps]
