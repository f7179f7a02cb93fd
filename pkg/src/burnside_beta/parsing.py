"""Text syntax for groups, homomorphisms, Burnside elements and operators.

Groups::

    S3            symmetric group
    C4            cyclic group
    e             trivial group
    S2wrS3        wreath product Sigma_2 wr Sigma_3
    S2xS2         direct product ('x' binds looser than 'wr'; parentheses group)
    perm(3): (0 1), (0 1 2)     generated by explicit permutations

Elements are sums of terms ``coef*[label]``: labels are ``H<order>_<k>`` from the
class table, ``e`` or ``G``; ``1`` is the unit and ``t`` is ``[Sigma_2/e]`` over
``S2``.  Coefficients ``3``, ``-2``, ``1/2``, ``2+1i`` select the ring unless one
is given explicitly.  Operators are sums of ``coef*[S<n>/<sub>]`` with ``<sub>``
a label of ``S<n>``, ``e`` or ``S<n>``; bidegree operators use ``[S<p>xS<q>/<sub>]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

import numpy as np

from .burnside import BurnsideElement, subgroup_for_label
from .group_core import (GroupHom, PermGroup, ProductGroup, closure, cyclic_group, direct_product,
                         hom_from_images, inclusion_hom, parse_cycles, sign_hom, symmetric_group,
                         wreath_product)
from .rings import QI, QQ, ZI, ZZ, Ring, ring_from_tag


class ParseError(ValueError):
    pass


# -- groups -------------------------------------------------------------------


def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur, i = [], 0, [], 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if depth == 0 and text.startswith(sep, i):
            parts.append("".join(cur))
            cur = []
            i += len(sep)
            continue
        cur.append(ch)
        i += 1
    if depth:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return parts


def parse_group(text: str) -> PermGroup:
    t = text.strip()
    if not t:
        raise ParseError("empty group specification")
    if t.startswith("perm"):
        return _parse_perm_group(t)
    factors = _split_top(t, "x")
    if len(factors) > 1:
        return direct_product(*[parse_group(f) for f in factors])
    if t.startswith("(") and t.endswith(")"):
        return parse_group(t[1:-1])
    m = re.fullmatch(r"S(\d+)wr(.+)", t)
    if m:
        return wreath_product(int(m.group(1)), parse_group(m.group(2)))
    m = re.fullmatch(r"S(\d+)", t)
    if m:
        return symmetric_group(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", t)
    if m:
        return cyclic_group(int(m.group(1)))
    if t == "e":
        return symmetric_group(1)
    raise ParseError(f"cannot parse group {text!r}")


def _parse_perm_group(t: str) -> PermGroup:
    m = re.fullmatch(r"perm\((\d+)\)\s*:\s*(.*)", t, flags=re.S)
    if not m:
        raise ParseError(f"expected 'perm(n): (a b), ...', got {t!r}")
    n = int(m.group(1))
    body = m.group(2).strip()
    try:
        gens = [parse_cycles(g, n) for g in re.findall(r"\([^()]*\)(?:\s*\([^()]*\))*", body)] if body else []
    except (ValueError, IndexError) as exc:
        raise ParseError(f"bad permutation in {body!r}: {exc}") from None
    if body and not gens:
        raise ParseError(f"no permutations found in {body!r}")
    return closure(n, gens, name=t)


def parse_hom(text: str, source: PermGroup, target: PermGroup) -> GroupHom:
    """``id``, ``incl``, ``triv``, ``sign``, ``diag``, ``proj<i>`` (1-based), ``block``,
    or ``images: <perm>; <perm>; ...`` giving the images of the source generators."""
    t = text.strip()
    if t == "id":
        if source is not target:
            raise ParseError("id needs equal source and target")
        return GroupHom.identity(source)
    if t == "incl":
        return inclusion_hom(source, target)
    if t == "triv":
        return GroupHom.trivial(source, target)
    if t == "sign":
        if target is not symmetric_group(2):
            raise ParseError("sign maps to S2")
        return sign_hom(source.degree) if source is symmetric_group(source.degree) else _sign_general(source)
    if t == "diag":
        if not (isinstance(target, ProductGroup) and all(f is source for f in target.factors)):
            raise ParseError("diag needs a target of the form GxG")
        k = len(target.factors)
        return GroupHom.from_rows(source, target, lambda r: target.join([r] * k), name="diag")
    m = re.fullmatch(r"proj(\d+)", t)
    if m:
        if not isinstance(source, ProductGroup):
            raise ParseError("projections need a product source")
        i = int(m.group(1)) - 1
        if not 0 <= i < len(source.factors) or source.factors[i] is not target:
            raise ParseError(f"factor {i + 1} of {source} is not {target}")
        return source.projections[i]
    if t == "block":
        if not hasattr(source, "projection"):
            raise ParseError("block needs a wreath product source")
        return source.projection
    m = re.fullmatch(r"images\s*:\s*(.*)", t, flags=re.S)
    if m:
        imgs = [parse_cycles(p, target.degree) for p in m.group(1).split(";")]
        return hom_from_images(source, target, imgs, name="images")
    raise ParseError(f"cannot parse homomorphism {text!r}")


def _sign_general(G: PermGroup) -> GroupHom:
    T = symmetric_group(2)
    cts = G._cycle_type_data
    parity = np.array([sum(c - 1 for c in cts[1][i]) % 2 for i in cts[0]])
    return GroupHom(G, T, parity, check=True, name="sign")


# -- coefficients and elements --------------------------------------------------

def infer_ring(literal: str) -> Ring:
    t = literal.replace(" ", "")
    if "i" in t:
        return QI if "/" in t else ZI
    return QQ if "/" in t else ZZ


def join_rings(a: Ring, b: Ring) -> Ring:
    order = {"Z": 0, "Q": 1, "Zi": 1, "Qi": 2}
    if a == b:
        return a
    if {a.tag, b.tag} == {"Q", "Zi"}:
        return QI
    if a.tag in order and b.tag in order:
        return a if order[a.tag] > order[b.tag] else b
    raise ParseError(f"cannot combine coefficients in {a} and {b}")


def _terms(text: str):
    """Yield ``(sign, coefficient literal or None, atom or None)``."""
    s = text.strip()
    i, n = 0, len(s)
    first = True
    while i < n:
        while i < n and s[i].isspace():
            i += 1
        sign = 1
        if i < n and s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        elif not first:
            raise ParseError(f"expected '+' or '-' at {s[i:]!r}")
        first = False
        while i < n and s[i].isspace():
            i += 1
        coef = None
        if i < n and s[i] == "(":
            j = s.index(")", i)
            coef = s[i + 1:j].strip()
            i = j + 1
            m = re.match(r"/\s*([0-9]+)", s[i:])
            if m:
                coef = f"({coef})/{m.group(1)}"
                i += len(m.group(0))
        else:
            m = re.match(r"[0-9]+(?:/[0-9]+)?(?:[+-][0-9]*(?:/[0-9]+)?i)?|[0-9]*(?:/[0-9]+)?i(?![A-Za-z])", s[i:])
            if m and m.group(0):
                coef = m.group(0)
                i += len(coef)
        while i < n and s[i].isspace():
            i += 1
        if i < n and s[i] == "*":
            i += 1
            while i < n and s[i].isspace():
                i += 1
        atom = None
        if i < n and s[i] == "[":
            j = s.index("]", i)
            atom = s[i + 1:j].strip()
            i = j + 1
        elif i < n and s[i] == "t" and (i + 1 == n or not s[i + 1].isalnum()):
            atom = "t"
            i += 1
        if coef is None and atom is None:
            raise ParseError(f"cannot parse term at {s[i:]!r}")
        yield sign, coef, atom


def parse_element(text: str, G: PermGroup, ring: Ring | None = None) -> BurnsideElement:
    terms = list(_terms(text))
    if ring is None:
        ring = ZZ
        for _, coef, _ in terms:
            if coef is not None:
                ring = join_rings(ring, infer_ring(coef))
    total = BurnsideElement.zero(G, ring)
    for sign, coef, atom in terms:
        c = _coefficient(coef, ring) if coef is not None else ring.one
        if sign < 0:
            c = ring.neg(c)
        total = total + _atom(atom, G, ring).scale(c)
    return total


def _coefficient(literal: str, ring: Ring):
    m = re.fullmatch(r"\((.*)\)/([0-9]+)", literal)
    if not m:
        return ring.parse(literal)
    inner = infer_ring(m.group(1))
    value = inner.parse(m.group(1))
    if inner.tag in ("Zi", "Qi"):
        return ring.coerce(value / int(m.group(2)))
    return ring.coerce(Fraction(value) / int(m.group(2)))


def _atom(atom: str | None, G: PermGroup, ring: Ring) -> BurnsideElement:
    if atom is None or atom == "G":
        return BurnsideElement.one(G, ring)
    if atom == "t":
        if G is not symmetric_group(2):
            raise ParseError("'t' is only defined over S2")
        return BurnsideElement.basis(G.trivial_subgroup(), ring)
    if atom == "e":
        return BurnsideElement.basis(G.trivial_subgroup(), ring)
    if "/" in atom:
        gspec, sub = atom.split("/", 1)
        if parse_group(gspec) is not G:
            raise ParseError(f"[{atom}] does not live over {G}")
        return _atom(sub.strip() if sub.strip() not in (gspec.strip(),) else "G", G, ring)
    try:
        return BurnsideElement.basis(subgroup_for_label(G, atom), ring)
    except (KeyError, ValueError) as exc:
        raise ParseError(f"unknown class label {atom!r} for {G}") from exc


def parse_ring(tag: str | None) -> Ring | None:
    return None if tag is None else ring_from_tag(tag)


# -- operators ----------------------------------------------------------------


def parse_operator(text: str):
    """An element of B from ``c*[S<n>/<sub>] + ...``."""
    from .beta import OperatorElement

    total = OperatorElement()
    for sign, coef, atom in _terms(text):
        c = int(coef) if coef is not None else 1
        if atom is None:
            x = OperatorElement.one()
        elif atom == "e" or atom == "S1/e" or atom == "S1/S1":
            x = OperatorElement.unit_e()
        else:
            gspec = atom.split("/", 1)[0]
            G = parse_group(gspec)
            if G is not symmetric_group(G.degree) or G.name != gspec.strip():
                raise ParseError(f"operator classes live over symmetric groups, got {gspec!r}")
            x = OperatorElement.from_element(_atom(atom, G, ZZ))
        total = total + x.scale(sign * c)
    return total


def parse_operator2(text: str):
    """An element of B^2: ``c*[S<p>xS<q>/<sub>] + ...``, ``Phi(<op>)``, or ``<op> # <op>`` for ``x x y``."""
    from .beta import OperatorElement2, Phi, times2

    t = text.strip()
    m = re.fullmatch(r"Phi\((.*)\)", t, flags=re.S)
    if m:
        return Phi(parse_operator(m.group(1)))
    if "#" in t:
        a, b = t.split("#", 1)
        return times2(parse_operator(a), parse_operator(b))
    total = OperatorElement2()
    for sign, coef, atom in _terms(t):
        c = int(coef) if coef is not None else 1
        if atom is None:
            x = OperatorElement2({(0, 0): BurnsideElement.one(direct_product(symmetric_group(0),
                                                                                symmetric_group(0)))})
        else:
            gspec = atom.split("/", 1)[0]
            m = re.fullmatch(r"S(\d+)xS(\d+)", gspec.strip())
            if not m:
                raise ParseError(f"bidegree classes live over S<p>xS<q>, got {gspec!r}")
            p, q = int(m.group(1)), int(m.group(2))
            G = direct_product(symmetric_group(p), symmetric_group(q))
            x = OperatorElement2({(p, q): _atom(atom, G, ZZ)})
        total = total + x.scale(sign * c)
    return total


def format_s2(x: BurnsideElement) -> str:
    """``a*t + b`` form of an element of ``A(Sigma_2)``."""
    G = x.group
    if G is not symmetric_group(2):
        return str(x)
    R = x.ring
    reg_t = BurnsideElement.basis(G.trivial_subgroup(), R)
    (kt,) = reg_t.coeffs
    a = x.coeffs.get(kt, R.zero)
    b = R.zero
    for k, v in x.coeffs.items():
        if k != kt:
            b = v
    parts = []
    if not R.is_zero(a):
        sa = R.fmt(a)
        parts.append("t" if sa == "1" else "-t" if sa == "-1" else f"({sa})t" if "i" in sa or "/" in sa else f"{sa}t")
    if not R.is_zero(b):
        sb = R.fmt(b)
        if "i" in sb:
            sb = f"({sb})"
        if parts and sb.startswith("-"):
            parts.append(f"- {sb[1:]}")
        elif parts:
            parts.append(f"+ {sb}")
        else:
            parts.append(sb)
    return " ".join(parts) or "0"


__all__ = ["ParseError", "parse_group", "parse_hom", "parse_element", "parse_operator",
           "parse_operator2", "parse_ring", "format_s2"]
