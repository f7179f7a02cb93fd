"""Exact coefficient rings: Z, Z/n, Z[i], Q and the Gaussian rationals Q(i)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .config import NotIntegral


@dataclass(frozen=True)
class Gaussian:
    """``re + im*i`` with integer or Fraction parts."""

    re: Any = 0
    im: Any = 0

    def __add__(self, o):
        o = _gauss(o)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-_gauss(o))

    def __rsub__(self, o):
        return _gauss(o) - self

    def __mul__(self, o):
        o = _gauss(o)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Gaussian(1, 0)
        for _ in range(k):
            out = out * self
        return out

    def conj(self):
        return Gaussian(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        o = _gauss(o)
        n = Fraction(o.norm())
        p = self * o.conj()
        return Gaussian(Fraction(p.re) / n, Fraction(p.im) / n)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            o = Gaussian(o, 0)
        return isinstance(o, Gaussian) and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}i"
        if self.re == 0:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{self.re}{sign}{im}"


def _gauss(x) -> Gaussian:
    return x if isinstance(x, Gaussian) else Gaussian(x, 0)


class Ring:
    tag: str
    zero: Any
    one: Any

    def __call__(self, x) -> Any:
        return self.coerce(x)

    def coerce(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self.coerce(a + b)

    def mul(self, a, b):
        return self.coerce(a * b)

    def neg(self, a):
        return self.coerce(-a)

    def is_zero(self, a) -> bool:
        return a == self.zero

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError

    def __repr__(self):
        return self.tag

    def __eq__(self, other):
        return isinstance(other, Ring) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)


class Integers(Ring):
    tag = "Z"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise NotIntegral(f"{x} is not an integer")
            return int(x.numerator)
        if isinstance(x, Gaussian):
            if x.im != 0:
                raise NotIntegral(f"{x} is not an integer")
            return self.coerce(x.re)
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} to Z")
        return x

    def parse(self, text):
        return int(text.strip())


class Rationals(Ring):
    tag = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Gaussian):
            if x.im != 0:
                raise TypeError(f"{x} is not rational")
            x = x.re
        return Fraction(x)

    def fmt(self, a):
        return str(a)

    def parse(self, text):
        return Fraction(text.strip())


class IntegersMod(Ring):
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = n
        self.tag = f"Z/{n}"
        self.zero = 0
        self.one = 1 % n

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                den = pow(x.denominator, -1, self.n)
                return (x.numerator * den) % self.n
            x = x.numerator
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} to {self.tag}")
        return x % self.n

    def parse(self, text):
        return self.coerce(int(text.strip()))


class GaussianIntegers(Ring):
    tag = "Zi"
    zero = Gaussian(0, 0)
    one = Gaussian(1, 0)

    def coerce(self, x):
        x = _gauss(x)
        re_, im = x.re, x.im
        for part in (re_, im):
            if isinstance(part, Fraction) and part.denominator != 1:
                raise NotIntegral(f"{x} is not a Gaussian integer")
        return Gaussian(int(re_), int(im))

    def parse(self, text):
        return self.coerce(_parse_gaussian(text, int))


class GaussianRationals(Ring):
    tag = "Qi"
    zero = Gaussian(Fraction(0), Fraction(0))
    one = Gaussian(Fraction(1), Fraction(0))

    def coerce(self, x):
        x = _gauss(x)
        return Gaussian(Fraction(x.re), Fraction(x.im))

    def parse(self, text):
        return self.coerce(_parse_gaussian(text, Fraction))


def _parse_gaussian(text: str, num):
    t = text.replace(" ", "")
    if t in ("i", "+i"):
        return Gaussian(0, 1)
    if t == "-i":
        return Gaussian(0, -1)
    m = re.fullmatch(r"([+-]?[0-9/]+)?(?:([+-])([0-9/]*)i)?", t)
    if m and (m.group(1) or m.group(2)):
        re_ = num(m.group(1)) if m.group(1) else 0
        im = 0
        if m.group(2):
            im = num(m.group(3)) if m.group(3) else 1
            if m.group(2) == "-":
                im = -im
        return Gaussian(re_, im)
    m = re.fullmatch(r"([+-]?)([0-9/]*)i", t)
    if m:
        im = num(m.group(2)) if m.group(2) else 1
        return Gaussian(0, -im if m.group(1) == "-" else im)
    raise ValueError(f"cannot parse Gaussian number {text!r}")


ZZ = Integers()
QQ = Rationals()
ZI = GaussianIntegers()
QI = GaussianRationals()


def ZMod(n: int) -> IntegersMod:
    return IntegersMod(n)


def ring_from_tag(tag: str) -> Ring:
    tag = tag.strip()
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    if tag in ("Zi", "Z[i]"):
        return ZI
    if tag in ("Qi", "Q(i)"):
        return QI
    m = re.fullmatch(r"Z/(\d+)", tag)
    if m:
        return ZMod(int(m.group(1)))
    raise ValueError(f"unknown coefficient ring {tag!r}")


def ring_map(source: Ring, target: Ring):
    """The canonical map ``source -> target`` (reduction or inclusion), or raise."""
    if source == target:
        return lambda a: a
    if source == ZZ:
        return target.coerce
    if source == ZI and target == QI:
        return target.coerce
    if source == QQ and target in (QI,):
        return target.coerce
    if isinstance(source, IntegersMod) and isinstance(target, IntegersMod) and source.n % target.n == 0:
        return target.coerce
    raise ValueError(f"no canonical ring map {source} -> {target}")
