"""Exact arithmetic in cyclotomic fields, with a symbolic square-root factor.

A :class:`CycScalar` of order ``M`` is a rational combination of powers of
``zeta_M = exp(2 pi i / M)`` reduced modulo the ``M``-th cyclotomic
polynomial, so equality is decided by comparing coefficient tuples.  A
:class:`RadScalar` carries an extra ``sqrt(rad) / denom`` factor that is only
folded into the field when two values are compared.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath
import numpy as np
import sympy

Number = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (coefficients low -> high)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        q, rem = divmod(num[k + len(den) - 1], lead)
        assert rem == 0
        out[k] = q
        if q:
            for j, d in enumerate(den):
                num[k + j] -= q * d
    assert not any(num[: len(den) - 1])
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (low -> high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("order must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@lru_cache(maxsize=None)
def reduction_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row ``k`` holds the canonical coefficients of ``zeta_m ** k``, ``0 <= k < m``."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg > 0 else []
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x and reduce the overflow coefficient with phi (monic)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


@lru_cache(maxsize=None)
def reduction_matrix(m: int) -> np.ndarray:
    return np.array(reduction_table(m), dtype=np.int64).reshape(m, totient(m))


class CycScalar:
    """Element of Q(zeta_M) in the canonical power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 2 or order % 2:
            raise ValueError("CycScalar order must be a positive even integer")
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != totient(order):
            raise ValueError("coefficient vector has wrong length for this order")
        self.order = order
        self.coeffs = coeffs

    # construction ---------------------------------------------------------

    @classmethod
    def from_exponents(cls, order: int, terms) -> "CycScalar":
        """``sum c * zeta_order ** k`` over ``(k, c)`` pairs, reduced."""
        if order % 2:
            order *= 2
            terms = [(2 * k, c) for k, c in terms]
        table = reduction_table(order)
        acc = [Fraction(0)] * totient(order)
        for k, c in terms:
            if not c:
                continue
            row = table[k % order]
            for i, t in enumerate(row):
                if t:
                    acc[i] += c * t
        return cls(order, acc)._shrink()

    @classmethod
    def rational(cls, x: Number) -> "CycScalar":
        return cls(2, [Fraction(x)])

    @classmethod
    def zero(cls) -> "CycScalar":
        return cls(2, [0])

    @classmethod
    def one(cls) -> "CycScalar":
        return cls(2, [1])

    # structure ------------------------------------------------------------

    def terms(self):
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def embed(self, order: int) -> "CycScalar":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into {order}")
        step = order // self.order
        return CycScalar.from_exponents_raw(order, [(k * step, c) for k, c in self.terms()])

    @classmethod
    def from_exponents_raw(cls, order: int, terms) -> "CycScalar":
        table = reduction_table(order)
        acc = [Fraction(0)] * totient(order)
        for k, c in terms:
            row = table[k % order]
            for i, t in enumerate(row):
                if t:
                    acc[i] += c * t
        return cls(order, acc)

    def _shrink(self) -> "CycScalar":
        """Move to the smallest subfield visible from the coefficient support."""
        support = [k for k, c in enumerate(self.coeffs) if c]
        if not support:
            return CycScalar(2, [0])
        g = 0
        for k in support:
            g = math.gcd(g, k)
        if g == 0:  # rational
            return CycScalar(2, [self.coeffs[0]]) if self.order != 2 else self
        best = None
        for step in sorted(_divisors(self.order), reverse=True):
            if step > 1 and g % step == 0 and (self.order // step) % 2 == 0:
                best = step
                break
        if best is None:
            return self
        small = self.order // best
        coeffs = [Fraction(0)] * totient(small)
        for k in support:
            coeffs[k // best] = self.coeffs[k]
        return CycScalar(small, coeffs)

    def _common(self, other: "CycScalar") -> tuple["CycScalar", "CycScalar"]:
        m = _lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "CycScalar":
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return CycScalar.rational(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        return CycScalar(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])._shrink()

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.order, [c * other for c in self.coeffs])._shrink()
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._common(other)
        m = a.order
        raw: dict[int, Fraction] = {}
        bt = b.terms()
        for i, x in a.terms():
            for j, y in bt:
                k = (i + j) % m
                raw[k] = raw.get(k, Fraction(0)) + x * y
        return CycScalar.from_exponents_raw(m, raw.items())._shrink()

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out, base = CycScalar.one(), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "CycScalar":
        m = self.order
        return CycScalar.from_exponents_raw(m, [((-k) % m, c) for k, c in self.terms()])._shrink()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    # numerics & display -----------------------------------------------------

    def to_mpc(self, dps: int = 30):
        with mpmath.workdps(dps):
            m = self.order
            acc = mpmath.mpc(0)
            for k, c in self.terms():
                acc += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / m)
            return +acc

    def to_complex(self, precision: float = 1e-15) -> complex:
        dps = max(20, int(-math.log10(precision)) + 10)
        return complex(self.to_mpc(dps))

    def __complex__(self):
        return self.to_complex()

    def __repr__(self):
        return f"CycScalar({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k, c in self.terms():
            q = Fraction(2 * k, self.order)
            if q == 0:
                parts.append(str(c))
            else:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}·")
                parts.append(f"{coef}e^{{{format_angle(q)}}}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycScalar":
        return cls(int(obj["order"]), [Fraction(c) for c in obj["coeffs"]])


def format_angle(q) -> str:
    """``q`` (a rational multiple of ``pi i``) as ``2πi``, ``πi/4``, ``-3πi/2``."""
    q = Fraction(q)
    p, d = q.numerator, q.denominator
    head = "" if p == 1 else ("-" if p == -1 else str(p))
    return f"{head}πi" + (f"/{d}" if d > 1 else "")


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def phase(q: Number) -> CycScalar:
    """Exact ``exp(pi i q)`` for rational ``q``."""
    q = Fraction(q) % 2
    b = q.denominator
    return CycScalar.from_exponents(2 * b, [(q.numerator, Fraction(1))])


def squarefree_split(m: int) -> tuple[int, int]:
    """``m = s**2 * f`` with ``f`` square-free; returns ``(s, f)``."""
    if m < 1:
        raise ValueError("expected a positive integer")
    s, f = 1, 1
    for p, e in sympy.factorint(m).items():
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CycScalar:
    if p == 2:
        return CycScalar.from_exponents(8, [(1, 1), (7, 1)])
    # sum_k e^{2 pi i k^2/p} is sqrt(p) for p = 1 mod 4 and i sqrt(p) for p = 3 mod 4
    g = CycScalar.from_exponents(2 * p, [(2 * k * k, 1) for k in range(p)])
    if p % 4 == 1:
        return g
    return g * phase(Fraction(-1, 2))


@lru_cache(maxsize=None)
def fold_sqrt(m: int) -> CycScalar:
    """``sqrt(m)`` as an exact cyclotomic integer."""
    if m < 1:
        raise ValueError("fold_sqrt needs m >= 1")
    s, f = squarefree_split(m)
    out = CycScalar.rational(s)
    for p in sympy.factorint(f):
        out = out * _sqrt_prime(p)
    return out


class RadScalar:
    """``cyc * sqrt(rad) / denom`` with ``rad`` square-free and ``denom > 0``."""

    __slots__ = ("cyc", "rad", "denom")

    def __init__(self, cyc, rad: int = 1, denom: int = 1):
        cyc = CycScalar._coerce(cyc)
        if rad < 1 or denom < 1:
            raise ValueError("rad and denom must be positive integers")
        s, f = squarefree_split(rad)
        if s != 1:
            cyc = cyc * s
        g = math.gcd(denom, _content_gcd(cyc))
        if g > 1:
            cyc, denom = cyc / g, denom // g
        self.cyc, self.rad, self.denom = cyc, f, denom

    @classmethod
    def inv_sqrt(cls, n: int) -> "RadScalar":
        """``1/sqrt(n)`` written as ``sqrt(f) * s / n`` with ``n = s^2 f``."""
        s, f = squarefree_split(n)
        return cls(CycScalar.rational(s), f, n)

    @classmethod
    def from_cyc(cls, x) -> "RadScalar":
        return cls(x, 1, 1)

    def normalize(self) -> CycScalar:
        out = self.cyc if self.rad == 1 else self.cyc * fold_sqrt(self.rad)
        return out / self.denom if self.denom != 1 else out

    @staticmethod
    def _coerce(x) -> "RadScalar":
        if isinstance(x, RadScalar):
            return x
        if isinstance(x, (int, Fraction, CycScalar)):
            return RadScalar(x)
        return NotImplemented

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        g = math.gcd(self.rad, other.rad)
        rad = (self.rad // g) * (other.rad // g)
        return RadScalar(self.cyc * other.cyc * g, rad, self.denom * other.denom)

    __rmul__ = __mul__

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.rad == other.rad:
            den = _lcm(self.denom, other.denom)
            cyc = self.cyc * (den // self.denom) + other.cyc * (den // other.denom)
            return RadScalar(cyc, self.rad, den)
        return RadScalar(self.normalize() + other.normalize())

    __radd__ = __add__

    def __neg__(self):
        return RadScalar(-self.cyc, self.rad, self.denom)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def conj(self) -> "RadScalar":
        return RadScalar(self.cyc.conj(), self.rad, self.denom)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.rad == other.rad:
            return self.cyc * other.denom == other.cyc * self.denom
        return self.normalize() == other.normalize()

    __hash__ = None

    def to_complex(self, precision: float = 1e-15) -> complex:
        return self.cyc.to_complex(precision) * math.sqrt(self.rad) / self.denom

    def to_mpc(self, dps: int = 30):
        with mpmath.workdps(dps):
            return self.cyc.to_mpc(dps) * mpmath.sqrt(self.rad) / self.denom

    def __complex__(self):
        return self.to_complex()

    def __str__(self):
        if self.cyc.is_zero():
            return "0"
        body = str(self.cyc)
        compound = len(self.cyc.terms()) > 1
        if self.rad != 1:
            if body == "1":
                body = f"√{self.rad}"
            elif body == "-1":
                body = f"-√{self.rad}"
            else:
                if compound:
                    body = f"√{self.rad}·({body})"
                elif body.startswith("-"):
                    body = f"-√{self.rad}·{body[1:]}"
                else:
                    body = f"√{self.rad}·{body}"
            compound = False
        if self.denom != 1:
            body = f"({body})/{self.denom}" if compound else f"{body}/{self.denom}"
        return body

    def __repr__(self):
        return f"RadScalar({self})"

    def to_json(self) -> dict:
        return {"cyc": self.cyc.to_json(), "rad": self.rad, "denom": self.denom}

    @classmethod
    def from_json(cls, obj: dict) -> "RadScalar":
        return cls(CycScalar.from_json(obj["cyc"]), int(obj["rad"]), int(obj["denom"]))


def _content_gcd(x: CycScalar) -> int:
    """gcd of the coefficients when they are all integers, else 1."""
    g = 0
    for c in x.coeffs:
        if c.denominator != 1:
            return 1
        g = math.gcd(g, c.numerator)
    return g or 1


def normalize(x: RadScalar) -> CycScalar:
    return x.normalize()


def to_complex(x, precision: float = 1e-15) -> complex:
    return x.to_complex(precision)
