"""Simple root systems in simple-root coordinates.

All vectors are integer or rational coordinate tuples with respect to the
simple roots (Bourbaki numbering).  Inner products go through a rational Gram
matrix scaled so that long roots have squared length 2; no orthonormal
realization is ever built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import intlinalg as la

Vector = tuple[Fraction, ...]

VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


def _edges(family: str, r: int) -> list[tuple[int, int]]:
    if family in "ABCFG":
        return [(i, i + 1) for i in range(r - 1)]
    if family == "D":
        return [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
    # E_r, Bourbaki: 1-3-4-5-...-r with 2 attached to 4
    return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, r - 1)]


def _squared_lengths(family: str, r: int) -> list[Fraction]:
    two, one = Fraction(2), Fraction(1)
    if family == "B":
        return [two] * (r - 1) + [one]
    if family == "C":
        return [one] * (r - 1) + [two]
    if family == "F":
        return [two, two, one, one]
    if family == "G":
        return [Fraction(2, 3), two]
    return [two] * r


@dataclass(frozen=True)
class RootSystem:
    """Cartan data, roots and Coxeter invariants of a simple Lie algebra.

    ``cartan[i][j] = 2 (a_i|a_j) / (a_j|a_j)``; roots are integer tuples in
    the simple-root basis, sorted by (height, coordinates) with negatives
    first.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]
    roots: tuple[tuple[int, ...], ...]
    long_short: tuple[str, ...]
    n_g: int
    h: int
    h_check: int
    h_long: int
    h_short: int
    fundamental_weights: tuple[Vector, ...]
    rho: Vector
    rho_long: Vector
    rho_short: Vector
    theta_highest: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.n_g == 1

    def inner(self, u, v) -> Fraction:
        return la.dot(u, self.gram, v)

    def norm(self, u) -> Fraction:
        return la.dot(u, self.gram, u)

    @property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        return tuple(a for a in self.roots if any(a) and min(a) >= 0)

    @property
    def simple_lengths(self) -> tuple[Fraction, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))

    @property
    def r_long(self) -> int:
        top = max(self.simple_lengths)
        return sum(1 for d in self.simple_lengths if d == top)

    @property
    def r_short(self) -> int:
        return self.rank - self.r_long

    @cached_property
    def fundamental_coweights(self) -> tuple[Vector, ...]:
        """Coweights ``w_i`` with ``(w_i|a_j) = delta_ij``: columns of gram^-1."""
        inv = la.inverse(self.gram)
        return tuple(tuple(col) for col in la.columns(inv))

    @cached_property
    def simple_coroots(self) -> tuple[Vector, ...]:
        out = []
        for i, d in enumerate(self.simple_lengths):
            out.append(tuple(Fraction(2 * int(i == j)) / d for j in range(self.rank)))
        return tuple(out)

    def pairing_with_coroot(self, x, i: int) -> Fraction:
        """``<x, a_i^vee> = 2 (x|a_i)/(a_i|a_i)``."""
        a = [int(i == j) for j in range(self.rank)]
        return 2 * self.inner(x, a) / self.gram[i][i]

    def is_dominant(self, x) -> bool:
        return all(self.pairing_with_coroot(x, i) >= 0 for i in range(self.rank))

    def to_json(self) -> str:
        return json.dumps(
            {
                "family": self.family,
                "rank": self.rank,
                "cartan": [list(row) for row in self.cartan],
                "gram": [[str(x) for x in row] for row in self.gram],
            },
            sort_keys=True,
        )


def parse_type(text: str) -> tuple[str, int]:
    """``"E8"`` / ``"e 8"`` / ``"A_3"`` -> ``("E", 8)``."""
    s = text.strip().replace("_", "").replace(" ", "")
    if len(s) < 2 or not s[1:].isdigit():
        raise ValueError(f"cannot parse root system type {text!r}")
    family, rank = s[0].upper(), int(s[1:])
    check_type(family, rank)
    return family, rank


def check_type(family: str, rank: int) -> None:
    if family not in VALID_RANKS:
        raise ValueError(f"unknown family {family!r}; expected one of A-G")
    if not VALID_RANKS[family](rank):
        raise ValueError(f"{family}{rank} is not a valid simple type")


def _reflection_closure(cartan, r: int) -> list[tuple[int, ...]]:
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(r):
                c = sum(x[j] * cartan[j][i] for j in range(r))
                if c == 0:
                    continue
                y = tuple(x[j] - (c if j == i else 0) for j in range(r))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda a: (sum(a), a))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the normalized root system of type ``family`` and ``rank``."""
    check_type(family, rank)
    r = rank
    lengths = _squared_lengths(family, r)
    gram = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        gram[i][i] = lengths[i]
    for i, j in _edges(family, r):
        gram[i][j] = gram[j][i] = -max(lengths[i], lengths[j]) / 2
    cartan = [[2 * gram[i][j] / gram[j][j] for j in range(r)] for i in range(r)]
    assert all(c.denominator == 1 for row in cartan for c in row)
    cartan_int = tuple(tuple(int(c) for c in row) for row in cartan)

    roots = _reflection_closure(cartan_int, r)
    # reflection closure from simple roots yields the whole root system
    roots = sorted(set(roots) | {tuple(-a for a in x) for x in roots}, key=lambda a: (sum(a), a))

    def norm(a):
        return la.dot(a, gram, a)

    long_len = max(lengths)
    long_short = tuple("long" if norm(a) == long_len else "short" for a in roots)
    n_g = int(long_len / min(lengths))

    positive = [a for a in roots if min(a) >= 0]
    theta = max(positive, key=lambda a: (sum(a), a))
    half = Fraction(1, 2)
    rho = tuple(half * sum(a[j] for a in positive) for j in range(r))
    pos_long = [a for a in positive if norm(a) == long_len]
    pos_short = [a for a in positive if norm(a) != long_len]
    rho_long = tuple(half * sum(a[j] for a in pos_long) for j in range(r))
    rho_short = tuple(half * sum(a[j] for a in pos_short) for j in range(r))

    # <x, theta^vee> = 2(x|theta)/(theta|theta) = (x|theta) since theta is long
    def pair_theta(x):
        return la.dot(x, gram, theta) * 2 / long_len

    h_check = 1 + pair_theta(rho)
    h_long = 1 + pair_theta(rho_long)
    h_short = n_g * pair_theta(rho_short)
    h = Fraction(len(roots), r)
    for val in (h, h_check, h_long, h_short):
        assert val.denominator == 1, (family, rank, val)

    inv = la.inverse(gram)
    fund = tuple(
        tuple(inv[k][i] * lengths[i] / 2 for k in range(r)) for i in range(r)
    )  # (w_i|a_j) = delta_ij (a_j|a_j)/2

    return RootSystem(
        family=family,
        rank=r,
        cartan=cartan_int,
        gram=tuple(tuple(row) for row in gram),
        roots=tuple(roots),
        long_short=long_short,
        n_g=n_g,
        h=int(h),
        h_check=int(h_check),
        h_long=int(h_long),
        h_short=int(h_short),
        fundamental_weights=fund,
        rho=rho,
        rho_long=rho_long,
        rho_short=rho_short,
        theta_highest=theta,
    )


def root_system(text: str) -> RootSystem:
    return build_root_system(*parse_type(text))


def coroot(rs: RootSystem, root) -> Vector:
    """``2 a / (a|a)`` under the identification given by the Gram matrix."""
    key = tuple(int(x) for x in root)
    if tuple(Fraction(x) for x in root) != tuple(Fraction(x) for x in key) or key not in set(rs.roots):
        raise ValueError(f"{tuple(root)} is not a root of {rs.name}")
    n = rs.norm(key)
    return tuple(Fraction(2 * x) / n for x in key)


DUAL_FAMILY = {"B": "C", "C": "B"}


def dual_root_system(rs: RootSystem) -> RootSystem:
    """Root system of the Langlands dual algebra (coroots scaled by 1/sqrt(n_g))."""
    return build_root_system(DUAL_FAMILY.get(rs.family, rs.family), rs.rank)


def dual_permutation(rs: RootSystem) -> tuple[int, ...]:
    """``perm[j] = i`` when dual simple root ``j`` is ``a_i^vee / sqrt(n_g)``.

    Identity except for F4 and G2, whose Bourbaki numbering puts long roots on
    the opposite end.
    """
    r = rs.rank
    if rs.family in ("F", "G"):
        return tuple(reversed(range(r)))
    return tuple(range(r))


def dual_coordinate_map(rs: RootSystem) -> list[list[Fraction]]:
    """Matrix ``P`` sending simple-root coordinates of ``x`` to the dual system's
    simple-root coordinates of ``sqrt(n_g) x``.

    Uses ``sqrt(n) a_i = n (a_i|a_i)/2 * b_j`` with ``b_j`` the dual simple root
    matched to ``a_i``; all entries are rational.
    """
    r = rs.rank
    perm = dual_permutation(rs)
    p = [[Fraction(0)] * r for _ in range(r)]
    for j, i in enumerate(perm):
        p[j][i] = rs.n_g * rs.gram[i][i] / 2
    return p


def coxeter_identity(rs: RootSystem) -> bool:
    """``h(^Lg) = h`` and ``h^vee + h^vee(^Lg) = (1 + 1/n_g) h``."""
    d = dual_root_system(rs)
    return d.h == rs.h and Fraction(rs.h_check + d.h_check) == (1 + Fraction(1, rs.n_g)) * rs.h


def all_types(max_rank: int, *, simply_laced: bool | None = None) -> list[RootSystem]:
    """Every valid simple type with rank ``<= max_rank`` (D starts at 4 to
    avoid duplicating A3)."""
    out = []
    for family in "ABCDEFG":
        for r in range(1, max_rank + 1):
            if family == "D" and r < 4:
                continue
            if not VALID_RANKS[family](r):
                continue
            rs = build_root_system(family, r)
            if simply_laced is None or rs.simply_laced == simply_laced:
                out.append(rs)
    return out
