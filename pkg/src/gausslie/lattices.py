"""Lattices in the (co)weight space, finite quotients, group forms and
finite-abelian Fourier analysis.

Every lattice carries its own ambient Gram matrix.  Usually that is the
root system's Gram matrix; the dual-side sector of a non-simply laced
algebra uses ``n_g`` times it, which realizes a symbolic ``sqrt(n_g)``
scaling of the stored coordinates while keeping everything rational.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Sequence

import numpy as np

from . import intlinalg as la
from .cyclo import CycScalar, phase
from .pointsearch import points_in_ellipsoid
from .rootsys import RootSystem, build_root_system, coroot, dual_coordinate_map, dual_root_system, parse_type

Vector = tuple[Fraction, ...]


def _vec(v) -> Vector:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class Lattice:
    """Full-rank lattice; ``basis`` columns are the generators."""

    basis: tuple[tuple[Fraction, ...], ...]
    gram_ambient: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if la.det(self.basis) == 0:
            raise ValueError("lattice basis is singular")

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence], gram) -> "Lattice":
        """Lattice spanned by (possibly redundant) generators."""
        r = len(gram)
        basis = la.hermite_basis([list(g) for g in gens], r)
        return cls(_freeze(la.from_columns(basis)), _freeze(gram))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def generators(self) -> tuple[Vector, ...]:
        return tuple(tuple(c) for c in la.columns(self.basis))

    @cached_property
    def gram(self) -> list[list[Fraction]]:
        """Gram matrix of the generators."""
        return la.matmul(la.matmul(la.transpose(self.basis), self.gram_ambient), self.basis)

    @cached_property
    def _inverse(self):
        return la.inverse(self.basis)

    def coords(self, v) -> list[Fraction]:
        return la.matvec(self._inverse, _vec(v))

    def contains(self, v) -> bool:
        return all(c.denominator == 1 for c in self.coords(v))

    def point(self, coeffs) -> Vector:
        return tuple(la.matvec(self.basis, [Fraction(c) for c in coeffs]))

    @cached_property
    def _sparse_gram(self) -> tuple[tuple[int, int, Fraction], ...]:
        return tuple((i, j, g) for i, row in enumerate(self.gram_ambient) for j, g in enumerate(row) if g)

    def inner(self, u, v) -> Fraction:
        return sum((u[i] * g * v[j] for i, j, g in self._sparse_gram), Fraction(0))

    def norm(self, u) -> Fraction:
        return self.inner(u, u)

    @cached_property
    def det_gram(self) -> Fraction:
        """Squared covolume."""
        return la.det(self.gram)

    def covolume(self) -> float:
        return math.sqrt(self.det_gram)

    def is_integral(self) -> bool:
        return la.is_integral(self.gram)

    def is_even(self) -> bool:
        return self.is_integral() and all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(g) for g in other.generators)

    def same_span(self, other: "Lattice") -> bool:
        return self.contains_lattice(other) and other.contains_lattice(self)

    def scaled_gram(self, factor) -> "Lattice":
        g = [[x * Fraction(factor) for x in row] for row in self.gram_ambient]
        return Lattice(self.basis, _freeze(g))

    @cached_property
    def reduced(self) -> "Lattice":
        """Same lattice with an LLL-reduced basis (better for enumeration)."""
        u = la.lll_transform(self.gram)
        return Lattice(_freeze(la.matmul(self.basis, u)), self.gram_ambient)

    def float_gram(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.gram], dtype=np.float64)


def _freeze(m) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def lattice_index(sup: Lattice, sub: Lattice) -> int:
    """``[sup : sub]`` for ``sub`` contained in ``sup``."""
    k = la.matmul(sup._inverse, sub.basis)
    if not la.is_integral(k):
        raise ValueError("sublattice is not contained in the ambient lattice")
    return abs(int(la.det(k)))


def dual_lattice(lat: Lattice) -> Lattice:
    """``{x : (x|y) in Z for all y in lat}``; basis ``G^-1 B^-T``."""
    basis = la.matmul(la.inverse(lat.gram_ambient), la.transpose(la.inverse(lat.basis)))
    return Lattice(_freeze(basis), lat.gram_ambient)


# standard lattices of a root system ------------------------------------------


def root_lattice(rs: RootSystem) -> Lattice:
    return _root_lattice(rs.family, rs.rank)


@lru_cache(maxsize=None)
def _root_lattice(family: str, rank: int) -> Lattice:
    rs = build_root_system(family, rank)
    return Lattice(_freeze(la.identity(rs.rank)), rs.gram)


def coroot_lattice(rs: RootSystem) -> Lattice:
    return _coroot_lattice(rs.family, rs.rank)


@lru_cache(maxsize=None)
def _coroot_lattice(family: str, rank: int) -> Lattice:
    rs = build_root_system(family, rank)
    return Lattice(_freeze(la.from_columns(rs.simple_coroots)), rs.gram)


def coweight_lattice(rs: RootSystem) -> Lattice:
    return _coweight_lattice(rs.family, rs.rank)


@lru_cache(maxsize=None)
def _coweight_lattice(family: str, rank: int) -> Lattice:
    """Dual of the root lattice (the largest ``ell``)."""
    rs = build_root_system(family, rank)
    return Lattice(_freeze(la.from_columns(rs.fundamental_coweights)), rs.gram)


def weight_lattice(rs: RootSystem) -> Lattice:
    return _weight_lattice(rs.family, rs.rank)


@lru_cache(maxsize=None)
def _weight_lattice(family: str, rank: int) -> Lattice:
    """Dual of the coroot lattice, spanned by the fundamental weights."""
    rs = build_root_system(family, rank)
    return Lattice(_freeze(la.from_columns(rs.fundamental_weights)), rs.gram)


# quotients ---------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientGroup:
    """Finite quotient ``sup / sub``.

    ``reps[i]`` is the minimal-norm representative of coset ``i`` (ties broken
    by dominance, then lexicographically when a root system is supplied).
    Cosets are ordered by (norm, representative).  ``labels[i]`` is the coset's
    coordinate in ``Z/d_1 + ... + Z/d_k`` (only factors ``d > 1`` are kept).
    """

    sub: Lattice
    sup: Lattice
    reps: tuple[Vector, ...]
    invariant_factors: tuple[int, ...]
    labels: tuple[tuple[int, ...], ...]
    pairing: tuple[tuple[Fraction, ...], ...] | None
    norm: tuple[Fraction, ...] | None
    _label_map: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.reps)

    def __len__(self) -> int:
        return len(self.reps)

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def label_of(self, v) -> tuple[int, ...]:
        c = self.sup.coords(v)
        if any(x.denominator != 1 for x in c):
            raise ValueError(f"{tuple(v)} is not in the ambient lattice")
        return tuple(
            sum(a * int(b) for a, b in zip(row, c)) % d for row, d in zip(self._label_map, self.invariant_factors)
        )

    def index_of(self, v) -> int:
        return self._index[self.label_of(v)]

    def add(self, i: int, j: int) -> int:
        lab = tuple((a + b) % d for a, b, d in zip(self.labels[i], self.labels[j], self.invariant_factors))
        return self._index[lab]

    def neg(self, i: int) -> int:
        lab = tuple((-a) % d for a, d in zip(self.labels[i], self.invariant_factors))
        return self._index[lab]

    def zero(self) -> int:
        return self._index[tuple(0 for _ in self.invariant_factors)]

    def require_pairing(self):
        if self.pairing is None:
            raise ValueError("pairing is not well defined on this quotient")
        return self.pairing

    def require_norm(self):
        if self.norm is None:
            raise ValueError("norm is not well defined on this quotient (sublattice is not even)")
        return self.norm

    def is_nondegenerate(self) -> bool:
        p = self.require_pairing()
        return all(any(p[i][j] != 0 for j in range(self.order)) for i in range(self.order) if i != self.zero())

    def exact_norm(self, i: int) -> Fraction:
        return self.sup.norm(self.reps[i])


def _int_scaled(m) -> tuple[np.ndarray, int]:
    den = la.lcm_denominator(m)
    return np.array([[int(x * den) for x in row] for row in m], dtype=np.int64), den


def _nearest_plane(gram: np.ndarray, t: list[float]) -> list[int]:
    """Babai nearest-plane rounding of coefficient vector ``t``."""
    r = np.linalg.cholesky(gram).T  # gram = r^T r, r upper triangular
    n = len(t)
    k = [0] * n
    for i in range(n - 1, -1, -1):
        acc = sum(r[i, j] * (t[j] - k[j]) for j in range(i + 1, n))
        k[i] = round(t[i] + acc / r[i, i])
    return k


def _minimal_representative(v: Vector, sub: Lattice, rs: RootSystem | None) -> Vector:
    """Shortest vector of ``v + sub``; ties go to a dominant vector, then the
    lexicographically smallest.  Candidate norms are compared as scaled
    integers, so the choice is exact."""
    sub = sub.reduced
    coords = sub.coords(v)
    shift = _nearest_plane(sub.float_gram(), [float(c) for c in coords])
    rounded = [c - k for c, k in zip(coords, shift)]
    v0 = sub.point(rounded)
    center = np.array([-float(c) for c in rounded], dtype=np.float64)
    pts = points_in_ellipsoid(sub.float_gram(), center, float(sub.norm(v0)))
    if len(pts) == 0:
        return v0
    bmat, d1 = _int_scaled([list(v0)] + la.transpose(sub.basis))
    w = bmat[0][None, :] + pts @ bmat[1:]  # rows are d1 * candidate
    gint, _ = _int_scaled(sub.gram_ambient)
    gw = w @ gint.T
    norms = np.einsum("ij,ij->i", w, gw)
    tied = w[norms == norms.min()]
    if rs is not None and len(tied) > 1:
        dom = tied[np.all((tied @ gint.T) >= 0, axis=1)]
        if len(dom):
            tied = dom
    best = min(tuple(int(x) for x in row) for row in tied)
    return tuple(Fraction(x, d1) for x in best)


def quotient(sup: Lattice, sub: Lattice, rs: RootSystem | None = None) -> QuotientGroup:
    """Enumerate ``sup/sub`` via the Smith normal form of the change of basis."""
    k = la.matmul(sup._inverse, sub.basis)
    for j, col in enumerate(la.columns(k)):
        if any(x.denominator != 1 for x in col):
            raise ValueError(f"sublattice generator {sub.generators[j]} is not in the ambient lattice")
    u, d, _ = la.smith_normal_form([[int(x) for x in row] for row in k])
    diag = [d[i][i] for i in range(len(d))]
    if any(x == 0 for x in diag):
        raise ValueError("sublattice is not of full rank")
    u_inv = la.int_inverse(u)
    keep = [i for i, x in enumerate(diag) if x > 1]
    factors = tuple(diag[i] for i in keep)
    # only the nontrivial rows of U matter for labels
    label_rows = tuple(tuple(u[i]) for i in keep)

    reps, labels = [], []
    for lab in itertools.product(*(range(x) for x in factors)):
        c = [0] * len(diag)
        for idx, val in zip(keep, lab):
            c[idx] = val
        coeffs = la.matvec(u_inv, c)
        v = sup.point(coeffs)
        reps.append(_minimal_representative(_vec(v), sub, rs))
        labels.append(tuple(lab))

    order = sorted(range(len(reps)), key=lambda i: (sup.norm(reps[i]), reps[i]))
    reps = [reps[i] for i in order]
    labels = [labels[i] for i in order]

    cross = la.matmul(la.matmul(la.transpose(sup.basis), sup.gram_ambient), sub.basis)
    pairing_ok = la.is_integral(cross)
    pairing = norms = None
    if pairing_ok:
        pairing = tuple(tuple(sup.inner(a, b) % 1 for b in reps) for a in reps)
        if sub.is_even():
            norms = tuple(sup.norm(a) % 2 for a in reps)
    return QuotientGroup(
        sub=sub,
        sup=sup,
        reps=tuple(reps),
        invariant_factors=factors,
        labels=tuple(labels),
        pairing=pairing,
        norm=norms,
        _label_map=label_rows,
    )


def subgroup_closure(a: QuotientGroup, gens: Iterable[int]) -> frozenset[int]:
    elems = {a.zero()}
    frontier = list(elems)
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = a.add(x, g)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def subgroups(a: QuotientGroup) -> list[frozenset[int]]:
    """Every subgroup, as sets of coset indices, sorted by (size, members)."""
    found = {frozenset([a.zero()])}
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for g in range(a.order):
                if g in s:
                    continue
                t = subgroup_closure(a, list(s) + [g])
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def is_subgroup(a: QuotientGroup, members: Iterable[int]) -> bool:
    s = set(members)
    return a.zero() in s and all(a.add(x, y) in s for x in s for y in s)


# group forms -------------------------------------------------------------------


@dataclass(frozen=True)
class GroupForm:
    """Compact form determined by ``coroot lattice <= ell <= coweight lattice``."""

    rs: RootSystem
    ell: Lattice
    name: str

    def __post_init__(self):
        low, high = coroot_lattice(self.rs), coweight_lattice(self.rs)
        for g in low.generators:
            if not self.ell.contains(g):
                raise ValueError(f"{self.name}: coroot {g} is not in ell")
        for g in self.ell.generators:
            if not high.contains(g):
                raise ValueError(f"{self.name}: generator {g} of ell is not in the coweight lattice")

    @property
    def rank(self) -> int:
        return self.rs.rank

    @cached_property
    def ell_dual(self) -> Lattice:
        return dual_lattice(self.ell)

    @cached_property
    def fundamental_group(self) -> QuotientGroup:
        """``ell / coroot lattice``."""
        return quotient(self.ell, coroot_lattice(self.rs), self.rs)

    @cached_property
    def center(self) -> QuotientGroup:
        """``coweight lattice / ell``."""
        return quotient(coweight_lattice(self.rs), self.ell, self.rs)

    @cached_property
    def center_order(self) -> int:
        return lattice_index(coweight_lattice(self.rs), self.ell)

    @cached_property
    def weight_classes(self) -> QuotientGroup:
        """``ell* / root lattice``, which has the order of the center."""
        return quotient(self.ell_dual, root_lattice(self.rs), self.rs)

    def __repr__(self) -> str:
        return f"GroupForm({self.name})"


def simply_connected(rs: RootSystem) -> GroupForm:
    return GroupForm(rs, coroot_lattice(rs), f"simply-connected {rs.name}")


def adjoint(rs: RootSystem) -> GroupForm:
    return GroupForm(rs, coweight_lattice(rs), f"adjoint {rs.name}")


def form_from_extra(rs: RootSystem, extra: Sequence[Sequence], name: str) -> GroupForm:
    gens = [list(g) for g in rs.simple_coroots] + [list(x) for x in extra]
    return GroupForm(rs, Lattice.from_generators(gens, rs.gram), name)


def _coweight(rs: RootSystem, i: int) -> Vector:
    """Fundamental coweight (0-based index)."""
    return rs.fundamental_coweights[i]


def intermediate_forms(rs: RootSystem) -> list[GroupForm]:
    """One form per subgroup of ``coweight/coroot``, smallest ``ell`` first."""
    full = quotient(coweight_lattice(rs), coroot_lattice(rs), rs)
    out = []
    for sub in subgroups(full):
        ell_gens = [full.reps[i] for i in sorted(sub)]
        ell = Lattice.from_generators([list(g) for g in rs.simple_coroots] + [list(g) for g in ell_gens], rs.gram)
        out.append(GroupForm(rs, ell, describe_form(rs, ell)))
    return out


def _scale(v, k) -> list[Fraction]:
    return [Fraction(x) * k for x in v]


def _preset_candidates(rs: RootSystem) -> list[tuple[str, list]]:
    """Named forms of one root system as (name, extra generators)."""
    f, r = rs.family, rs.rank
    cw = lambda i: list(_coweight(rs, i))  # noqa: E731
    every = [cw(i) for i in range(r)]
    out: list[tuple[str, list]] = []
    if f == "A":
        n = r + 1
        for k in range(1, n + 1):
            if n % k == 0:
                name = f"SU({n})" if k == 1 else f"SU({n})/Z{k}"
                out.append((name, [_scale(cw(0), n // k)]))
    elif f == "B":
        out += [(f"Spin({2 * r + 1})", []), (f"SO({2 * r + 1})", every)]
    elif f == "C":
        out += [(f"Sp({r})", []), (f"Sp({r})/Z2", every)]
    elif f == "D":
        m = 2 * r
        out += [(f"Spin({m})", []), (f"SO({m})", [cw(0)])]
        if r % 2 == 0:
            out += [(f"Ss({m})", [cw(r - 1)]), (f"Ss'({m})", [cw(r - 2)])]
        out.append((f"PSO({m})", every))
    elif f == "E":
        if r in (6, 7):
            out += [(f"E{r}", []), (f"E{r}ad", every)]
        else:
            out.append(("E8", []))
    elif f == "F":
        out.append(("F4", []))
    elif f == "G":
        out.append(("G2", []))
    return out


def describe_form(rs: RootSystem, ell: Lattice) -> str:
    for name, extra in _preset_candidates(rs):
        cand = Lattice.from_generators([list(g) for g in rs.simple_coroots] + extra, rs.gram)
        if cand.same_span(ell):
            return name
    if ell.same_span(coroot_lattice(rs)):
        return f"simply-connected {rs.name}"
    if ell.same_span(coweight_lattice(rs)):
        return f"adjoint {rs.name}"
    idx = abs(la.det(la.matmul(la.inverse(coroot_lattice(rs).basis), ell.basis)))
    return f"{rs.name}/pi1[{idx}]"


_PRESET_PATTERNS = [
    (re.compile(r"^SU\((\d+)\)(?:/Z(\d+))?$"), "SU"),
    (re.compile(r"^Spin\((\d+)\)$"), "Spin"),
    (re.compile(r"^SO\((\d+)\)$"), "SO"),
    (re.compile(r"^PSO\((\d+)\)$"), "PSO"),
    (re.compile(r"^Ss('?)\((\d+)\)$"), "Ss"),
    (re.compile(r"^Sp\((\d+)\)(/Z2)?$"), "Sp"),
    (re.compile(r"^E([678])(ad)?$"), "E"),
    (re.compile(r"^(F4|G2)$"), "FG"),
    (re.compile(r"^(simply-connected|adjoint)\s+(.+)$"), "generic"),
]


@lru_cache(maxsize=None)
def group_form(text: str) -> GroupForm:
    """Resolve a preset name such as ``"SU(6)/Z2"``, ``"Spin(7)"`` or ``"adjoint E6"``."""
    s = text.strip()
    for pat, kind in _PRESET_PATTERNS:
        m = pat.match(s)
        if not m:
            continue
        if kind == "generic":
            rs = build_root_system(*parse_type(m.group(2)))
            return simply_connected(rs) if m.group(1) == "simply-connected" else adjoint(rs)
        if kind == "SU":
            n, k = int(m.group(1)), int(m.group(2) or 1)
            if n < 2 or n % k:
                raise ValueError(f"{s}: need n >= 2 and k dividing n")
            rs = build_root_system("A", n - 1)
        elif kind in ("Spin", "SO", "PSO", "Ss"):
            mm = int(m.group(2) if kind == "Ss" else m.group(1))
            if mm % 2:
                if kind not in ("Spin", "SO") or mm < 5:
                    raise ValueError(f"{s}: unsupported orthogonal group")
                rs = build_root_system("B", (mm - 1) // 2)
            else:
                if mm < 6 or (kind == "Ss" and (mm // 2) % 2):
                    raise ValueError(f"{s}: unsupported orthogonal group")
                rs = build_root_system("D", mm // 2)
        elif kind == "Sp":
            n = int(m.group(1))
            if n < 2:
                raise ValueError(f"{s}: Sp(n) needs n >= 2 here (Sp(1) = SU(2))")
            rs = build_root_system("C", n)
        elif kind == "E":
            rs = build_root_system("E", int(m.group(1)))
            if m.group(2) and rs.rank == 8:
                raise ValueError("E8 has trivial center; E8ad is E8")
        else:
            rs = build_root_system(m.group(1)[0], int(m.group(1)[1]))
        for name, extra in _preset_candidates(rs):
            if name == s:
                return form_from_extra(rs, extra, name)
        raise ValueError(f"unknown group form {text!r}")
    raise ValueError(f"unknown group form {text!r}")


def langlands_dual_form(g: GroupForm) -> GroupForm:
    """Form of the dual algebra whose ``ell`` is ``sqrt(n_g) ell*``.

    The scaling is applied through the dual coordinate map, which lands in
    the dual root system's own simple-root coordinates with rational entries.
    """
    drs = dual_root_system(g.rs)
    p = dual_coordinate_map(g.rs)
    gens = [la.matvec(p, list(v)) for v in g.ell_dual.generators]
    ell = Lattice(_freeze(la.from_columns(gens)), drs.gram)
    return GroupForm(drs, ell, describe_form(drs, ell))


# miniscule weights ---------------------------------------------------------------


def miniscule_weights(g: GroupForm) -> list[Vector]:
    """Minimal dominant representative of each class of ``ell*/root lattice``."""
    return list(g.weight_classes.reps)


def is_miniscule(rs: RootSystem, weight) -> bool:
    """``<weight, coroot> in {-1, 0, 1}`` for every root."""
    for a in rs.roots:
        pair = 2 * rs.inner(weight, a) / rs.norm(a)
        if pair not in (-1, 0, 1):
            return False
    return True


def minuscule_diagram_check(rs: RootSystem) -> set[int]:
    """1-based indices of miniscule fundamental weights."""
    return {i + 1 for i, w in enumerate(rs.fundamental_weights) if is_miniscule(rs, w)}


# finite Fourier analysis ---------------------------------------------------------


def character(a: QuotientGroup, u: int, v: int) -> CycScalar:
    """``exp(2 pi i (u|v))``."""
    return phase(2 * a.require_pairing()[u][v])


def finite_fourier(a: QuotientGroup, f: Callable[[int], object] | Sequence) -> list:
    """``f_hat(u) = sum_a exp(2 pi i (u|a)) f(a)``, indexed like ``a.reps``."""
    if not a.is_nondegenerate():
        raise ValueError("pairing is degenerate; the group is not identified with its dual")
    vals = [f(i) for i in range(a.order)] if callable(f) else list(f)
    out = []
    for u in range(a.order):
        acc = CycScalar.zero()
        for i in range(a.order):
            acc = acc + character(a, u, i) * vals[i]
        out.append(acc)
    return out


def inverse_fourier(a: QuotientGroup, fhat: Sequence) -> list:
    """``f(a) = |A|^-1 sum_u exp(-2 pi i (u|a)) f_hat(u)``."""
    out = []
    for i in range(a.order):
        acc = CycScalar.zero()
        for u in range(a.order):
            acc = acc + character(a, u, i).conj() * fhat[u]
        out.append(acc / a.order)
    return out


def annihilator(a: QuotientGroup, members: Iterable[int]) -> list[int]:
    p = a.require_pairing()
    members = list(members)
    return [u for u in range(a.order) if all(p[u][b] == 0 for b in members)]


def poisson_check(a: QuotientGroup, subgroup: Iterable[int], f: Callable[[int], object] | Sequence) -> bool:
    """Discrete Poisson summation for a subgroup given by coset indices."""
    members = sorted(set(subgroup))
    if not is_subgroup(a, members):
        raise ValueError("the given cosets are not closed under the group law")
    vals = [f(i) for i in range(a.order)] if callable(f) else list(f)
    fhat = finite_fourier(a, vals)
    left = sum((vals[b] for b in members), CycScalar.zero()) / len(members)
    right = sum((fhat[u] for u in annihilator(a, members)), CycScalar.zero()) / a.order
    return left == right


def quadratic_phase(a: QuotientGroup) -> list[CycScalar]:
    """``f(u) = exp(pi i (u|u))``."""
    return [phase(n) for n in a.require_norm()]


def full_discriminant(rs: RootSystem) -> QuotientGroup:
    """``coweight / coroot``: the discriminant group used by the S and T matrices."""
    return _full_discriminant(rs.family, rs.rank)


@lru_cache(maxsize=None)
def _full_discriminant(family: str, rank: int) -> QuotientGroup:
    rs = build_root_system(family, rank)
    return quotient(coweight_lattice(rs), coroot_lattice(rs), rs)


def dual_sector(rs: RootSystem) -> QuotientGroup:
    """Dual-side discriminant group, stored as ``weight / root`` with Gram ``n_g G``.

    A stored vector ``m`` stands for ``sqrt(n_g) m``, so norms come out as
    ``n_g (m|m)`` and the cross pairing with the other sector is ``(m|u)``.
    """
    return _dual_sector(rs.family, rs.rank)


@lru_cache(maxsize=None)
def _dual_sector(family: str, rank: int) -> QuotientGroup:
    rs = build_root_system(family, rank)
    n = rs.n_g
    wl = weight_lattice(rs).scaled_gram(n)
    rl = root_lattice(rs).scaled_gram(n)
    return quotient(wl, rl, rs)


__all__ = [
    "Lattice",
    "QuotientGroup",
    "GroupForm",
    "dual_lattice",
    "root_lattice",
    "coroot_lattice",
    "coweight_lattice",
    "weight_lattice",
    "quotient",
    "subgroups",
    "subgroup_closure",
    "is_subgroup",
    "simply_connected",
    "adjoint",
    "intermediate_forms",
    "describe_form",
    "group_form",
    "langlands_dual_form",
    "miniscule_weights",
    "is_miniscule",
    "minuscule_diagram_check",
    "finite_fourier",
    "inverse_fourier",
    "poisson_check",
    "quadratic_phase",
    "full_discriminant",
    "dual_sector",
    "coroot",
]
