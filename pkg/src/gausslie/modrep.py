"""Exact matrices over cyclotomic fields and the modular-group representation
on the discriminant group of a simply laced root system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cyclo import CycScalar, RadScalar, fold_sqrt, reduction_matrix, squarefree_split
from .lattices import GroupForm, QuotientGroup, full_discriminant, langlands_dual_form
from .rootsys import RootSystem


def _lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def _exponent_vector(x: CycScalar) -> tuple[int, np.ndarray]:
    """Integer exponent vector of a cyclotomic integer."""
    vec = np.zeros(x.order, dtype=np.int64)
    for k, c in x.terms():
        if c.denominator != 1:
            raise ValueError("expected a cyclotomic integer")
        vec[k] = int(c)
    return x.order, vec


class PhaseMatrix:
    """Matrix ``exp(pi i phase) * sqrt(rad) / denom * E`` where each entry of
    ``E`` is an integer combination of powers of ``zeta_order``.

    ``tensor[i, j, k]`` is the coefficient of ``zeta_order**k`` in ``E[i, j]``.
    Factoring out a global phase and radical keeps the field order small.
    Matrices may be rectangular, so column vectors are ``d x 1`` matrices.
    """

    __slots__ = ("tensor", "order", "phase", "rad", "denom", "basis_labels")

    def __init__(self, tensor, order: int, phase=Fraction(0), rad: int = 1, denom: int = 1, basis_labels=None):
        tensor = np.asarray(tensor, dtype=np.int64)
        if tensor.ndim != 3 or tensor.shape[2] != order:
            raise ValueError("tensor must have shape (rows, cols, order)")
        if order < 2 or order % 2:
            raise ValueError("order must be a positive even integer")
        s, f = squarefree_split(rad)
        self.tensor = tensor * s if s != 1 else tensor
        self.order = order
        self.phase = Fraction(phase) % 2
        self.rad = f
        self.denom = denom
        self.basis_labels = basis_labels
        self._canonicalize()

    # construction ---------------------------------------------------------

    @classmethod
    def from_exponents(cls, exps: Sequence[Sequence], order: int, **kw) -> "PhaseMatrix":
        """Entry ``(i, j)`` is ``zeta_order ** exps[i][j]`` (``None`` means zero)."""
        rows, cols = len(exps), len(exps[0])
        t = np.zeros((rows, cols, order), dtype=np.int64)
        for i, row in enumerate(exps):
            for j, e in enumerate(row):
                if e is not None:
                    t[i, j, int(e) % order] += 1
        return cls(t, order, **kw)

    @classmethod
    def identity(cls, dim: int, basis_labels=None) -> "PhaseMatrix":
        return cls.from_exponents([[0 if i == j else None for j in range(dim)] for i in range(dim)], 2, basis_labels=basis_labels)

    @classmethod
    def permutation(cls, perm: Sequence[int], basis_labels=None) -> "PhaseMatrix":
        """Matrix sending basis vector ``j`` to ``perm[j]``."""
        d = len(perm)
        return cls.from_exponents(
            [[0 if perm[j] == i else None for j in range(d)] for i in range(d)], 2, basis_labels=basis_labels
        )

    @classmethod
    def indicator_vector(cls, dim: int, members, normalize: bool = True, basis_labels=None) -> "PhaseMatrix":
        """``|members|^-1/2 * sum |i>`` as a column (unnormalized if asked)."""
        members = set(members)
        exps = [[0] if i in members else [None] for i in range(dim)]
        n = len(members) if normalize else 1
        s, f = squarefree_split(n)
        # 1/sqrt(n) = s sqrt(f) / n
        out = cls.from_exponents(exps, 2, rad=f, denom=n, basis_labels=basis_labels)
        out.tensor = out.tensor * s
        out._canonicalize()
        return out

    # internal helpers -----------------------------------------------------------

    def _canonicalize(self) -> None:
        """Reduce the polynomial part modulo the cyclotomic polynomial and
        cancel common integer factors with ``denom``."""
        m = self.order
        red = reduction_matrix(m)
        phi = red.shape[1]
        reduced = self.tensor @ red
        t = np.zeros_like(self.tensor)
        t[..., :phi] = reduced
        g = int(np.gcd.reduce(np.abs(t).ravel())) if t.size else 0
        g = math.gcd(g, self.denom) if g else self.denom
        if g > 1:
            t //= g
            self.denom //= g
        if not t.any():
            self.denom = 1
        self.tensor = t

    def _embedded(self, order: int) -> np.ndarray:
        if order == self.order:
            return self.tensor
        step = order // self.order
        out = np.zeros(self.tensor.shape[:2] + (order,), dtype=np.int64)
        out[..., ::step] = self.tensor
        return out

    @staticmethod
    def _convolve(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
        """Matrix product with cyclic convolution in the last axis."""
        out = np.zeros((a.shape[0], b.shape[1], order), dtype=np.int64)
        for s in np.nonzero(a.any(axis=(0, 1)))[0]:
            out += np.einsum("ik,kjm->ijm", a[:, :, s], np.roll(b, s, axis=2))
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.tensor.shape[0], self.tensor.shape[1]

    @property
    def dim(self) -> int:
        return self.shape[0]

    # algebra --------------------------------------------------------------------

    def __matmul__(self, other: "PhaseMatrix") -> "PhaseMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError("shape mismatch")
        m = _lcm(self.order, other.order)
        t = self._convolve(self._embedded(m), other._embedded(m), m)
        g = math.gcd(self.rad, other.rad)
        rad = (self.rad // g) * (other.rad // g)
        out = PhaseMatrix(t * g, m, self.phase + other.phase, rad, self.denom * other.denom, self.basis_labels)
        return out

    def __pow__(self, n: int) -> "PhaseMatrix":
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = PhaseMatrix.identity(self.dim, self.basis_labels)
        base = self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def times_phase(self, q) -> "PhaseMatrix":
        return PhaseMatrix(self.tensor, self.order, self.phase + Fraction(q), self.rad, self.denom, self.basis_labels)

    def conj_transpose(self) -> "PhaseMatrix":
        m = self.order
        idx = (-np.arange(m)) % m
        t = np.transpose(self.tensor, (1, 0, 2))[..., idx]
        return PhaseMatrix(t, m, -self.phase, self.rad, self.denom, self.basis_labels)

    def transpose(self) -> "PhaseMatrix":
        return PhaseMatrix(np.transpose(self.tensor, (1, 0, 2)), self.order, self.phase, self.rad, self.denom, self.basis_labels)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PhaseMatrix":
        t = self.tensor[np.ix_(list(rows), list(cols))]
        return PhaseMatrix(t, self.order, self.phase, self.rad, self.denom)

    # comparison -----------------------------------------------------------------

    def _folded(self, order: int) -> np.ndarray:
        """Integer tensor for ``denom * value`` in the field of ``order``,
        radical folded in; ``order`` must be a common multiple."""
        t = self._embedded(order)
        shift = self.phase * order / 2
        assert shift.denominator == 1
        t = np.roll(t, int(shift) % order, axis=2)
        if self.rad != 1:
            fm, fv = _exponent_vector(fold_sqrt(self.rad))
            step = order // fm
            acc = np.zeros_like(t)
            for k in np.nonzero(fv)[0]:
                acc += fv[k] * np.roll(t, int(k) * step, axis=2)
            t = acc
        return t

    def _common_order(self, other: "PhaseMatrix") -> int:
        orders = [self.order, other.order, 2 * self.phase.denominator, 2 * other.phase.denominator]
        for x in (self, other):
            if x.rad != 1:
                orders.append(fold_sqrt(x.rad).order)
        return _lcm(*orders)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhaseMatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        m = self._common_order(other)
        a = self._folded(m) * other.denom
        b = other._folded(m) * self.denom
        red = reduction_matrix(m)
        return bool(np.array_equal(a @ red, b @ red))

    __hash__ = None

    def is_zero_block(self, rows: Sequence[int], cols: Sequence[int]) -> bool:
        sub = self.tensor[np.ix_(list(rows), list(cols))]
        return not (sub @ reduction_matrix(self.order)).any()

    def is_diagonal(self) -> bool:
        d = self.dim
        return all(self.is_zero_block([i], [j]) for i in range(d) for j in range(self.shape[1]) if i != j)

    def is_unitary(self) -> bool:
        return self @ self.conj_transpose() == PhaseMatrix.identity(self.dim)

    # export ---------------------------------------------------------------------

    def entry(self, i: int, j: int) -> RadScalar:
        terms = [(k, int(c)) for k, c in enumerate(self.tensor[i, j]) if c]
        cyc = CycScalar.from_exponents(self.order, terms) * CycScalar.from_exponents(
            2 * self.phase.denominator, [(self.phase.numerator, 1)]
        )
        return RadScalar(cyc, self.rad, self.denom)

    def entries(self) -> list[list[RadScalar]]:
        return [[self.entry(i, j) for j in range(self.shape[1])] for i in range(self.shape[0])]

    def to_complex(self) -> np.ndarray:
        zeta = np.exp(2j * np.pi * np.arange(self.order) / self.order)
        scale = np.exp(1j * np.pi * float(self.phase)) * math.sqrt(self.rad) / self.denom
        return (self.tensor @ zeta) * scale

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "entries": [[e.to_json() for e in row] for row in self.entries()],
            "display": [[str(e) for e in row] for row in self.entries()],
            "basis": [[str(x) for x in v] for v in self.basis_labels] if self.basis_labels is not None else None,
        }

    def __repr__(self) -> str:
        return f"PhaseMatrix(shape={self.shape}, order={self.order}, phase={self.phase}, rad={self.rad}, denom={self.denom})"


# the modular representation -------------------------------------------------------


def _require_simply_laced(rs: RootSystem) -> None:
    if not rs.simply_laced:
        raise ValueError(f"{rs.name} is not simply laced; use the Hecke representation (heckerep) instead")


def _inv_sqrt_scale(n: int) -> tuple[int, int, int]:
    """``1/sqrt(n) = mult * sqrt(rad) / n``."""
    s, f = squarefree_split(n)
    return s, f, n


def fourier_matrix(disc: QuotientGroup, rows: QuotientGroup | None = None) -> PhaseMatrix:
    """``M[v][u] = |A|^-1/2 exp(-2 pi i (u|v))``."""
    p = disc.require_pairing()
    den = _lcm(*(x.denominator for row in p for x in row))
    m = 2 * den
    exps = [[(-p[u][v] * m) for u in range(disc.order)] for v in range(disc.order)]
    exps = [[int(e) for e in row] for row in exps]
    mult, rad, n = _inv_sqrt_scale(disc.order)
    out = PhaseMatrix.from_exponents(exps, m, rad=rad, denom=n, basis_labels=disc.reps)
    out.tensor = out.tensor * mult
    out._canonicalize()
    return out


def quadratic_diagonal(norms: Sequence[Fraction], global_phase=Fraction(0), labels=None) -> PhaseMatrix:
    """Diagonal ``exp(pi i global_phase) * exp(pi i norm_u)``."""
    den = _lcm(*(Fraction(x).denominator for x in norms))
    m = 2 * den
    d = len(norms)
    exps = [[int(Fraction(norms[i]) * den) if i == j else None for j in range(d)] for i in range(d)]
    return PhaseMatrix.from_exponents(exps, m, phase=global_phase, basis_labels=labels)


def discriminant_group(rs: RootSystem) -> QuotientGroup:
    return full_discriminant(rs)


def build_S(rs: RootSystem) -> PhaseMatrix:
    _require_simply_laced(rs)
    return fourier_matrix(discriminant_group(rs))


def build_T(rs: RootSystem, central_rank: int | None = None) -> PhaseMatrix:
    """Diagonal ``exp(-pi i r/12 + pi i (u|u))``; ``central_rank`` replaces
    ``r`` in the first factor (used to show the phase is necessary)."""
    _require_simply_laced(rs)
    disc = discriminant_group(rs)
    r = rs.rank if central_rank is None else central_rank
    return quadratic_diagonal(disc.require_norm(), Fraction(-r, 12), disc.reps)


def negation_matrix(disc: QuotientGroup) -> PhaseMatrix:
    return PhaseMatrix.permutation([disc.neg(i) for i in range(disc.order)], disc.reps)


@dataclass
class RelationReport:
    subject: str
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {"subject": self.subject, "relations": dict(self.checks), "details": self.details, "pass": self.passed}


def verify_modular_relations(rs: RootSystem, t_matrix: PhaseMatrix | None = None) -> RelationReport:
    """Exact checks of ``S^4 = I``, ``(ST)^3 = S^2``, ``[S^2, T] = 0``,
    ``S^2 = negation`` and unitarity."""
    s = build_S(rs)
    t = build_T(rs) if t_matrix is None else t_matrix
    disc = discriminant_group(rs)
    ident = PhaseMatrix.identity(disc.order)
    s2 = s @ s
    st = s @ t
    rep = RelationReport(rs.name)
    rep.checks["S^4 = I"] = s2 @ s2 == ident
    rep.checks["(ST)^3 = S^2"] = st @ st @ st == s2
    rep.checks["S^2 T = T S^2"] = s2 @ t == t @ s2
    rep.checks["S^2 = negation"] = s2 == negation_matrix(disc)
    rep.checks["S unitary"] = s.is_unitary()
    rep.checks["T unitary"] = t.is_unitary()
    rep.checks["S symmetric"] = s == s.transpose()
    rep.details["dim"] = disc.order
    return rep


def group_vector(g: GroupForm) -> PhaseMatrix:
    """``|pi_1(G)|^-1/2 * sum_{u in ell/coroot} |u>`` in the discriminant basis."""
    _require_simply_laced(g.rs)
    disc = discriminant_group(g.rs)
    members = [i for i, v in enumerate(disc.reps) if g.ell.contains(v)]
    return PhaseMatrix.indicator_vector(disc.order, members, basis_labels=disc.reps)


@dataclass
class DualityReport:
    form: str
    dual: str
    forward: bool
    backward: bool

    @property
    def passed(self) -> bool:
        return self.forward and self.backward

    def to_json(self) -> dict:
        return {**self.__dict__, "pass": self.passed}


def s_duality_report(g: GroupForm) -> DualityReport:
    dual = langlands_dual_form(g)
    s = build_S(g.rs)
    vg, vd = group_vector(g), group_vector(dual)
    return DualityReport(g.name, dual.name, s @ vg == vd, s @ vd == vg)


def verify_s_duality(g: GroupForm) -> bool:
    return s_duality_report(g).passed
