"""Gauss sums attached to compact Lie groups, and their reciprocity laws."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .cyclo import CycScalar, RadScalar, phase
from .lattices import (
    GroupForm,
    Lattice,
    dual_lattice,
    group_form,
    langlands_dual_form,
    miniscule_weights,
    quotient,
    simply_connected,
)
from .rootsys import RootSystem


def _require_simply_laced(rs: RootSystem) -> None:
    if not rs.simply_laced:
        raise ValueError(
            f"{rs.name} is not simply laced; the group Gauss sum is only defined when all roots have equal length"
        )


def weight_phase_sum(g: GroupForm) -> CycScalar:
    """``sum exp(pi i (mu|mu))`` over the miniscule weights of ``g`` (0 included)."""
    return sum((phase(g.rs.norm(mu)) for mu in miniscule_weights(g)), CycScalar.zero())


def center_order(g: GroupForm) -> int:
    """``|Z(G)|`` as the lattice index ``[coweight : ell]``."""
    return g.center_order


def gauss_sum(g: GroupForm) -> RadScalar:
    """``|Z(G)|^-1/2 * sum_{mu in M(G)} exp(pi i (mu|mu))``."""
    _require_simply_laced(g.rs)
    return RadScalar.inv_sqrt(center_order(g)) * weight_phase_sum(g)


@dataclass
class IdentityCheck:
    """Both sides of an exact identity plus the verdict."""

    name: str
    lhs: RadScalar
    rhs: RadScalar
    passed: bool = field(init=False)

    def __post_init__(self):
        self.passed = self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "identity": self.name,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "lhs_exact": self.lhs.to_json(),
            "rhs_exact": self.rhs.to_json(),
            "pass": self.passed,
        }


def reciprocity_check(g: GroupForm) -> IdentityCheck:
    """``G(G) = conj(G(^LG)) exp(pi i r / 4)``."""
    dual = langlands_dual_form(g)
    lhs = gauss_sum(g)
    rhs = gauss_sum(dual).conj() * phase(Fraction(g.rank, 4))
    return IdentityCheck(f"reciprocity {g.name} <-> {dual.name}", lhs, rhs)


def verify_reciprocity(g: GroupForm) -> bool:
    return reciprocity_check(g).passed


def gauss_identity_check(rs: RootSystem) -> IdentityCheck:
    """``sum_{M(g)} exp(pi i (mu|mu)) = sqrt(|Z|) exp(pi i r / 4)`` for the simply connected form."""
    _require_simply_laced(rs)
    g = simply_connected(rs)
    lhs = RadScalar(weight_phase_sum(g))
    rhs = RadScalar(phase(Fraction(rs.rank, 4)), center_order(g))
    return IdentityCheck(f"gauss identity {rs.name}", lhs, rhs)


def verify_gauss_identity(rs: RootSystem) -> bool:
    return gauss_identity_check(rs).passed


def generalized_gauss(p: int, q: int, include_zero: bool = True) -> CycScalar:
    """``sum_k exp(pi i p k (q - k) / q)`` over ``0 <= k < q``.

    With ``include_zero=False`` the ``k = 0`` term is dropped, giving the
    ``1 <= k <= q - 1`` variant.
    """
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive integers")
    start = 0 if include_zero else 1
    # exp(pi i p k (q-k)/q) = zeta_{2q}^{p k (q-k)}
    return CycScalar.from_exponents(2 * q, [(p * k * (q - k), Fraction(1)) for k in range(start, q)])


def supq_check(p: int, q: int) -> IdentityCheck:
    """``G(p,q) = sqrt(q/p) exp(pi i (pq-1)/4) conj(G(q,p))``."""
    lhs = RadScalar(generalized_gauss(p, q))
    # sqrt(q/p) = sqrt(pq) / p
    rhs = RadScalar(phase(Fraction(p * q - 1, 4)) * generalized_gauss(q, p).conj(), p * q, p)
    return IdentityCheck(f"G({p},{q}) reciprocity", lhs, rhs)


GROUP_CROSSCHECK_MAX_RANK = 12


def verify_supq(p: int, q: int) -> bool:
    """Exact check, cross-checked against the group form ``SU(pq)/Z_p``.

    The group-side cross-check needs lattice enumeration in rank ``pq - 1``
    and is skipped above ``GROUP_CROSSCHECK_MAX_RANK``.
    """
    if not supq_check(p, q).passed:
        return False
    if p * q < 2 or p * q - 1 > GROUP_CROSSCHECK_MAX_RANK:
        return True
    g = group_form(f"SU({p * q})/Z{p}" if p > 1 else f"SU({p * q})")
    # G(SU(pq)/Z_p) = G(p,q)/sqrt(q)
    same = gauss_sum(g) == RadScalar.inv_sqrt(q) * generalized_gauss(p, q)
    return same and verify_reciprocity(g)


def legendre(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion."""
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd prime")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def legendre_from_gauss(p: int, q: int) -> int:
    """Recover ``(p/q)`` from ``G(p,q) = (p/q) G(1,q)``."""
    g, g1 = generalized_gauss(p, q), generalized_gauss(1, q)
    if g == g1:
        return 1
    if g == -g1:
        return -1
    raise ArithmeticError(f"G({p},{q}) is not +-G(1,{q})")


def _require_odd_prime(x: int) -> None:
    if x < 3 or not sympy.isprime(x):
        raise ValueError(f"{x} is not an odd prime")


@dataclass
class QRReport:
    p: int
    q: int
    legendre_pq: int
    legendre_qp: int
    via_gauss_pq: int
    via_gauss_qp: int
    sign: int

    @property
    def passed(self) -> bool:
        euler = self.legendre_pq * self.legendre_qp == self.sign
        gauss = self.via_gauss_pq == self.legendre_pq and self.via_gauss_qp == self.legendre_qp
        return euler and gauss

    def to_json(self) -> dict:
        return {**self.__dict__, "pass": self.passed}


def quadratic_reciprocity_report(p: int, q: int) -> QRReport:
    for x in (p, q):
        _require_odd_prime(x)
    if p == q:
        raise ValueError("p and q must be distinct")
    return QRReport(
        p=p,
        q=q,
        legendre_pq=legendre(p, q),
        legendre_qp=legendre(q, p),
        via_gauss_pq=legendre_from_gauss(p, q),
        via_gauss_qp=legendre_from_gauss(q, p),
        sign=(-1) ** ((p - 1) * (q - 1) // 4),
    )


def verify_quadratic_reciprocity(p: int, q: int) -> bool:
    return quadratic_reciprocity_report(p, q).passed


def milgram_check(lat: Lattice) -> IdentityCheck:
    """``sum_{L*/L} exp(pi i (x|x)) = sqrt(|L*/L|) exp(pi i sigma/4)`` for positive definite even ``L``."""
    if not lat.is_even():
        raise ValueError("lattice is not even")
    disc = quotient(dual_lattice(lat), lat)
    lhs = RadScalar(sum((phase(n) for n in disc.require_norm()), CycScalar.zero()))
    rhs = RadScalar(phase(Fraction(lat.rank, 4)), disc.order)
    return IdentityCheck(f"Milgram rank {lat.rank}, |L*/L| = {disc.order}", lhs, rhs)


def milgram(lat: Lattice) -> bool:
    return milgram_check(lat).passed


# the identity table ---------------------------------------------------------------


@dataclass
class TableRow:
    """One closed-form instance family of the Gauss identity, checked exactly."""

    label: str
    text: str
    checked: list[str]
    passed: bool

    def to_json(self) -> dict:
        return {"row": self.label, "identity": self.text, "checked": self.checked, "pass": self.passed}


def _row_sides(family: str, r: int) -> tuple[CycScalar, RadScalar]:
    """Closed-form left side and right side of the table row for ``family`` at rank ``r``."""
    if family == "A":
        lhs = CycScalar.from_exponents(2 * (r + 1), [(k * (r + 1 - k), Fraction(1)) for k in range(r + 1)])
        return lhs, RadScalar(phase(Fraction(r, 4)), r + 1)
    if family == "D":
        lhs = phase(0) + phase(1) + phase(Fraction(r, 4)) * 2
        return lhs, RadScalar(phase(Fraction(r, 4)), 4)
    lhs = {6: phase(0) + phase(Fraction(4, 3)) * 2, 7: phase(0) + phase(Fraction(3, 2)), 8: phase(0)}[r]
    z = {6: 3, 7: 2, 8: 1}[r]
    return lhs, RadScalar(phase(Fraction(1, 4)) ** r, z)


TABLE_TEXT = {
    "A_r": "Σ_{k=0}^{r} e^{πi k(r+1-k)/(r+1)} = √(r+1)·e^{πi r/4}",
    "D_r": "1 + e^{πi} + 2·e^{πi r/4} = √4·e^{πi r/4}",
    "E_6": "1 + 2·e^{4πi/3} = √3·(e^{πi/4})^6",
    "E_7": "1 + e^{3πi/2} = √2·(e^{πi/4})^7",
    "E_8": "1 = (e^{πi/4})^8",
}


def identity_table(max_rank: int = 12) -> list[TableRow]:
    """Each row's closed form must equal both its right side and the sum
    computed from the miniscule weights of the simply connected group."""
    from .rootsys import root_system

    plan = {
        "A_r": [("A", r) for r in range(1, max_rank + 1)],
        "D_r": [("D", r) for r in range(3, max_rank + 1)],
        "E_6": [("E", 6)],
        "E_7": [("E", 7)],
        "E_8": [("E", 8)],
    }
    rows = []
    for label, items in plan.items():
        ok, names = True, []
        for fam, r in items:
            lhs, rhs = _row_sides(fam, r)
            computed = weight_phase_sum(simply_connected(root_system(f"{fam}{r}")))
            ok = ok and RadScalar(lhs) == rhs and lhs == computed
            names.append(f"{fam}{r}")
        rows.append(TableRow(label, TABLE_TEXT[label], names, ok))
    return rows
