"""Lattice theta functions, Dedekind eta, and numerical checks of their
transformation laws.

Every lattice sum is a finite sum over an ellipsoid plus a certified bound on
the omitted tail.  Writing ``y = Im tau`` and ``w = Im z``, a term has modulus
``exp(pi |w|^2 / y) exp(-pi y |xi - xi0|^2)`` with ``xi0 = -w/y``.  A coset
of a lattice with covolume ``V`` and an LLL basis ``b_i`` has at most
``K (t + D)^r`` points within distance ``t`` of any center, where
``K = vol(unit ball)/V`` and ``D`` bounds the covering radius (each Voronoi
cell fits in a ball of that radius).  Nearest-plane rounding gives
``D = sqrt(sum |b_i*|^2) / 2`` over the Gram-Schmidt vectors ``b_i*``.  Integrating that majorant
against the Gaussian gives a closed form in upper incomplete gamma functions.

Coordinates are simple-root coordinates.  The dual-family sums of a non-simply
laced algebra (``sqrt(n) (root lattice + m)``) run over ``x in root + m`` with
Gram ``n G``; the coupling ``sqrt(n) (x|z)`` is obtained by passing
``z / sqrt(n)`` under that Gram.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath
import numpy as np

from . import intlinalg as la
from .gauss import gauss_sum
from .heckerep import build_hecke_rep
from .lattices import (
    GroupForm,
    Lattice,
    coroot_lattice,
    coweight_lattice,
    full_discriminant,
    langlands_dual_form,
    root_lattice,
)
from .modrep import build_T
from .pointsearch import ball_volume, points_in_ellipsoid, shell_counts
from .rootsys import RootSystem

MAX_POINTS = 5_000_000


class TailBoundError(ArithmeticError):
    """The requested accuracy needs more lattice points than the budget allows."""

    def __init__(self, message: str, achieved: float):
        super().__init__(message)
        self.achieved = achieved


@dataclass(frozen=True)
class ThetaParams:
    z: tuple[complex, ...]
    tau: complex
    delta: complex = 0j
    tol: float = 1e-12
    cutoff_policy: str = "gaussian-tail"

    def __post_init__(self):
        if not complex(self.tau).imag > 0:
            raise ValueError(f"tau = {self.tau} is not in the upper half plane")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.cutoff_policy != "gaussian-tail":
            raise ValueError(f"unknown cutoff policy {self.cutoff_policy!r}")
        object.__setattr__(self, "z", tuple(complex(x) for x in self.z))
        object.__setattr__(self, "tau", complex(self.tau))
        object.__setattr__(self, "delta", complex(self.delta))

    def with_(self, **kw) -> "ThetaParams":
        d = {"z": self.z, "tau": self.tau, "delta": self.delta, "tol": self.tol, "cutoff_policy": self.cutoff_policy}
        d.update(kw)
        return ThetaParams(**d)


@dataclass
class ThetaValue:
    value: complex
    tail_bound: float
    radius: float
    points: int

    def to_json(self) -> dict:
        return {
            "value": [self.value.real, self.value.imag],
            "tail_bound": self.tail_bound,
            "radius": self.radius,
            "points": self.points,
        }


# tail bounds -------------------------------------------------------------------------


def _tail_integral(r: int, k: float, d: float, y: float, radius, *, mp: bool = False):
    """``int_R^inf K (t + D)^r 2 pi y t exp(-pi y t^2) dt`` in closed form.

    Expanding ``(t+D)^r`` binomially, each piece is
    ``pi y (pi y)^{-(j+2)/2} Gamma((j+2)/2, pi y R^2)``.
    """
    ctx = mpmath if mp else None
    if ctx is None:
        with mpmath.workdps(20):
            return float(_tail_integral(r, k, d, y, radius, mp=True))
    y, radius = mpmath.mpf(y), mpmath.mpf(radius)
    x = mpmath.pi * y * radius**2
    total = mpmath.mpf(0)
    for j in range(r + 1):
        a = mpmath.mpf(j + 2) / 2
        total += math.comb(r, j) * mpmath.mpf(d) ** (r - j) * (mpmath.pi * y) ** (1 - a) * mpmath.gammainc(a, x)
    return mpmath.mpf(k) * total


def _radius_for(r: int, k: float, d: float, y: float, budget: float, *, mp: bool = False):
    """Smallest radius (to bisection accuracy) whose tail bound is ``<= budget``."""
    hi = 1.0
    while _tail_integral(r, k, d, y, hi, mp=mp) > budget:
        hi *= 2
        if hi > 1e6:
            raise TailBoundError("tail bound does not decay", float(_tail_integral(r, k, d, y, hi, mp=mp)))
    lo = 0.0
    for _ in range(40):
        mid = (lo + hi) / 2
        if _tail_integral(r, k, d, y, mid, mp=mp) > budget:
            lo = mid
        else:
            hi = mid
    return hi


@dataclass(frozen=True)
class _Geometry:
    """Float data of a reduced lattice basis used by the tail majorant."""

    basis: np.ndarray  # columns, ambient coordinates
    gram: np.ndarray  # Gram of the basis
    inv_basis: np.ndarray
    ambient: np.ndarray
    k: float
    d: float


@lru_cache(maxsize=256)
def _geometry(lat: Lattice) -> _Geometry:
    red = lat.reduced
    basis = np.array([[float(x) for x in row] for row in red.basis])
    ambient = np.array([[float(x) for x in row] for row in red.gram_ambient])
    gram = red.float_gram()
    r = lat.rank
    covol = math.sqrt(float(red.det_gram))
    gs_norms = np.diag(np.linalg.cholesky(gram)) ** 2
    d = 0.5 * math.sqrt(float(gs_norms.sum())) * (1 + 1e-9)
    return _Geometry(basis, gram, np.linalg.inv(basis), ambient, ball_volume(r, 1.0) / covol, d)


# lattice sums -------------------------------------------------------------------------


def theta_sum(lat: Lattice, shift, params: ThetaParams, max_points: int = MAX_POINTS) -> ThetaValue:
    """``sum over xi in lat + shift of exp(pi i tau (xi|xi) + 2 pi i (xi|z))``
    with the inner product of ``lat.gram_ambient``."""
    geo = _geometry(lat)
    r = lat.rank
    z = np.array(params.z, dtype=complex)
    if z.shape != (r,):
        raise ValueError(f"z must have {r} components")
    tau = params.tau
    y = tau.imag
    u = np.array([float(x) for x in shift])
    # center of the Gaussian envelope: xi0 = -Im z / y
    xi0 = -z.imag / y
    log_amp = math.pi * float(z.imag @ geo.ambient @ z.imag) / y
    budget = params.tol / 2 * math.exp(-log_amp)
    radius = _radius_for(r, geo.k, geo.d, y, budget)
    estimate = geo.k * (radius + geo.d) ** r
    if estimate > max_points:
        achieved = float(_tail_integral(r, geo.k, geo.d, y, _radius_cap(r, geo, max_points))) * math.exp(log_amp)
        raise TailBoundError(
            f"tol {params.tol:g} needs about {estimate:.3g} points (budget {max_points}); "
            f"the budget certifies only {achieved:.3g}",
            achieved,
        )
    center = geo.inv_basis @ (xi0 - u)
    ks = points_in_ellipsoid(geo.gram, center, radius**2)
    xi = u[None, :] + ks @ geo.basis.T
    norms = np.einsum("ij,jk,ik->i", xi, geo.ambient, xi)
    expo = 1j * math.pi * tau * norms + 2j * math.pi * (xi @ (geo.ambient @ z))
    terms = np.exp(expo)
    value = complex(math.fsum(terms.real), math.fsum(terms.imag))
    tail = float(_tail_integral(r, geo.k, geo.d, y, radius)) * math.exp(log_amp)
    return ThetaValue(value, tail, radius, len(ks))


def _radius_cap(r: int, geo: _Geometry, max_points: int) -> float:
    return max((max_points / geo.k) ** (1 / r) - geo.d, 0.0)


def theta_coset(lat: Lattice, shift, params: ThetaParams) -> complex:
    return theta_sum(lat, shift, params).value


# Dedekind eta -----------------------------------------------------------------------


def dedekind_eta(tau: complex, tol: float = 1e-14) -> complex:
    """Truncated product with a certified bound.

    Dropping the factors ``n > N`` changes ``log eta`` by at most
    ``q^{N+1} / (1-q)^2`` with ``q = |exp(2 pi i tau)|``, so the relative error is
    at most ``exp(that) - 1``.
    """
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError(f"tau = {tau} is not in the upper half plane")
    q = cmath.exp(2j * math.pi * tau)
    aq = abs(q)
    prefactor = cmath.exp(1j * math.pi * tau / 12)
    if aq == 0.0:
        return prefactor
    scale = abs(prefactor)
    n, prod, power = 0, 1 + 0j, 1 + 0j
    while True:
        n += 1
        power *= q
        prod *= 1 - power
        err = aq ** (n + 1) / (1 - aq) ** 2
        if math.expm1(err) * scale * abs(prod) * 1.01 <= tol:
            return prefactor * prod
        if n > 100000:
            raise TailBoundError("eta product did not converge", math.expm1(err) * scale * abs(prod))


# coordinates ------------------------------------------------------------------------


def _inner(rs: RootSystem, a, b) -> complex:
    g = np.array([[float(x) for x in row] for row in rs.gram])
    return complex(np.asarray(a, dtype=complex) @ g @ np.asarray(b, dtype=complex))


def _tau_over_i_power(tau: complex, half_r: float) -> complex:
    w = tau / 1j
    # Im tau > 0 puts tau/i in the right half plane, where the principal branch is unambiguous
    assert w.real > 0
    return cmath.exp(half_r * cmath.log(w))


def _scaled(z, c) -> tuple[complex, ...]:
    return tuple(complex(x) * c for x in z)


def u_family_lattice(rs: RootSystem) -> Lattice:
    """Lattice summed by ``theta_u``: the root lattice when simply laced, the coroot lattice otherwise."""
    return coroot_lattice(rs)


def theta_u(rs: RootSystem, u, params: ThetaParams) -> ThetaValue:
    return theta_sum(u_family_lattice(rs), u, params)


def theta_mu(rs: RootSystem, m, params: ThetaParams) -> ThetaValue:
    """Dual family: ``x in root lattice + m`` with norm ``n (x|x)`` and coupling ``sqrt(n)(x|z)``."""
    n = rs.n_g
    lat = root_lattice(rs).scaled_gram(n)
    return theta_sum(lat, m, params.with_(z=_scaled(params.z, 1 / math.sqrt(n))))


# transformation laws ----------------------------------------------------------------


@dataclass
class LawCheck:
    name: str
    lhs: complex
    rhs: complex
    tail: float

    @property
    def residual(self) -> float:
        """``|lhs - rhs| / max(1, |rhs|)``."""
        return abs(self.lhs - self.rhs) / max(1.0, abs(self.rhs))

    def to_json(self) -> dict:
        return {
            "law": self.name,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "residual": self.residual,
            "certified_tail": self.tail,
        }


@dataclass
class ThetaReport:
    subject: str
    tau: complex
    laws: list[LawCheck] = field(default_factory=list)
    threshold: float = 1e-8

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.laws), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_residual < self.threshold

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "tau": [self.tau.real, self.tau.imag],
            "laws": [c.to_json() for c in self.laws],
            "max_residual": self.max_residual,
            "threshold": self.threshold,
            "pass": self.passed,
        }


def _check_u(rs: RootSystem, u) -> int:
    disc = full_discriminant(rs)
    return disc.index_of(u)


def _laws_simply_laced(rs: RootSystem, indices: Sequence[int], params: ThetaParams) -> list[LawCheck]:
    disc = full_discriminant(rs)
    lat = u_family_lattice(rs)
    tau, z, r = params.tau, params.z, rs.rank
    zz = _inner(rs, z, z)
    base = [theta_sum(lat, v, params) for v in disc.reps]
    shifted = params.with_(tau=tau + 1)
    s_params = params.with_(z=_scaled(z, 1 / tau), tau=-1 / tau)
    factor = _tau_over_i_power(tau, r / 2) * cmath.exp(1j * math.pi * zz / tau) / math.sqrt(disc.order)
    pairing = disc.require_pairing()
    out = []
    for i in indices:
        u = disc.reps[i]
        t_lhs = theta_sum(lat, u, shifted)
        t_rhs = cmath.exp(1j * math.pi * float(disc.norm[i])) * base[i].value
        out.append(LawCheck(f"T-law u={_fmt(u)}", t_lhs.value, t_rhs, t_lhs.tail_bound + base[i].tail_bound))
        s_lhs = theta_sum(lat, u, s_params)
        acc = sum(cmath.exp(-2j * math.pi * float(pairing[i][j])) * base[j].value for j in range(disc.order))
        tail = s_lhs.tail_bound + abs(factor) * sum(b.tail_bound for b in base)
        out.append(LawCheck(f"S-law u={_fmt(u)}", s_lhs.value, factor * acc, tail))
    return out


def _fmt(v) -> str:
    return "(" + ",".join(str(Fraction(x)) for x in v) + ")"


def _eta_factor(tau: complex, a: int, b: int, n: int, tol: float) -> complex:
    """``eta(tau)^-a eta(n tau)^-b``."""
    return dedekind_eta(tau, tol) ** (-a) * dedekind_eta(n * tau, tol) ** (-b)


def _laws_hecke(rs: RootSystem, params: ThetaParams, u_idx=None, mu_idx=None) -> list[LawCheck]:
    rep = build_hecke_rep(rs)
    us, ms = rep.u_sector, rep.mu_sector
    n, r = rs.n_g, rs.rank
    rl, rsh = rs.r_long, rs.r_short
    tau, z, delta, tol = params.tau, params.z, params.delta, params.tol
    zz = _inner(rs, z, z)
    sqn = math.sqrt(n)
    u_idx = range(us.order) if u_idx is None else u_idx
    mu_idx = range(ms.order) if mu_idx is None else mu_idx

    def hat_u(i, p: ThetaParams):
        t = theta_u(rs, us.reps[i], p)
        f = cmath.exp(-2j * math.pi * p.delta) * _eta_factor(p.tau, rl, rsh, n, tol)
        return f * t.value, abs(f) * t.tail_bound

    def hat_mu(i, p: ThetaParams):
        t = theta_mu(rs, ms.reps[i], p)
        f = cmath.exp(-2j * math.pi * p.delta) * _eta_factor(p.tau, rsh, rl, n, tol)
        return f * t.value, abs(f) * t.tail_bound

    base_u = [hat_u(i, params) for i in range(us.order)]
    base_mu = [hat_mu(i, params) for i in range(ms.order)]
    shifted = params.with_(tau=tau + 1)
    s_params = params.with_(z=_scaled(z, 1 / (sqn * tau)), tau=-1 / (n * tau), delta=delta + zz / (2 * tau))
    cross = [[float(x) for x in row] for row in _cross(rs, us, ms)]  # [m][u]
    norm = 1 / math.sqrt(us.order)
    pu, pm = rep.phase_u, rep.phase_mu
    out = []
    for i in u_idx:
        lhs, tl = hat_u(i, shifted)
        rhs = cmath.exp(1j * math.pi * float(pu + us.norm[i])) * base_u[i][0]
        out.append(LawCheck(f"hat T-law u={_fmt(us.reps[i])}", lhs, rhs, tl + base_u[i][1]))
        lhs, tl = hat_u(i, s_params)
        rhs = norm * sum(cmath.exp(-2j * math.pi * cross[j][i]) * base_mu[j][0] for j in range(ms.order))
        out.append(LawCheck(f"hat S-law u={_fmt(us.reps[i])}", lhs, rhs, tl + norm * sum(b[1] for b in base_mu)))
    for j in mu_idx:
        lhs, tl = hat_mu(j, shifted)
        rhs = cmath.exp(1j * math.pi * float(pm + ms.norm[j])) * base_mu[j][0]
        out.append(LawCheck(f"hat T-law mu={_fmt(ms.reps[j])}", lhs, rhs, tl + base_mu[j][1]))
        lhs, tl = hat_mu(j, s_params)
        rhs = norm * sum(cmath.exp(-2j * math.pi * cross[j][i]) * base_u[i][0] for i in range(us.order))
        out.append(LawCheck(f"hat S-law mu={_fmt(ms.reps[j])}", lhs, rhs, tl + norm * sum(b[1] for b in base_u)))
    return out


def _cross(rs, us, ms):
    return [[rs.inner(m, u) % 1 for u in us.reps] for m in ms.reps]


def _laws_hecke_plain(rs: RootSystem, params: ThetaParams) -> list[LawCheck]:
    """The un-normalized mixed-family S-laws with prefactors ``sqrt(n^r_long/|Z|)`` and ``sqrt(n^r_short/|Z|)``."""
    us, ms = full_discriminant(rs), _dual_sector(rs)
    n, r = rs.n_g, rs.rank
    tau, z = params.tau, params.z
    zz = _inner(rs, z, z)
    base_u = [theta_u(rs, v, params) for v in us.reps]
    base_mu = [theta_mu(rs, m, params) for m in ms.reps]
    s_params = params.with_(z=_scaled(z, 1 / (math.sqrt(n) * tau)), tau=-1 / (n * tau))
    common = _tau_over_i_power(tau, r / 2) * cmath.exp(1j * math.pi * zz / tau)
    fu = math.sqrt(n**rs.r_long / us.order) * common
    fm = math.sqrt(n**rs.r_short / ms.order) * common
    cross = [[float(x) for x in row] for row in _cross(rs, us, ms)]
    out = []
    for i, u in enumerate(us.reps):
        lhs = theta_u(rs, u, s_params)
        rhs = fu * sum(cmath.exp(-2j * math.pi * cross[j][i]) * base_mu[j].value for j in range(ms.order))
        out.append(LawCheck(f"S-law u={_fmt(u)}", lhs.value, rhs, lhs.tail_bound))
    for j, m in enumerate(ms.reps):
        lhs = theta_mu(rs, m, s_params)
        rhs = fm * sum(cmath.exp(-2j * math.pi * cross[j][i]) * base_u[i].value for i in range(us.order))
        out.append(LawCheck(f"S-law mu={_fmt(m)}", lhs.value, rhs, lhs.tail_bound))
    return out


def _dual_sector(rs):
    from .lattices import dual_sector

    return dual_sector(rs)


def verify_theta_modular(rs: RootSystem, u=None, params: ThetaParams | None = None) -> ThetaReport:
    """Both transformation laws at ``params``.

    Simply laced: the T-law and S-law of ``theta_u`` (all cosets when ``u`` is
    None).  Non-simply laced: the plain mixed-family S-laws and all four
    normalized laws for both families.
    """
    if params is None:
        raise ValueError("params are required")
    report = ThetaReport(rs.name, params.tau)
    if rs.simply_laced:
        idx = range(full_discriminant(rs).order) if u is None else [_check_u(rs, u)]
        report.laws = _laws_simply_laced(rs, idx, params)
    else:
        u_idx = None if u is None else [_check_u(rs, u)]
        report.laws = _laws_hecke_plain(rs, params) + _laws_hecke(rs, params, u_idx, [] if u is not None else None)
    return report


# group theta functions ----------------------------------------------------------------


def theta_group(g: GroupForm, params: ThetaParams) -> ThetaValue:
    """``|pi_1(G)|^-1/2`` times the sum over ``ell``."""
    t = theta_sum(g.ell, [0] * g.rank, params)
    c = 1 / math.sqrt(g.fundamental_group.order)
    return ThetaValue(c * t.value, c * t.tail_bound, t.radius, t.points)


def theta_dual_group(g: GroupForm, params: ThetaParams) -> ThetaValue:
    """Theta function of the Langlands dual form, summed over ``sqrt(n) ell*``
    in the coordinates of ``g``."""
    n = g.rs.n_g
    lat = g.ell_dual.scaled_gram(n)
    t = theta_sum(lat, [0] * g.rank, params.with_(z=_scaled(params.z, 1 / math.sqrt(n))))
    c = 1 / math.sqrt(g.center_order)
    return ThetaValue(c * t.value, c * t.tail_bound, t.radius, t.points)


def verify_theta_sduality(g: GroupForm, params: ThetaParams, threshold: float = 1e-7) -> ThetaReport:
    """``theta_G(z/(sqrt(n) tau), -1/(n tau)) = sqrt(n^r_long) (tau/i)^{r/2} e^{pi i (z|z)/tau} theta_LG(z, tau)``
    (``n = 1`` when simply laced)."""
    rs = g.rs
    n, r = rs.n_g, rs.rank
    tau, z = params.tau, params.z
    zz = _inner(rs, z, z)
    lhs = theta_group(g, params.with_(z=_scaled(z, 1 / (math.sqrt(n) * tau)), tau=-1 / (n * tau)))
    dual = theta_dual_group(g, params)
    factor = math.sqrt(n**rs.r_long) * _tau_over_i_power(tau, r / 2) * cmath.exp(1j * math.pi * zz / tau)
    report = ThetaReport(f"{g.name} <-> {langlands_dual_form(g).name}", tau, threshold=threshold)
    report.laws.append(
        LawCheck("S-duality", lhs.value, factor * dual.value, lhs.tail_bound + abs(factor) * dual.tail_bound)
    )
    return report


# the action on triples ---------------------------------------------------------------


def triple_action(gamma, triple, gram=None):
    """``(z, tau, delta) -> (z/(c tau + d), (a tau + b)/(c tau + d), delta + c (z|z) / (2 (c tau + d)))``.

    ``gram`` defines ``(z|z)`` (identity when omitted).  Real matrices of
    determinant one are accepted, so the Hecke generators act too.
    """
    (a, b), (c, d) = gamma
    if abs(a * d - b * c - 1) > 1e-12:
        raise ValueError("gamma must have determinant 1")
    z, tau, delta = triple
    tau = complex(tau)
    if tau.imag <= 0:
        raise ValueError("tau must be in the upper half plane")
    j = c * tau + d
    if j == 0:
        raise ZeroDivisionError("c tau + d vanishes")
    zv = np.asarray(z, dtype=complex)
    g = np.eye(len(zv)) if gram is None else np.array([[float(x) for x in row] for row in gram])
    zz = complex(zv @ g @ zv)
    return tuple(zv / j), (a * tau + b) / j, complex(delta) + c * zz / (2 * j)


# measured T phases -------------------------------------------------------------------


@dataclass
class PhaseCheck:
    label: str
    measured: complex
    exact: complex

    @property
    def error(self) -> float:
        return abs(self.measured - self.exact)

    def to_json(self) -> dict:
        return {
            "basis": self.label,
            "measured": [self.measured.real, self.measured.imag],
            "exact": [self.exact.real, self.exact.imag],
            "error": self.error,
        }


def measured_t_phases(rs: RootSystem, params: ThetaParams) -> list[PhaseCheck]:
    """``hat_theta(z, tau+1, delta) / hat_theta(z, tau, delta)`` for every basis
    vector, next to the exact diagonal entry of T."""
    out = []
    shifted = params.with_(tau=params.tau + 1)
    tol = params.tol
    if rs.simply_laced:
        disc = full_discriminant(rs)
        t = build_T(rs)
        r = rs.rank
        lat = u_family_lattice(rs)
        for i, u in enumerate(disc.reps):
            num = dedekind_eta(shifted.tau, tol) ** (-r) * theta_sum(lat, u, shifted).value
            den = dedekind_eta(params.tau, tol) ** (-r) * theta_sum(lat, u, params).value
            out.append(PhaseCheck(_fmt(u), num / den, t.entry(i, i).to_complex()))
        return out
    rep = build_hecke_rep(rs)
    n, rl, rsh = rs.n_g, rs.r_long, rs.r_short
    for i, u in enumerate(rep.u_sector.reps):
        num = _eta_factor(shifted.tau, rl, rsh, n, tol) * theta_u(rs, u, shifted).value
        den = _eta_factor(params.tau, rl, rsh, n, tol) * theta_u(rs, u, params).value
        out.append(PhaseCheck("u" + _fmt(u), num / den, rep.T.entry(i, i).to_complex()))
    du = rep.u_sector.order
    for j, m in enumerate(rep.mu_sector.reps):
        num = _eta_factor(shifted.tau, rsh, rl, n, tol) * theta_mu(rs, m, shifted).value
        den = _eta_factor(params.tau, rsh, rl, n, tol) * theta_mu(rs, m, params).value
        out.append(PhaseCheck("mu" + _fmt(m), num / den, rep.T.entry(du + j, du + j).to_complex()))
    return out


# the Landsberg limit -----------------------------------------------------------------


@dataclass(frozen=True)
class _ShellData:
    """Exact point counts of the coweight lattice by scaled norm and coset."""

    scale: int  # norms are key / scale
    counts: np.ndarray  # [coset index of coweight/coroot, key]
    max_key: int


_SHELLS: dict[tuple[str, int], _ShellData] = {}
_SHELL_MARGIN = 1.05


def _shells(rs: RootSystem, max_norm: float) -> _ShellData:
    key = (rs.family, rs.rank)
    have = _SHELLS.get(key)
    if have is not None and have.max_key >= max_norm * have.scale:
        return have
    disc = full_discriminant(rs)
    sup = coweight_lattice(rs)
    red = sup.reduced
    gram = red.gram
    scale = la.lcm_denominator(gram)
    int_gram = np.array([[int(x * scale) for x in row] for row in gram], dtype=np.int64)
    # coordinates in the reduced basis -> coordinates in the basis used for labels
    change = la.matmul(sup._inverse, red.basis)
    lab_rows = la.matmul([list(row) for row in disc._label_map], change)
    labels_map = np.array([[int(x) for x in row] for row in lab_rows], dtype=np.int64).reshape(-1, rs.rank)
    moduli = np.array(disc.invariant_factors, dtype=np.int64)
    # over-provision so nearby requests (other forms, other epsilons) reuse the counts
    max_key = int(math.ceil(max_norm * scale * _SHELL_MARGIN))
    raw = shell_counts(int_gram, labels_map, moduli, max_key)
    # mixed-radix label -> coset index
    counts = np.zeros((disc.order, max_key + 1), dtype=np.int64)
    for idx, lab in enumerate(disc.labels):
        flat = 0
        for a, d in zip(lab, disc.invariant_factors):
            flat = flat * d + a
        counts[idx] = raw[flat]
    data = _ShellData(scale, counts, max_key)
    _SHELLS[key] = data
    return data


@dataclass
class LandsbergResult:
    form: str
    epsilon: float
    value: mpmath.mpc
    exact: mpmath.mpc
    residual: mpmath.mpf
    tail_bound: mpmath.mpf
    max_norm: float

    def to_json(self) -> dict:
        return {
            "form": self.form,
            "epsilon": self.epsilon,
            "value": [float(self.value.real), float(self.value.imag)],
            "exact": [float(self.exact.real), float(self.exact.imag)],
            "residual": mpmath.nstr(self.residual, 8),
            "certified_tail": mpmath.nstr(self.tail_bound, 8),
            "max_norm": self.max_norm,
        }


LANDSBERG_DPS = 60
# the coarse residual is as small as 3e-17 (E6), so its tail must sit far below that
COARSE_TAIL = 1e-25


def landsberg_result(g: GroupForm, epsilon: float, tail_tol: float = 1e-10) -> LandsbergResult:
    """``theta_LG(0, 1 + i eps) eps^{r/2} sqrt(det Gram(root lattice))`` in high precision.

    ``theta_LG`` is the sum over ``ell*`` divided by ``sqrt(|ell*/root lattice|)``.
    """
    rs = g.rs
    if not rs.simply_laced:
        raise ValueError(f"{rs.name} is not simply laced")
    if not 0 < epsilon <= 0.2:
        raise ValueError("epsilon must lie in (0, 0.2]")
    r = rs.rank
    sup = coweight_lattice(rs)
    geo = _geometry(sup)
    det_root = root_lattice(rs).det_gram
    index = g.center_order  # |ell* / root lattice| = |Z(G)|
    with mpmath.workdps(LANDSBERG_DPS):
        eps = mpmath.mpf(epsilon)
        scale = eps ** (mpmath.mpf(r) / 2) * mpmath.sqrt(mpmath.mpf(det_root.numerator) / det_root.denominator)
        scale /= mpmath.sqrt(index)
        budget = mpmath.mpf(tail_tol) / scale
        radius = _radius_for(r, geo.k, geo.d, epsilon, budget, mp=True)
        data = _shells(rs, radius**2)
        disc = full_discriminant(rs)
        members = [i for i, v in enumerate(disc.reps) if g.ell_dual.contains(v)]
        counts = data.counts[members].sum(axis=0)
        tau = mpmath.mpc(1, eps)
        total = mpmath.mpc(0)
        for k in np.nonzero(counts)[0]:
            total += int(counts[k]) * mpmath.expjpi(tau * mpmath.mpf(int(k)) / data.scale)
        # the exact counts reach past the radius; the tail starts at the largest counted norm
        reach = mpmath.sqrt(mpmath.mpf(data.max_key) / data.scale)
        tail = scale * _tail_integral(r, geo.k, geo.d, epsilon, reach, mp=True)
        value = scale * total
        exact = gauss_sum(g).to_mpc()
        return LandsbergResult(
            g.name, epsilon, value, exact, abs(value - exact), tail, float(reach**2)
        )


def landsberg_limit(g: GroupForm, epsilon: float) -> complex:
    return complex(landsberg_result(g, epsilon).value)


@dataclass
class LandsbergComparison:
    coarse: LandsbergResult
    fine: LandsbergResult

    @property
    def converged(self) -> bool:
        return self.coarse.residual + self.coarse.tail_bound < 1e-6

    @property
    def improves(self) -> bool:
        """Certified: the fine residual's upper bound is below the coarse residual's lower bound."""
        return self.fine.residual + self.fine.tail_bound < self.coarse.residual - self.coarse.tail_bound

    @property
    def passed(self) -> bool:
        return self.converged and self.improves

    def to_json(self) -> dict:
        return {
            "coarse": self.coarse.to_json(),
            "fine": self.fine.to_json(),
            "converged": self.converged,
            "improves": self.improves,
            "pass": self.passed,
        }


def landsberg_comparison(g: GroupForm, coarse: float = 0.1, fine: float = 0.05) -> LandsbergComparison:
    """Residuals at two epsilons; the fine tail budget is set from the coarse residual."""
    a = landsberg_result(g, coarse, tail_tol=COARSE_TAIL)
    target = max(float(a.residual) / 8, 1e-40)
    b = landsberg_result(g, fine, tail_tol=target)
    return LandsbergComparison(a, b)


__all__ = [
    "ThetaParams",
    "ThetaValue",
    "TailBoundError",
    "theta_sum",
    "theta_coset",
    "dedekind_eta",
    "theta_u",
    "theta_mu",
    "verify_theta_modular",
    "theta_group",
    "theta_dual_group",
    "verify_theta_sduality",
    "triple_action",
    "measured_t_phases",
    "landsberg_result",
    "landsberg_limit",
    "landsberg_comparison",
]
