"""The acceptance checks as plain functions.

Each check returns a :class:`CheckResult` with the number of items examined,
the names of the failures and the wall time.  ``max_rank`` caps every family
sweep so the same code serves the fast CLI sweep and the full acceptance run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

import sympy

from .config import SampleConfig
from .gauss import gauss_identity_check, identity_table, milgram_check, reciprocity_check, verify_quadratic_reciprocity, verify_supq
from .heckerep import hecke_duality_report, hecke_table, verify_hecke_relations
from .lattices import full_discriminant, intermediate_forms, poisson_check, quadratic_phase, root_lattice, subgroups
from .modrep import s_duality_report, verify_modular_relations
from .rootsys import build_root_system
from .theta import ThetaParams, landsberg_comparison, measured_t_phases, verify_theta_modular, verify_theta_sduality


@dataclass
class CheckResult:
    number: int
    title: str
    budget: float  # seconds
    items: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures and self.items > 0

    @property
    def within_budget(self) -> bool:
        return self.elapsed < self.budget

    def line(self) -> str:
        verdict = "PASS" if self.passed and self.within_budget else "FAIL"
        extra = "" if self.within_budget else f" (over budget {self.budget:g}s)"
        bad = f"; failures: {', '.join(self.failures[:5])}" if self.failures else ""
        return f"[{verdict}] {self.number:2d}. {self.title}: {self.items} items in {self.elapsed:.2f}s{extra}{bad}"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "pass": self.passed,
            "items": self.items,
            "failures": self.failures,
            "elapsed_s": round(self.elapsed, 3),
            "budget_s": self.budget,
            "within_budget": self.within_budget,
            "notes": self.notes,
        }


def _types(ranges: list[tuple[str, int, int]], max_rank: int):
    """``(family, lo, hi)`` triples expanded and capped at ``max_rank``."""
    return [build_root_system(f, r) for f, lo, hi in ranges for r in range(lo, min(hi, max_rank) + 1)]


SIMPLY_LACED = [("A", 1, 12), ("D", 3, 12), ("E", 6, 8)]
NON_SIMPLY_LACED = [("B", 2, 8), ("C", 2, 8), ("F", 4, 4), ("G", 2, 2)]


def _timed(fn: Callable[..., CheckResult]) -> Callable[..., CheckResult]:
    def run(*args, **kw) -> CheckResult:
        t0 = time.perf_counter()
        res = fn(*args, **kw)
        res.elapsed = time.perf_counter() - t0
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def gauss_identities(max_rank: int = 12) -> CheckResult:
    res = CheckResult(1, "Gauss identity and its table rows", 10)
    for rs in _types(SIMPLY_LACED, max_rank):
        res.items += 1
        if not gauss_identity_check(rs).passed:
            res.failures.append(rs.name)
    for row in identity_table(max_rank):
        res.items += 1
        if not row.passed:
            res.failures.append(f"table row {row.label}")
    return res


def _reciprocity_forms(max_rank: int):
    ranges = [("A", 1, 11), ("D", 3, 10), ("E", 6, 8)]
    for rs in _types(ranges, max_rank):
        yield from intermediate_forms(rs)


@_timed
def reciprocity(max_rank: int = 12) -> CheckResult:
    res = CheckResult(2, "reciprocity over every intermediate form", 30)
    for g in _reciprocity_forms(max_rank):
        res.items += 1
        if not reciprocity_check(g).passed:
            res.failures.append(g.name)
    return res


@_timed
def modular_relations(max_rank: int = 12) -> CheckResult:
    res = CheckResult(3, "modular relations of S and T", 30)
    for rs in _types(SIMPLY_LACED, max_rank):
        res.items += 1
        if not verify_modular_relations(rs).passed:
            res.failures.append(rs.name)
    return res


SUPQ_PAIRS = ((2, 3), (3, 5), (3, 7), (5, 7))


@_timed
def supq_and_quadratic_reciprocity(prime_bound: int = 50) -> CheckResult:
    res = CheckResult(4, "SU(pq)/Z_p reciprocity and quadratic reciprocity", 20)
    for p, q in SUPQ_PAIRS:
        res.items += 1
        if not verify_supq(p, q):
            res.failures.append(f"G({p},{q})")
    primes = list(sympy.primerange(3, prime_bound))
    for p in primes:
        for q in primes:
            if p != q:
                res.items += 1
                if not verify_quadratic_reciprocity(p, q):
                    res.failures.append(f"({p}/{q})")
    return res


@_timed
def milgram_root_lattices(max_rank: int = 12) -> CheckResult:
    res = CheckResult(5, "Milgram formula for root lattices", 10)
    for rs in _types(SIMPLY_LACED, max_rank):
        res.items += 1
        if not milgram_check(root_lattice(rs)).passed:
            res.failures.append(rs.name)
    return res


@_timed
def discrete_poisson(max_rank: int = 7) -> CheckResult:
    res = CheckResult(6, "discrete Poisson summation on every subgroup", 5)
    for rs in _types([("A", 1, 7)], max_rank):
        disc = full_discriminant(rs)
        f = quadratic_phase(disc)
        for sub in subgroups(disc):
            res.items += 1
            if not poisson_check(disc, sub, f):
                res.failures.append(f"{rs.name} {sorted(sub)}")
    return res


@_timed
def hecke_relations(max_rank: int = 8) -> CheckResult:
    res = CheckResult(7, "Hecke relations and the power table", 10)
    for rs in _types(NON_SIMPLY_LACED, max_rank):
        res.items += 1
        if not verify_hecke_relations(rs).passed:
            res.failures.append(rs.name)
    for row in hecke_table(max_rank):
        res.items += 1
        if not row.passed:
            res.failures.append(f"table row {row.label}")
    return res


@_timed
def duality_vectors(max_rank: int = 12) -> CheckResult:
    res = CheckResult(8, "S|G> = |LG> for every form", 10)
    for g in _reciprocity_forms(max_rank):
        res.items += 1
        if not s_duality_report(g).passed:
            res.failures.append(g.name)
    for rs in _types(NON_SIMPLY_LACED, max_rank):
        for g in intermediate_forms(rs):
            res.items += 1
            if not hecke_duality_report(g).passed:
                res.failures.append(g.name)
    return res


THETA_SIMPLY_LACED = [("A", 1, 6), ("D", 3, 6), ("E", 6, 6)]
THETA_HECKE = [("B", 2, 3), ("C", 3, 3), ("F", 4, 4), ("G", 2, 2)]


@_timed
def theta_laws(max_rank: int = 6, config: SampleConfig | None = None) -> CheckResult:
    cfg = config or SampleConfig()
    res = CheckResult(9, "theta transformation laws and S-duality", 300)
    worst_law = worst_dual = 0.0
    for rs in _types(THETA_SIMPLY_LACED, max_rank) + _types(THETA_HECKE, max_rank):
        z = cfg.z_for(rs.rank, rs.name)
        forms = intermediate_forms(rs)
        for tau in cfg.taus:
            p = ThetaParams(z=z, tau=tau, tol=cfg.tol)
            rep = verify_theta_modular(rs, None, p)
            res.items += len(rep.laws)
            worst_law = max(worst_law, rep.max_residual)
            if rep.max_residual >= cfg.law_threshold:
                res.failures.append(f"{rs.name} tau={tau}")
            for g in forms:
                d = verify_theta_sduality(g, p, cfg.sdual_threshold)
                res.items += 1
                worst_dual = max(worst_dual, d.max_residual)
                if not d.passed:
                    res.failures.append(f"{g.name} tau={tau}")
    res.notes = {"max_law_residual": worst_law, "max_sduality_residual": worst_dual}
    return res


@_timed
def landsberg(max_rank: int = 6, config: SampleConfig | None = None) -> CheckResult:
    cfg = config or SampleConfig()
    res = CheckResult(10, "Landsberg limit recovers the Gauss sum", 120)
    worst = 0.0
    for rs in _types(THETA_SIMPLY_LACED, max_rank):
        for g in intermediate_forms(rs):
            c = landsberg_comparison(g, cfg.eps_coarse, cfg.eps_fine)
            res.items += 1
            worst = max(worst, float(c.coarse.residual))
            if not c.passed:
                res.failures.append(g.name)
    res.notes = {"max_coarse_residual": worst}
    return res


PHASE_TYPES = ("A2", "D4", "B2", "G2")


@_timed
def t_phase_crosscheck(config: SampleConfig | None = None) -> CheckResult:
    cfg = config or SampleConfig()
    res = CheckResult(11, "measured hat-theta T phases vs exact T", 60)
    worst = 0.0
    for name in PHASE_TYPES:
        rs = build_root_system(name[0], int(name[1:]))
        for tau in cfg.taus:
            for pc in measured_t_phases(rs, ThetaParams(z=cfg.z_for(rs.rank, name), tau=tau, tol=cfg.tol)):
                res.items += 1
                worst = max(worst, pc.error)
                if pc.error >= cfg.phase_threshold:
                    res.failures.append(f"{name} {pc.label} tau={tau}")
    res.notes = {"max_phase_error": worst}
    return res


def run_all(max_rank: int = 12, config: SampleConfig | None = None) -> list[CheckResult]:
    cfg = config or SampleConfig()
    return [
        gauss_identities(max_rank),
        reciprocity(max_rank),
        modular_relations(max_rank),
        supq_and_quadratic_reciprocity(),
        milgram_root_lattices(max_rank),
        discrete_poisson(min(max_rank, 7)),
        hecke_relations(min(max_rank, 8)),
        duality_vectors(max_rank),
        theta_laws(min(max_rank, 6), cfg),
        landsberg(min(max_rank, 6), cfg),
        t_phase_crosscheck(cfg),
    ]
