"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 when a verification fails,
2 for usage errors (unknown names, invalid ranks, malformed numbers).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable

from . import suite
from .config import SampleConfig, load_config
from .cyclo import format_angle
from .gauss import (
    gauss_identity_check,
    gauss_sum,
    identity_table,
    milgram_check,
    quadratic_reciprocity_report,
    reciprocity_check,
    supq_check,
    verify_supq,
)
from .heckerep import build_hecke_rep, hecke_duality_report, hecke_table, verify_hecke_relations
from .lattices import (
    GroupForm,
    full_discriminant,
    group_form,
    intermediate_forms,
    langlands_dual_form,
    miniscule_weights,
    root_lattice,
    simply_connected,
)
from .modrep import build_S, build_T, s_duality_report, verify_modular_relations
from .rootsys import RootSystem, parse_type, root_system
from .theta import (
    TailBoundError,
    ThetaParams,
    landsberg_comparison,
    landsberg_result,
    measured_t_phases,
    theta_dual_group,
    theta_group,
    theta_mu,
    theta_u,
    verify_theta_modular,
    verify_theta_sduality,
)


class UsageError(Exception):
    pass


class Outcome:
    """A report plus its verdict; ``lines`` is the text rendering."""

    def __init__(self, data, passed: bool = True, lines: list[str] | None = None):
        self.data = data
        self.passed = passed
        self.lines = lines if lines is not None else [json.dumps(data, indent=2)]


# argument parsing helpers --------------------------------------------------------------


def parse_complex(text: str) -> complex:
    s = text.strip().replace(" ", "").replace("i", "j")
    if s in ("j", "+j"):
        return 1j
    if s == "-j":
        return -1j
    try:
        return complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed complex literal {text!r} (expected a+bi)") from None


def parse_vector(text: str) -> tuple[complex, ...]:
    return tuple(parse_complex(p) for p in text.split(","))


def _rs(text: str) -> RootSystem:
    try:
        return root_system(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _form(text: str) -> GroupForm:
    try:
        return group_form(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _forms(text: str) -> list[GroupForm]:
    """A form name, or a type name meaning all of its intermediate forms."""
    try:
        parse_type(text)
    except ValueError:
        return [_form(text)]
    return intermediate_forms(_rs(text))


def _config(args) -> SampleConfig:
    try:
        cfg = load_config(args.config)
    except (OSError, ValueError) as exc:
        raise UsageError(f"bad config: {exc}") from None
    kw = {}
    if args.seed is not None:
        kw["seed"] = args.seed
    if args.tol is not None:
        kw["tol"] = args.tol
    return cfg if not kw else SampleConfig.from_json({**cfg.to_json(), **kw})


def _params(args, rs: RootSystem, tau: complex | None = None, zero_z: bool = False) -> ThetaParams:
    """Sample ``z`` from the config unless given; ``zero_z`` makes the default the origin."""
    cfg = _config(args)
    if getattr(args, "z", None) is not None:
        z = args.z
    else:
        z = (0j,) * rs.rank if zero_z else cfg.z_for(rs.rank, rs.name)
    if len(z) != rs.rank:
        raise UsageError(f"--z needs {rs.rank} components for {rs.name}")
    t = tau if tau is not None else (args.tau if getattr(args, "tau", None) is not None else cfg.taus[0])
    try:
        return ThetaParams(z=z, tau=t, delta=getattr(args, "delta", None) or 0, tol=cfg.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cx(c: complex) -> list[float]:
    return [c.real, c.imag]


def _fr(v) -> list[str]:
    return [str(Fraction(x)) for x in v]


# rootsys / lattice -----------------------------------------------------------------


def cmd_rootsys(args) -> Outcome:
    rs = _rs(args.type)
    data = {
        "type": rs.name,
        "rank": rs.rank,
        "n_g": rs.n_g,
        "cartan": [list(r) for r in rs.cartan],
        "gram": [_fr(r) for r in rs.gram],
        "roots": len(rs.roots),
        "h": rs.h,
        "h_check": rs.h_check,
        "h_long": rs.h_long,
        "h_short": rs.h_short,
        "highest_root": list(rs.theta_highest),
        "rho": _fr(rs.rho),
        "fundamental_weights": [_fr(w) for w in rs.fundamental_weights],
    }
    lines = [f"{k}: {v}" for k, v in data.items()]
    return Outcome(data, True, lines)


def cmd_lattice(args) -> Outcome:
    try:
        parse_type(args.name)
        is_type = True
    except ValueError:
        is_type = False
    if is_type:
        rs = _rs(args.name)
        disc = full_discriminant(rs)
        forms = intermediate_forms(rs)
        data = {
            "type": rs.name,
            "discriminant": {
                "invariant_factors": list(disc.invariant_factors),
                "reps": [_fr(v) for v in disc.reps],
                "norms_mod_2": [str(x) for x in disc.norm] if disc.norm is not None else None,
            },
            "forms": [
                {
                    "name": g.name,
                    "dual": langlands_dual_form(g).name,
                    "pi1": g.fundamental_group.order,
                    "center": g.center_order,
                }
                for g in forms
            ],
        }
        lines = [f"{rs.name}: coweight/coroot = {' x '.join(f'Z{d}' for d in disc.invariant_factors) or '0'}"]
        lines += [f"  coset {_fr(v)}" for v in disc.reps]
        lines += [f"  form {f['name']}: |pi1| = {f['pi1']}, |Z| = {f['center']}, dual {f['dual']}" for f in data["forms"]]
        return Outcome(data, True, lines)
    g = _form(args.name)
    dual = langlands_dual_form(g)
    data = {
        "form": g.name,
        "type": g.rs.name,
        "ell_basis": [_fr(v) for v in g.ell.generators],
        "pi1": g.fundamental_group.order,
        "center": g.center_order,
        "miniscule_weights": [_fr(v) for v in miniscule_weights(g)],
        "dual": dual.name,
    }
    lines = [f"{k}: {v}" for k, v in data.items()]
    return Outcome(data, True, lines)


# gauss ---------------------------------------------------------------------------


def _check_lines(check) -> list[str]:
    verdict = "PASS" if check.passed else "FAIL"
    return [f"{check.name}: {check.lhs} = {check.rhs} {verdict}"]


def cmd_gauss_compute(args) -> Outcome:
    out, lines = [], []
    for g in _forms(args.form):
        if not g.rs.simply_laced:
            raise UsageError(f"{g.rs.name} is not simply laced; the group Gauss sum needs equal root lengths")
        val = gauss_sum(g)
        c = val.to_complex()
        out.append({"form": g.name, "value": str(val), "exact": val.to_json(), "numeric": _cx(c)})
        lines.append(f"G({g.name}) = {val}  ~ {c.real:.12f}{c.imag:+.12f}i")
    return Outcome(out, True, lines)


def cmd_gauss_reciprocity(args) -> Outcome:
    checks = [reciprocity_check(g) for g in _forms(args.form) if _simply_laced_or_fail(g.rs)]
    return Outcome([c.to_json() for c in checks], all(c.passed for c in checks), sum((_check_lines(c) for c in checks), []))


def _simply_laced_or_fail(rs: RootSystem) -> bool:
    if not rs.simply_laced:
        raise UsageError(f"{rs.name} is not simply laced; use the hecke subcommands")
    return True


def _identity_display(rs: RootSystem) -> tuple[str, str]:
    """Left side as grouped phase terms, right side as ``sqrt|Z| * e^{pi i r/4}``."""
    g = simply_connected(rs)
    counts = Counter(rs.norm(mu) % 2 for mu in miniscule_weights(g))
    terms = []
    for n in sorted(counts):
        c = counts[n]
        if n == 0:
            terms.append(str(c))
        else:
            terms.append(("" if c == 1 else f"{c}·") + f"e^{{{format_angle(n)}}}")
    z = g.center_order
    root = math.isqrt(z)
    mag = str(root) if root * root == z else f"√{z}"
    return " + ".join(terms), f"{mag}·e^{{{format_angle(Fraction(rs.rank, 4))}}}"


def cmd_gauss_identity(args) -> Outcome:
    rs = _rs(args.type)
    _simply_laced_or_fail(rs)
    check = gauss_identity_check(rs)
    lhs, rhs = _identity_display(rs)
    verdict = "PASS" if check.passed else "FAIL"
    data = {**check.to_json(), "lhs_display": lhs, "rhs_display": rhs}
    return Outcome(data, check.passed, [f"{lhs} = {rhs} {verdict}"])


def cmd_gauss_table(args) -> Outcome:
    rows = identity_table(args.max_rank or 12)
    lines = [f"{r.label:4s} {r.text}  [{', '.join(r.checked)}] {'PASS' if r.passed else 'FAIL'}" for r in rows]
    return Outcome([r.to_json() for r in rows], all(r.passed for r in rows), lines)


def cmd_gauss_supq(args) -> Outcome:
    check = supq_check(args.p, args.q)
    full = verify_supq(args.p, args.q)
    data = {**check.to_json(), "with_group_crosscheck": full}
    return Outcome(data, check.passed and full, _check_lines(check) + [f"group cross-check: {'PASS' if full else 'FAIL'}"])


def cmd_gauss_qr(args) -> Outcome:
    try:
        rep = quadratic_reciprocity_report(args.p, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    line = (
        f"({rep.p}/{rep.q})({rep.q}/{rep.p}) = {rep.legendre_pq}·{rep.legendre_qp} = {rep.sign}; "
        f"via Gauss sums ({rep.via_gauss_pq}, {rep.via_gauss_qp}) {'PASS' if rep.passed else 'FAIL'}"
    )
    return Outcome(rep.to_json(), rep.passed, [line])


def cmd_gauss_milgram(args) -> Outcome:
    rs = _rs(args.type)
    _simply_laced_or_fail(rs)
    check = milgram_check(root_lattice(rs))
    return Outcome(check.to_json(), check.passed, _check_lines(check))


# modular / hecke ---------------------------------------------------------------------


def _relations_outcome(rep) -> Outcome:
    lines = [f"{rep.subject}:"] + [f"  {k}: {'PASS' if v else 'FAIL'}" for k, v in rep.checks.items()]
    lines += [f"  {k}: {v}" for k, v in rep.details.items()]
    return Outcome(rep.to_json(), rep.passed, lines)


def cmd_modular_verify(args) -> Outcome:
    rs = _rs(args.type)
    _simply_laced_or_fail(rs)
    return _relations_outcome(verify_modular_relations(rs))


def _matrix_outcome(name: str, m) -> Outcome:
    data = m.to_json()
    lines = [f"{name} ({m.shape[0]}x{m.shape[1]}):"] + ["  [" + ", ".join(row) + "]" for row in data["display"]]
    return Outcome(data, True, lines)


def cmd_modular_show(args) -> Outcome:
    rs = _rs(args.type)
    _simply_laced_or_fail(rs)
    m = build_S(rs) if args.which == "S" else build_T(rs)
    return _matrix_outcome(f"{args.which} for {rs.name}", m)


def cmd_modular_sdual(args) -> Outcome:
    reps = [s_duality_report(g) for g in _forms(args.form) if _simply_laced_or_fail(g.rs)]
    lines = [f"S|{r.form}> = |{r.dual}>: {'PASS' if r.passed else 'FAIL'}" for r in reps]
    return Outcome([r.to_json() for r in reps], all(r.passed for r in reps), lines)


def _non_simply_laced_or_fail(rs: RootSystem) -> None:
    if rs.simply_laced:
        raise UsageError(f"{rs.name} is simply laced; use the modular subcommands")


def cmd_hecke_verify(args) -> Outcome:
    rs = _rs(args.type)
    _non_simply_laced_or_fail(rs)
    return _relations_outcome(verify_hecke_relations(rs))


def cmd_hecke_show(args) -> Outcome:
    rs = _rs(args.type)
    _non_simply_laced_or_fail(rs)
    rep = build_hecke_rep(rs)
    m = rep.S if args.which == "S" else rep.T
    return _matrix_outcome(f"{args.which} for {rs.name}", m)


def cmd_hecke_sdual(args) -> Outcome:
    forms = _forms(args.form)
    for g in forms:
        _non_simply_laced_or_fail(g.rs)
    reps = [hecke_duality_report(g) for g in forms]
    lines = [f"S~|{r.form}> = |{r.dual}>: {'PASS' if r.passed else 'FAIL'}" for r in reps]
    return Outcome([r.to_json() for r in reps], all(r.passed for r in reps), lines)


def cmd_hecke_table(args) -> Outcome:
    rows = hecke_table(args.max_rank or 8)
    lines = [f"{r.label}: {r.text}  [{', '.join(r.checked)}] {'PASS' if r.passed else 'FAIL'}" for r in rows]
    return Outcome([r.to_json() for r in rows], all(r.passed for r in rows), lines)


# theta -----------------------------------------------------------------------------


def cmd_theta_eval(args) -> Outcome:
    if args.form:
        g = _form(args.form)
        p = _params(args, g.rs, zero_z=True)
        val = theta_dual_group(g, p) if args.dual else theta_group(g, p)
        subject = ("dual of " if args.dual else "") + g.name
    else:
        rs = _rs(args.type)
        p = _params(args, rs, zero_z=True)
        coset = _fr_vec(args.coset, rs.rank)
        val = theta_mu(rs, coset, p) if args.family == "mu" else theta_u(rs, coset, p)
        subject = f"{rs.name} {args.family} coset {_fr(coset)}"
    data = {"subject": subject, "tau": _cx(p.tau), "z": [_cx(x) for x in p.z], **val.to_json()}
    line = f"theta[{subject}] = {val.value.real:.15g}{val.value.imag:+.15g}i  (certified tail {val.tail_bound:.2e}, {val.points} points)"
    return Outcome(data, True, [line])


def _fr_vec(text: str | None, r: int) -> tuple[Fraction, ...]:
    if text is None:
        return tuple(Fraction(0) for _ in range(r))
    try:
        v = tuple(Fraction(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed coset vector {text!r}") from None
    if len(v) != r:
        raise UsageError(f"coset vector needs {r} components")
    return v


def _taus(args, cfg: SampleConfig) -> tuple[complex, ...]:
    return (args.tau,) if args.tau is not None else cfg.taus


def _report_lines(rep) -> list[str]:
    lines = [f"{rep.subject} at tau = {rep.tau}: max residual {rep.max_residual:.3e} {'PASS' if rep.passed else 'FAIL'}"]
    for c in rep.laws:
        if c.residual >= rep.threshold:
            lines.append(f"  {c.name}: lhs = {c.lhs:.15g}, rhs = {c.rhs:.15g}, residual {c.residual:.3e}")
    return lines


def cmd_theta_modular(args) -> Outcome:
    rs = _rs(args.type)
    cfg = _config(args)
    reps = []
    for tau in _taus(args, cfg):
        reps.append(verify_theta_modular(rs, None, _params(args, rs, tau)))
    return Outcome([r.to_json() for r in reps], all(r.passed for r in reps), sum((_report_lines(r) for r in reps), []))


def cmd_theta_sdual(args) -> Outcome:
    cfg = _config(args)
    reps = []
    for g in _forms(args.form):
        for tau in _taus(args, cfg):
            reps.append(verify_theta_sduality(g, _params(args, g.rs, tau), cfg.sdual_threshold))
    return Outcome([r.to_json() for r in reps], all(r.passed for r in reps), sum((_report_lines(r) for r in reps), []))


def cmd_theta_landsberg(args) -> Outcome:
    cfg = _config(args)
    out, lines, ok = [], [], True
    for g in _forms(args.form):
        if not g.rs.simply_laced:
            raise UsageError(f"{g.rs.name} is not simply laced")
        if args.eps is not None:
            try:
                res = landsberg_result(g, args.eps)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            good = res.residual + res.tail_bound < 1e-6
            out.append({**res.to_json(), "pass": good})
            lines.append(
                f"{g.name} eps={args.eps}: value {complex(res.value):.12g}, exact {complex(res.exact):.12g}, "
                f"residual {float(res.residual):.3e} (tail <= {float(res.tail_bound):.1e}) {'PASS' if good else 'FAIL'}"
            )
        else:
            cmp = landsberg_comparison(g, cfg.eps_coarse, cfg.eps_fine)
            good = cmp.passed
            out.append(cmp.to_json())
            lines.append(
                f"{g.name}: residual {float(cmp.coarse.residual):.3e} at eps={cfg.eps_coarse}, "
                f"{float(cmp.fine.residual):.3e} at eps={cfg.eps_fine} {'PASS' if good else 'FAIL'}"
            )
        ok = ok and good
    return Outcome(out, ok, lines)


def cmd_theta_phases(args) -> Outcome:
    rs = _rs(args.type)
    cfg = _config(args)
    p = _params(args, rs, args.tau if args.tau is not None else cfg.taus[1 % len(cfg.taus)])
    checks = measured_t_phases(rs, p)
    ok = all(c.error < cfg.phase_threshold for c in checks)
    lines = [f"{c.label}: measured {c.measured:.12f}, exact {c.exact:.12f}, error {c.error:.1e}" for c in checks]
    return Outcome([c.to_json() for c in checks], ok, lines)


# sweep -------------------------------------------------------------------------------


def _run_check(job: tuple[str, tuple, dict]):
    name, a, kw = job
    return getattr(suite, name)(*a, **kw)


def cmd_sweep(args) -> Outcome:
    cfg = _config(args)
    n = args.max_rank or 8
    jobs = [
        ("gauss_identities", (n,), {}),
        ("reciprocity", (n,), {}),
        ("modular_relations", (n,), {}),
        ("supq_and_quadratic_reciprocity", (), {}),
        ("milgram_root_lattices", (n,), {}),
        ("discrete_poisson", (min(n, 7),), {}),
        ("hecke_relations", (min(n, 8),), {}),
        ("duality_vectors", (n,), {}),
        ("theta_laws", (min(n, 6),), {"config": cfg}),
        ("landsberg", (min(n, 6),), {"config": cfg}),
        ("t_phase_crosscheck", (), {"config": cfg}),
    ]
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_check, jobs))
    else:
        results = [_run_check(j) for j in jobs]
    results.sort(key=lambda r: r.number)
    # budgets are for the full-size acceptance run; the sweep only reports correctness
    ok = all(r.passed for r in results)
    return Outcome([r.to_json() for r in results], ok, [r.line() for r in results])


# parser ------------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--tol", type=float, default=None, help="absolute accuracy target for theta sums")
    p.add_argument("--eps", type=float, default=None, help="epsilon for the Landsberg limit")
    p.add_argument("--seed", type=int, default=None, help="seed for sample z vectors")
    p.add_argument("--max-rank", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--config", default=None, help="JSON file overriding sample points")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="gausslie", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(parent, name: str, fn: Callable[..., Outcome], help_: str):
        p = parent.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = leaf(sub, "rootsys", cmd_rootsys, "root system data")
    p.add_argument("type")
    p = leaf(sub, "lattice", cmd_lattice, "discriminant group and forms of a type, or data of one form")
    p.add_argument("name")

    g = sub.add_parser("gauss", help="Gauss sums").add_subparsers(dest="action", required=True)
    leaf(g, "compute", cmd_gauss_compute, "exact Gauss sum of a form (or all forms of a type)").add_argument("form")
    leaf(g, "verify-reciprocity", cmd_gauss_reciprocity, "reciprocity under Langlands duality").add_argument("form")
    leaf(g, "verify-identity", cmd_gauss_identity, "the Gauss identity of the simply connected form").add_argument("type")
    leaf(g, "table", cmd_gauss_table, "closed-form identity rows")
    for name, fn, help_ in (("qr", cmd_gauss_qr, "quadratic reciprocity"), ("supq", cmd_gauss_supq, "generalized sum reciprocity")):
        p = leaf(g, name, fn, help_)
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)
    leaf(g, "milgram", cmd_gauss_milgram, "Milgram formula for a root lattice").add_argument("type")

    m = sub.add_parser("modular", help="modular group representation").add_subparsers(dest="action", required=True)
    leaf(m, "verify", cmd_modular_verify, "exact relations").add_argument("type")
    p = leaf(m, "show-S", cmd_modular_show, "print S")
    p.add_argument("type")
    p.set_defaults(which="S")
    p = leaf(m, "show-T", cmd_modular_show, "print T")
    p.add_argument("type")
    p.set_defaults(which="T")
    leaf(m, "s-dual", cmd_modular_sdual, "S|G> = |LG>").add_argument("form")

    h = sub.add_parser("hecke", help="Hecke group representation").add_subparsers(dest="action", required=True)
    leaf(h, "verify", cmd_hecke_verify, "exact relations").add_argument("type")
    p = leaf(h, "show", cmd_hecke_show, "print S~ (or T with --which T)")
    p.add_argument("type")
    p.add_argument("--which", choices=("S", "T"), default="S")
    leaf(h, "s-dual", cmd_hecke_sdual, "S~|G> = |LG>").add_argument("form")
    leaf(h, "table", cmd_hecke_table, "the (S~T)^{2n} table")

    t = sub.add_parser("theta", help="theta functions").add_subparsers(dest="action", required=True)

    def theta_leaf(name, fn, help_):
        p = leaf(t, name, fn, help_)
        p.add_argument("--tau", type=parse_complex, default=None)
        p.add_argument("--z", type=parse_vector, default=None, help="comma-separated complex components")
        return p

    p = theta_leaf("eval", cmd_theta_eval, "evaluate a coset or group theta function")
    p.add_argument("type", nargs="?", default=None)
    p.add_argument("--coset", default=None, help="comma-separated rational coset representative")
    p.add_argument("--family", choices=("u", "mu"), default="u")
    p.add_argument("--form", default=None)
    p.add_argument("--dual", action="store_true", help="with --form: theta of the Langlands dual")
    p.add_argument("--delta", type=parse_complex, default=None)
    theta_leaf("verify-modular", cmd_theta_modular, "transformation laws").add_argument("type")
    theta_leaf("verify-sdual", cmd_theta_sdual, "theta S-duality").add_argument("form")
    theta_leaf("landsberg", cmd_theta_landsberg, "Landsberg limit").add_argument("form")
    theta_leaf("t-phases", cmd_theta_phases, "measured T phases vs exact T").add_argument("type")

    s = sub.add_parser("sweep", help="batch verification").add_subparsers(dest="action", required=True)
    leaf(s, "all", cmd_sweep, "every check up to --max-rank (default 8)")
    return parser


def run(argv=None) -> tuple[int, Outcome | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    if args.command == "theta" and args.action == "eval" and not args.form and not args.type:
        print("usage error: theta eval needs a type or --form", file=sys.stderr)
        return 2, None
    if args.max_rank is not None and args.max_rank < 1:
        print("usage error: --max-rank must be positive", file=sys.stderr)
        return 2, None
    try:
        outcome = args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2, None
    except TailBoundError as exc:
        print(f"evaluation failed: {exc}", file=sys.stderr)
        return 1, None
    if args.format == "json":
        print(json.dumps({"pass": outcome.passed, "result": outcome.data}, indent=2, default=str, ensure_ascii=False))
    else:
        print("\n".join(outcome.lines))
    return (0 if outcome.passed else 1), outcome


def main(argv=None) -> int:
    return run(argv)[0]


if __name__ == "__main__":
    sys.exit(main())
