import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gausslie.config import SampleConfig
from gausslie.cyclo import to_complex
from gausslie.gauss import gauss_sum
from gausslie.lattices import (
    coweight_lattice,
    full_discriminant,
    group_form,
    root_lattice,
    simply_connected,
)
from gausslie.rootsys import build_root_system
from gausslie.theta import (
    TailBoundError,
    ThetaParams,
    dedekind_eta,
    landsberg_comparison,
    landsberg_result,
    measured_t_phases,
    theta_group,
    theta_sum,
    theta_u,
    triple_action,
    verify_theta_modular,
    verify_theta_sduality,
)

A1, A2 = build_root_system("A", 1), build_root_system("A", 2)
CFG = SampleConfig()


def params(rank, tau, z=None, tol=1e-12):
    return ThetaParams(z=z if z is not None else (0j,) * rank, tau=tau, tol=tol)


def test_a1_value_at_i():
    v = theta_sum(root_lattice(A1), (0,), params(1, 1j, tol=1e-10))
    assert abs(v.value - (1 + 2 * math.exp(-2 * math.pi) + 2 * math.exp(-8 * math.pi))) < 1e-10
    assert round(v.value.real, 4) == 1.0037
    assert v.points <= 7


def test_a1_against_jacobi_theta():
    tau = 0.3 + 0.8j
    v = theta_sum(root_lattice(A1), (0,), params(1, tau)).value
    # sum_k q^{k^2} with q = e^{2 pi i tau} is jtheta(3, 0, q)
    ref = complex(mpmath.jtheta(3, 0, mpmath.exp(2j * mpmath.pi * tau)))
    assert abs(v - ref) < 1e-12


@given(st.integers(-2, 2), st.integers(-2, 2))
@settings(max_examples=20)
def test_quasi_periodicity(a, b):
    lat = root_lattice(A2)
    disc = full_discriminant(A2)
    u = disc.reps[1]
    z = CFG.z_for(2, "period")
    lam = coweight_lattice(A2).point((a, b))
    p = params(2, 0.2 + 1.1j, z)
    moved = p.with_(z=tuple(x + float(y) for x, y in zip(z, lam)))
    lhs = theta_sum(lat, u, moved).value
    rhs = cmath.exp(2j * math.pi * float(A2.inner(lam, u))) * theta_sum(lat, u, p).value
    assert abs(lhs - rhs) < 1e-10


@pytest.mark.parametrize("tau", CFG.taus)
def test_zero_shift_at_zero_is_real(tau):
    if tau.real != 0:
        tau = 1j * tau.imag
    v = theta_sum(root_lattice(build_root_system("D", 4)), (0,) * 4, params(4, tau)).value
    assert abs(v.imag) < 1e-12 and v.real >= 1


def test_eta_examples():
    assert abs(dedekind_eta(1j) - 0.768225422326057) < 1e-12
    ref = math.gamma(0.25) / (2 * math.pi ** 0.75)
    assert abs(dedekind_eta(1j) - ref) < 1e-12
    tau = 0.3 + 0.9j
    assert abs(dedekind_eta(tau + 1) - cmath.exp(1j * math.pi / 12) * dedekind_eta(tau)) < 1e-12
    assert abs(dedekind_eta(-1 / tau) - cmath.sqrt(tau / 1j) * dedekind_eta(tau)) < 1e-12
    big = 8j
    assert abs(dedekind_eta(big) * cmath.exp(-1j * math.pi * big / 12) - 1) < 1e-14


def test_eta_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        dedekind_eta(-1j)


def test_a2_t_law():
    z = CFG.z_for(2, "A2 example")
    rep = verify_theta_modular(A2, A2.fundamental_weights[0], params(2, 0.2 + 1.1j, z))
    t_laws = [c for c in rep.laws if c.name.startswith("T-law")]
    assert t_laws and max(c.residual for c in t_laws) < 1e-8
    assert rep.passed


def test_e8_s_law_at_fixed_point():
    e8 = build_root_system("E", 8)
    rep = verify_theta_modular(e8, None, params(8, 1j))
    s = [c for c in rep.laws if c.name.startswith("S-law")][0]
    assert abs(s.lhs - s.rhs) < 1e-12
    assert s.lhs.real > 1


def test_b2_all_laws():
    b2 = build_root_system("B", 2)
    rep = verify_theta_modular(b2, None, params(2, 0.25 + 0.8j, CFG.z_for(2, "B2")))
    assert sum(c.name.startswith("hat") for c in rep.laws) == 8
    assert rep.max_residual < 1e-7


@pytest.mark.parametrize("name", ["A1", "A3", "D4", "G2", "C3"])
@pytest.mark.parametrize("tau", CFG.taus)
def test_laws_at_sample_points(name, tau):
    rs = build_root_system(name[0], int(name[1:]))
    rep = verify_theta_modular(rs, None, params(rs.rank, tau, CFG.z_for(rs.rank, name)))
    assert rep.max_residual < 1e-8, [(c.name, c.residual) for c in rep.laws]


def test_group_theta_of_simply_connected_is_theta_zero():
    g = simply_connected(A2)
    p = params(2, 0.3 + 0.9j, CFG.z_for(2, "sc"))
    assert abs(theta_group(g, p).value - theta_u(A2, (0, 0), p).value) < 1e-13


def test_self_dual_s_duality():
    rep = verify_theta_sduality(group_form("SU(4)/Z2"), params(3, 1j))
    assert rep.max_residual < 1e-9


def test_sp_spin_s_duality():
    for name in ("Sp(2)", "Spin(5)"):
        g = group_form(name)
        rep = verify_theta_sduality(g, params(2, 0.4 + 1.2j, CFG.z_for(2, name)))
        assert rep.max_residual < 1e-7


def test_tail_bound_failure_reports_achieved():
    with pytest.raises(TailBoundError) as err:
        theta_sum(root_lattice(build_root_system("E", 8)), (0,) * 8, params(8, 0.01j, tol=1e-14), max_points=1000)
    assert err.value.achieved > 1e-14


def test_params_validation():
    with pytest.raises(ValueError):
        ThetaParams(z=(0j,), tau=1 - 1j)
    with pytest.raises(ValueError):
        ThetaParams(z=(0j,), tau=1j, tol=0)
    with pytest.raises(ValueError):
        ThetaParams(z=(0j,), tau=1j, cutoff_policy="fixed")


def test_tail_bound_is_honest():
    lat = root_lattice(A2)
    p = params(2, 0.1 + 0.3j, CFG.z_for(2, "tail"), tol=1e-4)
    rough = theta_sum(lat, (0, 0), p)
    fine = theta_sum(lat, (0, 0), p.with_(tol=1e-14))
    assert abs(rough.value - fine.value) <= rough.tail_bound + fine.tail_bound
    assert rough.tail_bound <= 1e-4 / 2


@pytest.mark.parametrize("tol", [1e-6, 1e-8, 1e-10])
def test_halving_tol_does_not_inflate_residual(tol):
    p = params(2, -0.4 + 0.7j, CFG.z_for(2, "halving"), tol)
    r1 = verify_theta_modular(A2, None, p).max_residual
    r2 = verify_theta_modular(A2, None, p.with_(tol=tol / 2)).max_residual
    assert r2 <= 2 * max(r1, 1e-15)


@given(st.sampled_from(["A2", "A3", "D4", "E6"]), st.data())
@settings(max_examples=15)
def test_u_and_minus_u_agree_at_zero(name, data):
    rs = build_root_system(name[0], int(name[1:]))
    disc = full_discriminant(rs)
    i = data.draw(st.integers(0, disc.order - 1))
    p = params(rs.rank, complex(data.draw(st.floats(-0.5, 0.5)), data.draw(st.floats(0.6, 1.5))))
    a = theta_u(rs, disc.reps[i], p).value
    b = theta_u(rs, disc.reps[disc.neg(i)], p).value
    assert abs(a - b) < 1e-11


S = ((0, -1), (1, 0))
T = ((1, 1), (0, 1))


def mat(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def close(x, y, tol=1e-10):
    return all(abs(complex(a) - complex(b)) < tol for a, b in zip(np.ravel(x[0]), np.ravel(y[0]))) and all(
        abs(x[i] - y[i]) < tol for i in (1, 2)
    )


def test_identity_action_fixes_triples():
    t = ((0.1 + 0.2j, -0.3j), 0.2 + 0.9j, 0.05j)
    assert close(triple_action(((1, 0), (0, 1)), t), t)


matrices = st.sampled_from([S, T, ((1, 0), (1, 1)), ((2, 1), (1, 1)), ((1, -1), (0, 1))])


@given(matrices, matrices, st.floats(-1, 1), st.floats(0.5, 2), st.floats(-0.3, 0.3), st.floats(-0.3, 0.3))
def test_action_composes(g1, g2, x, y, za, zb):
    t = ((complex(za, zb), complex(zb, -za)), complex(x, y), 0.1j)
    gram = A2.gram
    direct = triple_action(mat(g1, g2), t, gram)
    stepwise = triple_action(g1, triple_action(g2, t, gram), gram)
    assert close(direct, stepwise)


def test_s_twice_and_t_then_s():
    t = ((0.2 + 0.1j,), 0.3 + 1.1j, 0j)
    assert close(triple_action(mat(S, T), t), triple_action(S, triple_action(T, t)))
    assert close(triple_action(mat(S, S), t), triple_action(S, triple_action(S, t)))


def test_triple_action_rejects_bad_matrix():
    with pytest.raises(ValueError):
        triple_action(((1, 1), (1, 1)), ((0j,), 1j, 0j))


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_measured_t_phases(name):
    rs = build_root_system(name[0], int(name[1:]))
    checks = measured_t_phases(rs, params(rs.rank, 0.3 + 0.9j, CFG.z_for(rs.rank, name)))
    assert checks and max(c.error for c in checks) < 1e-8


def test_landsberg_e8():
    res = landsberg_result(group_form("E8"), 0.1)
    assert float(res.residual) < 1e-6


def test_landsberg_a1():
    # the sum runs over the dual form of SU(2), recovering G(SU(2)) = e^{i pi/4}
    res = landsberg_result(group_form("SU(2)"), 0.05)
    assert abs(complex(res.value) - cmath.exp(1j * math.pi / 4)) < 1e-6
    assert complex(res.exact) == pytest.approx(to_complex(gauss_sum(group_form("SU(2)"))))


def test_landsberg_improves():
    c = landsberg_comparison(group_form("SU(3)"), 0.1, 0.05)
    assert c.passed and float(c.fine.residual) < float(c.coarse.residual)


def test_landsberg_rejects_bad_epsilon():
    with pytest.raises(ValueError):
        landsberg_result(group_form("SU(2)"), 0.5)
    with pytest.raises(ValueError):
        landsberg_result(group_form("Sp(2)"), 0.1)
