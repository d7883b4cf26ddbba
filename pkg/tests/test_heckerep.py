from fractions import Fraction

import numpy as np
import pytest

from gausslie.lattices import group_form, intermediate_forms, langlands_dual_form
from gausslie.heckerep import (
    build_hecke_rep,
    complex_matrices,
    hecke_duality_report,
    hecke_group_vectors,
    hecke_table,
    sector_phases,
    verify_hecke_relations,
)
from gausslie.modrep import PhaseMatrix
from gausslie.rootsys import all_types, build_root_system

NON_SIMPLY_LACED = all_types(8, simply_laced=False)


def test_f4_u_sector_phase():
    pu, _ = sector_phases(build_root_system("F", 4))
    assert pu == Fraction(-1, 2)


def test_b2_sector_phases_equal():
    pu, pm = sector_phases(build_root_system("B", 2))
    assert pu == pm


@pytest.mark.parametrize("rs", NON_SIMPLY_LACED, ids=lambda rs: rs.name)
def test_theorem_relations(rs):
    rep = verify_hecke_relations(rs)
    assert rep.passed, rep.checks
    assert rep.details["power_is_identity"]
    hr = build_hecke_rep(rs)
    assert hr.u_sector.order == hr.mu_sector.order
    s, t = complex_matrices(hr)
    assert np.allclose(s @ s.conj().T, np.eye(hr.dim), atol=1e-12)
    assert np.allclose(np.abs(np.diag(t)), 1, atol=1e-12)


@pytest.mark.parametrize("name,power", [("F4", 4), ("G2", 6), ("B4", 4)])
def test_table_powers(name, power):
    rs = build_root_system(name[0], int(name[1:]))
    hr = build_hecke_rep(rs)
    assert (hr.S @ hr.T) ** power == PhaseMatrix.identity(hr.dim)


def test_hecke_table():
    rows = hecke_table(8)
    assert {row.label for row in rows} == {"B_r or C_r", "F_4", "G_2"}
    assert all(row.passed for row in rows)


def test_spin_sp_exchange():
    for r in range(2, 6):
        spin = group_form(f"Spin({2 * r + 1})")
        rep = hecke_duality_report(spin)
        assert rep.passed and rep.dual == f"Sp({r})/Z2"
        sp = group_form(f"Sp({r})")
        assert hecke_duality_report(sp).passed


def test_f4_self_dual():
    rep = hecke_duality_report(group_form("F4"))
    assert rep.passed and rep.dual == "F4"


@pytest.mark.parametrize("rs", NON_SIMPLY_LACED, ids=lambda rs: rs.name)
def test_every_form_exchanges(rs):
    for g in intermediate_forms(rs):
        assert hecke_group_vectors(g)
        assert langlands_dual_form(langlands_dual_form(g)).name == g.name


def test_simply_laced_rejected():
    with pytest.raises(ValueError):
        build_hecke_rep(build_root_system("A", 2))
