import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from gausslie.cyclo import CycScalar, RadScalar, fold_sqrt, phase, to_complex
from gausslie.gauss import (
    gauss_identity_check,
    gauss_sum,
    generalized_gauss,
    identity_table,
    legendre,
    milgram_check,
    quadratic_reciprocity_report,
    reciprocity_check,
    supq_check,
    verify_quadratic_reciprocity,
    verify_supq,
)
from gausslie.lattices import Lattice, adjoint, group_form, simply_connected, intermediate_forms, langlands_dual_form, root_lattice
from gausslie.rootsys import all_types, build_root_system

SIMPLY_LACED = all_types(12, simply_laced=True)
FORMS = [g for rs in all_types(8, simply_laced=True) for g in intermediate_forms(rs)]


def test_e8_sum_is_one():
    assert gauss_sum(group_form("E8")) == 1
    check = gauss_identity_check(build_root_system("E", 8))
    assert check.passed and check.lhs == 1 and check.rhs == phase(Fraction(1, 4)) ** 8


def test_su2_sum():
    assert gauss_sum(group_form("SU(2)")) == RadScalar(phase(Fraction(1, 4)))


def test_e6_sum():
    expected = RadScalar(phase(0) + phase(Fraction(4, 3)) * 2, 3, 3)
    assert gauss_sum(group_form("E6")) == expected


def test_su6_mod_z2_reciprocity():
    check = reciprocity_check(group_form("SU(6)/Z2"))
    assert check.passed
    assert abs(to_complex(check.lhs) - to_complex(check.rhs)) < 1e-12


@pytest.mark.parametrize("name,lhs,rhs", [
    ("A4", sum((phase(Fraction(k * (5 - k), 5)) for k in range(5)), CycScalar.zero()), RadScalar(phase(1), 5)),
    ("D6", phase(0) + phase(1) + phase(Fraction(6, 4)) * 2, RadScalar(phase(Fraction(6, 4)) * 2)),
    ("E7", phase(0) + phase(Fraction(3, 2)), RadScalar(phase(Fraction(7, 4)), 2)),
])
def test_identity_examples(name, lhs, rhs):
    rs = build_root_system(name[0], int(name[1:]))
    assert RadScalar(lhs) == rhs
    check = gauss_identity_check(rs)
    assert check.passed and check.lhs == RadScalar(lhs)


@pytest.mark.parametrize("rs", SIMPLY_LACED, ids=[rs.name for rs in SIMPLY_LACED])
def test_gauss_identity(rs):
    check = gauss_identity_check(rs)
    assert check.passed
    assert abs(to_complex(check.lhs) - to_complex(check.rhs)) < 1e-10


def test_identity_table_rows():
    rows = identity_table(12)
    assert {row.label for row in rows} == {"A_r", "D_r", "E_6", "E_7", "E_8"}
    assert all(row.passed for row in rows)


@pytest.mark.parametrize("g", FORMS, ids=[g.name for g in FORMS])
def test_reciprocity_every_form(g):
    v = gauss_sum(g)
    d = gauss_sum(langlands_dual_form(g))
    assert v * v.conj() == d * d.conj()
    assert reciprocity_check(g).passed
    assert gauss_sum(langlands_dual_form(g)) == v.conj() * RadScalar(phase(Fraction(g.rank, 4)))


@pytest.mark.parametrize("rs", SIMPLY_LACED, ids=[rs.name for rs in SIMPLY_LACED])
def test_unit_modulus_at_the_ends_of_the_chain(rs):
    for g in (simply_connected(rs), adjoint(rs)):
        v = gauss_sum(g)
        assert v * v.conj() == 1


def test_intermediate_forms_can_vanish():
    # M(SU(4)/Z2) = {0, w2} with (w2|w2) = 1, so the sum is 1 + e^{pi i} = 0
    assert gauss_sum(group_form("SU(4)/Z2")) == 0
    assert abs(to_complex(gauss_sum(group_form("SU(9)/Z3")))) == pytest.approx(math.sqrt(3))


def test_non_simply_laced_rejected():
    with pytest.raises(ValueError):
        gauss_sum(group_form("Sp(2)"))


def test_generalized_gauss_examples():
    g = generalized_gauss(1, 5)
    # with the k(q-k) exponent the sum is -sqrt(5); its square is 5
    assert g * g == 5
    assert g == -fold_sqrt(5)
    assert generalized_gauss(7, 1) == 1
    assert generalized_gauss(3, 5, include_zero=False) == generalized_gauss(3, 5) - 1


def test_generalized_gauss_rejects_zero():
    with pytest.raises(ValueError):
        generalized_gauss(0, 3)


@pytest.mark.parametrize("p,q", [(3, 5), (5, 3), (2, 3), (1, 1), (3, 7), (5, 7)])
def test_supq(p, q):
    assert supq_check(p, q).passed
    assert verify_supq(p, q)


@given(st.integers(1, 9), st.integers(1, 9))
def test_supq_property(p, q):
    assert supq_check(p, q).passed


def test_legendre_examples():
    assert legendre(3, 5) == -1 and legendre(5, 3) == -1
    assert legendre(3, 7) == -1 and legendre(7, 3) == 1
    assert all(legendre(1, p) == 1 for p in (3, 5, 7, 11))
    assert legendre(10, 5) == 0


def test_quadratic_reciprocity_examples():
    r = quadratic_reciprocity_report(3, 5)
    assert (r.legendre_pq, r.legendre_qp, r.sign) == (-1, -1, 1) and r.passed
    r = quadratic_reciprocity_report(3, 7)
    assert (r.legendre_pq, r.legendre_qp, r.sign) == (-1, 1, -1) and r.passed


@pytest.mark.parametrize("p,q", [(3, 3), (4, 7), (2, 5), (9, 5)])
def test_quadratic_reciprocity_rejects(p, q):
    with pytest.raises(ValueError):
        verify_quadratic_reciprocity(p, q)


@given(st.sampled_from(list(sympy.primerange(3, 60))), st.sampled_from(list(sympy.primerange(3, 60))))
def test_quadratic_reciprocity_property(p, q):
    if p != q:
        assert verify_quadratic_reciprocity(p, q)


def test_milgram_examples():
    a2 = milgram_check(root_lattice(build_root_system("A", 2)))
    assert a2.passed and a2.rhs == RadScalar(phase(Fraction(1, 2)), 3)
    assert milgram_check(root_lattice(build_root_system("E", 8))).rhs == 1
    # 2Z alpha with (alpha|alpha) = 2: norm 8, dual basis alpha/4, eight cosets
    lat = Lattice(((Fraction(2),),), ((Fraction(2),),))
    check = milgram_check(lat)
    assert check.passed
    assert check.rhs == RadScalar(phase(Fraction(1, 4)), 8)
    assert abs(abs(to_complex(check.lhs)) - math.sqrt(8)) < 1e-12


def test_milgram_rejects_odd_lattice():
    with pytest.raises(ValueError):
        milgram_check(Lattice(((Fraction(1),),), ((Fraction(1),),)))


@given(st.integers(1, 6), st.integers(1, 3))
def test_milgram_rescaled_even(k, m):
    # k Z alpha inside A1 and the orthogonal sum with an E-type block stay even
    lat = Lattice(((Fraction(k),),), ((Fraction(2 * m),),))
    assert milgram_check(lat).passed
