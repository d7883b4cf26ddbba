from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gausslie import intlinalg as la
from gausslie.rootsys import (
    all_types,
    build_root_system,
    coroot,
    coxeter_identity,
    dual_root_system,
    parse_type,
)

TYPES = all_types(12)
type_ids = [rs.name for rs in TYPES]


def test_e8_coxeter_numbers():
    e8 = build_root_system("E", 8)
    assert (e8.h, e8.h_check) == (30, 30)


def test_f4_data():
    f4 = build_root_system("F", 4)
    assert (f4.h, f4.h_check, f4.n_g) == (12, 9, 2)


def test_a1_roots():
    a1 = build_root_system("A", 1)
    assert set(a1.roots) == {(1,), (-1,)}


def test_b2_coroots():
    b2 = build_root_system("B", 2)
    long_root, short_root = (1, 0), (0, 1)
    assert b2.norm(long_root) == 2 and b2.norm(short_root) == 1
    assert coroot(b2, long_root) == (1, 0)
    assert coroot(b2, short_root) == (0, 2)


def test_coroot_of_simply_laced_is_itself():
    a3 = build_root_system("A", 3)
    for a in a3.roots:
        assert coroot(a3, a) == tuple(Fraction(x) for x in a)


def test_coroot_rejects_non_root():
    with pytest.raises(ValueError):
        coroot(build_root_system("B", 2), (2, 0))


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "E9", "F5", "G3", "X4", "", "A-1"])
def test_invalid_types_rejected(text):
    with pytest.raises(ValueError):
        build_root_system(*parse_type(text))


def test_dual_types():
    assert dual_root_system(build_root_system("B", 3)).name == "C3"
    assert dual_root_system(build_root_system("E", 6)).name == "E6"
    g2 = build_root_system("G", 2)
    d = dual_root_system(g2)
    assert (d.h_long, d.h_short) == (g2.h_short, g2.h_long)


@pytest.mark.parametrize("name", ["B3", "F4", "A5"])
def test_coxeter_identity_examples(name):
    assert coxeter_identity(build_root_system(*parse_type(name)))


def test_b3_dual_coxeter_arithmetic():
    b3, c3 = build_root_system("B", 3), build_root_system("C", 3)
    assert b3.h_check + c3.h_check == Fraction(3, 2) * b3.h


@pytest.mark.parametrize("rs", TYPES, ids=type_ids)
def test_structural_invariants(rs):
    r = rs.rank
    assert max(rs.gram[i][i] for i in range(r)) == 2
    assert la.det(rs.gram) > 0
    for i in range(r):
        for j in range(r):
            assert rs.gram[i][j] == rs.gram[j][i]
            assert rs.cartan[i][j] == 2 * rs.gram[i][j] / rs.gram[j][j]
    n_long = rs.long_short.count("long")
    assert len(rs.roots) == r * rs.h
    assert n_long == r * rs.h_long
    assert len(rs.roots) - n_long == r * rs.h_short
    assert rs.h == rs.h_long + rs.h_short
    assert rs.h_check == rs.h_long + Fraction(rs.h_short, rs.n_g)
    assert rs.n_g in (1, 2, 3)
    assert coxeter_identity(rs)


@pytest.mark.parametrize("rs", TYPES, ids=type_ids)
def test_dual_gram_is_scaled_coroot_gram(rs):
    d = dual_root_system(rs)
    from gausslie.rootsys import dual_permutation

    perm = dual_permutation(rs)
    cor = rs.simple_coroots
    for j in range(rs.rank):
        for k in range(rs.rank):
            direct = rs.inner(cor[perm[j]], cor[perm[k]]) / rs.n_g
            assert d.gram[j][k] == direct


@pytest.mark.parametrize("rs", TYPES, ids=type_ids)
def test_double_dual(rs):
    assert dual_root_system(dual_root_system(rs)).cartan == rs.cartan


def test_standard_cartan_matrices():
    assert build_root_system("A", 2).cartan == ((2, -1), (-1, 2))
    assert build_root_system("B", 2).cartan == ((2, -2), (-1, 2))
    assert build_root_system("C", 2).cartan == ((2, -1), (-2, 2))
    assert build_root_system("G", 2).cartan == ((2, -1), (-3, 2))
    assert build_root_system("F", 4).cartan == ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))


@given(st.sampled_from(TYPES), st.data())
def test_roots_closed_under_reflections(rs, data):
    a = data.draw(st.sampled_from(rs.roots))
    b = data.draw(st.sampled_from(rs.roots))
    # s_a(b) = b - <b, a^vee> a
    k = 2 * rs.inner(b, a) / rs.norm(a)
    assert k.denominator == 1
    image = tuple(int(x - k * y) for x, y in zip(b, a))
    assert image in set(rs.roots)
