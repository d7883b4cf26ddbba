from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gausslie.cyclo import CycScalar, RadScalar, fold_sqrt, phase
from gausslie.lattices import (
    adjoint,
    coroot_lattice,
    coweight_lattice,
    dual_lattice,
    finite_fourier,
    full_discriminant,
    group_form,
    intermediate_forms,
    inverse_fourier,
    is_miniscule,
    langlands_dual_form,
    lattice_index,
    miniscule_weights,
    minuscule_diagram_check,
    poisson_check,
    quadratic_phase,
    quotient,
    root_lattice,
    simply_connected,
    subgroups,
    weight_lattice,
)
from gausslie.rootsys import all_types, build_root_system

TYPES = all_types(12)


def center_table(family, r):
    """Invariant factors of the center of the simply connected group."""
    return {
        "A": (r + 1,),
        "B": (2,),
        "C": (2,),
        "D": (2, 2) if r % 2 == 0 else (4,),
        "E": {6: (3,), 7: (2,), 8: ()}.get(r),
        "F": (),
        "G": (),
    }[family]


@pytest.mark.parametrize("rs", TYPES, ids=[rs.name for rs in TYPES])
def test_center_table(rs):
    assert full_discriminant(rs).invariant_factors == center_table(rs.family, rs.rank)


def test_quotient_examples():
    a2, d5 = build_root_system("A", 2), build_root_system("D", 5)
    assert quotient(coweight_lattice(a2), root_lattice(a2), a2).invariant_factors == (3,)
    assert quotient(coweight_lattice(d5), root_lattice(d5), d5).invariant_factors == (4,)
    d4 = build_root_system("D", 4)
    assert lattice_index(dual_lattice(root_lattice(d4)), root_lattice(d4)) == 4


def test_b3_quotients():
    b3 = build_root_system("B", 3)
    assert quotient(coweight_lattice(b3), coroot_lattice(b3), b3).invariant_factors == (2,)
    # the weight lattice over the coroot lattice is cyclic of order 4, not Z2 + Z2
    assert quotient(weight_lattice(b3), coroot_lattice(b3), b3).invariant_factors == (4,)


def test_dual_lattices():
    a1 = build_root_system("A", 1)
    assert dual_lattice(root_lattice(a1)).basis == ((Fraction(1, 2),),)
    e8 = build_root_system("E", 8)
    assert dual_lattice(root_lattice(e8)).same_span(root_lattice(e8))


@pytest.mark.parametrize("rs", TYPES, ids=[rs.name for rs in TYPES])
def test_double_dual_and_chain(rs):
    for lat in (root_lattice(rs), coroot_lattice(rs), coweight_lattice(rs)):
        assert dual_lattice(dual_lattice(lat)).same_span(lat)
    assert coweight_lattice(rs).contains_lattice(coroot_lattice(rs))


def test_langlands_dual_examples():
    assert langlands_dual_form(group_form("SU(5)")).name == "SU(5)/Z5"
    assert langlands_dual_form(group_form("Sp(2)")).name == "SO(5)"
    assert langlands_dual_form(group_form("E8")).name == "E8"
    assert langlands_dual_form(group_form("SU(4)/Z2")).name == "SU(4)/Z2"


@pytest.mark.parametrize("rs", all_types(8), ids=[rs.name for rs in all_types(8)])
def test_center_and_fundamental_group_swap(rs):
    for g in intermediate_forms(rs):
        d = langlands_dual_form(g)
        assert g.center.invariant_factors == d.fundamental_group.invariant_factors
        assert g.fundamental_group.invariant_factors == d.center.invariant_factors


def test_miniscule_weight_examples():
    a2 = build_root_system("A", 2)
    m = miniscule_weights(simply_connected(a2))
    assert sorted(a2.norm(w) for w in m) == [0, Fraction(2, 3), Fraction(2, 3)]
    assert miniscule_weights(simply_connected(build_root_system("E", 8))) == [(0,) * 8]
    e7 = build_root_system("E", 7)
    assert sorted(e7.norm(w) for w in miniscule_weights(simply_connected(e7))) == [0, Fraction(3, 2)]
    for r in range(4, 9):
        dr = build_root_system("D", r)
        norms = sorted(dr.norm(w) for w in miniscule_weights(simply_connected(dr)))
        assert norms == sorted([0, 1, Fraction(r, 4), Fraction(r, 4)])


@pytest.mark.parametrize("rs", TYPES, ids=[rs.name for rs in TYPES])
def test_miniscule_weights_pair_to_unit(rs):
    ms = miniscule_weights(simply_connected(rs))
    assert len(ms) == full_discriminant(rs).order
    assert all(is_miniscule(rs, w) for w in ms)


def test_minuscule_diagrams():
    def nodes(f, r):
        return minuscule_diagram_check(build_root_system(f, r))

    assert nodes("A", 3) == {1, 2, 3}
    assert nodes("E", 8) == set()
    assert nodes("D", 4) == {1, 3, 4}
    assert nodes("B", 4) == {4}
    assert nodes("C", 4) == {1}
    assert len(nodes("E", 6)) == 2 and len(nodes("E", 7)) == 1
    assert nodes("F", 4) == set() and nodes("G", 2) == set()


def test_fourier_of_delta_is_constant():
    a = full_discriminant(build_root_system("A", 2))
    delta = [CycScalar.one() if i == a.zero() else CycScalar.zero() for i in range(a.order)]
    assert all(x == 1 for x in finite_fourier(a, delta))


@pytest.mark.parametrize("r", [1, 2, 3, 5])
def test_fourier_inversion(r):
    a = full_discriminant(build_root_system("A", r))
    f = [phase(Fraction(k, 7)) * (k + 1) for k in range(a.order)]
    twice = finite_fourier(a, finite_fourier(a, f))
    assert twice == [f[a.neg(i)] * a.order for i in range(a.order)]
    assert inverse_fourier(a, finite_fourier(a, f)) == f


def test_fourier_of_quadratic_phase():
    a2 = build_root_system("A", 2)
    a = full_discriminant(a2)
    fhat = finite_fourier(a, quadratic_phase(a))
    # the prefactor is sqrt|Z|, which is what summing a shifted Gauss sum gives
    for v in range(a.order):
        expected = fold_sqrt(a.order) * phase(-a.exact_norm(v)) * phase(Fraction(a2.rank, 4))
        assert fhat[v] == expected


def test_poisson_examples():
    a5 = build_root_system("A", 5)
    a = full_discriminant(a5)
    f = quadratic_phase(a)
    g = group_form("SU(6)/Z2")
    sub = [i for i, v in enumerate(a.reps) if g.ell.contains(v)]
    assert len(sub) == 2
    assert poisson_check(a, sub, f)
    assert poisson_check(a, [a.zero()], f)
    assert poisson_check(a, range(a.order), f)
    with pytest.raises(ValueError):
        poisson_check(a, [a.zero(), 1], f)


@pytest.mark.parametrize("r", range(1, 8))
def test_poisson_every_subgroup(r):
    a = full_discriminant(build_root_system("A", r))
    f = quadratic_phase(a)
    for sub in subgroups(a):
        assert poisson_check(a, sub, f)


@given(st.sampled_from(all_types(8)), st.data())
def test_quotient_group_law(rs, data):
    a = full_discriminant(rs)
    i = data.draw(st.integers(0, a.order - 1))
    j = data.draw(st.integers(0, a.order - 1))
    s = a.add(i, j)
    assert a.add(s, a.neg(j)) == i
    # norm(u + v) = norm(u) + norm(v) + 2 (u|v) mod 2
    p = a.require_pairing()
    n = a.require_norm()
    assert (n[s] - n[i] - n[j] - 2 * p[i][j]) % 2 == 0
    assert p[i][j] == p[j][i]
    # another representative of the same coset has the same norm mod 2
    shift = a.sub.generators[data.draw(st.integers(0, rs.rank - 1))]
    other = tuple(x + y for x, y in zip(a.reps[i], shift))
    assert a.index_of(other) == i
    assert (a.sup.norm(other) - a.exact_norm(i)) % 2 == 0


def test_group_form_parsing_and_errors():
    assert group_form("SU(6)/Z2").center_order == 3
    assert adjoint(build_root_system("A", 3)).fundamental_group.order == 4
    for bad in ["SU(6)/Z4", "Foo(3)", "SU(1)", "Spin(2)"]:
        with pytest.raises(ValueError):
            group_form(bad)
