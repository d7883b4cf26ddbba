import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gausslie.cyclo import CycScalar, RadScalar, fold_sqrt, format_angle, normalize, phase, to_complex

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=12)


def scalars():
    term = st.tuples(rationals, st.fractions(min_value=-3, max_value=3, max_denominator=5))
    return st.lists(term, min_size=0, max_size=4).map(
        lambda ts: sum((phase(q) * c for q, c in ts), CycScalar.zero())
    )


def test_phase_examples():
    assert phase(1) == -1
    assert phase(Fraction(1, 2)) ** 2 == -1
    assert phase(0) + phase(Fraction(2, 3)) + phase(Fraction(4, 3)) == 0


def test_fold_sqrt_examples():
    assert fold_sqrt(4) == 2
    assert fold_sqrt(2) == phase(Fraction(1, 4)) + phase(Fraction(-1, 4))
    assert abs(to_complex(fold_sqrt(5)) - math.sqrt(5)) < 1e-14


@pytest.mark.parametrize("m", range(1, 101))
def test_fold_sqrt_squares(m):
    assert fold_sqrt(m) * fold_sqrt(m) == m
    assert normalize(RadScalar(CycScalar.one(), m)) * normalize(RadScalar(CycScalar.one(), m)) == m


def test_normalize_examples():
    assert normalize(RadScalar(CycScalar.one(), 8, 2)) == fold_sqrt(2)
    assert normalize(RadScalar(phase(Fraction(1, 2)), 3, 3) * RadScalar(CycScalar.one(), 3)) == phase(Fraction(1, 2))
    assert RadScalar(CycScalar.one(), 12) == RadScalar(CycScalar.rational(2), 3)


def test_string_forms():
    assert format_angle(2) == "2πi"
    assert format_angle(Fraction(1, 4)) == "πi/4"
    assert format_angle(Fraction(-3, 2)) == "-3πi/2"
    assert str(RadScalar(CycScalar.zero(), 2)) == "0"


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(scalars(), scalars())
def test_complex_embedding_is_a_homomorphism(a, b):
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9
    assert abs(to_complex(a + b) - to_complex(a) - to_complex(b)) < 1e-9
    assert abs(to_complex(a.conj()) - to_complex(a).conjugate()) < 1e-9


@given(rationals)
def test_phase_matches_exp(q):
    assert abs(to_complex(phase(q)) - cmath.exp(1j * math.pi * float(q))) < 1e-12


@given(scalars())
def test_json_round_trip(a):
    assert CycScalar.from_json(a.to_json()) == a
    r = RadScalar(a, 6, 5)
    assert RadScalar.from_json(r.to_json()) == r
