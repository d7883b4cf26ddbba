from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from gausslie import intlinalg as la

small = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 4).flatmap(square))
def test_smith_normal_form(a):
    u, s, v = la.smith_normal_form(a)
    assert la.matmul(la.matmul(u, a), v) == s
    assert round(abs(np.linalg.det(np.array(u, dtype=float)))) == 1
    assert round(abs(np.linalg.det(np.array(v, dtype=float)))) == 1
    diag = [s[i][i] for i in range(len(s))]
    for i in range(len(s)):
        for j in range(len(s)):
            if i != j:
                assert s[i][j] == 0
    nonzero = [d for d in diag if d]
    assert all(d > 0 for d in nonzero)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert abs(la.det(a)) == np.prod([Fraction(d) for d in diag])


@given(st.integers(1, 4).flatmap(square))
def test_inverse_round_trip(a):
    if la.det(a) == 0:
        return
    inv = la.inverse(a)
    assert la.matmul(a, inv) == la.identity(len(a))


def test_lll_keeps_the_lattice():
    gram = [[Fraction(x) for x in row] for row in [[10, 7, 3], [7, 6, 2], [3, 2, 5]]]
    t = la.lll_transform(gram)
    assert abs(la.det(t)) == 1
    reduced = la.matmul(la.matmul(la.transpose(t), gram), t)
    assert la.det(reduced) == la.det(gram)
    assert reduced[0][0] <= gram[0][0]
