"""Exact rational / integer matrix helpers.

Matrices are plain lists of rows.  Entries are ``Fraction`` for the rational
routines and ``int`` for the integer ones; nothing here touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[Fraction]]


def frac_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def dot(u: Sequence, gram: Sequence[Sequence], v: Sequence) -> Fraction:
    """Bilinear form ``u^T gram v``."""
    return sum((ui * g * vj for ui, row in zip(u, gram) for g, vj in zip(row, v)), Fraction(0))


def columns(a: Sequence[Sequence]) -> list[list]:
    return transpose(a)


def from_columns(cols: Sequence[Sequence]) -> list[list]:
    return transpose(cols)


def inverse(a: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse over Q.  Raises ``ValueError`` if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def det(a: Sequence[Sequence]) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    d = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        p = m[c][c]
        d *= p
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return d


def is_integral(a: Sequence[Sequence]) -> bool:
    return all(Fraction(x).denominator == 1 for row in a for x in row)


def lcm_denominator(a: Sequence[Sequence]) -> int:
    d = 1
    for row in a:
        for x in row:
            q = Fraction(x).denominator
            d = d * q // gcd(d, q)
    return d


def hermite_basis(gens: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Return a basis (list of vectors) for the Z-span of rational ``gens``.

    Column-style Hermite reduction on the integer matrix obtained by clearing
    denominators.  The result is lower triangular in the sense that the k-th
    basis vector has zeros in coordinates ``< k``.
    """
    den = lcm_denominator(gens) if gens else 1
    vecs = [[int(Fraction(x) * den) for x in g] for g in gens]
    basis: list[list[int]] = []
    for k in range(dim):
        pool = [v for v in vecs if v[k] != 0]
        rest = [v for v in vecs if v[k] == 0]
        while len(pool) > 1:
            pool.sort(key=lambda v: abs(v[k]))
            head = pool[0]
            new_pool = [head]
            for v in pool[1:]:
                q = v[k] // head[k]
                w = [a - q * b for a, b in zip(v, head)]
                if w[k] != 0:
                    new_pool.append(w)
                elif any(w):
                    rest.append(w)
            pool = new_pool
        if pool:
            head = pool[0]
            if head[k] < 0:
                head = [-a for a in head]
            basis.append(head)
        vecs = rest
    if len(basis) != dim:
        raise ValueError("generators do not span a full-rank lattice")
    # reduce entries above the pivots to keep the basis small
    for k in range(dim):
        for j in range(k):
            q = basis[j][k] // basis[k][k]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[k])]
    return [[Fraction(a, den) for a in v] for v in basis]


def smith_normal_form(a: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form ``D = U A V`` of a square integer matrix.

    Returns ``(U, D, V)`` with ``U``, ``V`` unimodular and ``D`` diagonal with
    non-negative entries ``d_1 | d_2 | ...``.
    """
    n = len(a)
    m = [[int(x) for x in row] for row in a]
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row_dst += f * row_src
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in m:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    for t in range(n):
        while True:
            nz = [(abs(m[i][j]), i, j) for i in range(t, n) for j in range(t, n) if m[i][j] != 0]
            if not nz:
                break
            _, pi, pj = min(nz)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = m[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = m[i][t] // p
                if q:
                    add_row(t, i, -q)
                if m[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = m[t][j] // p
                if q:
                    add_col(t, j, -q)
                if m[t][j]:
                    dirty = True
            if dirty:
                continue
            # divisibility: p must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, n) if m[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
    return u, m, v


def int_inverse(a: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix."""
    inv = inverse(a)
    if not is_integral(inv):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def lll_transform(gram: Sequence[Sequence], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """Unimodular ``U`` such that the basis ``B U`` is LLL-reduced, where
    ``gram`` is the (rational, positive definite) Gram matrix of ``B``.

    Works on the Gram matrix alone; columns of ``U`` are the new generators
    in terms of the old ones.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # column j = new b_j

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bb = [Fraction(0)] * n
        r = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i):
                r[i][j] = a[i][j] - sum((mu[j][m] * r[i][m] for m in range(j)), Fraction(0))
                mu[i][j] = r[i][j] / bb[j]
            bb[i] = a[i][i] - sum((mu[i][m] * r[i][m] for m in range(i)), Fraction(0))
        return mu, bb

    def swap(k):
        for row in u:
            row[k], row[k - 1] = row[k - 1], row[k]
        a[k], a[k - 1] = a[k - 1], a[k]
        for row in a:
            row[k], row[k - 1] = row[k - 1], row[k]

    def reduce(k, j, q):
        # exact Gram update for b_k <- b_k - q b_j
        akk = a[k][k] - 2 * q * a[k][j] + q * q * a[j][j]
        row = [a[k][m] - q * a[j][m] for m in range(n)]
        row[k] = akk
        for m in range(n):
            a[k][m] = row[m]
            a[m][k] = row[m]
        for r_ in u:
            r_[k] -= q * r_[j]

    k = 1
    mu, bb = gso()
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                reduce(k, j, q)
                mu, bb = gso()
        if bb[k] >= (delta - mu[k][k - 1] ** 2) * bb[k - 1]:
            k += 1
        else:
            swap(k)
            mu, bb = gso()
            k = max(k - 1, 1)
    return u
