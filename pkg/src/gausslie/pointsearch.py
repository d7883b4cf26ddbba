"""Fincke-Pohst lattice point search (numba kernels).

Points are integer coefficient vectors ``k`` with respect to some basis whose
Gram matrix is ``Q``.  A search returns every ``k`` with
``(k - c)^T Q (k - c) <= bound`` for a real center ``c``; a small relative
slack is added so float rounding can only add boundary points, never drop
them.  Callers that need exactness re-check candidates with rationals.
"""

from __future__ import annotations

import math

import numba
import numpy as np

_SLACK = 1e-9


@numba.njit(cache=True)
def _decompose(gram):
    r = gram.shape[0]
    q = gram.copy()
    for i in range(r):
        for j in range(i + 1, r):
            q[j, i] = q[i, j]
            q[i, j] = q[i, j] / q[i, i]
        for k in range(i + 1, r):
            for m in range(k, r):
                q[k, m] -= q[k, i] * q[i, m]
    return q


@numba.njit(cache=True)
def _set_range(q, c, x, ub, rem, shift, i):
    t = rem[i]
    if t < 0.0:
        t = 0.0
    z = math.sqrt(t / q[i, i])
    ctr = c[i] - shift[i]
    x[i] = math.ceil(ctr - z)
    ub[i] = math.floor(ctr + z)


@numba.njit(cache=True)
def _descend(q, c, x, rem, shift, i):
    y = x[i] - c[i] + shift[i]
    rem[i - 1] = rem[i] - q[i, i] * y * y
    s = 0.0
    for j in range(i, q.shape[0]):
        s += q[i - 1, j] * (x[j] - c[j])
    shift[i - 1] = s


@numba.njit(cache=True)
def _collect(gram, center, bound, capacity):
    r = gram.shape[0]
    q = _decompose(gram)
    out = np.zeros((capacity, r), dtype=np.int64)
    x = np.zeros(r, dtype=np.int64)
    ub = np.zeros(r, dtype=np.int64)
    rem = np.zeros(r)
    shift = np.zeros(r)
    rem[r - 1] = bound
    i = r - 1
    _set_range(q, center, x, ub, rem, shift, i)
    n = 0
    while True:
        if x[i] > ub[i]:
            i += 1
            if i == r:
                break
            x[i] += 1
            continue
        if i == 0:
            if n < capacity:
                out[n, :] = x
            n += 1
            x[0] += 1
            continue
        _descend(q, center, x, rem, shift, i)
        i -= 1
        _set_range(q, center, x, ub, rem, shift, i)
    return out, n


@numba.njit(cache=True)
def _shell_counts(gram, int_gram, labels_map, moduli, max_key):
    """Histogram of exact keys ``k^T int_gram k`` (``<= max_key``) per coset label.

    The innermost coordinate is swept in a closed loop: with the other
    coordinates fixed the key is ``g00 x0^2 + 2 b x0 + c`` and each label
    component is affine in ``x0``, so a point costs O(1).
    """
    r = gram.shape[0]
    nm = moduli.shape[0]
    q = _decompose(gram)
    nlab = 1
    for d in moduli:
        nlab *= d
    counts = np.zeros((nlab, max_key + 1), dtype=np.int64)
    center = np.zeros(r)
    x = np.zeros(r, dtype=np.int64)
    ub = np.zeros(r, dtype=np.int64)
    rem = np.zeros(r)
    shift = np.zeros(r)
    part = np.zeros(nm, dtype=np.int64)
    rem[r - 1] = max_key * (1.0 + 1e-9) + 1e-9
    i = r - 1
    _set_range(q, center, x, ub, rem, shift, i)
    g00 = int_gram[0, 0]
    while True:
        if x[i] > ub[i]:
            i += 1
            if i == r:
                break
            x[i] += 1
            continue
        if i == 0:
            b = 0
            c = 0
            for a in range(1, r):
                b += int_gram[0, a] * x[a]
                s = 0
                for e in range(1, r):
                    s += int_gram[a, e] * x[e]
                c += x[a] * s
            for a in range(nm):
                s = 0
                for e in range(1, r):
                    s += labels_map[a, e] * x[e]
                part[a] = s
            for x0 in range(x[0], ub[0] + 1):
                key = g00 * x0 * x0 + 2 * b * x0 + c
                if key <= max_key:
                    lab = 0
                    for a in range(nm):
                        s = (part[a] + labels_map[a, 0] * x0) % moduli[a]
                        if s < 0:
                            s += moduli[a]
                        lab = lab * moduli[a] + s
                    counts[lab, key] += 1
            x[0] = ub[0] + 1
            continue
        _descend(q, center, x, rem, shift, i)
        i -= 1
        _set_range(q, center, x, ub, rem, shift, i)
    return counts


def ball_volume(r: int, radius: float) -> float:
    return math.pi ** (r / 2) / math.gamma(r / 2 + 1) * radius**r


def points_in_ellipsoid(gram, center, bound: float) -> np.ndarray:
    """All integer ``k`` with ``(k-c)^T gram (k-c) <= bound`` (plus float slack)."""
    g = np.ascontiguousarray(np.asarray(gram, dtype=np.float64))
    c = np.ascontiguousarray(np.asarray(center, dtype=np.float64))
    if g.shape[0] != g.shape[1] or c.shape != (g.shape[0],):
        raise ValueError("gram must be square and match the center's dimension")
    if bound < 0:
        return np.zeros((0, g.shape[0]), dtype=np.int64)
    b = float(bound) * (1 + _SLACK) + _SLACK
    r = g.shape[0]
    covol = math.sqrt(max(np.linalg.det(g), 1e-300))
    # the ball volume is only a guide; an overflow triggers one exact rerun
    estimate = 2.0 * ball_volume(r, math.sqrt(b)) / covol
    capacity = int(min(estimate + 1024, 2e7))
    while True:
        out, n = _collect(g, c, b, capacity)
        if n <= capacity:
            return out[:n]
        capacity = n


def shell_counts(int_gram, labels_map, moduli, max_key: int) -> np.ndarray:
    """Count lattice points by exact scaled norm.

    ``int_gram`` is an integer Gram matrix (a scaled rational one); the result ``counts[label, key]``
    counts points ``k`` with ``k^T int_gram k == key`` whose label
    ``(labels_map @ k) mod moduli`` (mixed radix) equals ``label``.
    """
    ig = np.ascontiguousarray(np.asarray(int_gram, dtype=np.int64))
    lm = np.ascontiguousarray(np.asarray(labels_map, dtype=np.int64).reshape(-1, ig.shape[0]))
    mod = np.ascontiguousarray(np.asarray(moduli, dtype=np.int64).reshape(-1))
    return _shell_counts(ig.astype(np.float64), ig, lm, mod, int(max_key))
