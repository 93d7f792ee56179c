"""Commutative symmetric polynomial evaluation and combinatorial oracles.

The evaluation routines work on complex points and are used by the spectral
formulas; the Kostka and Littlewood-Richardson counters are independent
backtracking enumerations kept free of any symmetric-function algebra so
they can serve as oracles for the operator routes.
"""

from __future__ import annotations

import numpy as np

from .partitions import contains, length, normalize, part, size, transpose


# ---------------------------------------------------------------------------
# evaluations at complex points
# ---------------------------------------------------------------------------

def elementary_eval(r: int, xs) -> complex:
    """e_r at the given points; e_0 = 1 and e_r = 0 for r > len(xs)."""
    if r < 0:
        return 0j
    coeffs = [1 + 0j] + [0j] * r
    for x in xs:
        for j in range(min(r, len(coeffs) - 1), 0, -1):
            coeffs[j] += x * coeffs[j - 1]
    return coeffs[r]


def complete_eval(r: int, xs) -> complex:
    """h_r at the given points via h_r(x_1..x_m) = h_r(..x_{m-1}) + x_m h_{r-1}(x)."""
    if r < 0:
        return 0j
    h = [1 + 0j] + [0j] * r
    for x in xs:
        for j in range(1, r + 1):
            h[j] += x * h[j - 1]
    return h[r]


def schur_eval(p, xs) -> complex:
    """Schur polynomial at complex points, by the h-determinant.

    Safe at coincident points (no ratio of alternants); s_empty = 1 and the
    value is 0 when the partition has more rows than there are points.
    """
    m = length(p)
    if m == 0:
        return 1 + 0j
    if m > len(xs):
        return 0j
    mat = np.empty((m, m), dtype=complex)
    cache = {}
    for i in range(m):
        for j in range(m):
            r = p[i] - (i + 1) + (j + 1)
            if r not in cache:
                cache[r] = complete_eval(r, xs)
            mat[i, j] = cache[r]
    return complex(np.linalg.det(mat))


def schur_eval_dual(p, xs) -> complex:
    """Schur polynomial by the e-determinant (transpose route)."""
    pt = transpose(p)
    m = length(pt)
    if m == 0:
        return 1 + 0j
    mat = np.empty((m, m), dtype=complex)
    cache = {}
    for i in range(m):
        for j in range(m):
            r = pt[i] - (i + 1) + (j + 1)
            if r not in cache:
                cache[r] = elementary_eval(r, xs)
            mat[i, j] = cache[r]
    return complex(np.linalg.det(mat))


def vandermonde(xs) -> complex:
    v = 1 + 0j
    xs = list(xs)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            v *= xs[i] - xs[j]
    return v


# ---------------------------------------------------------------------------
# tableau counting
# ---------------------------------------------------------------------------

def kostka(shape, content) -> int:
    """Number of semistandard tableaux of the given shape and content.

    content is any sequence of nonnegative integers; entry i is used
    content[i-1] times.
    """
    shape = normalize(shape)
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content must be nonnegative")
    if size(shape) != sum(content):
        raise ValueError("|shape| must equal |content|")
    if not shape:
        return 1

    rows = len(shape)
    filling = [[0] * shape[i] for i in range(rows)]
    remaining = list(content)
    cells = [(i, j) for i in range(rows) for j in range(shape[i])]

    def backtrack(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = max(lo, filling[i][j - 1])
        if i > 0:
            lo = max(lo, filling[i - 1][j] + 1)
        total = 0
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            filling[i][j] = v
            remaining[v - 1] -= 1
            total += backtrack(pos + 1)
            remaining[v - 1] += 1
            filling[i][j] = 0
        return total

    return backtrack(0)


def littlewood_richardson(lam, mu, nu) -> int:
    """LR coefficient c_{lam,mu}^{nu}: count LR skew tableaux of shape nu/lam.

    Fillings of nu/lam with content mu, semistandard, whose reverse reading
    word (right to left along rows, rows top to bottom) is a lattice word.
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if size(lam) + size(mu) != size(nu):
        return 0
    if not contains(nu, lam):
        return 0
    if not mu:
        return 1

    rows = len(nu)
    m = len(mu)
    filling = [[0] * part(nu, i + 1) for i in range(rows)]
    remaining = list(mu)
    counts = [0] * (m + 1)  # prefix multiplicities along the reverse word
    cells = []
    for i in range(rows):
        for j in range(part(nu, i + 1) - 1, part(lam, i + 1) - 1, -1):
            cells.append((i, j))
    # cells are listed in reverse reading order, so the lattice condition can
    # be checked incrementally as we fill.

    def backtrack(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        for v in range(1, m + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            # row weakly increasing: right neighbour (already filled) bounds v
            if j + 1 < part(nu, i + 1) and filling[i][j + 1] < v:
                continue
            # column strictly increasing: cell above is filled when it is in
            # the skew shape
            if i > 0 and part(lam, i) <= j < part(nu, i):
                if filling[i - 1][j] >= v:
                    continue
            filling[i][j] = v
            remaining[v - 1] -= 1
            counts[v] += 1
            total += backtrack(pos + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            filling[i][j] = 0
        return total

    return backtrack(0)
