"""Spectral route: Bethe roots and vectors, the modular S-matrix, the
Verlinde sum and the Vafa-Intriligator-type sum for Gromov-Witten numbers.

Everything here is floating point at z = 1 (weight side) and q = 1 (word
side); formal-variable degrees are recovered from weight constraints.  Sums
over the spectrum use a fixed pairwise reduction so results are reproducible
independently of any parallel chunking.
"""

from __future__ import annotations

import cmath
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import boson, fermion
from .partitions import (
    AffineWeight,
    length,
    part,
    partitions_in_box,
    size,
    transpose,
    weights_of_level,
    word_from_partition,
)
from .states import WEIGHT, WORD, State
from .symfunc import schur_eval

DEFAULT_TOL = 1e-6


class ResidualError(ArithmeticError):
    """A value that should be integral failed its rounding tolerance."""


def round_int(value: complex, tol: float = DEFAULT_TOL) -> int:
    nearest = round(value.real)
    residual = abs(value - nearest)
    if residual > tol:
        raise ResidualError("residual %.3e exceeds %.1e for %r" % (residual, tol, value))
    return int(nearest)


def tree_sum(values):
    """Deterministic pairwise summation (order independent of chunking)."""
    vals = list(values)
    if not vals:
        return 0j
    while len(vals) > 1:
        vals = [
            vals[i] + vals[i + 1] if i + 1 < len(vals) else vals[i]
            for i in range(0, len(vals), 2)
        ]
    return vals[0]


def parallel_tree_sum(fn, items, workers: int = 1):
    """Map then tree-sum; the reduction order is fixed by the item order."""
    items = list(items)
    if workers and workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(fn, items))
    else:
        values = [fn(it) for it in items]
    return tree_sum(values)


# ---------------------------------------------------------------------------
# Bethe roots
# ---------------------------------------------------------------------------

def imap(p, m: int):
    """Strictly decreasing half-integers I_j = p_j + (m+1)/2 - j, j = 1..m."""
    return tuple(part(p, j) + (m + 1) / 2.0 - j for j in range(1, m + 1))


@dataclass(frozen=True)
class BosonBetheRoots:
    n: int
    k: int
    sigma: tuple
    indices: tuple
    points: tuple


@dataclass(frozen=True)
class FermionBetheRoots:
    n: int
    k: int
    sigma: tuple
    indices: tuple
    points: tuple


def bethe_roots_boson(n: int, k: int):
    """One root tuple per partition in the (n-1) x k box, at z = 1.

    x_j = zeta^(|sigma|/n) zeta^(I_j) with I = imap(sigma^t, k) and
    zeta = exp(2 pi i / (n + k)).
    """
    out = []
    for sigma in partitions_in_box(n - 1, k):
        idx = imap(transpose(sigma), k)
        shift = size(sigma) / n
        pts = tuple(
            cmath.exp(2j * math.pi * (shift + i) / (n + k)) for i in idx
        )
        out.append(BosonBetheRoots(n, k, sigma, idx, pts))
    return out


def bethe_roots_fermion(n: int, k: int):
    """One root tuple per partition in the n x k box, at q = 1: y_j = zeta^(I_j)."""
    out = []
    for sigma in partitions_in_box(n, k):
        idx = imap(transpose(sigma), k)
        pts = tuple(cmath.exp(2j * math.pi * i / (n + k)) for i in idx)
        out.append(FermionBetheRoots(n, k, sigma, idx, pts))
    return out


def bethe_vector_boson(roots: BosonBetheRoots) -> dict:
    """Components s_{transpose(boxed diagram)}(x^-1) over the level-k weights."""
    inv = [1 / x for x in roots.points]
    vec = {}
    for w in weights_of_level(roots.n, roots.k):
        vec[w] = schur_eval(transpose(w.boxed_partition()), inv)
    return vec


def bethe_vector_fermion(roots: FermionBetheRoots) -> dict:
    """Components s_p(y^-1) over partitions in the k x n box."""
    inv = [1 / y for y in roots.points]
    return {p: schur_eval(p, inv) for p in partitions_in_box(roots.k, roots.n)}


# ---------------------------------------------------------------------------
# operator matrices at numeric z / q
# ---------------------------------------------------------------------------

def boson_basis(n: int, k: int):
    return weights_of_level(n, k)


def fermion_basis(k: int, N: int):
    return [word_from_partition(p, k, N) for p in partitions_in_box(k, N - k)]


def operator_matrix(apply_fn, labels, kind: str, value: complex = 1.0):
    """Dense matrix of a State operator in the given ordered basis."""
    index = {lb: i for i, lb in enumerate(labels)}
    mat = np.zeros((len(labels), len(labels)), dtype=complex)
    for j, lb in enumerate(labels):
        image = apply_fn(State.basis(kind, lb))
        for lb2, coeff in image.items():
            mat[index[lb2], j] = coeff.evaluate(value)
    return mat


def boson_elementary_matrix(r: int, n: int, k: int, z: complex = 1.0):
    return operator_matrix(
        lambda s: boson.apply_elementary(r, s), boson_basis(n, k), WEIGHT, z
    )


def fermion_elementary_matrix(r: int, k: int, N: int, q: complex = 1.0):
    return operator_matrix(
        lambda s: fermion.apply_elementary(r, s), fermion_basis(k, N), WORD, q
    )


def verify_transfer_eigen(roots: BosonBetheRoots, u: complex) -> float:
    """Max residual of the transfer-matrix eigenvalue equation at z = 1."""
    n, k = roots.n, roots.k
    for x in roots.points:
        if abs(1 - u * x) < 1e-12:
            raise ZeroDivisionError("u hits a pole of the eigenvalue")
    labels = boson_basis(n, k)
    vec = bethe_vector_boson(roots)
    b = np.array([vec[w] for w in labels])
    tu = np.zeros((len(labels), len(labels)), dtype=complex)
    for r in range(0, n + 1):
        tu += (u ** r) * boson_elementary_matrix(r, n, k)
    ek = np.prod(roots.points)
    scalar = 1 + (-1) ** k * ek * u ** (n + k)
    for x in roots.points:
        scalar /= 1 - u * x
    return float(np.max(np.abs(tu @ b - scalar * b)))


# ---------------------------------------------------------------------------
# modular S-matrix
# ---------------------------------------------------------------------------

def _rho(n: int):
    return [(n + 1) / 2.0 - i for i in range(1, n + 1)]


def _shifted_vector(p, n: int):
    """p + rho as an n-vector with the traceless normalisation of p."""
    mean = size(p) / n
    rho = _rho(n)
    return [part(p, i) - mean + rho[i - 1] for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def smatrix(n: int, k: int):
    """(labels, S) with S the unitary symmetric matrix of the level-k theory.

    Entries follow the Weyl-group sum over S_n; labels are the level-k
    weights ordered by their finite partitions.
    """
    labels = tuple(weights_of_level(n, k))
    vecs = np.array(
        [_shifted_vector(w.finite_partition(), n) for w in labels], dtype=float
    )
    pref = cmath.exp(1j * math.pi * n * (n - 1) / 4.0) / math.sqrt(
        n * (k + n) ** (n - 1)
    )
    total = np.zeros((len(labels), len(labels)), dtype=complex)
    for perm in itertools.permutations(range(n)):
        sign = boson._perm_sign(perm)
        permuted = vecs[:, perm]
        total += sign * np.exp(-2j * math.pi / (k + n) * (vecs @ permuted.T))
    return labels, pref * total


def smatrix_sl2(k: int):
    """Closed form for rank 2: sqrt(2/(k+2)) sin(pi (a+1)(b+1) / (k+2))."""
    m = k + 1
    mat = np.zeros((m, m), dtype=complex)
    for a in range(m):
        for b in range(m):
            mat[a, b] = math.sqrt(2.0 / (k + 2)) * math.sin(
                math.pi * (a + 1) * (b + 1) / (k + 2)
            )
    return mat


def s0_sin_product(n: int, k: int, sigma) -> float:
    """S_{0 sigma} as the positive-root sine product."""
    prod = 1.0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            prod *= 2 * math.sin(
                math.pi * (part(sigma, i) - part(sigma, j) + j - i) / (k + n)
            )
    return prod / math.sqrt(n * (k + n) ** (n - 1))


def tmatrix(n: int, k: int):
    """Diagonal modular-anomaly matrix in the smatrix basis order."""
    labels, _ = smatrix(n, k)
    rho = _rho(n)
    rho_sq = sum(v * v for v in rho)
    diag = []
    for w in labels:
        vec = _shifted_vector(w.finite_partition(), n)
        anomaly = sum(v * v for v in vec) / (2.0 * (k + n)) - rho_sq / (2.0 * n)
        diag.append(cmath.exp(2j * math.pi * anomaly))
    return labels, np.diag(diag)


def charge_conjugation_matrix(n: int, k: int):
    labels, _ = smatrix(n, k)
    index = {w: i for i, w in enumerate(labels)}
    mat = np.zeros((len(labels), len(labels)))
    for j, w in enumerate(labels):
        mat[index[w.star()], j] = 1.0
    return mat


# ---------------------------------------------------------------------------
# Verlinde and Vafa-Intriligator sums
# ---------------------------------------------------------------------------

def verlinde_coeff(
    a: AffineWeight,
    b: AffineWeight,
    c: AffineWeight,
    tol: float = DEFAULT_TOL,
    workers: int = 1,
) -> int:
    """Fusion coefficient from the S-matrix sum, rounded with a residual check."""
    n, k = a.n, a.level
    if not (b.n == c.n == n and b.level == c.level == k):
        raise ValueError("weights must share rank and level")
    labels, S = smatrix(n, k)
    index = {w: i for i, w in enumerate(labels)}
    ia, ib, ic = index[a], index[b], index[c.star()]

    def term(s):
        # row 0 is the vacuum: the empty finite partition sorts first
        return S[ia, s] * S[ib, s] * S[ic, s] / S[0, s]

    total = parallel_tree_sum(term, range(len(labels)), workers)
    return round_int(total, tol)


def verlinde_explicit_coeff(
    a: AffineWeight, b: AffineWeight, c: AffineWeight, tol: float = DEFAULT_TOL
) -> int:
    """The same coefficient through the character sum over the spectrum.

    Sum over sigma in the (n-1) x k box of
    s_a(zeta^-I) s_b(zeta^-I) s_c(zeta^I) |Van(zeta^I)|^2 zeta^{|sigma| w / n}
    with w = |a|+|b|-|c| and I = imap(sigma, n), divided by n (k+n)^(n-1).
    """
    n, k = a.n, a.level
    pa, pb, pc = (x.finite_partition() for x in (a, b, c))
    wdeg = size(pa) + size(pb) - size(pc)

    def term(sigma):
        idx = imap(sigma, n)
        pts = [cmath.exp(2j * math.pi * i / (k + n)) for i in idx]
        inv = [1 / p for p in pts]
        van = 1.0
        for i in range(n):
            for j in range(i + 1, n):
                van *= abs(pts[i] - pts[j]) ** 2
        phase = cmath.exp(2j * math.pi * size(sigma) * wdeg / (n * (k + n)))
        return (
            phase
            * schur_eval(pa, inv)
            * schur_eval(pb, inv)
            * schur_eval(pc, pts)
            * van
        )

    total = tree_sum(term(s) for s in partitions_in_box(n - 1, k))
    return round_int(total / (n * (k + n) ** (n - 1)), tol)


def bvi_coeff(lam, mu, nu, k: int, N: int, tol: float = DEFAULT_TOL, workers: int = 1):
    """(d, C): the degree-d Gromov-Witten invariant by the root-of-unity sum.

    C = N^-k sum over sigma in the k x n box of
    s_lam(zeta^I) s_mu(zeta^I) s_nu(zeta^-I) |Van(zeta^I)|^2 with
    I = imap(sigma, k); the third factor equals the complement form
    s_{nu-complement}(zeta^I) zeta^{-n |sigma|}.
    """
    n = N - k
    for p in (lam, mu, nu):
        if not (length(p) <= k and part(p, 1) <= n):
            raise ValueError("%r is not in the %dx%d box" % (p, k, n))
    excess = size(lam) + size(mu) - size(nu)
    if excess < 0 or excess % N:
        return (0, 0)
    d = excess // N

    def term(sigma):
        idx = imap(sigma, k)
        pts = [cmath.exp(2j * math.pi * i / N) for i in idx]
        inv = [1 / p for p in pts]
        van = 1.0
        for i in range(k):
            for j in range(i + 1, k):
                van *= abs(pts[i] - pts[j]) ** 2
        return (
            schur_eval(lam, pts)
            * schur_eval(mu, pts)
            * schur_eval(nu, inv)
            * van
        )

    total = parallel_tree_sum(term, partitions_in_box(k, n), workers)
    return (d, round_int(total / N ** k, tol))


# ---------------------------------------------------------------------------
# norms and orthogonality
# ---------------------------------------------------------------------------

def boson_norm_formula(roots: BosonBetheRoots) -> float:
    """n (n+k)^(n-1) / |Van|^2 with the Vandermonde as a sine product."""
    n, k = roots.n, roots.k
    van_sq = 1.0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            van_sq *= (
                2
                * math.sin(
                    math.pi
                    * (part(roots.sigma, i) - part(roots.sigma, j) + j - i)
                    / (k + n)
                )
            ) ** 2
    return n * (n + k) ** (n - 1) / van_sq


def bethe_norm_report(n: int, k: int) -> dict:
    """Compare measured boson norms with the closed form; record fermion norms."""
    report = {"n": n, "k": k}
    roots = bethe_roots_boson(n, k)
    vectors = [bethe_vector_boson(r) for r in roots]
    labels = boson_basis(n, k)
    arrays = [np.array([v[w] for w in labels]) for v in vectors]
    max_rel = 0.0
    for r, arr in zip(roots, arrays):
        measured = float(np.vdot(arr, arr).real)
        formula = boson_norm_formula(r)
        max_rel = max(max_rel, abs(measured - formula) / abs(formula))
    ortho = 0.0
    for i in range(len(arrays)):
        for j in range(i + 1, len(arrays)):
            ortho = max(ortho, abs(np.vdot(arrays[i], arrays[j])))
    report["boson_norm_max_rel_err"] = max_rel
    report["boson_orthogonality_max"] = ortho

    froots = bethe_roots_fermion(n, k)
    fbasis = partitions_in_box(k, n)
    farrays = []
    measured_norms = {}
    for r in froots:
        vec = bethe_vector_fermion(r)
        arr = np.array([vec[p] for p in fbasis])
        farrays.append(arr)
        measured_norms[r.sigma] = float(np.vdot(arr, arr).real)
    fortho = 0.0
    for i in range(len(farrays)):
        for j in range(i + 1, len(farrays)):
            fortho = max(fortho, abs(np.vdot(farrays[i], farrays[j])))
    report["fermion_orthogonality_max"] = fortho
    report["fermion_norms_measured"] = measured_norms
    return report
