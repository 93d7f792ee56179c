"""Fermionic lattice operators on 01-words and the quantum product.

Hard-core particles on a circle with N sites: a word of weight k lists the
occupied sites.  Creation/annihilation carry the usual fermionic signs; the
hop u_i moves a particle from site i to i+1 (sign-free for i < N, while the
wrap-around hop u_N contributes +q).  Schur polynomials in the hops define
the quantum product whose structure constants are the Gromov-Witten
invariants, q-graded by the curve degree.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .laurent import Laurent
from .partitions import (
    complement_word,
    normalize,
    part,
    partition_from_word,
    partitions_in_box,
    reverse_word,
    rot_word,
    size,
    transpose,
    word_from_partition,
)
from .states import WORD, State, apply_linear
from .boson import symbolic_det


# ---------------------------------------------------------------------------
# Clifford generators
# ---------------------------------------------------------------------------

def _sign_before(w, i: int) -> int:
    """(-1) to the number of particles strictly left of site i (1-based)."""
    return -1 if sum(w[: i - 1]) % 2 else 1


def apply_create(i: int, state: State) -> State:
    """psi*_i: occupy site i with sign (-1)^(particles before i)."""

    def rule(w):
        if w[i - 1] == 1:
            return []
        w2 = w[: i - 1] + (1,) + w[i:]
        return [(w2, Laurent.term(_sign_before(w, i)))]

    return apply_linear(state, rule)


def apply_annihilate(i: int, state: State) -> State:
    """psi_i: empty site i with sign (-1)^(particles before i)."""

    def rule(w):
        if w[i - 1] == 0:
            return []
        w2 = w[: i - 1] + (0,) + w[i:]
        return [(w2, Laurent.term(_sign_before(w, i)))]

    return apply_linear(state, rule)


def reduce_create_index(j: int, level: int, N: int):
    """Normalise a creation index to 1..N using psi*_{j+N} = -q e^{i pi K} psi*_j.

    level is the particle number of the state being acted on; the number
    operator acts after creation.  Returns (index, Laurent factor).
    """
    factor = Laurent.one()
    while j > N:
        j -= N
        factor = factor * Laurent.term(1 if level % 2 == 0 else -1, 1)
    while j < 1:
        j += N
        factor = factor * Laurent.term(1 if level % 2 == 0 else -1, -1)
    return j, factor


def reduce_annihilate_index(j: int, level: int, N: int):
    """Normalise an annihilation index using psi_{j-N} = -q e^{i pi K} psi_j."""
    factor = Laurent.one()
    while j < 1:
        j += N
        factor = factor * Laurent.term(1 if level % 2 == 0 else -1, 1)
    while j > N:
        j -= N
        factor = factor * Laurent.term(1 if level % 2 == 0 else -1, -1)
    return j, factor


def apply_create_extended(j: int, state: State, N: int) -> State:
    """Creation with quasi-periodic index reduction (level read per label)."""

    def rule(w):
        j0, factor = reduce_create_index(j, sum(w), N)
        if w[j0 - 1] == 1:
            return []
        w2 = w[: j0 - 1] + (1,) + w[j0:]
        return [(w2, factor * Laurent.term(_sign_before(w, j0)))]

    return apply_linear(state, rule)


def apply_annihilate_extended(j: int, state: State, N: int) -> State:
    def rule(w):
        j0, factor = reduce_annihilate_index(j, sum(w), N)
        if w[j0 - 1] == 0:
            return []
        w2 = w[: j0 - 1] + (0,) + w[j0:]
        return [(w2, factor * Laurent.term(_sign_before(w, j0)))]

    return apply_linear(state, rule)


# ---------------------------------------------------------------------------
# hops
# ---------------------------------------------------------------------------

def apply_hop(i: int, state: State) -> State:
    """u_i: move a particle from site i to i+1.

    The two Clifford signs cancel for i < N, so the move is sign-free; the
    wrap-around hop u_N composes to the clean factor +q.
    """

    def rule(w):
        N = len(w)
        if i < 1 or i > N:
            raise ValueError("hop index must lie in 1..%d" % N)
        if i < N:
            if w[i - 1] == 1 and w[i] == 0:
                w2 = w[: i - 1] + (0, 1) + w[i + 1:]
                return [(w2, Laurent.one())]
            return []
        if w[N - 1] == 1 and w[0] == 0:
            w2 = (1,) + w[1 : N - 1] + (0,)
            return [(w2, Laurent.term(1, 1))]
        return []

    return apply_linear(state, rule)


def apply_hop_word(word, state: State) -> State:
    for i in reversed(list(word)):
        state = apply_hop(i, state)
        if state.is_zero():
            break
    return state


@lru_cache(maxsize=None)
def _cyclic_subset_orders(N: int, r: int, clockwise: bool):
    """Orderings of r-subsets of {1..N}: u_i left of u_{i+1} when clockwise."""
    orders = []
    for subset in itertools.combinations(range(1, N + 1), r):
        chosen = set(subset)
        gap = next(g for g in range(1, N + 1) if g not in chosen)
        run = [(gap - 1 + s) % N + 1 for s in range(1, N + 1)]
        word = [i for i in run if i in chosen]
        orders.append(tuple(word if clockwise else reversed(word)))
    return tuple(orders)


def _sites(state: State) -> int:
    for w in state.terms:
        return len(w)
    raise ValueError("cannot infer the site count of an empty state")


def _level(state: State) -> int:
    levels = {sum(w) for w in state.terms}
    if len(levels) != 1:
        raise ValueError("state mixes particle numbers: %r" % levels)
    return levels.pop()


def apply_elementary(r: int, state: State) -> State:
    """e_r of the hops: clockwise products over r-subsets; e_N is the scalar
    -q e^{i pi K} = (-1)^(k+1) q."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if state.is_zero() or r == 0:
        return state
    N = _sites(state)
    if r > N:
        return State.zero(WORD)
    if r == N:
        k = _level(state)
        return state.scaled(Laurent.term(1 if k % 2 else -1, 1))
    out = State.zero(WORD)
    for word in _cyclic_subset_orders(N, r, True):
        out = out + apply_hop_word(word, state)
    return out


def apply_complete(r: int, state: State) -> State:
    """h_r of the hops: anticlockwise products; h_N is q on the full level only."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if state.is_zero() or r == 0:
        return state
    N = _sites(state)
    if r > N:
        return State.zero(WORD)
    if r == N:
        if _level(state) == N:
            return state.shifted(1)
        return State.zero(WORD)
    out = State.zero(WORD)
    for word in _cyclic_subset_orders(N, r, False):
        out = out + apply_hop_word(word, state)
    return out


def elementary_monomials(N: int, r: int):
    return _cyclic_subset_orders(N, r, True)


def complete_monomials(N: int, r: int):
    return _cyclic_subset_orders(N, r, False)


# ---------------------------------------------------------------------------
# noncommutative Schur polynomials and the quantum product
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _schur_expansion_e(p) -> tuple:
    p = normalize(p)
    m = part(p, 1)
    pt = transpose(p)
    rows = [[part(pt, i) - i + j for j in range(1, m + 1)] for i in range(1, m + 1)]
    return tuple(sorted(symbolic_det(rows).items()))


@lru_cache(maxsize=None)
def _schur_expansion_h(p) -> tuple:
    p = normalize(p)
    m = len(p)
    rows = [[part(p, i) - i + j for j in range(1, m + 1)] for i in range(1, m + 1)]
    return tuple(sorted(symbolic_det(rows).items()))


def apply_schur(p, state: State, form: str = "auto") -> State:
    """s_p of the hops via the smaller of the two Jacobi-Trudi determinants.

    form 'e' forces the elementary expansion, 'h' the complete one.
    """
    p = normalize(p)
    if state.is_zero():
        return state
    if form == "auto":
        form = "e" if part(p, 1) <= len(p) else "h"
    if form == "e":
        expansion, apply_one = _schur_expansion_e(p), apply_elementary
    elif form == "h":
        expansion, apply_one = _schur_expansion_h(p), apply_complete
    else:
        raise ValueError("form must be 'auto', 'e' or 'h'")
    out = State.zero(WORD)
    for key, coeff in expansion:
        term = state
        for r in key:
            term = apply_one(r, term)
            if term.is_zero():
                break
        out = out + term.scaled(coeff)
    return out


def quantum_product(lam, mu, k: int, N: int) -> State:
    """lam * mu in the quantum ring of k-planes in N-space."""
    n = N - k
    for p in (lam, mu):
        if not (len(p) <= k and part(p, 1) <= n):
            raise ValueError("%r is not in the %dx%d box" % (p, k, n))
    basis_word = word_from_partition(mu, k, N)
    return apply_schur(lam, State.basis(WORD, basis_word))


def gw_invariant(lam, mu, nu, d: int, k: int, N: int) -> int:
    """3-point genus-0 invariant of degree d; zero unless |lam|+|mu|-|nu| = dN."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if size(lam) + size(mu) - size(nu) != d * N or d < 0:
        return 0
    coeff = quantum_product(lam, mu, k, N).coeff(word_from_partition(nu, k, N))
    value = coeff.coeff(d)
    if value < 0:
        raise AssertionError("negative invariant for %r,%r,%r" % (lam, mu, nu))
    if any(e != d for e in coeff.exponents()):
        raise AssertionError("unexpected q-degree in %r" % coeff)
    return value


def gw_table(k: int, N: int) -> dict:
    """All (lam, mu, nu) -> (d, C) with C nonzero for the k-plane ring."""
    n = N - k
    box = partitions_in_box(k, n)
    table = {}
    for lam in box:
        for mu in box:
            prod = quantum_product(lam, mu, k, N)
            for w, coeff in prod.items():
                nu = partition_from_word(w)
                for d in coeff.exponents():
                    v = coeff.coeff(d)
                    if v:
                        table[lam, mu, nu] = (d, v)
    return table


# ---------------------------------------------------------------------------
# discrete symmetries
# ---------------------------------------------------------------------------

def apply_symmetry(which: str, state: State) -> State:
    """P (reverse), T (conjugate coefficients), C (particle-hole), Rot (shift)."""
    if which == "P":
        return state.map_labels(reverse_word)
    if which == "T":
        return state.map_coeffs(lambda c: c.conj())
    if which == "C":
        return state.map_labels(complement_word)
    if which == "Rot":
        return state.map_labels(rot_word)
    raise ValueError("unknown symmetry %r" % which)
