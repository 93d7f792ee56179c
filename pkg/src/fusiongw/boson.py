"""Bosonic lattice operators on the weight basis and the fusion product.

Particles sit on a circle with n sites; a level-k weight is the occupation
vector (m_0, ..., m_{n-1}).  The hop generator a_i moves one particle from
site i to site i+1; the wrap-around hop a_0 carries one power of the formal
variable z.  Noncommutative elementary/complete/Schur polynomials in the
hops act on states, and the Schur action defines the fusion product.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .laurent import Laurent
from .partitions import (
    AffineWeight,
    add_vertical_strips,
    normalize,
    part,
    remove_vertical_strips,
    size,
    transpose,
    weight_from_boxed,
    weights_of_level,
)
from .states import WEIGHT, State, apply_linear


# ---------------------------------------------------------------------------
# phase operators
# ---------------------------------------------------------------------------

def apply_create(i: int, state: State) -> State:
    """Creation at site i: raises m_i by one (level k -> k+1)."""
    return apply_linear(state, lambda w: [(w.shifted(i, +1), Laurent.one())])


def apply_annihilate(i: int, state: State) -> State:
    """Annihilation at site i: lowers m_i by one, kills labels with m_i = 0."""

    def rule(w):
        if w.labels[i % w.n] == 0:
            return []
        return [(w.shifted(i, -1), Laurent.one())]

    return apply_linear(state, rule)


def apply_hop(i: int, state: State) -> State:
    """The hop a_i = (create at i+1) o (annihilate at i); a_0 carries z."""

    def rule(w):
        i0 = i % w.n
        if w.labels[i0] == 0:
            return []
        factor = Laurent.term(1, 1 if i0 == 0 else 0)
        return [(w.shifted(i0, -1).shifted(i0 + 1, +1), factor)]

    return apply_linear(state, rule)


def apply_hop_word(word, state: State) -> State:
    """Apply a product of hops; the rightmost letter acts first."""
    for i in reversed(list(word)):
        state = apply_hop(i, state)
        if state.is_zero():
            break
    return state


# ---------------------------------------------------------------------------
# cyclic orderings
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _anticlockwise_orders(n: int, r: int):
    """For every r-subset of Z_n, the product order with a_{i+1} left of a_i.

    Linearise starting just after a gap and reverse; any gap gives the same
    operator because non-adjacent letters commute.
    """
    orders = []
    for subset in itertools.combinations(range(n), r):
        chosen = set(subset)
        gap = next(g for g in range(n) if g not in chosen)
        run = [(gap + 1 + s) % n for s in range(n)]
        orders.append(tuple(reversed([i for i in run if i in chosen])))
    return tuple(orders)


@lru_cache(maxsize=None)
def _clockwise_multiset_orders(n: int, r: int):
    """For every size-r multiset over Z_n, the order with a_i left of a_{i+1}."""
    orders = []
    for combo in itertools.combinations_with_replacement(range(n), r):
        support = set(combo)
        if len(support) == n:
            continue  # never happens for r < n but keep the guard
        gap = next(g for g in range(n) if g not in support)
        run = [(gap + 1 + s) % n for s in range(n)]
        word = []
        for i in run:
            word.extend([i] * combo.count(i))
        orders.append(tuple(word))
    return tuple(orders)


def _rank(state: State) -> int:
    for w in state.terms:
        return w.n
    raise ValueError("cannot infer the rank of an empty state")


# ---------------------------------------------------------------------------
# noncommutative symmetric polynomials in the hops
# ---------------------------------------------------------------------------

def apply_elementary(r: int, state: State) -> State:
    """e_r of the hops: anticlockwise products over r-subsets; e_n = z, e_0 = 1."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    if state.is_zero() or r == 0:
        return state
    n = _rank(state)
    if r > n:
        return State.zero(WEIGHT)
    if r == n:
        return state.shifted(1)
    out = State.zero(WEIGHT)
    for word in _anticlockwise_orders(n, r):
        out = out + apply_hop_word(word, state)
    return out


def apply_complete(r: int, state: State) -> State:
    """h_r of the hops: clockwise multiset products for r < n, else by determinant.

    The determinant extension uses e_{>n} = 0, which is consistent with the
    spectrum for all indices below n+k on the level-k space; callers never
    need h_r at r = n+k or beyond.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if state.is_zero() or r == 0:
        return state
    n = _rank(state)
    if r < n:
        out = State.zero(WEIGHT)
        for word in _clockwise_multiset_orders(n, r):
            out = out + apply_hop_word(word, state)
        return out
    return _apply_expansion(complete_expansion(r), state)


def elementary_monomials(n: int, r: int):
    """The monomials of e_r as ordered index words (for inspection and tests)."""
    return _anticlockwise_orders(n, r)


def complete_monomials(n: int, r: int):
    """The monomials of h_r, r < n, as ordered index words."""
    return _clockwise_multiset_orders(n, r)


# Symbolic polynomials in commuting elementary symbols: a mapping from a
# descending tuple of indices (the multiset of e-factors, 0s omitted) to an
# integer coefficient.

def _expansion_mul(a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(sorted(ka + kb, reverse=True))
            out[key] = out.get(key, 0) + va * vb
            if not out[key]:
                del out[key]
    return out


def symbolic_det(index_rows):
    """Leibniz expansion of det(e_{index_rows[i][j]}) over commuting symbols.

    Entries with negative index vanish; index 0 is the identity factor.
    """
    m = len(index_rows)
    out = {}
    for perm in itertools.permutations(range(m)):
        sign = _perm_sign(perm)
        key = []
        ok = True
        for i in range(m):
            idx = index_rows[i][perm[i]]
            if idx < 0:
                ok = False
                break
            if idx > 0:
                key.append(idx)
        if not ok:
            continue
        key = tuple(sorted(key, reverse=True))
        out[key] = out.get(key, 0) + sign
        if not out[key]:
            del out[key]
    return out


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def schur_expansion(p) -> tuple:
    """s_p as a polynomial in commuting elementary symbols (Jacobi-Trudi).

    Determinant of size p_1 with entries e_{p^t_i - i + j}.
    """
    p = normalize(p)
    m = part(p, 1)
    pt = transpose(p)
    rows = [[part(pt, i) - i + j for j in range(1, m + 1)] for i in range(1, m + 1)]
    return tuple(sorted(symbolic_det(rows).items()))


@lru_cache(maxsize=None)
def complete_expansion(r: int) -> tuple:
    """h_r as det(e_{1-i+j}) of size r, over commuting elementary symbols."""
    rows = [[1 - i + j for j in range(1, r + 1)] for i in range(1, r + 1)]
    return tuple(sorted(symbolic_det(rows).items()))


@lru_cache(maxsize=None)
def schur_expansion_h(p) -> tuple:
    """s_p as a polynomial in commuting complete symbols (dual Jacobi-Trudi)."""
    p = normalize(p)
    m = len(p)
    rows = [[part(p, i) - i + j for j in range(1, m + 1)] for i in range(1, m + 1)]
    return tuple(sorted(symbolic_det(rows).items()))


def _apply_expansion(expansion, state: State) -> State:
    out = State.zero(WEIGHT)
    for key, coeff in expansion:
        term = state
        for r in key:
            term = apply_elementary(r, term)
            if term.is_zero():
                break
        out = out + term.scaled(coeff)
    return out


def apply_schur(p, state: State) -> State:
    """The noncommutative Schur polynomial of the hops applied to a state.

    Full columns of height n are stripped first, each contributing a factor z
    (the top elementary polynomial acts as the scalar z).
    """
    p = normalize(p)
    if state.is_zero():
        return state
    n = _rank(state)
    if len(p) > n:
        raise ValueError("%r has more than %d rows" % (p, n))
    strips = part(p, n)
    if strips:
        p = normalize(v - strips for v in p)
    return _apply_expansion(schur_expansion(p), state).shifted(strips)


def apply_schur_h(p, state: State) -> State:
    """Schur action through the complete-polynomial determinant (cross-check)."""
    p = normalize(p)
    out = State.zero(WEIGHT)
    for key, coeff in schur_expansion_h(p):
        term = state
        for r in key:
            term = apply_complete(r, term)
            if term.is_zero():
                break
        out = out + term.scaled(coeff)
    return out


# ---------------------------------------------------------------------------
# fusion product
# ---------------------------------------------------------------------------

def fusion_product(a: AffineWeight, b: AffineWeight) -> State:
    """a (x) b as a state with z-monomial coefficients."""
    if a.n != b.n or a.level != b.level:
        raise ValueError("weights must share rank and level")
    result = apply_schur(a.finite_partition(), State.basis(WEIGHT, b))
    return result.shifted(a.labels[0])


def fusion_coeff(a: AffineWeight, b: AffineWeight, c: AffineWeight) -> int:
    """Structure constant at z = 1, with the z-degree constraint asserted."""
    if not (a.n == b.n == c.n) or not (a.level == b.level == c.level):
        raise ValueError("weights must share rank and level")
    coeff = fusion_product(a, b).coeff(c)
    if coeff.is_zero():
        return 0
    exp, value = coeff.sole_term()
    total = (
        size(a.boxed_partition())
        + size(b.boxed_partition())
        - size(c.boxed_partition())
    )
    if exp * a.n != total:
        raise AssertionError(
            "z-degree %d violates the weight constraint for %r,%r,%r" % (exp, a, b, c)
        )
    if value < 0:
        raise AssertionError("negative fusion coefficient %d" % value)
    return value


def fusion_table(n: int, k: int) -> dict:
    """All structure constants: (p_a, p_b, p_c) -> integer, at z = 1."""
    basis = weights_of_level(n, k)
    table = {}
    for a in basis:
        pa = a.finite_partition()
        for b in basis:
            prod = fusion_product(a, b)
            pb = b.finite_partition()
            for c in basis:
                v = prod.coeff(c)
                if not v.is_zero():
                    table[pa, pb, c.finite_partition()] = v.at_one()
    return table


# ---------------------------------------------------------------------------
# monodromy coefficient operators
# ---------------------------------------------------------------------------

def apply_monodromy(which: str, r: int, state: State) -> State:
    """Coefficient of u^r in the monodromy entry A, B, C or D.

    On boxed diagrams (width = level): A_r adds a vertical r-strip keeping
    the width, B_r adds a vertical r-strip through row 1 (level +1), D_r
    removes a vertical (n-r)-strip keeping the width, and C_r removes a
    vertical (n-r)-strip through row 1 (level -1).  With these conventions
    A_r + z D_r = e_r of the hops.
    """
    if which not in "ABCD":
        raise ValueError("which must be one of A, B, C, D")
    if state.is_zero():
        return state
    n = _rank(state)
    if r < 0 or r > n:
        return State.zero(WEIGHT)

    def rule(w):
        diagram = w.boxed_partition()
        k = w.level
        out = []
        if which in "AB":
            target = k if which == "A" else k + 1
            for q in add_vertical_strips(diagram, r, n):
                if part(q, 1) == target or (target == 0 and not q):
                    out.append((weight_from_boxed(q, n), Laurent.one()))
        else:
            target = k if which == "D" else k - 1
            if target < 0:
                return []
            for q in remove_vertical_strips(diagram, n - r):
                if part(q, 1) == target:
                    out.append((weight_from_boxed(q, n), Laurent.one()))
        return out

    return apply_linear(state, rule)


def apply_transfer(u_power: int, state: State) -> State:
    """Coefficient of u^r in the transfer matrix A(u) + z D(u)."""
    a = apply_monodromy("A", u_power, state)
    d = apply_monodromy("D", u_power, state)
    return a + d.shifted(1)
