"""Derived identities: symmetry checks, level recursions, the hierarchy
algorithm, and Kostka/Cauchy-type expansions.

Everything here is exact integer arithmetic; checks return small report
objects listing what was verified and any violations found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import boson, fermion
from .laurent import Laurent
from .partitions import (
    complement,
    format_partition,
    length,
    normalize,
    ones_before,
    part,
    partition_from_word,
    partitions_in_box,
    partitions_of,
    remove_horizontal_strips,
    remove_vertical_strips,
    rot_word,
    size,
    transpose,
    weight_from_partition,
    weights_of_level,
    word_from_partition,
)
from .states import WEIGHT, WORD, State
from .symfunc import kostka


# ---------------------------------------------------------------------------
# coefficient tables
# ---------------------------------------------------------------------------

@dataclass
class CoeffTable:
    """Structure constants of one ring: (lam, mu, nu) -> (degree, integer)."""

    kind: str  # 'fusion' or 'gw'
    n: int
    k: int
    entries: dict = field(default_factory=dict)

    @property
    def N(self) -> int:
        return self.n + self.k

    def value(self, lam, mu, nu):
        return self.entries.get((lam, mu, nu), (0, 0))

    def to_records(self):
        recs = []
        for (lam, mu, nu), (d, c) in sorted(self.entries.items()):
            recs.append(
                {
                    "lambda": format_partition(lam),
                    "mu": format_partition(mu),
                    "nu": format_partition(nu),
                    "d": d,
                    "c": c,
                }
            )
        return recs


def fusion_coefficient_table(n: int, k: int) -> CoeffTable:
    """All level-k fusion constants with their z-degrees."""
    table = CoeffTable("fusion", n, k)
    basis = weights_of_level(n, k)
    sizes = {w: size(w.boxed_partition()) for w in basis}
    for a in basis:
        pa = a.finite_partition()
        for b in basis:
            pb = b.finite_partition()
            prod = boson.fusion_product(a, b)
            for c, coeff in prod.items():
                d = (sizes[a] + sizes[b] - sizes[c]) // n
                table.entries[pa, pb, c.finite_partition()] = (d, coeff.at_one())
    return table


def gw_coefficient_table(k: int, N: int) -> CoeffTable:
    """All Gromov-Witten constants of the k-plane ring in N-space."""
    table = CoeffTable("gw", N - k, k)
    box = partitions_in_box(k, N - k)
    for lam in box:
        for mu in box:
            prod = fermion.quantum_product(lam, mu, k, N)
            for w, coeff in prod.items():
                d, c = coeff.sole_term()
                table.entries[lam, mu, partition_from_word(w)] = (d, c)
    return table


# ---------------------------------------------------------------------------
# symmetry checks
# ---------------------------------------------------------------------------

@dataclass
class CheckReport:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, condition: bool, detail):
        self.checked += 1
        if not condition:
            self.violations.append(detail)


def _triple_value(table: CoeffTable, lam, mu, nu):
    """The symmetric constant: (d, C) of the product coefficient at nu-dual."""
    k, n = table.k, table.n
    return table.value(lam, mu, complement(nu, k, n))


def _rotate(p, a: int, k: int, N: int):
    w = word_from_partition(p, k, N)
    for _ in range(a % N):
        w = rot_word(w)
    return partition_from_word(w)


def gw_symmetry_check(table: CoeffTable, which: str) -> CheckReport:
    """Verify one family of Gromov-Witten symmetries on the whole table."""
    k, n, N = table.k, table.n, table.N
    box = partitions_in_box(k, n)
    report = CheckReport(which)

    if which == "s3":
        for lam in box:
            for mu in box:
                for nu in box:
                    base = _triple_value(table, lam, mu, nu)
                    for perm in itertools.permutations((lam, mu, nu)):
                        got = _triple_value(table, *perm)
                        report.record(
                            got == base or (got[1] == 0 and base[1] == 0),
                            (lam, mu, nu, perm, base, got),
                        )
        return report

    if which == "levelrank":
        other = gw_coefficient_table(n, N)
        for lam in box:
            for mu in box:
                for nu in box:
                    a = _triple_value(table, lam, mu, nu)
                    b = _triple_value(other, transpose(lam), transpose(mu), transpose(nu))
                    report.record(
                        a == b or (a[1] == 0 and b[1] == 0), (lam, mu, nu, a, b)
                    )
        return report

    if which == "rotation":
        for lam in box:
            wl = word_from_partition(lam, k, N)
            for mu in box:
                wm = word_from_partition(mu, k, N)
                for nu in box:
                    wn = word_from_partition(nu, k, N)
                    for a in range(1, N + 1):
                        d1, c1 = _triple_value(table, _rotate(lam, a, k, N), mu, nu)
                        d2, c2 = _triple_value(table, lam, _rotate(mu, a, k, N), nu)
                        d3, c3 = _triple_value(table, lam, mu, _rotate(nu, a, k, N))
                        # moving the rotation between slots shifts the degree
                        # by n_a(first slot) - n_a(second slot)
                        shift2 = ones_before(wl, a) - ones_before(wm, a)
                        shift3 = ones_before(wl, a) - ones_before(wn, a)
                        ok = c1 == c2 == c3
                        if ok and c1:
                            ok = d1 == d2 + shift2 and d1 == d3 + shift3
                        report.record(ok, (lam, mu, nu, a, (d1, c1), (d2, c2), (d3, c3)))
        return report

    if which == "curious":
        for lam in box:
            wl = word_from_partition(lam, k, N)
            for mu in box:
                wm = word_from_partition(mu, k, N)
                for nu in box:
                    wn = word_from_partition(nu, k, N)
                    dual = _triple_value(
                        table, complement(lam, k, n), complement(mu, k, n),
                        complement(nu, k, n),
                    )
                    for a in range(0, n + 1):
                        for b in range(0, n + 1 - a):
                            c = n - a - b
                            rot = _triple_value(
                                table,
                                _rotate(lam, a, k, N),
                                _rotate(mu, b, k, N),
                                _rotate(nu, c, k, N),
                            )
                            shift = (
                                ones_before(wl, a)
                                + ones_before(wm, b)
                                + ones_before(wn, c)
                            )
                            ok = rot[1] == dual[1]
                            if ok and rot[1]:
                                ok = rot[0] == shift - dual[0]
                            report.record(ok, (lam, mu, nu, a, b, c, rot, dual, shift))
        return report

    raise ValueError("unknown symmetry %r" % which)


# ---------------------------------------------------------------------------
# level recursions for Gromov-Witten numbers
# ---------------------------------------------------------------------------

def gw_recursion_up(lam, mu, nu, d: int, j: int, k: int, N: int) -> int:
    """Reconstruct C^{nu,d}_{lam,mu}(k,N) from invariants one level up.

    Requires site j of mu's word to be empty.  Vertical strips are removed
    from lam; creation indices that fall below 1 wrap quasi-periodically and
    lower the degree by one.
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    wm = word_from_partition(mu, k, N)
    wn = word_from_partition(nu, k, N)
    if wm[j - 1] != 0:
        raise ValueError("site %d of mu must be empty" % j)
    mu_up = partition_from_word(wm[: j - 1] + (1,) + wm[j:])
    total = 0
    for r in range(0, length(lam) + 1):
        t, dr = j - r, d
        if t < 1:
            t += N
            dr = d - 1
        if wn[t - 1] == 1 or dr < 0:
            continue
        nu_up = partition_from_word(wn[: t - 1] + (1,) + wn[t:])
        sign = (-1) ** (d + r + ones_before(wm, j - 1) + ones_before(wn, j - r - 1))
        for rho in remove_vertical_strips(lam, r):
            # the Schur operator vanishes outside the (k+1)-box
            if part(rho, 1) > N - k - 1:
                continue
            total += sign * fermion.gw_invariant(rho, mu_up, nu_up, dr, k + 1, N)
    return total


def gw_recursion_down(lam, mu, nu, d: int, j: int, k: int, N: int) -> int:
    """Reconstruct C^{nu,d}_{lam,mu}(k,N) from invariants one level down.

    Requires site j of mu's word to be occupied.  Horizontal strips are
    removed from lam; annihilation indices above N wrap and lower the degree.
    """
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    wm = word_from_partition(mu, k, N)
    wn = word_from_partition(nu, k, N)
    if wm[j - 1] != 1:
        raise ValueError("site %d of mu must be occupied" % j)
    mu_dn = partition_from_word(wm[: j - 1] + (0,) + wm[j:])
    total = 0
    for r in range(0, part(lam, 1) + 1):
        t, dr = j + r, d
        if t > N:
            t -= N
            dr = d - 1
        if wn[t - 1] == 0 or dr < 0:
            continue
        nu_dn = partition_from_word(wn[: t - 1] + (0,) + wn[t:])
        sign = (-1) ** (d + ones_before(wm, j - 1) + ones_before(wn, j + r - 1))
        for rho in remove_horizontal_strips(lam, r):
            # the Schur operator vanishes outside the (k-1)-box
            if length(rho) > k - 1:
                continue
            total += sign * fermion.gw_invariant(rho, mu_dn, nu_dn, dr, k - 1, N)
    return total


# ---------------------------------------------------------------------------
# the hierarchy algorithm
# ---------------------------------------------------------------------------

def hierarchy_product(lam, mu, k: int, N: int, lower: CoeffTable) -> State:
    """lam * mu at level k using only level k-1 products.

    Writes mu = psi*_j(mu-) at the first occupied site and expands
    lam * psi*_j(mu-) over horizontal strips of lam, with the lower products
    taken at q -> -q.
    """
    lam, mu = normalize(lam), normalize(mu)
    n = N - k
    if k == 0:
        return State.basis(WORD, word_from_partition((), 0, N))
    wm = word_from_partition(mu, k, N)
    j = wm.index(1) + 1
    mu_minus = partition_from_word(wm[: j - 1] + (0,) + wm[j:])
    out = State.zero(WORD)
    for r in range(0, part(lam, 1) + 1):
        for nu in remove_horizontal_strips(lam, r):
            if length(nu) > k - 1:
                continue
            twisted = State.zero(WORD)
            for rho in partitions_in_box(k - 1, n + 1):
                d, c = lower.value(nu, mu_minus, rho)
                if c:
                    coeff = Laurent.term(c, d).negate_odd()
                    twisted = twisted + State(
                        WORD, {word_from_partition(rho, k - 1, N): coeff}
                    )
            out = out + fermion.apply_create_extended(j + r, twisted, N)
    return out


def hierarchy_build(N: int):
    """Tables for k = 0..N built inductively from the point, never calling
    the Schur operators directly."""
    tables = []
    point = CoeffTable("gw", N, 0)
    point.entries[(), (), ()] = (0, 1)
    tables.append(point)
    for k in range(1, N + 1):
        table = CoeffTable("gw", N - k, k)
        box = partitions_in_box(k, N - k)
        for lam in box:
            for mu in box:
                prod = hierarchy_product(lam, mu, k, N, tables[k - 1])
                for w, coeff in prod.items():
                    d, c = coeff.sole_term()
                    if c:
                        table.entries[lam, mu, partition_from_word(w)] = (d, c)
        tables.append(table)
    return tables


# ---------------------------------------------------------------------------
# fusion recursion and Kostka identities
# ---------------------------------------------------------------------------

def _schur_matrix_element(lam, mu_w, nu_w) -> int:
    """<nu, s_lam mu> at z = 1 for level-k weights mu, nu."""
    state = boson.apply_schur(lam, State.basis(WEIGHT, mu_w))
    return state.coeff(nu_w).at_one()


def _vertical_weight(r: int, n: int, k: int):
    return weight_from_partition((1,) * r, n, k)


def fusion_recursion_check(n: int, k: int, alpha, jvec, mu=None, nu=None) -> CheckReport:
    """Verify the level k <-> k+1 fusion-coefficient recursion.

    For every target pair (mu, nu) (or the given one), compare the sum over
    chains of vertical-strip fusions at level k+1 (with one site raised by
    the j-vector) against the Kostka-weighted sum at level k.
    """
    alpha = tuple(int(a) for a in alpha)
    jvec = tuple(int(j) % n for j in jvec)
    if len(alpha) != len(jvec):
        raise ValueError("alpha and the j-vector must have equal length")
    level = partitions_in_box(n - 1, k)
    pairs = [(mu, nu)] if mu is not None else [
        (m, v) for m in level for v in level
    ]
    report = CheckReport("fusion-recursion")
    for mu_p, nu_p in pairs:
        lhs = _fusion_recursion_lhs(n, k, alpha, jvec, mu_p, nu_p, level)
        rhs = _kostka_side(n, k, alpha, mu_p, nu_p, columns=True)
        report.record(lhs == rhs, (mu_p, nu_p, lhs, rhs))
        report.details[mu_p, nu_p] = (lhs, rhs)
    return report


@lru_cache(maxsize=None)
def _fusion_coeff_cached(a, b, c):
    return boson.fusion_coeff(a, b, c)


def _fusion_recursion_lhs(n, k, alpha, jvec, mu_p, nu_p, level) -> int:
    ell = len(alpha)
    if any(a > n for a in alpha):
        return 0

    def raised(p, j):
        return weight_from_partition(p, n, k).shifted(j, +1)

    total = 0
    chains = [[nu_p]]
    for i in range(1, ell + 1):
        new_chains = []
        targets = level if i < ell else [mu_p]
        for chain in chains:
            for nxt in targets:
                new_chains.append(chain + [nxt])
        chains = new_chains
    for chain in chains:
        prod = 1
        for i in range(1, ell + 1):
            if alpha[i - 1] == n:
                if chain[i] != chain[i - 1]:
                    prod = 0
                    break
                continue
            strip = _vertical_weight(alpha[i - 1], n, k + 1)
            a = raised(chain[i], jvec[i - 1])
            b = raised(chain[i - 1], jvec[i - 1])
            prod *= _fusion_coeff_cached(strip, a, b)
            if prod == 0:
                break
        total += prod
    return total


def _kostka_side(n, k, alpha, mu_p, nu_p, columns: bool) -> int:
    """Sum of K_{lam^t alpha} (columns) or K_{lam alpha} times <nu, s_lam mu>."""
    ell = len(alpha)
    mu_w = weight_from_partition(mu_p, n, k)
    nu_w = weight_from_partition(nu_p, n, k)
    total = 0
    max_rows = n if columns else min(ell, n)
    for lam in partitions_of(sum(alpha), max_len=max_rows):
        if columns:
            if part(lam, 1) > ell:
                continue
            kk = kostka(transpose(lam), alpha)
        else:
            if length(lam) > ell or part(lam, 1) > k:
                continue
            kk = kostka(lam, alpha)
        if kk:
            total += kk * _schur_matrix_element(lam, mu_w, nu_w)
    return total


def cauchy_kostka_check(n: int, k: int, alpha) -> CheckReport:
    """Operator Kostka expansions of h- and e-products, plus the matrix-element
    identities expressing chains of strip fusions through Kostka numbers."""
    alpha = tuple(int(a) for a in alpha)
    if not alpha or any(a < 1 for a in alpha):
        raise ValueError("alpha must be a composition of positive parts")
    ell = len(alpha)
    basis = weights_of_level(n, k)
    report = CheckReport("cauchy-kostka")

    # operator identity: product of h_{alpha_i} = sum K_{lam alpha} s_lam
    for w in basis:
        st = State.basis(WEIGHT, w)
        lhs = st
        for a in reversed(alpha):
            lhs = boson.apply_complete(a, lhs)
        rhs = State.zero(WEIGHT)
        for lam in partitions_of(sum(alpha), max_len=ell):
            if part(lam, 1) > k:
                continue
            kk = kostka(lam, alpha)
            if kk:
                rhs = rhs + boson.apply_schur(lam, st).scaled(kk)
        report.record(lhs == rhs, ("h-expansion", w, lhs, rhs))

    # operator identity: product of e_{alpha_i} = sum K_{lam^t alpha} s_lam
    for w in basis:
        st = State.basis(WEIGHT, w)
        lhs = st
        for a in reversed(alpha):
            lhs = boson.apply_elementary(a, lhs)
        rhs = State.zero(WEIGHT)
        for lam in partitions_of(sum(alpha), max_len=n):
            if part(lam, 1) > ell:
                continue
            kk = kostka(transpose(lam), alpha)
            if kk:
                rhs = rhs + boson.apply_schur(lam, st).scaled(kk)
        report.record(lhs == rhs, ("e-expansion", w, lhs, rhs))

    # coefficient identities: chains of strip fusions against Kostka sums
    level = partitions_in_box(n - 1, k)
    for mu_p in level:
        for nu_p in level:
            lhs_h = _strip_chain_sum(n, k, alpha, mu_p, nu_p, level, columns=False)
            rhs_h = _kostka_side(n, k, alpha, mu_p, nu_p, columns=False)
            report.record(lhs_h == rhs_h, ("h-chains", mu_p, nu_p, lhs_h, rhs_h))
            lhs_e = _strip_chain_sum(n, k, alpha, mu_p, nu_p, level, columns=True)
            rhs_e = _kostka_side(n, k, alpha, mu_p, nu_p, columns=True)
            report.record(lhs_e == rhs_e, ("e-chains", mu_p, nu_p, lhs_e, rhs_e))
    return report


def _strip_chain_sum(n, k, alpha, mu_p, nu_p, level, columns: bool) -> int:
    """Sum over chains nu = mu^(0), ..., mu^(ell) = mu of products of
    single-strip fusion coefficients at level k."""
    ell = len(alpha)
    total = 0
    chains = [[nu_p]]
    for i in range(1, ell + 1):
        targets = level if i < ell else [mu_p]
        chains = [chain + [nxt] for chain in chains for nxt in targets]
    for chain in chains:
        prod = 1
        for i in range(1, ell + 1):
            r = alpha[i - 1]
            if columns:
                if r == n:
                    # a full column acts as the scalar z: an identity link
                    if chain[i] != chain[i - 1]:
                        prod = 0
                        break
                    continue
                if r > n:
                    prod = 0
                    break
                strip = _vertical_weight(r, n, k)
            else:
                if r > k:
                    prod = 0
                    break
                strip = weight_from_partition((r,), n, k)
            a = weight_from_partition(chain[i], n, k)
            b = weight_from_partition(chain[i - 1], n, k)
            prod *= _fusion_coeff_cached(strip, a, b)
            if prod == 0:
                break
        total += prod
    return total
