import itertools

import numpy as np
import pytest

from fusiongw.partitions import (
    partitions_in_box,
    partitions_of,
    size,
    transpose,
)
from fusiongw.spectral import imap
from fusiongw.symfunc import (
    complete_eval,
    elementary_eval,
    kostka,
    littlewood_richardson,
    schur_eval,
    schur_eval_dual,
)


def test_elementary_complete_small():
    xs = [1, 2, 3]
    assert abs(elementary_eval(2, xs) - 11) < 1e-12
    assert abs(complete_eval(2, xs) - 25) < 1e-12
    assert elementary_eval(4, xs) == 0
    assert elementary_eval(0, []) == 1
    assert complete_eval(0, []) == 1


def test_schur_basics():
    xs = [0.3 + 0.1j, -1.2, 0.7j]
    assert abs(schur_eval((1,), xs) - elementary_eval(1, xs)) < 1e-12
    assert schur_eval((), xs) == 1
    assert schur_eval((1, 1, 1, 1), xs) == 0


def test_schur_at_ones_counts_tableaux():
    # number of fillings with entries <= 3
    assert abs(schur_eval((2, 1), [1.0, 1.0, 1.0]) - 8) < 1e-9


def test_jacobi_trudi_forms_agree():
    rng = np.random.default_rng(5)
    xs = rng.normal(size=4) + 1j * rng.normal(size=4)
    for p in partitions_in_box(3, 3):
        a = schur_eval(p, xs)
        b = schur_eval_dual(p, xs)
        assert abs(a - b) <= 1e-9 * max(1.0, abs(a))


def test_cauchy_identity_numeric():
    rng = np.random.default_rng(11)
    for k, n in [(2, 2), (2, 3), (3, 3)]:
        xs = 0.6 * (rng.normal(size=n) + 1j * rng.normal(size=n))
        ys = 0.6 * (rng.normal(size=k) + 1j * rng.normal(size=k))
        total = sum(
            schur_eval(p, xs) * schur_eval(transpose(p), ys)
            for p in partitions_in_box(n, k)
        )
        prod = 1.0
        for x in xs:
            for y in ys:
                prod *= 1 + x * y
        assert abs(total - prod) < 1e-9 * max(1.0, abs(prod))


def _points(exps, m):
    return [np.exp(2j * np.pi * e / m) for e in exps]


def test_root_of_unity_duality():
    # e_r at the shifted points of sigma equals h_r at the inverted points of
    # the transpose (r up to the point count), and dually with e and h
    # swapped, for all boxes with n + k <= 6
    for n in range(2, 5):
        for k in range(1, 7 - n):
            for sigma in partitions_in_box(n - 1, k):
                xs = _points(imap(sigma, n), n + k)
                ys = _points([-i for i in imap(transpose(sigma), k)], n + k)
                for r in range(0, n + 1):
                    a = elementary_eval(r, xs)
                    b = complete_eval(r, ys)
                    assert abs(a - b) < 1e-9, (n, k, sigma, r)
                for r in range(0, k + 1):
                    a = complete_eval(r, xs)
                    b = elementary_eval(r, ys)
                    assert abs(a - b) < 1e-9, (n, k, sigma, r)


def test_schur_transpose_duality_at_roots():
    # s_mu at sigma's points equals s_{mu^t} at the inverted transpose points
    n, k = 3, 2
    for sigma in partitions_in_box(n - 1, k):
        xs = _points(imap(sigma, n), n + k)
        ys = _points([-i for i in imap(transpose(sigma), k)], n + k)
        for mu in partitions_in_box(n, k):
            a = schur_eval(mu, xs)
            b = schur_eval(transpose(mu), ys)
            assert abs(a - b) < 1e-9, (sigma, mu)


def test_kostka_values():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((2, 1), (2, 1)) == 1  # superstandard filling
    assert kostka((1, 1, 1), (1, 1, 1)) == 1
    assert kostka((3, 1), (2, 2)) == 1
    assert kostka((2, 2), (1, 1, 1, 1)) == 2
    with pytest.raises(ValueError):
        kostka((2, 1), (1, 1))


def test_kostka_symmetric_in_content():
    for alpha in itertools.permutations((2, 1, 1)):
        assert kostka((2, 1, 1), alpha) == kostka((2, 1, 1), (2, 1, 1))


def test_lr_pieri():
    assert littlewood_richardson((1,), (1,), (2,)) == 1
    assert littlewood_richardson((1,), (1,), (1, 1)) == 1
    assert littlewood_richardson((2, 1), (), (2, 1)) == 1
    assert littlewood_richardson((1,), (1,), (3,)) == 0


def test_lr_known_value():
    assert littlewood_richardson((2, 1), (2, 1), (3, 2, 1)) == 2


def test_lr_product_identity():
    # sum_nu c_{lam,mu}^nu s_nu(x) = s_lam(x) s_mu(x) at random complex points
    rng = np.random.default_rng(23)
    xs = 0.7 * (rng.normal(size=4) + 1j * rng.normal(size=4))
    shapes = [p for m in range(0, 5) for p in partitions_of(m)]
    for lam in [(2, 1), (2, 2), (3, 1), (1, 1, 1)]:
        for mu in [(1,), (2,), (2, 1), (4,)]:
            total = 0
            for nu in partitions_of(size(lam) + size(mu)):
                c = littlewood_richardson(lam, mu, nu)
                if c:
                    total += c * schur_eval(nu, xs)
            direct = schur_eval(lam, xs) * schur_eval(mu, xs)
            assert abs(total - direct) < 1e-9 * max(1.0, abs(direct)), (lam, mu)
    assert shapes  # shapes enumerated without error
