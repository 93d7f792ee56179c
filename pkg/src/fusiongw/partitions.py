"""Partitions, level-k dominant weights, 01-words, and the maps between them.

Partitions are plain tuples of weakly decreasing positive integers with
trailing zeros stripped, so ``()`` is the empty partition.  A weight of the
affine algebra at level k is stored by its nonnegative Dynkin labels
``(m_0, ..., m_{n-1})`` with ``sum(m_i) == k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def normalize(parts) -> tuple:
    """Canonical form: weakly decreasing, trailing zeros dropped."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError("partition parts must be nonnegative: %r" % (parts,))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be weakly decreasing: %r" % (parts,))
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(p) -> int:
    return sum(p)


def length(p) -> int:
    return len(p)


def part(p, i) -> int:
    """The i-th part (1-based); zero beyond the length."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def transpose(p) -> tuple:
    """Column lengths of p."""
    if not p:
        return ()
    return tuple(sum(1 for v in p if v >= j) for j in range(1, p[0] + 1))


def in_box(p, rows: int, cols: int) -> bool:
    return len(p) <= rows and (not p or p[0] <= cols)


def complement(p, rows: int, cols: int) -> tuple:
    """The complement of p inside a rows x cols bounding box."""
    if not in_box(p, rows, cols):
        raise ValueError("%r does not fit in a %dx%d box" % (p, rows, cols))
    padded = list(p) + [0] * (rows - len(p))
    return normalize(cols - padded[rows - 1 - i] for i in range(rows))


def contains(big, small) -> bool:
    return all(part(big, i) >= part(small, i) for i in range(1, len(small) + 1))


def is_vertical_strip(big, small) -> bool:
    """big/small has at most one box per row."""
    if not contains(big, small):
        return False
    return all(part(big, i) - part(small, i) <= 1 for i in range(1, len(big) + 1))


def is_horizontal_strip(big, small) -> bool:
    """big/small has at most one box per column."""
    if not contains(big, small):
        return False
    return all(part(big, i + 1) <= part(small, i) for i in range(1, len(big) + 1))


def remove_horizontal_strips(p, r: int):
    """All partitions q with p/q a horizontal r-strip."""
    out = []
    for q in _interlacing_subdiagrams(p):
        if size(p) - size(q) == r:
            out.append(q)
    return out


def _interlacing_subdiagrams(p):
    """All q contained in p with p/q a horizontal strip."""
    if not p:
        return [()]
    ranges = []
    for i in range(1, len(p) + 1):
        lo = part(p, i + 1)
        hi = part(p, i)
        ranges.append(range(lo, hi + 1))
    return [normalize(c) for c in itertools.product(*ranges)]


def remove_vertical_strips(p, r: int):
    """All partitions q with p/q a vertical r-strip."""
    return [transpose(q) for q in remove_horizontal_strips(transpose(p), r)]


def add_vertical_strips(p, r: int, max_rows: int):
    """All partitions q with at most max_rows rows and q/p a vertical r-strip."""
    rows = range(1, max_rows + 1)
    out = []
    for chosen in itertools.combinations(rows, r):
        q = [part(p, i) + (1 if i in chosen else 0) for i in rows]
        if all(q[i] >= q[i + 1] for i in range(len(q) - 1)):
            out.append(normalize(q))
    return out


def partitions_in_box(rows: int, cols: int):
    """All partitions fitting in a rows x cols box, lexicographically sorted."""
    return sorted(_box_iter(rows, cols))


@lru_cache(maxsize=None)
def _box_iter(rows, cols):
    if rows == 0 or cols == 0:
        return ((),)
    out = set()
    for first in range(cols + 1):
        for rest in _box_iter(rows - 1, first):
            out.add(normalize((first,) + rest))
    return tuple(out)


def partitions_of(m: int, max_len=None, max_part=None):
    """All partitions of m, optionally bounded in length and largest part."""
    max_len = m if max_len is None else max_len
    max_part = m if max_part is None else max_part
    out = []

    def build(remaining, bound, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_len:
            return
        for v in range(min(bound, remaining), 0, -1):
            acc.append(v)
            build(remaining - v, v, acc)
            acc.pop()

    build(m, max_part, [])
    return out


def parse_partition(text: str) -> tuple:
    """Parse the CLI text format: comma separated parts, '0' or '' for empty."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    return normalize(int(t) for t in text.split(","))


def format_partition(p) -> str:
    return ",".join(str(v) for v in p) if p else "0"


# ---------------------------------------------------------------------------
# level-k dominant weights
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class AffineWeight:
    """A level-k dominant weight of the rank-n affine algebra, by Dynkin labels."""

    n: int
    labels: tuple

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("rank parameter n must be >= 2")
        if len(self.labels) != self.n or any(m < 0 for m in self.labels):
            raise ValueError("need %d nonnegative labels, got %r" % (self.n, self.labels))

    @property
    def level(self) -> int:
        return sum(self.labels)

    def finite_partition(self) -> tuple:
        """The partition with exactly m_i columns of length i (i >= 1)."""
        mu = []
        acc = 0
        for i in range(self.n - 1, 0, -1):
            acc += self.labels[i]
            mu.append(acc)
        return normalize(reversed(mu))

    def boxed_partition(self) -> tuple:
        """finite_partition plus m_0 full columns of height n; width equals the level."""
        m0 = self.labels[0]
        mu = self.finite_partition()
        return normalize([part(mu, i) + m0 for i in range(1, self.n)] + [m0])

    def shifted(self, i: int, delta: int):
        """Labels with m_i replaced by m_i + delta (may be invalid; caller checks)."""
        new = list(self.labels)
        new[i % self.n] += delta
        return AffineWeight(self.n, tuple(new))

    def rot(self):
        """Rotation automorphism: adds a row of `level` boxes, strips n-columns.

        On labels this shifts m_i into slot i+1; it equals the permutation
        induced by the top complete polynomial h_level at z=1.
        """
        m = self.labels
        return AffineWeight(self.n, (m[-1],) + m[:-1])

    def rot_inv(self):
        m = self.labels
        return AffineWeight(self.n, m[1:] + (m[0],))

    def flip(self):
        """Diagram reflection: fixes m_0, reverses m_1..m_{n-1}."""
        m = self.labels
        return AffineWeight(self.n, (m[0],) + tuple(reversed(m[1:])))

    def star(self):
        """Charge conjugate; same as flip."""
        return self.flip()


def weight_from_partition(p, n: int, k: int) -> AffineWeight:
    """Inverse of finite_partition on the level-k set (p must fit (n-1) x k)."""
    if not in_box(p, n - 1, k):
        raise ValueError("%r is not in the %dx%d box" % (p, n - 1, k))
    labels = [0] * n
    for i in range(1, n):
        labels[i] = part(p, i) - part(p, i + 1)
    labels[0] = k - sum(labels[1:])
    return AffineWeight(n, tuple(labels))


def weight_from_boxed(p, n: int) -> AffineWeight:
    """Inverse of boxed_partition: strip full n-columns, then lift."""
    if len(p) > n:
        raise ValueError("%r has more than %d rows" % (p, n))
    m0 = part(p, n)
    stripped = normalize(v - m0 for v in p)
    k = m0 + part(stripped, 1)
    return weight_from_partition(stripped, n, k)


def weights_of_level(n: int, k: int):
    """All level-k weights, ordered by their finite partitions (lexicographic)."""
    return [weight_from_partition(p, n, k) for p in partitions_in_box(n - 1, k)]


# ---------------------------------------------------------------------------
# 01-words
# ---------------------------------------------------------------------------

def word_from_partition(p, k: int, N: int) -> tuple:
    """The weight-k word of length N whose 1-positions are l_i = p_{k+1-i} + i."""
    if not in_box(p, k, N - k):
        raise ValueError("%r is not in the %dx%d box" % (p, k, N - k))
    bits = [0] * N
    for i in range(1, k + 1):
        bits[part(p, k + 1 - i) + i - 1] = 1
    return tuple(bits)


def partition_from_word(w) -> tuple:
    """Inverse of word_from_partition; the weight is sum(w)."""
    ones = [i + 1 for i, b in enumerate(w) if b]
    k = len(ones)
    return normalize(sorted((ones[i - 1] - i for i in range(1, k + 1)), reverse=True))


def word_weight(w) -> int:
    return sum(w)


def rot_word(w) -> tuple:
    """Cyclic shift w_2 ... w_N w_1."""
    return w[1:] + w[:1]


def reverse_word(w) -> tuple:
    return tuple(reversed(w))


def complement_word(w) -> tuple:
    return tuple(1 - b for b in w)


def ones_before(w, i: int) -> int:
    """Number of 1-letters among w_1..w_i, extended by n_{i+N} = n_i + k.

    Valid for i in [-N, 2N]; n_0 = 0.
    """
    N = len(w)
    k = sum(w)
    if i < -N or i > 2 * N:
        raise ValueError("index %d outside [-%d, %d]" % (i, N, 2 * N))
    if i < 0:
        return ones_before(w, i + N) - k
    if i > N:
        return ones_before(w, i - N) + k
    return sum(w[:i])


def parse_word(text: str) -> tuple:
    if not all(c in "01" for c in text):
        raise ValueError("words are strings over {0,1}: %r" % text)
    return tuple(int(c) for c in text)


def format_word(w) -> str:
    return "".join(str(b) for b in w)
