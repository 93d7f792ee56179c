"""Word-level algorithms for the hop algebra.

Two independent normal forms for words in the generators a_0..a_{n-1}:

* the tower correspondence between words and aperiodic tuples of partitions
  (one partition per generator index, built by a column-moving insertion);
* a tableau rewriting procedure that turns any semistandard tableau over
  {1..n-1} into the normal form whose column word is equivalent under the
  local relations (letters a_1..a_{n-1} only).
"""

from __future__ import annotations

from .partitions import normalize, part, transpose

MAX_STEPS = 10 ** 6


# ---------------------------------------------------------------------------
# words <-> multipartitions
# ---------------------------------------------------------------------------

def dengdu_apply(i: int, mp, n: int):
    """One generator acting on an n-tuple of partitions.

    If the (i+1)-th component is empty, add a box to the first row of the
    i-th; otherwise move the first column of the (i+1)-th, grown by one box,
    into the i-th component.
    """
    i %= n
    mp = tuple(normalize(p) for p in mp)
    if len(mp) != n:
        raise ValueError("need %d components" % n)
    nxt = mp[(i + 1) % n]
    out = list(mp)
    if not nxt:
        out[i] = _add_first_row_box(out[i])
    else:
        height = len(nxt)
        out[(i + 1) % n] = normalize(v - 1 for v in nxt)
        out[i] = _add_column(out[i], height + 1)
    return tuple(out)


def _add_first_row_box(p):
    if not p:
        return (1,)
    return (p[0] + 1,) + p[1:]


def _add_column(p, height: int):
    cols = sorted(transpose(p) + (height,), reverse=True)
    return transpose(tuple(cols))


def word_to_multipartition(word, n: int):
    """Apply the word (rightmost letter first) to the empty tuple."""
    mp = tuple(() for _ in range(n))
    for letter in reversed(list(word)):
        mp = dengdu_apply(letter, mp, n)
    return mp


def is_aperiodic(mp) -> bool:
    """No column height occurs in every component."""
    heights = max((len(p) for p in mp), default=0)
    for level in range(1, heights + 1):
        if all(part(p, level) > part(p, level + 1) for p in mp):
            return False
    return True


def multipartition_to_word(mp, n: int):
    """Read off the standard word by peeling column tops.

    Every column of the i-th component becomes a tower whose entries from
    the top down are i, i+1, ..., i+h-1 (mod n).  Letters are removed in
    cyclic rounds: all tops equal to the current letter that sit strictly
    higher than every top equal to the next letter come off together.
    """
    mp = tuple(normalize(p) for p in mp)
    if len(mp) != n:
        raise ValueError("need %d components" % n)
    if not is_aperiodic(mp):
        raise ValueError("multipartition is not aperiodic")
    towers = []
    for i, p in enumerate(mp):
        for h in transpose(p):
            # bottom-to-top storage: the top of the tower is the last entry
            towers.append([(i + h - 1 - r) % n for r in range(h)])
    word = []
    letter = 0
    idle = 0
    while any(towers):
        nxt = (letter + 1) % n
        threshold = max((len(t) for t in towers if t and t[-1] == nxt), default=0)
        removed = 0
        for t in towers:
            if t and t[-1] == letter and len(t) > threshold:
                t.pop()
                removed += 1
        word.extend([letter] * removed)
        idle = 0 if removed else idle + 1
        if idle >= n:
            raise ValueError("peeling stalled; multipartition not aperiodic?")
        letter = nxt
    return word


# ---------------------------------------------------------------------------
# tableau normalisation
# ---------------------------------------------------------------------------

def parse_tableau(text: str):
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if line:
            rows.append([int(v) for v in line.split(",")])
    return rows


def format_tableau(rows) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in rows)


def is_semistandard(rows) -> bool:
    for i, row in enumerate(rows):
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i and len(row) > len(rows[i - 1]):
            return False
        if i and any(rows[i - 1][j] >= row[j] for j in range(len(row))):
            return False
    return True


def column_word(rows):
    """Columns left to right, each read bottom to top, as generator indices."""
    cols = _columns_from_rows(rows)
    word = []
    for col in cols:
        word.extend(v for v, _ in reversed(col))
    return word


def _columns_from_rows(rows):
    width = max((len(r) for r in rows), default=0)
    cols = []
    for j in range(width):
        col = [[rows[i][j], False] for i in range(len(rows)) if j < len(rows[i])]
        cols.append(col)
    return cols


def _uncrossed(col):
    return [v for v, crossed in col if not crossed]


def _find_violation(cols):
    """Rightmost column whose uncrossed entries are not a consecutive run;
    returns (column index, cell index of the lower entry of the first bad pair)."""
    for ci in range(len(cols) - 1, -1, -1):
        col = cols[ci]
        prev_val = None
        prev_seen = False
        for idx, (v, crossed) in enumerate(col):
            if crossed:
                continue
            if prev_seen and v - prev_val > 1:
                return ci, idx
            prev_val, prev_seen = v, True
    return None


def _carry(cols, base_ci: int, j: int, trace=None):
    """Re-home the detached value j to the right of column base_ci."""
    steps = 0
    while True:
        steps += 1
        if steps > MAX_STEPS:
            raise RuntimeError("rewriting did not terminate")
        di = base_ci + 1
        if di == len(cols):
            cols.append([[j, False]])
            _log(trace, "new-column", j)
            return
        col = cols[di]
        values = _uncrossed(col)
        if not values:
            col.insert(0, [j, False])
            _log(trace, "empty-column", j)
            return
        has = j in values
        has_lo = j - 1 in values
        has_hi = j + 1 in values
        if has_lo and has:
            _log(trace, "skip-right(lo)", j)
            base_ci = di
            continue
        if has_lo:
            pos = next(
                idx for idx, (v, x) in enumerate(col) if not x and v == j - 1
            )
            if pos + 1 < len(col) and col[pos + 1][1]:
                col[pos + 1] = [j, False]
            else:
                col.insert(pos + 1, [j, False])
            _log(trace, "below-predecessor", j)
            return
        if has_hi and not has:
            pos, top = next(
                (idx, v) for idx, (v, x) in enumerate(col) if not x
            )
            if top != j + 1:
                raise RuntimeError("successor not on top of the column")
            col[pos][0] = j
            _log(trace, "swap-successor", j)
            j = j + 1
            base_ci = di
            continue
        if has_hi and has:
            _log(trace, "skip-right(hi)", j)
            base_ci = di
            continue
        if has:
            cols.insert(di + 1, [cell[:] for cell in col])
            _log(trace, "duplicate-column", j)
            return
        if all(v > j for v in values):
            pos = next(idx for idx, (v, x) in enumerate(col) if not x)
            x_val = col[pos][0]
            col[pos][0] = j
            _log(trace, "replace-top", j)
            j = x_val
            base_ci = di
            continue
        if all(v < j for v in values):
            _log(trace, "skip-right(all-smaller)", j)
            base_ci = di
            continue
        raise RuntimeError(
            "no applicable rewriting rule for %d against %r" % (j, values)
        )


def _log(trace, rule, value):
    if trace is not None:
        trace.append((rule, value))


def normalize_tableau(rows, trace=None):
    """Rewrite a semistandard tableau into the dominant normal form.

    The column word of the result is equivalent to the input's under the
    local relations; the output satisfies the row-count domination property
    (entries j in row i are covered by entries j-1 in row i-1).
    """
    if not is_semistandard(rows):
        raise ValueError("input is not a semistandard tableau")
    cols = _columns_from_rows(rows)
    steps = 0
    while True:
        steps += 1
        if steps > MAX_STEPS:
            raise RuntimeError("rewriting did not terminate")
        hit = _find_violation(cols)
        if hit is None:
            break
        ci, idx = hit
        j = cols[ci][idx][0]
        cols[ci][idx][1] = True
        _log(trace, "detach", j)
        _carry(cols, ci, j, trace)
    kept = [_uncrossed(col) for col in cols]
    kept = [col for col in kept if col]
    height = max((len(c) for c in kept), default=0)
    out = []
    for r in range(height):
        out.append([col[r] for col in kept if len(col) > r])
    if not is_semistandard(out):
        raise RuntimeError("rewriting produced a non-tableau: %r" % (out,))
    return out


def dominates(rows) -> bool:
    """Row-count domination: #(j in row i) <= #(j-1 in row i-1) for i > 1."""
    for i in range(1, len(rows)):
        for j in set(rows[i]):
            upper = sum(1 for v in rows[i - 1] if v == j - 1)
            lower = sum(1 for v in rows[i] if v == j)
            if lower > upper:
                return False
    return True
