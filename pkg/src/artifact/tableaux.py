"""Semistandard tableaux: validation, reading words, insertion, enumeration.

A straight-shape tableau is a list of rows, each row a list of entries,
rows top to bottom, row lengths weakly decreasing.
"""

from __future__ import annotations

from typing import Iterator

from .shapes import Partition, canonical

Rows = list[list[int]]


def shape(T: Rows) -> Partition:
    """Shape of a straight tableau."""
    return canonical(len(row) for row in T)


def freeze(T: Rows) -> tuple[tuple[int, ...], ...]:
    """Hashable snapshot of a tableau."""
    return tuple(tuple(row) for row in T)


def thaw(frozen) -> Rows:
    return [list(row) for row in frozen]


def validate_ssyt(T: Rows) -> bool:
    """Rows weakly increase left to right, columns strictly increase downward."""
    lengths = [len(row) for row in T]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return False
    if any(not row for row in T):
        return False
    for row in T:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    for i in range(len(T) - 1):
        for j in range(len(T[i + 1])):
            if T[i][j] >= T[i + 1][j]:
                return False
    return all(e >= 1 for row in T for e in row)


def count_entry(T: Rows, m: int) -> int:
    """Number of boxes of T carrying the entry m."""
    return sum(row.count(m) for row in T)


def content(T: Rows, m: int) -> tuple[int, ...]:
    """Entry counts (T[1], ..., T[m])."""
    counts = [0] * m
    for row in T:
        for e in row:
            counts[e - 1] += 1
    return tuple(counts)


def row_word(T: Rows) -> list[int]:
    """Read the bottom row first, each row left to right."""
    return [e for row in reversed(T) for e in row]


def inverse_column_word(T: Rows) -> list[int]:
    """Read the rightmost column first, each column top to bottom."""
    if not T:
        return []
    word = []
    for x in range(max(len(row) for row in T), 0, -1):
        for row in T:
            if len(row) >= x:
                word.append(row[x - 1])
    return word


def schensted_insert(m: int, T: Rows) -> Rows:
    """Row-insert m into T (classical bumping)."""
    out = [list(row) for row in T]
    r = 0
    while True:
        if r == len(out):
            out.append([m])
            return out
        row = out[r]
        for j, e in enumerate(row):
            if e > m:
                row[j], m = m, e
                break
        else:
            row.append(m)
            return out
        r += 1


def insertion_tableau(word) -> Rows:
    """Left fold of schensted_insert over the word."""
    T: Rows = []
    for m in word:
        T = schensted_insert(m, T)
    return T


def knuth_equivalent(w1, w2) -> bool:
    """Words are Knuth equivalent iff their insertion tableaux coincide."""
    return insertion_tableau(w1) == insertion_tableau(w2)


def column_insert(m: int, T: Rows) -> Rows:
    """Column-insert m into T: bump the topmost entry >= m of each column."""
    out = [list(row) for row in T]
    x = 0
    while True:
        placed = False
        for y in range(len(out)):
            if len(out[y]) > x and out[y][x] >= m:
                out[y][x], m = m, out[y][x]
                placed = True
                break
        if not placed:
            if x == 0:
                out.append([m])
            else:
                y = sum(1 for row in out if len(row) > x)
                out[y].append(m)
            if not validate_ssyt(out):
                raise ValueError("column insertion produced an invalid tableau")
            return out
        x += 1


def column_star(C: Rows, S: Rows) -> Rows:
    """The product C * S: column-insert the entries of C into S, top first.

    C must be a single column (one box per row).
    """
    if any(len(row) != 1 for row in C):
        raise ValueError("C is not a single column")
    out = [list(row) for row in S]
    for row in C:
        out = column_insert(row[0], out)
    return out


def first_column(T: Rows) -> list[int]:
    """Entries of column 1, top to bottom."""
    return [row[0] for row in T]


def rest_columns(T: Rows) -> Rows:
    """The tableau of columns 2, 3, ..., shifted one column left."""
    return [row[1:] for row in T if len(row) > 1]


def column_to_rows(entries) -> Rows:
    """Single-column tableau with the given entries, top to bottom."""
    return [[e] for e in entries]


def is_symplectic(T: Rows) -> bool:
    """King's condition: the first entry of row y is at least 2y - 1."""
    return all(row[0] >= 2 * i + 1 for i, row in enumerate(T))


def enumerate_ssyt(lam: Partition, m: int) -> Iterator[Rows]:
    """All semistandard tableaux of shape lam with entries in [1, m].

    Deterministic order: lexicographic on the column reading sequence
    (columns left to right, each top to bottom).
    """
    lam = canonical(lam)
    if not lam:
        yield []
        return
    ncols = lam[0]
    col_len = [sum(1 for p in lam if p >= x) for x in range(1, ncols + 1)]
    T: Rows = [[0] * p for p in lam]

    def fill(x: int, y: int) -> Iterator[Rows]:
        if x > ncols:
            yield [list(row) for row in T]
            return
        nx, ny = (x, y + 1) if y < col_len[x - 1] else (x + 1, 1)
        lo = 1
        if y > 1:
            lo = max(lo, T[y - 2][x - 1] + 1)
        if x > 1:
            lo = max(lo, T[y - 1][x - 2])
        hi = m - (col_len[x - 1] - y)
        for v in range(lo, hi + 1):
            T[y - 1][x - 1] = v
            yield from fill(nx, ny)
        T[y - 1][x - 1] = 0

    yield from fill(1, 1)


def enumerate_spt(mu: Partition, n: int) -> Iterator[Rows]:
    """All symplectic (King) tableaux of shape mu with entries in [1, 2n]."""
    for T in enumerate_ssyt(mu, 2 * n):
        if is_symplectic(T):
            yield T
