"""Reading words, insertion, column products, and enumeration counts."""

from fractions import Fraction

import pytest

from artifact.shapes import enumerate_partitions
from artifact.tableaux import (
    column_insert,
    column_star,
    column_to_rows,
    content,
    count_entry,
    enumerate_spt,
    enumerate_ssyt,
    first_column,
    freeze,
    insertion_tableau,
    inverse_column_word,
    is_symplectic,
    knuth_equivalent,
    rest_columns,
    row_word,
    schensted_insert,
    shape,
    thaw,
    validate_ssyt,
)


def test_shape_and_freeze():
    T = [[1, 2], [2]]
    assert shape(T) == (2, 1)
    assert thaw(freeze(T)) == T
    assert freeze([]) == ()


def test_validate_ssyt():
    assert validate_ssyt([[1, 1, 2], [2, 3]])
    assert validate_ssyt([])
    assert not validate_ssyt([[2, 1]])          # row decreases
    assert not validate_ssyt([[1, 2], [1]])     # column not strict
    assert not validate_ssyt([[1], [2, 2]])     # lengths increase
    assert not validate_ssyt([[0]])             # entries start at 1


def test_row_word():
    assert row_word([[1, 2, 3], [2, 4], [4]]) == [4, 2, 4, 1, 2, 3]
    assert row_word([]) == []


def test_inverse_column_word_golden():
    assert inverse_column_word([[1, 1], [2, 6], [5]]) == [1, 6, 1, 2, 5]
    assert inverse_column_word([]) == []


def test_schensted_insert():
    assert schensted_insert(2, [[1, 3], [4]]) == [[1, 2], [3], [4]]
    assert schensted_insert(5, [[1, 3], [4]]) == [[1, 3, 5], [4]]


def test_insertion_recovers_tableau():
    for lam in enumerate_partitions(5, 4):
        for T in enumerate_ssyt(lam, 4):
            assert insertion_tableau(row_word(T)) == T


def test_knuth_equivalent():
    T = [[1, 2, 2], [3]]
    assert knuth_equivalent(row_word(T), [3, 1, 2, 2])
    assert not knuth_equivalent([1, 2], [2, 1])


def test_column_insert_golden():
    assert column_star([[4]], [[2], [3]]) == [[2], [3], [4]]
    assert column_insert(1, []) == [[1]]
    assert column_insert(1, [[1, 2], [3]]) == [[1, 1, 2], [3]]


def test_column_star_requires_single_column():
    with pytest.raises(ValueError):
        column_star([[1, 2]], [])


def test_star_reassembles_every_tableau():
    for lam in enumerate_partitions(6, 4):
        for T in enumerate_ssyt(lam, 4):
            C = column_to_rows(first_column(T))
            S = rest_columns(T)
            if T:
                assert column_star(C, S) == T


def test_first_and_rest_columns():
    T = [[1, 2, 3], [2, 4], [4]]
    assert first_column(T) == [1, 2, 4]
    assert rest_columns(T) == [[2, 3], [4]]


def test_content_counts():
    T = [[1, 1, 2], [2, 3]]
    assert count_entry(T, 2) == 2
    assert content(T, 4) == (2, 2, 1, 0)


def test_symplectic_counts():
    assert sum(1 for _ in enumerate_spt((1,), 2)) == 4
    assert sum(1 for _ in enumerate_spt((1, 1), 2)) == 5
    assert sum(1 for _ in enumerate_spt((2, 2), 2)) == 14


def test_is_symplectic():
    assert is_symplectic([[1], [3]])
    assert not is_symplectic([[1], [2]])
    assert is_symplectic([])


def _hook_content_count(lam, m):
    """Number of semistandard fillings by the hook content formula."""
    conj = [sum(1 for p in lam if p >= x) for x in range(1, (lam[0] if lam else 0) + 1)]
    total = Fraction(1)
    for y, p in enumerate(lam, start=1):
        for x in range(1, p + 1):
            arm = p - x
            leg = conj[x - 1] - y
            total *= Fraction(m + x - y, arm + leg + 1)
    assert total.denominator == 1
    return total.numerator


def test_enumeration_count_matches_hook_content():
    for lam in enumerate_partitions(6, 4):
        for m in (4, 5):
            got = sum(1 for _ in enumerate_ssyt(lam, m))
            assert got == _hook_content_count(lam, m), (lam, m)


def test_enumeration_first_and_determinism():
    first = next(enumerate_ssyt((2, 1), 3))
    assert first == [[1, 1], [2]]
    once = [freeze(T) for T in enumerate_ssyt((2, 2), 4)]
    again = [freeze(T) for T in enumerate_ssyt((2, 2), 4)]
    assert once == again
    assert len(once) == len(set(once)) == 20


def test_every_enumerated_tableau_is_valid():
    for lam in enumerate_partitions(5, 4):
        for T in enumerate_ssyt(lam, 4):
            assert validate_ssyt(T)
            assert shape(T) == lam
