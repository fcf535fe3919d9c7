"""Column reduction, the P/Q correspondence, and the rank-2 closed forms."""

import pytest

from artifact.branching import (
    a_staircase,
    b_staircase,
    is_k_highest,
    is_k_lowest,
    lr_aii_partition,
    n2_condition_khw,
    n2_condition_klw,
    n2_family_dominant,
    n2_family_khw,
    n2_family_klw,
    n2_family_klw_corrected,
    p_aii,
    p_aii_range,
    q_aii,
    red,
    rem,
    suc,
)
from artifact.characters import branching_multiplicity
from artifact.crystal import is_ghat_dominant
from artifact.shapes import enumerate_partitions
from artifact.tableaux import (
    column_to_rows,
    enumerate_spt,
    enumerate_ssyt,
    freeze,
    is_symplectic,
    shape,
)


def test_rem_goldens():
    assert rem(column_to_rows([2, 3, 4])) == {3, 4}
    assert rem(column_to_rows([1, 2, 4])) == {1, 2}
    assert rem(column_to_rows([1])) == set()
    assert rem([]) == set()


def test_red_goldens():
    assert red(column_to_rows([2, 3, 4])) == [[2]]
    assert red(column_to_rows([1, 2, 4])) == [[4]]
    assert red(column_to_rows([1, 3])) == [[1], [3]]


def test_pq_golden():
    T = [[1, 2], [2, 3], [4]]
    assert p_aii(T) == [[2]]
    assert q_aii(T) == {(2, 1): 1, (2, 2): 1, (1, 2): 2, (1, 3): 2}


def test_suc_fixes_exactly_the_symplectic_tableaux():
    for lam in enumerate_partitions(5, 4):
        for T in enumerate_ssyt(lam, 4):
            assert (suc(T) == T) == is_symplectic(T)
    for lam in enumerate_partitions(3, 6):
        for T in enumerate_ssyt(lam, 6):
            assert (suc(T) == T) == is_symplectic(T)


def test_p_aii_lands_on_symplectic():
    for lam in enumerate_partitions(5, 4):
        for T in enumerate_ssyt(lam, 4):
            P = p_aii(T)
            assert is_symplectic(P)
            assert suc(P) == P


def test_pq_classes_factor_and_count():
    lam = (2, 2)
    classes = lr_aii_partition(lam, 2)
    total = sum(len(v) for v in classes.values())
    assert total == sum(1 for _ in enumerate_ssyt(lam, 4))
    for mu, triples in classes.items():
        ps = {freeze(P) for _, P, _ in triples}
        qs = {frozenset(Q.items()) for _, _, Q in triples}
        assert len(triples) == len(ps) * len(qs)
        assert len(ps) == sum(1 for _ in enumerate_spt(mu, 2))
        assert len(qs) == branching_multiplicity(lam, mu, 2)


def test_staircases():
    assert a_staircase((2, 1), 2) == [[2, 2], [3]]
    assert b_staircase((2, 1), 2) == [[1, 1], [4]]
    assert a_staircase((1, 1, 1), 3) == [[2], [3], [6]]
    assert b_staircase((1, 1, 1), 3) == [[1], [4], [5]]


def test_highest_lowest_flags():
    assert is_k_highest([[2]], 2)
    assert not is_k_highest([[1]], 2)
    assert is_k_lowest([[1]], 2)
    assert is_k_lowest([[1], [2]], 2)
    assert not is_k_lowest([[4]], 2)


def test_p_aii_range():
    for T in enumerate_ssyt((2, 1), 4):
        assert p_aii_range(T, 1, 4) == p_aii(T)
    assert p_aii_range([[3, 3], [4]], 3, 4) == [[3]]
    with pytest.raises(ValueError):
        p_aii_range([[1]], 1, 3)
    with pytest.raises(ValueError):
        p_aii_range([[1]], 2, 3)


def _n2_universe(max_size):
    for lam in enumerate_partitions(max_size, 4):
        yield from enumerate_ssyt(lam, 4)


def test_dominant_family_matches_operator_test():
    for T in _n2_universe(6):
        assert n2_family_dominant(T) == is_ghat_dominant(T, 2), T


def test_khw_family_and_condition_match():
    for T in _n2_universe(6):
        flag = is_k_highest(T, 2)
        assert n2_family_khw(T) == flag, T
        assert n2_condition_khw(T) == flag, T


def test_klw_corrected_family_matches():
    for T in _n2_universe(6):
        assert n2_family_klw_corrected(T) == is_k_lowest(T, 2), T


def test_klw_transcribed_forms_disagree_as_documented():
    """The verbatim lowest-weight tests are pinned to their known defects."""
    # the column 1,2 is lowest but the operator condition rejects it
    assert is_k_lowest([[1], [2]], 2)
    assert not n2_condition_klw([[1], [2]])
    # the single box 4 is not lowest but the operator condition accepts it
    assert not is_k_lowest([[4]], 2)
    assert n2_condition_klw([[4]])
    # the column 1,3 is not lowest but the closed-form family accepts it
    assert not is_k_lowest([[1], [3]], 2)
    assert n2_family_klw([[1], [3]])
    assert not n2_family_klw_corrected([[1], [3]])


def test_n2_helpers_reject_large_entries():
    with pytest.raises(ValueError):
        n2_family_dominant([[5]])
    with pytest.raises(ValueError):
        n2_condition_klw([[6]])
