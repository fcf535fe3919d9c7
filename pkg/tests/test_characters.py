"""The symplectic character oracle and the greedy decomposition."""

from itertools import permutations, product

import pytest

from artifact.characters import (
    branching_multiplicity,
    decompose,
    restricted_gl_character,
    sp_character,
    sp_weight,
)
from artifact.shapes import enumerate_partitions
from artifact.tableaux import enumerate_ssyt


def test_sp_weight():
    assert sp_weight([[1]], 2) == (1, 0)
    assert sp_weight([[2]], 2) == (-1, 0)
    assert sp_weight([[3]], 2) == (0, 1)
    assert sp_weight([[4]], 2) == (0, -1)


def test_sp_character_box():
    assert sp_character((1,), 2) == {
        (1, 0): 1,
        (-1, 0): 1,
        (0, 1): 1,
        (0, -1): 1,
    }


def test_sp_character_masses():
    assert sum(sp_character((1,), 2).values()) == 4
    assert sum(sp_character((1, 1), 2).values()) == 5
    assert sum(sp_character((2, 2), 2).values()) == 14


def test_sp_character_rejects_long_shapes():
    with pytest.raises(ValueError):
        sp_character((1, 1, 1), 2)


def test_restricted_character_mass():
    for lam in ((2,), (1, 1), (2, 2, 1)):
        chi = restricted_gl_character(lam, 2)
        assert sum(chi.values()) == sum(1 for _ in enumerate_ssyt(lam, 4))


def _signed_permutations(n):
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            yield perm, signs


def test_weyl_invariance():
    for mu in ((2, 1), (2, 2)):
        chi = sp_character(mu, 2)
        for perm, signs in _signed_permutations(2):
            moved = {}
            for weight, m in chi.items():
                new = tuple(signs[i] * weight[perm[i]] for i in range(2))
                moved[new] = moved.get(new, 0) + m
            assert moved == chi, (mu, perm, signs)


def test_decompose_golden():
    dec = decompose(restricted_gl_character((2, 2), 2), 2)
    assert dec == {(2, 2): 1, (1, 1): 1, (): 1}


def test_decompose_recovers_irreducibles():
    for mu in enumerate_partitions(4, 2):
        assert decompose(dict(sp_character(mu, 2)), 2) == {mu: 1}


def test_decompose_rejects_garbage():
    with pytest.raises(RuntimeError):
        decompose({(0, 1): 1}, 2)
    with pytest.raises(RuntimeError):
        decompose({(1, 0): -1}, 2)


def test_branching_multiplicities():
    assert branching_multiplicity((1,), (1,), 2) == 1
    assert branching_multiplicity((1, 1), (1, 1), 2) == 1
    assert branching_multiplicity((1, 1), (), 2) == 1
    assert branching_multiplicity((2,), (2,), 2) == 1
    assert branching_multiplicity((2,), (), 2) == 0
    assert branching_multiplicity((2, 2), (1, 1), 3) == 1


def test_multiplicity_free():
    for lam in enumerate_partitions(6, 4):
        dec = decompose(restricted_gl_character(lam, 2), 2)
        assert all(m == 1 for m in dec.values()), lam
