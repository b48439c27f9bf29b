# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Smith normal form tests."""

import random
from math import prod

import pytest
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from dgsheaves.checks.generators import random_matrix
from dgsheaves.checks.oracles import determinantal_invariants
from dgsheaves.errors import DimensionError, FieldPathError
from dgsheaves.exactalg import (
    QQ,
    ZZ,
    ExactMatrix,
    image_basis,
    invariant_factors,
    kernel_basis,
    prime_field,
    rank_reduction,
    smith_normal_form,
    solve,
)


def _m(rows, ring=ZZ):
    return ExactMatrix.from_rows(ring, rows)


def test_diagonal_matrix():
    S = smith_normal_form(_m([[2, 0], [0, 3]]))
    assert list(S.diagonal) == [1, 6]
    assert S.check()


def test_known_factors():
    assert invariant_factors(_m([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])) == [2, 6, 12]
    assert invariant_factors(_m([[0, 0], [0, 0]])) == []
    assert invariant_factors(ExactMatrix.zero(ZZ, 0, 3)) == []


def test_rationals_take_the_field_path():
    M = _m([[1, 2], [2, 4]], QQ)
    with pytest.raises(FieldPathError):
        smith_normal_form(M)
    assert rank_reduction(M).rank == 1
    with pytest.raises(FieldPathError):
        rank_reduction(_m([[1]]))


def test_prime_field():
    F3 = prime_field(3)
    S = smith_normal_form(_m([[1, 2], [2, 1]], F3))
    assert S.rank == 1
    assert S.check()


def test_against_determinantal_divisors():
    rng = random.Random(17)
    for _ in range(50):
        M = random_matrix(rng, ZZ, rng.randint(1, 4), rng.randint(1, 4), 5)
        rows = [list(r) for r in M.rows]
        assert invariant_factors(M) == determinantal_invariants(rows)
        assert smith_normal_form(M).check()


def test_against_sympy():
    rng = random.Random(23)
    for _ in range(20):
        n = rng.randint(1, 4)
        M = random_matrix(rng, ZZ, n, n, 5)
        D = sympy_snf(Matrix([list(r) for r in M.rows]))
        expected = [abs(D[i, i]) for i in range(n) if D[i, i] != 0]
        factors = invariant_factors(M)
        assert len(factors) == len(expected)
        assert prod(factors) == prod(expected)


def test_solve():
    A = _m([[2, 0], [0, 3]])
    X = solve(A, _m([[4], [9]]))
    assert A @ X == _m([[4], [9]])
    assert solve(A, _m([[1], [0]])) is None
    with pytest.raises(DimensionError):
        solve(A, _m([[1]]))


def test_kernel_and_image():
    A = _m([[1, 2, 3], [2, 4, 6]])
    K = kernel_basis(A)
    assert K.ncols == 2
    assert (A @ K).is_zero()
    I = image_basis(A)
    assert I.ncols == 1
    assert solve(A, I) is not None
