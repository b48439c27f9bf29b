# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Finitely presented module tests."""

import random

import pytest
from sympy import Matrix, ilcm

from dgsheaves.checks.generators import unimodular
from dgsheaves.checks.oracles import determinantal_invariants
from dgsheaves.errors import (
    CompositionNonzeroError,
    DimensionError,
    FactorizationError,
    IllDefinedMapError,
    RingMismatchError,
)
from dgsheaves.exactalg import (
    QQ,
    ZZ,
    ExactMatrix,
    FpModule,
    ModuleMap,
    hom_module,
    homology_of_pair,
    modules_isomorphic,
    prime_field,
)


def _map(source, target, rows):
    return ModuleMap(
        source, target, ExactMatrix(source.ring, target.generators, source.generators, rows)
    )


def test_invariants():
    M = FpModule.direct_sum(ZZ, [FpModule.free(ZZ, 2), FpModule.cyclic(ZZ, 6), FpModule.cyclic(ZZ, 1)])
    assert M.invariants == (2, (6,))
    assert M.describe() == "Z^2 + Z/6"
    assert M.invariants_json() == {"free_rank": 2, "torsion": ["6"]}
    assert FpModule.zero(ZZ).describe() == "0"
    assert FpModule.free(prime_field(2), 1).describe() == "F2"


def test_equality_by_invariants():
    a = FpModule(ZZ, 2, ExactMatrix.from_rows(ZZ, [[2, 0], [0, 3]]))
    assert a == FpModule.cyclic(ZZ, 6)
    assert modules_isomorphic(a, FpModule.cyclic(ZZ, 6))
    with pytest.raises(RingMismatchError):
        modules_isomorphic(a, FpModule.free(QQ, 1))


def test_bad_presentation():
    with pytest.raises(DimensionError):
        FpModule(ZZ, 2, ExactMatrix.zero(ZZ, 1, 1))


def test_finite_elements():
    M = FpModule.cyclic(ZZ, 4)
    assert M.is_finite()
    assert M.cardinality() == 4
    assert len(list(M.elements())) == 4
    assert M.is_zero_element([8])
    assert M.equal_elements([1], [5])
    assert FpModule.free(prime_field(3), 2).cardinality() == 9
    assert FpModule.free(ZZ, 1).cardinality() is None


def test_ill_defined_map():
    with pytest.raises(IllDefinedMapError):
        _map(FpModule.cyclic(ZZ, 2), FpModule.free(ZZ, 1), [[1]])
    assert _map(FpModule.cyclic(ZZ, 2), FpModule.cyclic(ZZ, 4), [[2]])


def test_kernel_cokernel():
    f = _map(FpModule.free(ZZ, 1), FpModule.free(ZZ, 1), [[2]])
    K, _ = f.kernel()
    C, projection = f.cokernel()
    assert K.is_zero()
    assert C == FpModule.cyclic(ZZ, 2)
    assert f.is_injective() and not f.is_surjective()
    assert projection.is_surjective()


def test_lift():
    inclusion = _map(FpModule.free(ZZ, 1), FpModule.free(ZZ, 1), [[2]])
    f = _map(FpModule.free(ZZ, 1), FpModule.free(ZZ, 1), [[4]])
    g = f.lift(inclusion)
    assert (inclusion @ g).equals(f)
    with pytest.raises(FactorizationError):
        _map(FpModule.free(ZZ, 1), FpModule.free(ZZ, 1), [[1]]).lift(inclusion)


def test_homology():
    Z = FpModule.free(ZZ, 1)
    two = _map(Z, Z, [[2]])
    zero = ModuleMap.zero(Z, Z)
    assert homology_of_pair(two, zero) == FpModule.cyclic(ZZ, 2)
    with pytest.raises(CompositionNonzeroError):
        homology_of_pair(two, two)


def test_hom_module():
    H, _ = hom_module(FpModule.cyclic(ZZ, 2), FpModule.cyclic(ZZ, 4))
    assert H == FpModule.cyclic(ZZ, 2)
    H, _ = hom_module(FpModule.cyclic(ZZ, 2), FpModule.free(ZZ, 1))
    assert H.is_zero()


def test_tensor():
    T = FpModule.cyclic(ZZ, 4).tensor(FpModule.cyclic(ZZ, 6))
    assert T == FpModule.cyclic(ZZ, 2)


def _free_map(rows, ncols):
    source, target = FpModule.free(ZZ, ncols), FpModule.free(ZZ, len(rows))
    return ModuleMap(source, target, ExactMatrix(ZZ, len(rows), ncols, rows))


def _kernel_columns(rows, ncols):
    """Integral basis of the rational kernel, denominators cleared."""
    columns = []
    for v in Matrix(len(rows), ncols, [x for r in rows for x in r]).nullspace():
        scale = ilcm(*[x.q for x in v]) if len(v) > 1 else v[0].q
        columns.append([int(x * scale) for x in v])
    return columns


def _random_pair(rng):
    """``(d_in, d_out)`` with ``d_out d_in = 0`` and entries in ``[-5, 5]``."""
    k, m, j = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
    while True:
        if rng.random() < 0.25:
            d_out = [[0] * k for _ in range(m)]
        else:
            d_out = [[rng.randint(-5, 5) for _ in range(k)] for _ in range(m)]
        basis = _kernel_columns(d_out, k)
        columns = []
        for _ in range(j):
            c = [0] * k
            for b in basis:
                coefficient = rng.randint(-2, 2)
                c = [x + coefficient * y for x, y in zip(c, b)]
            columns.append(c)
        d_in = [[columns[col][row] for col in range(j)] for row in range(k)]
        if all(-5 <= x <= 5 for r in d_in for x in r):
            return d_in, d_out, j, k


def _naive_homology(d_in, d_out, j, k):
    """``(rank, torsion)`` of ``ker(d_out) / im(d_in)`` over ℤ.

    ``ker(d_out)`` is saturated, so the torsion is that of ``coker(d_in)``.
    """
    rank_out = Matrix(len(d_out), k, [x for r in d_out for x in r]).rank()
    rank_in = Matrix(k, j, [x for r in d_in for x in r]).rank()
    torsion = tuple(d for d in determinantal_invariants(d_in) if d != 1)
    return k - rank_out - rank_in, torsion


@pytest.mark.parametrize("seed", range(8))
def test_homology_against_naive_oracle(seed):
    rng = random.Random(seed)
    for _ in range(6):
        d_in, d_out, j, k = _random_pair(rng)
        H = homology_of_pair(_free_map(d_in, j), _free_map(d_out, k))
        assert H.invariants == _naive_homology(d_in, d_out, j, k)


def test_homology_of_zero_differentials():
    Z3 = FpModule.free(ZZ, 3)
    zero = ModuleMap.zero(Z3, Z3)
    assert homology_of_pair(zero, zero) == Z3


def test_homology_of_invertible_differential():
    d_in = _free_map([[2, 1], [1, 1]], 2)
    d_out = ModuleMap.zero(d_in.target, FpModule.free(ZZ, 1))
    assert homology_of_pair(d_in, d_out).is_zero()


@pytest.mark.parametrize("seed", range(5))
def test_isomorphism_under_presentation_change(seed):
    rng = random.Random(seed)
    g, r = rng.randint(1, 3), rng.randint(1, 3)
    R = ExactMatrix(ZZ, g, r, [[rng.randint(-5, 5) for _ in range(r)] for _ in range(g)])
    M = FpModule(ZZ, g, R)
    P, _ = unimodular(rng, ZZ, g)
    Q, _ = unimodular(rng, ZZ, r)
    moved = P @ R @ Q
    # An extra generator ``e`` with the relation ``e = v``.
    v = [rng.randint(-3, 3) for _ in range(g)]
    rows = [moved.row(i) + [-v[i]] for i in range(g)] + [[0] * r + [1]]
    N = FpModule(ZZ, g + 1, ExactMatrix(ZZ, g + 1, r + 1, rows))
    assert modules_isomorphic(M, N)
    assert modules_isomorphic(N, M)
    assert not modules_isomorphic(N, FpModule.direct_sum(ZZ, [M, FpModule.free(ZZ, 1)]))
