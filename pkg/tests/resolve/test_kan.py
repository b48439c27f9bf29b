# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Enriched Kan extensions."""

import random

import pytest

from dgsheaves.checks.generators import inclusion_chain_functor, scaled_chain_functor
from dgsheaves.complexes import Complex, ComplexMorphism, direct_sum, disk, sphere
from dgsheaves.errors import NonFunctorialError
from dgsheaves.exactalg import ZZ, FpModule, modules_isomorphic
from dgsheaves.resolve import KanData, derived_kan_extend, kan_extend, kan_unit


@pytest.mark.parametrize("seed", range(4))
def test_unit_is_isomorphism(arrow, seed):
    gamma = inclusion_chain_functor(random.Random(seed), arrow, ZZ)
    for c in arrow.objects:
        unit, iso = kan_unit(gamma, c)
        assert iso
        assert unit.source is gamma.values[c]


def test_kan_extension_of_representable(chain):
    gamma = inclusion_chain_functor(random.Random(1), chain, ZZ)
    for c in chain.objects:
        T = kan_extend(gamma, sphere(chain, c, ZZ, 0))
        for q in gamma.values[c].degrees():
            expected = gamma.values[c].homology_data(q).presheaf.values["*"]
            assert T.homology_data(q).presheaf.values["*"] == expected


def test_derived_kan_extension_of_representable(arrow):
    gamma = inclusion_chain_functor(random.Random(2), arrow, ZZ)
    T = derived_kan_extend(gamma, sphere(arrow, "v", ZZ, 1), depth=2)
    for q in gamma.values["v"].degrees():
        expected = gamma.values["v"].homology_data(q).presheaf.values["*"]
        assert T.homology_data(q + 1).presheaf.values["*"] == expected


def test_kan_extension_of_zero(arrow):
    gamma = inclusion_chain_functor(random.Random(3), arrow, ZZ)
    assert kan_extend(gamma, Complex.zero(arrow, ZZ)).is_zero()


def test_missing_functor_value(arrow):
    M = Complex.of_modules(ZZ, {0: FpModule.free(ZZ, 1)})
    with pytest.raises(NonFunctorialError):
        KanData(arrow, {"u": M, "v": M})


def test_non_functorial_values(arrow):
    M = Complex.of_modules(ZZ, {0: FpModule.free(ZZ, 1)})
    N = Complex.of_modules(ZZ, {0: FpModule.free(ZZ, 2)})
    data = KanData(arrow, {"u": M, "v": N}, {"u->v": ComplexMorphism.zero(M, N)})
    assert data.functoriality_problems() == []
    zero = ComplexMorphism.zero(M, M)
    with pytest.raises(NonFunctorialError):
        KanData(arrow, {"u": M, "v": M}, {"u->u": zero, "u->v": zero})


def _homology_at_point(T, q):
    if q not in T.degrees():
        return FpModule.zero(ZZ)
    return T.homology_data(q).presheaf.values["*"]


@pytest.mark.parametrize("functor", [inclusion_chain_functor, scaled_chain_functor])
@pytest.mark.parametrize("seed", range(3))
def test_kan_extension_is_additive(arrow, functor, seed):
    gamma = functor(random.Random(seed), arrow, ZZ)
    K = sphere(arrow, "u", ZZ, 0)
    L, _, _ = direct_sum([sphere(arrow, "v", ZZ, 1), disk(arrow, "u", ZZ, 2)])
    total, _, _ = direct_sum([K, L])
    T, TK, TL = kan_extend(gamma, total), kan_extend(gamma, K), kan_extend(gamma, L)
    for q in range(-1, 6):
        expected = FpModule.direct_sum(
            ZZ, [_homology_at_point(TK, q), _homology_at_point(TL, q)]
        )
        assert modules_isomorphic(_homology_at_point(T, q), expected)
