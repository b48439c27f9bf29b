# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Generating cofibrations and lifting tests."""

import random

import pytest

from dgsheaves.checks.generators import disk_map, random_element, random_presheaf_complex
from dgsheaves.complexes import (
    Complex,
    ComplexMorphism,
    disk,
    generator_morphism,
    iprime_retract,
    rlp_solve,
)
from dgsheaves.errors import DGSheavesError, NonCommutingSquareError
from dgsheaves.exactalg import ZZ


@pytest.mark.parametrize("name", ["terminal", "arrow", "chain"])
def test_iprime_retract(name, request):
    site = request.getfixturevalue(name)
    for c in site.objects:
        for n in (-1, 0, 1, 2):
            data = iprime_retract(n, c, site, ZZ).to_dict()
            assert data["rows_identity"]
            assert data["squares_commute"]


def test_generator_shapes(arrow):
    i = generator_morphism("I", 1, "u", arrow, ZZ)
    assert (i.source.lo, i.source.hi) == (0, 0)
    assert (i.target.lo, i.target.hi) == (0, 1)
    j = generator_morphism("J", 1, "u", arrow, ZZ)
    assert j.source.is_zero()
    with pytest.raises(DGSheavesError):
        generator_morphism("K", 1, "u", arrow, ZZ)


def test_lift_against_identity(arrow):
    rng = random.Random(3)
    K = random_presheaf_complex(rng, arrow, ZZ, 0, 1, pieces=2)
    identity = ComplexMorphism.identity(K)
    for c in arrow.objects:
        i = generator_morphism("I", 1, c, arrow, ZZ)
        x = random_element(rng, K.level(1).values[c])
        v = disk_map(i.target, K, 1, c, x)
        u = v @ i
        h = rlp_solve(i, identity, u, v)
        assert h is not None
        assert (h @ i).equals(u)
        assert h.equals(v)


def test_j_square_without_filler(arrow):
    j = generator_morphism("J", 1, "u", arrow, ZZ)
    D = j.target
    zero = Complex.zero(arrow, ZZ)
    f = ComplexMorphism.zero(zero, D)
    assert rlp_solve(j, f, ComplexMorphism.zero(zero, zero), ComplexMorphism.identity(D)) is None


def test_non_commuting_square(arrow):
    i = generator_morphism("I", 1, "u", arrow, ZZ)
    D = i.target
    f = ComplexMorphism.identity(D)
    with pytest.raises(NonCommutingSquareError):
        rlp_solve(i, f, ComplexMorphism.zero(i.source, D), ComplexMorphism.identity(D))


def test_disk_generator_is_disk(arrow):
    D = generator_morphism("I", 2, "v", arrow, ZZ).target
    other = disk(arrow, "v", ZZ, 2)
    assert [D.level(n).values for n in (1, 2)] == [other.level(n).values for n in (1, 2)]
