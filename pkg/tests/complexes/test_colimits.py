# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Cell attachments and colimits of finite towers."""

import pytest

from dgsheaves.complexes import (
    ComplexMorphism,
    attach_cell,
    direct_sum,
    disk,
    homology,
    sequential_colimit_check,
    sphere,
    tower_colimit,
)
from dgsheaves.exactalg import ZZ

# ``K = S⁰Λ(u) ⊕ D¹Λ(v)``: kill ``H_0`` at u, attach a free 2-cell on v,
# then kill that 2-cell at u.
CELLS = [(1, "u", [1, 0]), (2, "v", [0]), (3, "u", [1])]


@pytest.fixture()
def projection(arrow):
    K, _, projections = direct_sum([sphere(arrow, "u", ZZ, 0), disk(arrow, "v", ZZ, 1)])
    return projections[0]


def test_attach_cell(arrow):
    S = sphere(arrow, "u", ZZ, 0)
    D, inclusion = attach_cell(S, 1, "u", [1])
    assert all(homology(D, n).is_zero() for n in D.degrees())
    assert inclusion.is_degreewise_injective()


def test_tower_colimit(arrow, projection):
    stages, steps = [projection.source], []
    for n, c, x in CELLS:
        K, step = attach_cell(stages[-1], n, c, x)
        stages.append(K)
        steps.append(step)
    colimit = tower_colimit(stages, steps)
    H = {n: homology(colimit.colimit, n) for n in (0, 1, 2)}
    assert H[0].is_zero() and H[1].is_zero()
    assert H[2].values["u"].invariants == (0, ())
    assert H[2].values["v"].invariants == (1, ())
    assert len(colimit.cocone) == 4


def test_quasi_isomorphic_tower(projection):
    result = sequential_colimit_check(projection, CELLS)
    assert result["stages"] == [True, True, True, True]
    assert result["compatible"]
    assert result["comparison"]
    assert result["colimit"]
    assert result["passed"]


def test_tower_of_non_equivalences(arrow):
    S = sphere(arrow, "u", ZZ, 0)
    result = sequential_colimit_check(ComplexMorphism.zero(S, S), [(1, "u", [1])])
    assert result["stages"] == [False, False]
    assert result["colimit"] is False
    assert result["compatible"]
    assert result["passed"]
