# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Godement resolution tests."""

import random

import pytest

from dgsheaves.checks.generators import random_presheaf_complex
from dgsheaves.complexes import direct_sum, evaluate, is_local_equivalence, sheafify_complex
from dgsheaves.errors import StrategyError
from dgsheaves.exactalg import ZZ, FpModule
from dgsheaves.fixtures import zcst
from dgsheaves.godement import (
    descent_degrees,
    exactness_check,
    godement_cosimplicial,
    godement_resolution,
    multiplication_sequence,
    point_pullback_pushforward,
    truncation_check,
    verify_fibrant_replacement,
)
from dgsheaves.hypercover import cech_nerve, descent_check


@pytest.fixture(scope="module")
def nerve(pseudocircle):
    """Čech nerve of the cover of X by Ux and Uy."""
    return cech_nerve(pseudocircle, pseudocircle.sieve_generators("X"), 3, target="X")


@pytest.fixture(scope="module")
def god_zcst(zcst_pc):
    """Godement resolution of the constant sheaf."""
    return godement_resolution(zcst_pc, 3)


def test_cosimplicial_identities(zcst_pc):
    G = godement_cosimplicial(zcst_pc, 2)
    assert G.check_identities()


def test_negative_height(zcst_pc):
    with pytest.raises(StrategyError):
        godement_resolution(zcst_pc, -1)


def test_unit_is_local_equivalence(god_zcst):
    assert is_local_equivalence(god_zcst.unit).holds
    data = god_zcst.to_dict()
    assert data["q_max"] == 3
    assert data["window"][1] == 0


def test_resolution_descends(god_zcst, nerve):
    godK = god_zcst.complex
    report = descent_check(godK, nerve, descent_degrees(godK, nerve))
    assert report.passed
    assert report.obstructions == []


def test_terminal_site_resolution(terminal):
    godK, unit, _ = godement_resolution(zcst(terminal), 2)
    assert evaluate(godK, "*").homology_data(0).presheaf.values["*"] == FpModule.free(ZZ, 1)
    assert evaluate(godK, "*").homology_data(-1).presheaf.is_zero()
    assert unit.component(0).is_injective()


def test_fibrant_replacement(zcst_pc, nerve):
    report = verify_fibrant_replacement(zcst_pc, [nerve], q_max=3)
    assert report.passed
    assert set(report.to_dict()["checks"]) == {
        "descent",
        "local_equivalence",
        "surjection",
        "levelwise",
    }


def test_fibrant_replacement_of_reduction(zcst_pc, nerve):
    _, reduction = multiplication_sequence(zcst_pc)
    assert reduction.target.level(0).values["X"].describe() == "Z/2"
    assert not reduction.component(0).is_injective()
    report = verify_fibrant_replacement(zcst_pc, [nerve], q_max=3, surjection=reduction)
    assert report.checks["surjection"]
    assert report.details["surjection"]["surjective"]


@pytest.mark.parametrize("seed", range(3))
def test_truncation_agrees(pseudocircle, seed):
    K = random_presheaf_complex(random.Random(seed), pseudocircle, ZZ, 0, 1, pieces=2)
    _, unit = sheafify_complex(K)
    result = truncation_check(unit)
    assert result["agree"]
    assert result["local_equivalence"]


def test_god_keeps_sequences_exact(pseudocircle):
    rng = random.Random(4)
    K = random_presheaf_complex(rng, pseudocircle, ZZ, 0, 0, pieces=1)
    L = random_presheaf_complex(rng, pseudocircle, ZZ, 0, 0, pieces=1)
    _, injections, projections = direct_sum([K, L])
    verdict = exactness_check(injections[0], projections[1], q_max=2)
    assert verdict.holds


def test_god_keeps_non_split_sequence_exact(zcst_pc):
    times, reduction = multiplication_sequence(zcst_pc)
    verdict = exactness_check(times, reduction, q_max=2)
    assert verdict
    assert verdict.holds


def test_point_pullback_pushforward(zcst_pc):
    TK, unit = point_pullback_pushforward(zcst_pc)
    level = TK.level(0)
    assert level.values["X"].invariants == (4, ())
    assert level.values["Ux"].invariants == (3, ())
    assert level.values["Ua"].invariants == (1, ())
    assert level.values["E"].is_zero()
    assert unit.component(0).component("X").is_injective()
