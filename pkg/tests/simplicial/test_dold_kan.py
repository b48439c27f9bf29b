# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Dold-Kan tests."""

import random

import pytest

from dgsheaves.checks.generators import random_module_complex, random_presheaf_complex
from dgsheaves.complexes import is_quasi_iso, module_presheaf, sphere
from dgsheaves.errors import NonConnectiveError
from dgsheaves.exactalg import ZZ, FpModule
from dgsheaves.simplicial import (
    SimplicialObject,
    epi_mono,
    gamma,
    gamma_comparison,
    homotopy_groups,
    moore,
    normalize,
    surjections,
)


def test_surjections():
    assert surjections(2, 1) == [(0, 0, 1), (0, 1, 1)]
    assert surjections(3, 3) == [(0, 1, 2, 3)]
    assert surjections(2, 0) == [(0, 0, 0)]


def test_epi_mono():
    assert epi_mono((0, 0, 2)) == ((0, 0, 1), (0, 2))
    assert epi_mono((1, 1)) == ((0, 0), (1,))


def test_constant_object():
    M = module_presheaf(FpModule.free(ZZ, 2))
    X = SimplicialObject.constant(M, 3)
    assert X.check_identities()
    C = moore(X)
    assert C.homology_data(0).presheaf.values["*"] == FpModule.free(ZZ, 2)
    assert C.homology_data(1).presheaf.is_zero()
    assert C.homology_data(2).presheaf.is_zero()


@pytest.mark.parametrize("seed", range(5))
def test_gamma_identities(seed):
    C = random_module_complex(random.Random(seed), ZZ, 0, 2)
    assert gamma(C, 3).check_identities()


@pytest.mark.parametrize("seed", range(5))
def test_normalized_gamma_is_identity(seed):
    C = random_module_complex(random.Random(seed), ZZ, 0, 3)
    comparison, _ = gamma_comparison(C, 4)
    for n in comparison.source.degrees():
        assert comparison.component(n).is_isomorphism()


@pytest.mark.parametrize("seed", range(5))
def test_homotopy_is_homology(seed):
    C = random_module_complex(random.Random(seed), ZZ, 0, 3)
    G = gamma(C, 4)
    for n in range(4):
        assert homotopy_groups(G, n).values["*"] == C.homology_data(n).presheaf.values["*"]


def test_normalized_inclusion_quasi_iso(arrow):
    C = random_presheaf_complex(random.Random(7), arrow, ZZ, 0, 2, pieces=2)
    _, inclusion = normalize(gamma(C, 3))
    assert is_quasi_iso(inclusion).holds


def test_gamma_needs_connective(terminal):
    with pytest.raises(NonConnectiveError):
        gamma(sphere(terminal, "*", ZZ, -1), 2)
