# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Hypercohomology of the constant sheaf on the pseudocircle."""

import pytest

from dgsheaves.errors import DGSheavesError, UnknownObjectError
from dgsheaves.exactalg import ZZ, prime_field
from dgsheaves.fixtures import zcst
from dgsheaves.godement import CECH_COLIMIT, GODEMENT, hypercohomology, refine

EXPECTED = {0: (1, ()), 1: (1, ()), 2: (0, ())}


@pytest.mark.parametrize("method", [GODEMENT, CECH_COLIMIT])
@pytest.mark.parametrize("ring", [ZZ, prime_field(2)])
@pytest.mark.parametrize("n", [0, 1, 2])
def test_hypercohomology_of_circle(pseudocircle, method, ring, n):
    report = hypercohomology("X", zcst(pseudocircle, ring), n, method)
    assert report.module.invariants == EXPECTED[n]
    assert report.method == method
    assert report.object == "X"
    assert report.degree == n


def test_report_data(zcst_pc):
    data = hypercohomology("X", zcst_pc, 1, CECH_COLIMIT).to_dict()
    assert data["module"] == "Z"
    assert data["invariants"] == {"free_rank": 1, "torsion": []}
    assert data["stabilized"] is True
    godement = hypercohomology("X", zcst_pc, 1, GODEMENT).to_dict()
    assert "stabilized" not in godement


def test_sections_over_an_open_point(zcst_pc):
    assert hypercohomology("Ua", zcst_pc, 0).module.invariants == (1, ())
    assert hypercohomology("Uab", zcst_pc, 0).module.invariants == (2, ())
    assert hypercohomology("Uab", zcst_pc, 1).module.invariants == (0, ())


def test_refine_is_stable_on_minimal_covers(pseudocircle):
    family = pseudocircle.sieve_generators("X")
    assert refine(pseudocircle, family) == family


def test_unknown_method_and_object(zcst_pc):
    with pytest.raises(DGSheavesError):
        hypercohomology("X", zcst_pc, 0, "simplicial")
    with pytest.raises(UnknownObjectError):
        hypercohomology("Z", zcst_pc, 0)
