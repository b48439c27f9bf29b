# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Site tests."""

import pytest

from dgsheaves.errors import UnknownObjectError, UnknownPointError
from dgsheaves.exactalg import ZZ, FpModule
from dgsheaves.fixtures import constant_sheaf, fixture_names
from dgsheaves.site import (
    FinCategory,
    ModPresheaf,
    Site,
    conservativity_certificate,
    is_sheaf,
    require_object,
    sheafify,
    stalk,
    validate_points,
    validate_site,
)


@pytest.mark.parametrize("name", ["terminal", "pseudocircle", "arrow", "chain"])
def test_fixtures_are_valid(name, request):
    site = request.getfixturevalue(name)
    report = validate_site(site)
    assert report.valid, report.problems
    assert report.to_dict() == {"valid": True, "problems": []}
    assert validate_points(site) == []
    assert all(conservativity_certificate(site).values())


def test_fixture_names():
    assert fixture_names() == ["arrow", "chain", "pseudocircle", "terminal"]


def test_pseudocircle_shape(pseudocircle):
    assert sorted(pseudocircle.objects) == ["E", "Ua", "Uab", "Ub", "Ux", "Uy", "X"]
    assert [p.id for p in pseudocircle.points] == ["a", "b", "x", "y"]
    assert pseudocircle.point("x").minimal == "Ux"
    assert pseudocircle.sieve_generators("X") == ["Ux->X", "Uy->X"]
    with pytest.raises(UnknownPointError):
        pseudocircle.point("z")


def test_missing_cover_is_reported():
    cat = FinCategory.poset(["u", "v"], [("u", "v")])
    site = Site(cat, {"v": [("v->v",)]})
    report = validate_site(site)
    assert not report.valid
    assert "object u has no covering family" in report.problems


def test_unknown_object():
    with pytest.raises(UnknownObjectError):
        FinCategory(["a"], [("f", "a", "b")], [])


def test_require_object(arrow):
    assert require_object(arrow, "u") == "u"
    with pytest.raises(UnknownObjectError):
        require_object(arrow, "w")


def test_representables(arrow):
    yu = ModPresheaf.representable(arrow, "u", ZZ)
    yv = ModPresheaf.representable(arrow, "v", ZZ)
    assert yu.values["u"].free_rank == 1
    assert yu.values["v"].is_zero()
    assert yv.values["u"].free_rank == 1
    assert yv.values["v"].free_rank == 1
    assert yu.is_semi_representable()


def test_constant_sheaf(pseudocircle):
    F = ModPresheaf.constant(pseudocircle, FpModule.free(ZZ, 1))
    assert not is_sheaf(F)
    aF, unit = sheafify(F)
    assert is_sheaf(aF)
    assert aF.values["E"].is_zero()
    assert aF.values["Uab"].invariants == (2, ())
    assert aF.values["Ux"].invariants == (1, ())
    assert aF.values["X"].invariants == (1, ())
    assert unit.component("X").is_isomorphism()
    assert not unit.component("Uab").is_surjective()
    for point in pseudocircle.points:
        assert stalk(aF, point).invariants == (1, ())
    assert constant_sheaf(pseudocircle).values["Uab"] == aF.values["Uab"]


def test_trivial_coverage_sheaves(arrow):
    F = ModPresheaf.constant(arrow, FpModule.cyclic(ZZ, 3))
    assert is_sheaf(F)
