# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Poset nerves and linearization."""

import pytest

from dgsheaves.errors import SetValuedError, TruncationError
from dgsheaves.exactalg import ZZ, FpModule
from dgsheaves.simplicial import homotopy_groups, linearize, moore, point_object, poset_nerve


@pytest.fixture(scope="module")
def interval(terminal):
    """Nerve of the poset a <= b."""
    return poset_nerve(terminal, {"*": (["a", "b"], [("a", "b")])}, {}, 2)


def test_nerve_levels(interval):
    assert interval.level(0).values["*"] == [("a",), ("b",)]
    assert sorted(interval.level(1).values["*"]) == [("a", "a"), ("a", "b"), ("b", "b")]
    assert len(interval.level(2).values["*"]) == 4
    assert interval.check_identities()
    with pytest.raises(TruncationError):
        interval.level(3)


def test_set_valued_needs_linearizing(interval):
    with pytest.raises(SetValuedError):
        moore(interval)


def test_linearized_interval_is_contractible(interval):
    X = linearize(interval, ZZ)
    assert homotopy_groups(X, 0).values["*"] == FpModule.free(ZZ, 1)
    assert homotopy_groups(X, 1).is_zero()


def test_point_object(pseudocircle):
    X = linearize(point_object(pseudocircle, 2), ZZ)
    assert X.check_identities()
    for c in pseudocircle.objects:
        assert homotopy_groups(X, 0).values[c] == FpModule.free(ZZ, 1)
