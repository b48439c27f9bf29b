# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Coefficient ring tests."""

from fractions import Fraction

import pytest

from dgsheaves.errors import InvalidRingError
from dgsheaves.exactalg import QQ, ZZ, CoefficientRing, prime_field


def test_from_tag():
    assert CoefficientRing.from_tag("Z") == ZZ
    assert CoefficientRing.from_tag({"ring": "Q"}) == QQ
    F5 = CoefficientRing.from_tag({"ring": "Fp", "p": 5})
    assert F5 == prime_field(5)
    assert str(F5) == "F5"
    assert F5.to_tag() == {"ring": "Fp", "p": 5}
    assert ZZ.to_tag() == {"ring": "Z"}


@pytest.mark.parametrize(
    "tag",
    ["R", {"ring": "Fp"}, {"ring": "Fp", "p": 4}, {"ring": "Fp", "p": "x"}, {"p": 3}],
)
def test_invalid_tags(tag):
    with pytest.raises(InvalidRingError):
        CoefficientRing.from_tag(tag)


def test_coerce():
    F5 = prime_field(5)
    assert F5.coerce(7) == 2
    assert F5.coerce("-1") == 4
    assert F5.coerce("1/2") == 3
    assert QQ.coerce("1/2") == Fraction(1, 2)
    assert ZZ.coerce("-3") == -3
    with pytest.raises(InvalidRingError):
        ZZ.coerce("1/2")
    with pytest.raises(InvalidRingError):
        F5.coerce("1/5")


def test_units_and_division():
    assert ZZ.is_unit(-1) and not ZZ.is_unit(2)
    assert prime_field(3).inverse(2) == 2
    assert ZZ.divides(2, 6) and not ZZ.divides(4, 6)
    assert ZZ.divides(0, 0) and not ZZ.divides(0, 1)
    assert not ZZ.is_field and QQ.is_field and prime_field(2).is_field
