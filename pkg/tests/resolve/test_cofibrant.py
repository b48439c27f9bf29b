# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Cofibrant replacement and cofibration certificates."""

import random

import pytest

from dgsheaves.checks.generators import random_presheaf_complex
from dgsheaves.complexes import (
    Complex,
    ComplexMorphism,
    generator_morphism,
    in_window,
    is_quasi_iso,
    module_presheaf,
)
from dgsheaves.errors import StrategyError
from dgsheaves.exactalg import ZZ, FpModule, prime_field
from dgsheaves.resolve import (
    EXHAUSTIVE,
    certify_cofibration,
    cofibrant_replace,
    derived_hom,
    sr_resolution,
    sr_step,
)
from dgsheaves.site import ModPresheaf

F2 = prime_field(2)


@pytest.fixture(scope="module")
def z2():
    """``S⁰(ℤ/2)`` over the terminal site."""
    return Complex.of_modules(ZZ, {0: FpModule.cyclic(ZZ, 2)})


def test_sr_step_of_cyclic_module():
    step = sr_step(module_presheaf(FpModule.cyclic(ZZ, 2)))
    assert step.summary() == ["*"]
    assert step.source.values["*"] == FpModule.free(ZZ, 1)
    assert step.kernel.values["*"] == FpModule.free(ZZ, 1)
    assert step.cover.is_surjective()


def test_resolution_of_cyclic_module(z2):
    resolution = cofibrant_replace(z2, 3)
    QK, augmentation, validity = resolution
    assert resolution.fully_resolved
    assert resolution.summands() == {0: ["*"], 1: ["*"]}
    assert QK.homology_data(0).presheaf.values["*"] == FpModule.cyclic(ZZ, 2)
    assert QK.homology_data(1).presheaf.is_zero()
    assert augmentation.is_degreewise_surjective()
    assert is_quasi_iso(augmentation).holds
    data = resolution.to_dict()
    assert data["strategy"] == "economical"
    assert data["summands"] == {"0": ["*"], "1": ["*"]}


def test_truncated_resolution(z2):
    resolution = cofibrant_replace(z2, 1)
    assert not resolution.fully_resolved


@pytest.mark.parametrize("seed", range(4))
def test_random_resolution(arrow, seed):
    K = random_presheaf_complex(random.Random(seed), arrow, F2, -1, 1, pieces=2)
    QK, augmentation, validity = cofibrant_replace(K)
    degrees = [n for n in augmentation.degrees() if in_window(n, validity)]
    assert augmentation.is_degreewise_surjective(degrees)
    assert is_quasi_iso(augmentation).holds
    assert QK.is_semi_representable()


def test_exhaustive_resolution_of_representable(arrow):
    F = ModPresheaf.representable(arrow, "u", F2)
    resolution = sr_resolution(F, strategy=EXHAUSTIVE)
    assert resolution.fully_resolved
    assert resolution.summands() == {0: ["u"]}
    _, augmentation, _ = resolution
    assert augmentation.component(0).is_isomorphism()


def test_exhaustive_needs_finite_values(arrow):
    F = ModPresheaf.representable(arrow, "u", ZZ)
    with pytest.raises(StrategyError):
        sr_resolution(F, strategy=EXHAUSTIVE)


def test_bad_strategy_and_depth(z2):
    with pytest.raises(StrategyError):
        cofibrant_replace(z2, 2, strategy="greedy")
    with pytest.raises(StrategyError):
        cofibrant_replace(z2, 0)


def test_derived_hom_of_cyclic_module(z2):
    L = Complex.of_modules(ZZ, {0: FpModule.free(ZZ, 1)})
    assert derived_hom(z2, L, -1).module == FpModule.cyclic(ZZ, 2)
    assert derived_hom(z2, L, 0).module.invariants == (0, ())


@pytest.mark.parametrize("kind", ["I", "J"])
def test_generators_are_cofibrations(arrow, kind):
    for c in arrow.objects:
        certificate = certify_cofibration(generator_morphism(kind, 1, c, arrow, ZZ))
        assert certificate.certified
        assert certificate.to_dict()["reason"] is None


def test_resolution_is_cell_complex(z2):
    QK = cofibrant_replace(z2, 3).complex
    certificate = certify_cofibration(ComplexMorphism.zero(Complex.zero(QK.site, ZZ), QK))
    assert certificate
    tower = certify_cofibration(
        ComplexMorphism.zero(Complex.zero(QK.site, ZZ), QK), tower=True
    )
    assert tower.certified
    assert len(tower.to_dict()["transitions"]) == 2


def test_refused_certificate(arrow):
    S = generator_morphism("I", 1, "u", arrow, ZZ).source
    certificate = certify_cofibration(ComplexMorphism.zero(S, S))
    assert not certificate.certified
    assert certificate.reason == "not injective in degree 0"
    assert "refused" in repr(certificate)
