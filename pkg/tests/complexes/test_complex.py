# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Complex tests."""

import pytest

from dgsheaves.complexes import (
    Complex,
    ComplexMorphism,
    cone,
    dghom,
    direct_sum,
    disk,
    evaluate,
    good_truncation,
    homology,
    in_window,
    is_local_equivalence,
    is_quasi_iso,
    sheafify_complex,
    shift,
    sphere,
    t_f_ker_check,
)
from dgsheaves.errors import CompositionNonzeroError, NotChainMapError, ValidityError
from dgsheaves.exactalg import ZZ, FpModule, ModuleMap
from dgsheaves.site import ModPresheaf, PresheafMap


def _invariants(K, n):
    H = homology(K, n)
    return {c: H.values[c].invariants for c in K.site.objects}


def _acyclic(K):
    return all(homology(K, n).is_zero() for n in K.degrees())


def test_sphere_homology(arrow):
    S = sphere(arrow, "v", ZZ, 1)
    assert _invariants(S, 1) == {"u": (1, ()), "v": (1, ())}
    assert homology(S, 0).is_zero()
    assert S.is_semi_representable()
    assert S.is_connective()


def test_disk_is_acyclic(arrow):
    for c in arrow.objects:
        assert _acyclic(disk(arrow, c, ZZ, 2))


def test_composition_nonzero():
    Z = FpModule.free(ZZ, 1)
    with pytest.raises(CompositionNonzeroError):
        Complex.of_modules(
            ZZ, {0: Z, 1: Z, 2: Z}, {1: ModuleMap.identity(Z), 2: ModuleMap.identity(Z)}
        )


def test_not_a_chain_map(arrow):
    D, S = disk(arrow, "u", ZZ, 1), sphere(arrow, "u", ZZ, 0)
    identity = PresheafMap.identity(D.level(0)).with_ends(D.level(0), S.level(0))
    with pytest.raises(NotChainMapError):
        ComplexMorphism(D, S, {0: identity})


def test_validity():
    Z = FpModule.free(ZZ, 1)
    K = Complex.of_modules(ZZ, {0: Z}, validity=(0, None))
    assert in_window(3, K.validity)
    with pytest.raises(ValidityError):
        K.homology_data(-1)


def test_cone(arrow):
    S = sphere(arrow, "v", ZZ, 0)
    assert _acyclic(cone(ComplexMorphism.identity(S)))
    C = cone(ComplexMorphism.zero(Complex.zero(arrow, ZZ), S))
    assert _invariants(C, 0) == _invariants(S, 0)


def test_shift(arrow):
    S = shift(sphere(arrow, "u", ZZ, 0), 2)
    assert (S.lo, S.hi) == (-2, -2)
    assert _invariants(S, -2)["u"] == (1, ())


def test_direct_sum(arrow):
    K, L = sphere(arrow, "u", ZZ, 0), disk(arrow, "v", ZZ, 1)
    total, injections, projections = direct_sum([K, L])
    for inj, proj, X in zip(injections, projections, (K, L)):
        assert (proj @ inj).equals(ComplexMorphism.identity(X))
    assert is_quasi_iso(projections[0]).holds
    assert projections[0].is_degreewise_surjective()
    assert t_f_ker_check(projections[0]).holds


def test_good_truncation(arrow):
    total, _, _ = direct_sum([sphere(arrow, "u", ZZ, 0), sphere(arrow, "v", ZZ, 1)])
    T, inclusion = good_truncation(total, 1)
    assert T.lo == 1
    assert _invariants(T, 1) == _invariants(total, 1)
    assert inclusion.is_degreewise_injective([1])


def test_evaluate(arrow):
    K = evaluate(sphere(arrow, "v", ZZ, 0), "u")
    assert K.site.objects == ["*"]
    assert homology(K, 0).values["*"].invariants == (1, ())


def test_sheafify_complex(pseudocircle):
    F = ModPresheaf.constant(pseudocircle, FpModule.free(ZZ, 1))
    K = Complex.concentrated(F, 0)
    aK, unit = sheafify_complex(K)
    assert is_local_equivalence(unit).holds
    assert not is_quasi_iso(unit).holds
    assert homology(aK, 0).values["E"].is_zero()


def test_dghom():
    Z = FpModule.free(ZZ, 1)
    S0 = Complex.of_modules(ZZ, {0: Z})
    S2 = Complex.of_modules(ZZ, {2: Z})
    H = dghom(S0, S2)
    assert homology(H, 2).values["*"].invariants == (1, ())
    D1 = Complex.of_modules(ZZ, {1: Z, 0: Z}, {1: ModuleMap.identity(Z)})
    assert _acyclic(dghom(D1, S0))
