# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""The chain complex ``Λ(c_•)`` of a hypercover and its acyclicity."""

from ..complexes import Complex, ComplexMorphism, homology_sheaf
from ..simplicial import SimplicialObject, moore
from ..site import ModPresheaf, sheafify_map, yoneda_extension


def _yoneda_levels(X, ring):
    return {
        n: ModPresheaf.semi_representable(X.site, X.levels[n], ring) for n in range(X.N + 1)
    }


def _summand_map(source, target, data):
    """Yoneda map sending summand ``j`` to the basis element ``data[j] = (j', φ)``."""
    elements = []
    for j, c in enumerate(source.summands):
        basis = target.yoneda_basis(c)
        vector = [source.ring.zero] * len(basis)
        vector[basis.index(tuple(data[j]))] = source.ring.one
        elements.append(vector)
    return yoneda_extension(source, elements, target)


def linear_hypercover(X, ring):
    """Levelwise ``⊕_j Λ(c_{n,j})`` as a module-valued simplicial object."""
    levels = _yoneda_levels(X, ring)
    faces = {k: _summand_map(levels[k[0]], levels[k[0] - 1], v) for k, v in X.faces.items()}
    degeneracies = {
        k: _summand_map(levels[k[0]], levels[k[0] + 1], v)
        for k, v in X.degeneracies.items()
        if k[0] + 1 in levels
    }
    return SimplicialObject(X.site, X.N, levels, faces, degeneracies, check=False)


def chain_of_hypercover(X, ring):
    """``(Λ(c_•), augmentation Λ(c_•) -> S⁰Λ(c))``.

    Every level carries its representable decomposition; homology is valid
    in degrees ``n <= N - 1``.
    """
    C = moore(linear_hypercover(X, ring))
    point = ModPresheaf.representable(X.site, X.target, ring)
    target = Complex.concentrated(point, 0)
    augmentation = _summand_map(
        C.level(0), point, [(0, a) for a in X.augmentation]
    )
    return C, ComplexMorphism(C, target, {0: augmentation}, check=False)


class AcyclicityReport:
    """Sheafified and plain verdicts per degree."""

    def __init__(self, sheafified, presheaf):
        """Constructor."""
        self.sheafified = sheafified
        self.presheaf = presheaf

    @property
    def passed(self):
        """Whether every sheafified verdict holds."""
        return all(self.sheafified.values())

    def to_dict(self):
        """Report data."""
        return {
            "passed": self.passed,
            "sheafified": {str(n): ok for n, ok in sorted(self.sheafified.items())},
            "presheaf": {str(n): ok for n, ok in sorted(self.presheaf.items())},
        }


def check_acyclicity(X, ring):
    """``aH_0 Λ(c_•) ≅ aΛ(c)`` through the augmentation and ``aH_n = 0`` for ``1 <= n <= N - 1``.

    The same statements before sheafification are reported alongside.
    """
    C, augmentation = chain_of_hypercover(X, ring)
    sheafified, presheaf = {}, {}
    H0 = augmentation.homology_map(0)
    sheafified[0] = sheafify_map(H0).is_isomorphism()
    presheaf[0] = H0.is_isomorphism()
    for n in range(1, X.N):
        sheafified[n] = homology_sheaf(C, n).is_zero()
        presheaf[n] = C.homology_data(n).presheaf.is_zero()
    return AcyclicityReport(sheafified, presheaf)
