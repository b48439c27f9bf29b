# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Matching objects of augmented simplicial set presheaves."""

from ..errors import DGSheavesError, TruncationError
from ..site import SetPresheaf, SetPresheafMap
from .objects import SETS


def _compatible_tuples(X, n, c):
    """Tuples ``(y_0, ..., y_n)`` in ``X_{n-1}(c)`` with ``d_i y_j = d_{j-1} y_i`` for ``i < j``."""
    candidates = X.level(n - 1).values[c]
    out = []

    def face(i, y):
        return X.face(n - 1, i).components[c][y]

    def extend(prefix):
        j = len(prefix)
        if j == n + 1:
            out.append(tuple(prefix))
            return
        for y in candidates:
            if all(face(i, y) == face(j - 1, prefix[i]) for i in range(j)):
                extend(prefix + [y])

    extend([])
    return out


def matching_object(X, n):
    """``(M_n, comparison X_n -> M_n)`` for an augmented set-valued object.

    ``M_0`` is the augmentation target and the comparison is the
    augmentation; for ``n >= 1`` the comparison is ``x ↦ (d_0 x, ..., d_n x)``.

    :raises TruncationError: if ``n`` exceeds the truncation level.
    """
    if n > X.N:
        raise TruncationError(f"Level {n} lies beyond the truncation {X.N}.")
    if X.simplicial.kind != SETS:
        raise DGSheavesError("Matching objects are taken of set-valued objects.")
    if n == 0:
        return X.target, X.augmentation
    site = X.site
    cat = site.category
    values = {c: _compatible_tuples(X, n, c) for c in cat.objects}
    restrictions = {}
    for h in cat.morphisms:
        c = cat.dst(h)
        restrict = X.level(n - 1).restrictions[h]
        restrictions[h] = {y: tuple(restrict[z] for z in y) for y in values[c]}
    M = SetPresheaf(site, values, restrictions, check=False)
    source = X.level(n)
    components = {
        c: {
            x: tuple(X.face(n, i).components[c][x] for i in range(n + 1))
            for x in source.values[c]
        }
        for c in cat.objects
    }
    return M, SetPresheafMap(source, M, components, check=False)
