# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Hypercovers given levelwise as coproducts of representables."""

import itertools
import logging
from functools import cached_property

from ..errors import MissingFiberProductError, TruncationError
from ..simplicial import AugmentedSimplicial, SimplicialObject, matching_object
from ..site import SetPresheaf, SetPresheafMap, is_generalized_cover

logger = logging.getLogger(__name__)


class Hypercover:
    """Augmented simplicial presheaf ``⊔_j y(c_{n,j}) -> y(c)`` truncated at ``N``.

    Structure maps are given per summand: ``faces[(n, i)][j] = (j', φ)``
    sends summand ``j`` of level ``n`` to summand ``j'`` of level ``n - 1``
    along ``φ: c_{n,j} -> c_{n-1,j'}``; degeneracies likewise towards level
    ``n + 1``. ``augmentation[j]`` is a morphism ``c_{0,j} -> c``.
    """

    def __init__(self, site, target, N, levels, faces, degeneracies, augmentation, labels=None):
        """Constructor."""
        site.category.check_object(target)
        self.site = site
        self.target = target
        self.N = N
        self.levels = [list(level) for level in levels]
        self.faces = {k: list(v) for k, v in faces.items()}
        self.degeneracies = {k: list(v) for k, v in degeneracies.items()}
        self.augmentation = list(augmentation)
        self.labels = labels

    def objects(self, n):
        """Objects ``c_{n,j}`` of level ``n``."""
        if n > self.N:
            raise TruncationError(f"Level {n} lies beyond the truncation {self.N}.")
        return self.levels[n]

    def _map(self, source, target, data):
        cat = self.site.category
        components = {}
        for d in cat.objects:
            components[d] = {
                (j, h): (data[j][0], cat.compose(data[j][1], h)) for (j, h) in source.values[d]
            }
        return SetPresheafMap(source, target, components, check=False)

    @cached_property
    def augmented(self):
        """The hypercover as an augmented simplicial set presheaf."""
        site = self.site
        levels = {
            n: SetPresheaf.representables(site, self.levels[n]) for n in range(self.N + 1)
        }
        faces = {k: self._map(levels[k[0]], levels[k[0] - 1], v) for k, v in self.faces.items()}
        degeneracies = {
            k: self._map(levels[k[0]], levels[k[0] + 1], v)
            for k, v in self.degeneracies.items()
            if k[0] + 1 in levels
        }
        target = SetPresheaf.representables(site, [self.target])
        augmentation = self._map(
            levels[0], target, [(0, a) for a in self.augmentation]
        )
        simplicial = SimplicialObject(site, self.N, levels, faces, degeneracies, check=False)
        return AugmentedSimplicial(simplicial, target, augmentation, check=False)

    def to_dict(self):
        """Plain data view."""
        return {
            "target": self.target,
            "N": self.N,
            "levels": self.levels,
            "faces": {f"{n},{i}": [list(x) for x in v] for (n, i), v in sorted(self.faces.items())},
            "degeneracies": {
                f"{n},{j}": [list(x) for x in v] for (n, j), v in sorted(self.degeneracies.items())
            },
            "augmentation": self.augmentation,
        }

    def __repr__(self):
        """Representation."""
        sizes = [len(level) for level in self.levels]
        return f"Hypercover<{self.target}, N={self.N}, sizes={sizes}>"


def cech_nerve(site, family, N, target=None):
    """Čech nerve of a covering family ``{c_i -> c}``, truncated at ``N``.

    Level ``n`` lists the fiber products of the ``(n+1)``-tuples of members
    in lexicographic order.

    :raises MissingFiberProductError: if an iterated fiber product is missing.
    """
    cat = site.category
    family = list(family)
    if target is None:
        if not family:
            raise MissingFiberProductError(family)
        target = cat.dst(family[0])
    tuples, apexes = {}, {}
    for n in range(N + 1):
        tuples[n] = list(itertools.product(range(len(family)), repeat=n + 1))
        for t in tuples[n]:
            apexes[t] = cat.fiber_product([family[i] for i in t])
    index = {n: {t: j for j, t in enumerate(tuples[n])} for n in tuples}

    def factor(t, positions, u):
        apex, projections = apexes[t]
        cone = (apex, [projections[p] for p in positions])
        return cat.cone_factorizations(cone, apexes[u])[0]

    faces = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            data = []
            for t in tuples[n]:
                u = t[:i] + t[i + 1 :]
                positions = [p for p in range(n + 1) if p != i]
                data.append((index[n - 1][u], factor(t, positions, u)))
            faces[(n, i)] = data
    degeneracies = {}
    for n in range(N):
        for j in range(n + 1):
            data = []
            for t in tuples[n]:
                u = t[: j + 1] + t[j:]
                positions = list(range(j + 1)) + list(range(j, n + 1))
                data.append((index[n + 1][u], factor(t, positions, u)))
            degeneracies[(n, j)] = data
    augmentation = [
        cat.compose(family[t[0]], apexes[t][1][0]) for t in tuples[0]
    ]
    levels = [[apexes[t][0] for t in tuples[n]] for n in range(N + 1)]
    logger.debug("Čech nerve over %s with level sizes %s.", target, [len(x) for x in levels])
    return Hypercover(
        site, target, N, levels, faces, degeneracies, augmentation,
        labels={n: tuples[n] for n in tuples},
    )


class HypercoverReport:
    """Per-level verdicts of the hypercover conditions."""

    def __init__(self, levels):
        """Constructor."""
        self.levels = levels

    @property
    def valid(self):
        """Whether every level passes."""
        return all(self.levels.values())

    @property
    def first_failure(self):
        """Lowest failing level, or ``None``."""
        failing = [n for n, ok in sorted(self.levels.items()) if not ok]
        return failing[0] if failing else None

    def to_dict(self):
        """Report data."""
        return {
            "valid": self.valid,
            "first_failure": self.first_failure,
            "levels": {str(n): ok for n, ok in sorted(self.levels.items())},
        }


def verify_hypercover(X, N=None):
    """Checks that every comparison ``X_n -> M_n`` is a generalized cover.

    The representable decomposition of the levels is carried by the
    :class:`Hypercover` data itself.
    """
    augmented = X.augmented if isinstance(X, Hypercover) else X
    N = augmented.N if N is None else min(N, augmented.N)
    levels = {}
    for n in range(N + 1):
        _, comparison = matching_object(augmented, n)
        levels[n] = is_generalized_cover(comparison)
    report = HypercoverReport(levels)
    if not report.valid:
        logger.debug("Hypercover fails first at level %s.", report.first_failure)
    return report
