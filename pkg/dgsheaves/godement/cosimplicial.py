# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""The cosimplicial Godement object ``G^q = T^{q+1} K``."""

import logging

from ..complexes import Complex, ComplexMorphism
from ..errors import StrategyError
from ..proxies import current_dgsheaves
from .comonad import PointComonad

logger = logging.getLogger(__name__)


def resolve_q_max(q_max):
    """Cosimplicial height, defaulting to the configured one."""
    if q_max is None:
        q_max = current_dgsheaves.config.get("DGSHEAVES_DEFAULT_QMAX")
    if q_max < 0:
        raise StrategyError(f"Cosimplicial height must be non-negative, got {q_max}.")
    return q_max


class CosimplicialComplex:
    """``K -> G^0 ⇉ G^1 ... G^{q_max}`` with cofaces and codegeneracies.

    ``coface(q, i)`` is ``d^i: G^{q-1} -> G^q`` for ``0 <= i <= q``, where
    ``coface(0, 0)`` is the coaugmentation out of ``G^{-1} = K``.
    ``codegeneracy(q, j)`` is ``s^j: G^{q+1} -> G^q`` for ``0 <= j <= q``.
    """

    def __init__(self, source, q_max, comonad=None):
        """Constructor."""
        self.source = source
        self.q_max = q_max
        self.comonad = comonad or PointComonad(source.site)
        self.levels = {q: self._level(q) for q in range(q_max + 1)}
        self._cofaces = {}
        self._codegeneracies = {}

    @property
    def site(self):
        """Underlying site."""
        return self.source.site

    def _level(self, q):
        K, T = self.source, self.comonad
        levels = {p: T.power(K.level(p), q + 1) for p in K.degrees()}
        diffs = {
            p: T.power_map(K.differential(p), q + 1)
            for p in K.degrees()
            if p - 1 in levels
        }
        return Complex(
            K.site,
            K.ring,
            levels,
            diffs,
            window=(K.lo, K.hi),
            validity=K.validity,
            check=False,
        )

    def level(self, q):
        """``G^q``, with ``G^{-1} = K``."""
        return self.source if q == -1 else self.levels[q]

    def coface(self, q, i):
        """``d^i: G^{q-1} -> G^q``."""
        if (q, i) not in self._cofaces:
            K, T = self.source, self.comonad
            components = {p: T.coface(K.level(p), q, i) for p in K.degrees()}
            self._cofaces[(q, i)] = ComplexMorphism(
                self.level(q - 1), self.level(q), components, check=False
            )
        return self._cofaces[(q, i)]

    def codegeneracy(self, q, j):
        """``s^j: G^{q+1} -> G^q``."""
        if (q, j) not in self._codegeneracies:
            K, T = self.source, self.comonad
            components = {p: T.codegeneracy(K.level(p), q, j) for p in K.degrees()}
            self._codegeneracies[(q, j)] = ComplexMorphism(
                self.level(q + 1), self.level(q), components, check=False
            )
        return self._codegeneracies[(q, j)]

    @property
    def coaugmentation(self):
        """``η: K -> G^0``."""
        return self.coface(0, 0)

    def identity_problems(self):
        """Failures of the cosimplicial identities up to ``q_max``."""
        Q = self.q_max
        problems = []

        def differ(lhs, rhs, label):
            if not lhs.equals(rhs):
                problems.append(label)

        for q in range(1, Q + 1):
            for j in range(q + 1):
                for i in range(j):
                    differ(
                        self.coface(q, j) @ self.coface(q - 1, i),
                        self.coface(q, i) @ self.coface(q - 1, j - 1),
                        f"d^{j} d^{i} into G^{q}",
                    )
        for q in range(Q - 1):
            for j in range(q + 1):
                for i in range(j + 1):
                    differ(
                        self.codegeneracy(q, j) @ self.codegeneracy(q + 1, i),
                        self.codegeneracy(q, i) @ self.codegeneracy(q + 1, j + 1),
                        f"s^{j} s^{i} into G^{q}",
                    )
        for q in range(Q):
            identity = ComplexMorphism.identity(self.level(q))
            for j in range(q + 1):
                for i in range(q + 2):
                    lhs = self.codegeneracy(q, j) @ self.coface(q + 1, i)
                    if i < j:
                        rhs = self.coface(q, i) @ self.codegeneracy(q - 1, j - 1)
                    elif i in (j, j + 1):
                        rhs = identity
                    else:
                        rhs = self.coface(q, i - 1) @ self.codegeneracy(q - 1, j)
                    differ(lhs, rhs, f"s^{j} d^{i} on G^{q}")
        if problems:
            logger.warning("Cosimplicial identities fail: %s.", problems)
        return problems

    def check_identities(self):
        """Whether every cosimplicial identity holds."""
        return not self.identity_problems()
