# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""The point comonad ``T = a_* a^*`` of a conservative family of points.

``TF(c) = ⊕_{p ∋ c} F(m_p)``. Iterates are indexed by chains of points:
``T^m F(c)`` has one summand ``F(m_{p_m})`` for every ``(p_1, ..., p_m)``
with ``p_1`` in ``c`` and ``p_{i+1}`` in ``m_{p_i}``. Restriction along
``d -> c`` projects onto the chains starting in ``d``.
"""

import logging

from ..errors import InvalidPointsError
from ..exactalg import ExactMatrix, FpModule, ModuleMap
from ..site import ModPresheaf, PresheafMap, validate_points

logger = logging.getLogger(__name__)


class PointComonad:
    """Iterates of ``T`` with their structure maps on module presheaves."""

    def __init__(self, site, points=None):
        """Constructor.

        :raises InvalidPointsError: if explicit points violate the
            neighbourhood conditions.
        """
        if points is not None:
            problems = validate_points(site, points)
            if problems:
                raise InvalidPointsError("; ".join(problems))
        self.site = site
        self.points = list(site.points if points is None else points)
        self._by_id = {p.id: p for p in self.points}
        self._chains = {}
        self._powers = {}

    def chains(self, c, m):
        """Chains of length ``m`` starting at ``c``, in lexicographic point order."""
        key = (c, m)
        if key not in self._chains:
            if m == 0:
                chains = [()]
            else:
                chains = [
                    (p.id,) + rest
                    for p in self.points
                    if p.lies_in(c)
                    for rest in self.chains(p.minimal, m - 1)
                ]
            self._chains[key] = chains
        return self._chains[key]

    def end(self, chain, c):
        """Object carrying the summand of ``chain``: ``m_{p_m}``, or ``c`` if empty."""
        return self._by_id[chain[-1]].minimal if chain else c

    def _sizes(self, F, c, m):
        return [F.values[self.end(w, c)].generators for w in self.chains(c, m)]

    def power(self, F, m):
        """``T^m F``."""
        key = (id(F), m)
        if key in self._powers:
            return self._powers[key][1]
        if m == 0:
            self._powers[key] = (F, F)
            return F
        site, ring = F.site, F.ring
        cat = site.category
        values = {
            c: FpModule.direct_sum(
                ring, [F.values[self.end(w, c)] for w in self.chains(c, m)]
            )
            for c in cat.objects
        }
        restrictions = {}
        for h in cat.morphisms:
            d, c = cat.src(h), cat.dst(h)
            where = {w: i for i, w in enumerate(self.chains(c, m))}
            entries = {
                (i, where[w]): ExactMatrix.identity(
                    ring, F.values[self.end(w, d)].generators
                )
                for i, w in enumerate(self.chains(d, m))
            }
            matrix = ExactMatrix.blocks(
                ring, self._sizes(F, d, m), self._sizes(F, c, m), entries
            )
            restrictions[h] = ModuleMap(values[c], values[d], matrix, check=False)
        TF = ModPresheaf(site, ring, values, restrictions, check=False)
        self._powers[key] = (F, TF)
        return TF

    def power_map(self, phi, m):
        """``T^m φ``, acting on every chain summand by ``φ`` at its end."""
        if m == 0:
            return phi
        F, G = phi.source, phi.target
        ring = phi.ring
        components = {}
        for c in self.site.objects:
            blocks = [
                phi.components[self.end(w, c)].matrix for w in self.chains(c, m)
            ]
            components[c] = ExactMatrix.block_diagonal(ring, blocks)
        return self._presheaf_map(self.power(F, m), self.power(G, m), components)

    def coface(self, F, m, i):
        """``d^i: T^m F -> T^{m+1} F`` for ``0 <= i <= m``.

        A new chain reads the chain with position ``i`` deleted. Deleting
        the last position restricts along the germ of the new point.
        """
        ring = F.ring
        source, target = self.power(F, m), self.power(F, m + 1)
        components = {}
        for c in self.site.objects:
            where = {w: k for k, w in enumerate(self.chains(c, m))}
            entries = {}
            for r, w in enumerate(self.chains(c, m + 1)):
                u = w[:i] + w[i + 1 :]
                if i == m:
                    germ = self._by_id[w[-1]].germ(self.end(u, c))
                    entries[(r, where[u])] = F.restrictions[germ].matrix
                else:
                    entries[(r, where[u])] = ExactMatrix.identity(
                        ring, F.values[self.end(w, c)].generators
                    )
            components[c] = ExactMatrix.blocks(
                ring, self._sizes(F, c, m + 1), self._sizes(F, c, m), entries
            )
        return self._presheaf_map(source, target, components)

    def codegeneracy(self, F, m, j):
        """``s^j: T^{m+2} F -> T^{m+1} F`` for ``0 <= j <= m``, repeating position ``j``."""
        ring = F.ring
        source, target = self.power(F, m + 2), self.power(F, m + 1)
        components = {}
        for c in self.site.objects:
            where = {w: k for k, w in enumerate(self.chains(c, m + 2))}
            entries = {
                (r, where[u[: j + 1] + u[j:]]): ExactMatrix.identity(
                    ring, F.values[self.end(u, c)].generators
                )
                for r, u in enumerate(self.chains(c, m + 1))
            }
            components[c] = ExactMatrix.blocks(
                ring, self._sizes(F, c, m + 1), self._sizes(F, c, m + 2), entries
            )
        return self._presheaf_map(source, target, components)

    def unit(self, F):
        """``η: F -> TF``, ``x -> (x|_{m_p})_p``."""
        return self.coface(F, 0, 0)

    @staticmethod
    def _presheaf_map(source, target, matrices):
        return PresheafMap(
            source,
            target,
            {
                c: ModuleMap(source.values[c], target.values[c], matrix, check=False)
                for c, matrix in matrices.items()
            },
            check=False,
        )
