# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sheafification by the plus construction applied twice."""

import logging

from ..exactalg import ExactMatrix, FpModule, ModuleMap
from .presheaves import ModPresheaf, PresheafMap

logger = logging.getLogger(__name__)


class PlusConstruction:
    """``F⁺`` with its embedding into the product over the minimal covering sieve.

    ``F⁺(c)`` is the module of matching families ``(s_f)`` indexed by the
    members ``f`` of the minimal covering sieve of ``c``.
    """

    def __init__(self, presheaf):
        """Computes ``F⁺`` and the unit ``F -> F⁺``."""
        self.source = presheaf
        site, ring = presheaf.site, presheaf.ring
        cat = site.category
        self.sieves = {c: site.minimal_sieve(c) for c in cat.objects}
        self.ambient = {}
        self.embeddings = {}
        values = {}
        for c in cat.objects:
            sieve = self.sieves[c]
            ambient = FpModule.direct_sum(ring, [presheaf.values[cat.src(f)] for f in sieve])
            self.ambient[c] = ambient
            kernel, embedding = self._matching(c, sieve, ambient).kernel()
            values[c] = kernel
            self.embeddings[c] = embedding
        restrictions = {}
        for h in cat.morphisms:
            d, c = cat.src(h), cat.dst(h)
            select = self._selection(h)
            restrictions[h] = (select @ self.embeddings[c]).lift(self.embeddings[d])
        self.presheaf = ModPresheaf(site, ring, values, restrictions, check=False)
        unit = {}
        for c in cat.objects:
            cols = [presheaf.restrictions[f].matrix for f in self.sieves[c]]
            stacked = ExactMatrix.vstack(ring, presheaf.values[c].generators, cols)
            into_ambient = ModuleMap(presheaf.values[c], self.ambient[c], stacked, check=False)
            unit[c] = into_ambient.lift(self.embeddings[c])
        self.unit = PresheafMap(presheaf, self.presheaf, unit, check=False)

    def _matching(self, c, sieve, ambient):
        """``(s_f) ↦ (F(g) s_f - s_{f∘g})`` over pairs ``(f, g)``, ``g`` not an identity."""
        F = self.source
        site, ring = F.site, F.ring
        cat = site.category
        position = {f: i for i, f in enumerate(sieve)}
        pairs = [
            (f, g)
            for f in sieve
            for g in cat.into(cat.src(f))
            if not cat.is_identity(g)
        ]
        targets = [F.values[cat.src(g)] for _, g in pairs]
        constraint_target = FpModule.direct_sum(ring, targets)
        entries = {}
        for k, (f, g) in enumerate(pairs):
            entries[(k, position[f])] = F.restrictions[g].matrix
            fg = position[cat.compose(f, g)]
            neg = -ExactMatrix.identity(ring, F.values[cat.src(g)].generators)
            if (k, fg) in entries:
                entries[(k, fg)] = entries[(k, fg)] + neg
            else:
                entries[(k, fg)] = neg
        matrix = ExactMatrix.blocks(
            ring,
            [t.generators for t in targets],
            [F.values[cat.src(f)].generators for f in sieve],
            entries,
        )
        return ModuleMap(ambient, constraint_target, matrix, check=False)

    def _selection(self, h):
        """Ambient map ``(s_f)_{f ∈ m(c)} ↦ (s_{h∘g})_{g ∈ m(d)}``."""
        F = self.source
        cat = F.site.category
        d, c = cat.src(h), cat.dst(h)
        position = {f: i for i, f in enumerate(self.sieves[c])}
        entries = {}
        for k, g in enumerate(self.sieves[d]):
            size = F.values[cat.src(g)].generators
            entries[(k, position[cat.compose(h, g)])] = ExactMatrix.identity(F.ring, size)
        matrix = ExactMatrix.blocks(
            F.ring,
            [F.values[cat.src(g)].generators for g in self.sieves[d]],
            [F.values[cat.src(f)].generators for f in self.sieves[c]],
            entries,
        )
        return ModuleMap(self.ambient[c], self.ambient[d], matrix, check=False)

    def transport(self, phi, other):
        """``φ⁺: F⁺ -> G⁺`` for ``φ: F -> G`` with ``other`` the plus construction of ``G``."""
        F = self.source
        cat = F.site.category
        components = {}
        for c in cat.objects:
            blocks = [phi.components[cat.src(f)].matrix for f in self.sieves[c]]
            ambient_map = ModuleMap(
                self.ambient[c],
                other.ambient[c],
                ExactMatrix.block_diagonal(F.ring, blocks),
                check=False,
            )
            components[c] = (ambient_map @ self.embeddings[c]).lift(other.embeddings[c])
        return PresheafMap(self.presheaf, other.presheaf, components, check=False)


class Sheafification:
    """``aF = F⁺⁺`` with the unit ``F -> aF``."""

    def __init__(self, presheaf):
        """Runs both plus steps."""
        self.first = PlusConstruction(presheaf)
        self.second = PlusConstruction(self.first.presheaf)
        self.sheaf = self.second.presheaf
        self.unit = self.second.unit @ self.first.unit
        logger.debug("Sheafified %r into %r.", presheaf, self.sheaf)

    def transport(self, phi, other):
        """``aφ: aF -> aG`` given the sheafification ``other`` of the target."""
        once = self.first.transport(phi, other.first)
        return self.second.transport(once, other.second)


def sheafification(presheaf):
    """Cached :class:`Sheafification` of a presheaf."""
    cached = getattr(presheaf, "_sheafification", None)
    if cached is None:
        cached = Sheafification(presheaf)
        presheaf._sheafification = cached
    return cached


def sheafify(presheaf):
    """``(aF, unit: F -> aF)``."""
    s = sheafification(presheaf)
    return s.sheaf, s.unit


def sheafify_map(phi):
    """``aφ: aF -> aG``."""
    return sheafification(phi.source).transport(phi, sheafification(phi.target))


def is_sheaf(presheaf):
    """Whether the unit ``F -> F⁺`` is an isomorphism at every object."""
    return PlusConstruction(presheaf).unit.is_isomorphism()
