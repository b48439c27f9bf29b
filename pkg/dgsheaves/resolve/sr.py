# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Covers of module presheaves by sums of representables."""

import logging

from ..errors import InfiniteModuleError, StrategyError
from ..exactalg import ExactMatrix, solve
from ..proxies import current_dgsheaves
from ..site import PresheafMap, yoneda_map

logger = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive"
ECONOMICAL = "economical"
STRATEGIES = (EXHAUSTIVE, ECONOMICAL)


def check_strategy(strategy):
    """:raises StrategyError: for an unknown strategy name."""
    if strategy not in STRATEGIES:
        raise StrategyError(f"Unknown resolution strategy {strategy!r}.")
    return strategy


class SRStep:
    """One cover ``e: E -> F`` with ``E = ⊕ Λ(c_i)`` and its kernel.

    ``sections[i] = (c_i, x_i)`` is the section of ``F`` hit by the
    generator of summand ``i``.
    """

    def __init__(self, presheaf, sections, cover, kernel, inclusion, strategy):
        """Constructor."""
        self.presheaf = presheaf
        self.sections = sections
        self.cover = cover
        self.kernel = kernel
        self.inclusion = inclusion
        self.strategy = strategy
        self._index = {
            (c, presheaf.values[c].canonical(x)): i for i, (c, x) in enumerate(sections)
        }

    @property
    def source(self):
        """``E``."""
        return self.cover.source

    def section_index(self, c, x):
        """Summand whose generator maps to ``x ∈ F(c)``, ``None`` for zero."""
        canonical = self.presheaf.values[c].canonical(x)
        if not any(canonical):
            return None
        return self._index.get((c, canonical))

    def summary(self):
        """Objects of the summands."""
        return [c for c, _ in self.sections]


def _canonical_key(F, c, x):
    return c, F.values[c].canonical(x)


def _exhaustive_sections(F):
    limit = current_dgsheaves.config.get("DGSHEAVES_EXHAUSTIVE_LIMIT")
    sections = []
    for c in F.site.objects:
        module = F.values[c]
        try:
            elements = list(module.elements())
        except InfiniteModuleError:
            raise StrategyError(
                f"{EXHAUSTIVE} needs finite values; F({c}) = {module.describe()}."
            )
        sections.extend((c, x) for x in elements if not module.is_zero_element(x))
        if limit is not None and len(sections) > limit:
            raise StrategyError(
                f"{EXHAUSTIVE} would create more than {limit} summands."
            )
    return sections


def _in_span(F, sections, c, x):
    """Whether ``x ∈ F(c)`` lies in the subpresheaf generated by ``sections``."""
    ring = F.ring
    module = F.values[c]
    cat = F.site.category
    columns = []
    for d, y in sections:
        for h in cat.hom(c, d):
            columns.append(F.restrictions[h].apply(y))
    images = ExactMatrix.from_columns(ring, columns, module.generators)
    A = ExactMatrix.hstack(ring, module.generators, [images, module.relations])
    return solve(A, ExactMatrix.from_columns(ring, [x], module.generators)) is not None


def _economical_sections(F, seeds):
    sections, seen = [], set()
    for c, x in seeds or []:
        key = _canonical_key(F, c, x)
        if any(key[1]) and key not in seen:
            seen.add(key)
            sections.append((c, list(x)))
    for c in F.site.objects:
        module = F.values[c]
        for i in range(module.generators):
            x = module.basis_vector(i)
            key = _canonical_key(F, c, x)
            if not any(key[1]) or key in seen:
                continue
            if _in_span(F, sections, c, x):
                continue
            seen.add(key)
            sections.append((c, x))
    return sections


def sr_step(F, strategy=ECONOMICAL, seeds=None):
    """Cover ``e: ⊕ Λ(c_i) ->> F`` and its kernel.

    ``exhaustive`` takes one summand per nonzero section over every object,
    which is functorial in ``F``; ``economical`` takes the ``seeds`` and then
    every generator of ``F(c)`` not yet in the span, object by object.

    :raises StrategyError: if ``exhaustive`` meets an infinite value module.
    """
    check_strategy(strategy)
    if strategy == EXHAUSTIVE:
        sections = _exhaustive_sections(F)
    else:
        sections = _economical_sections(F, seeds)
    objects = [c for c, _ in sections]
    cover = yoneda_map(objects, [x for _, x in sections], F)
    kernel, inclusion = cover.kernel()
    logger.debug("%s cover with %d summands.", strategy, len(sections))
    return SRStep(F, sections, cover, kernel, inclusion, strategy)


def sr_map(phi, source_step, target_step):
    """``E_F -> E_G`` sending the summand of ``x`` to the summand of ``φ(x)``.

    Zero images go to zero. The square with the two covers commutes.

    :raises StrategyError: if some image is not a section of ``target_step``.
    """
    E, E2 = source_step.source, target_step.source
    ring = E.ring
    elements = []
    for c, x in source_step.sections:
        y = phi.components[c].apply(x)
        j = target_step.section_index(c, y)
        basis = E2.yoneda_basis(c)
        vector = [ring.zero] * len(basis)
        if j is None:
            if any(target_step.presheaf.values[c].canonical(y)):
                raise StrategyError(f"Image of a section over {c} is not a chosen section.")
        else:
            vector[basis.index((j, E.site.category.identity(c)))] = ring.one
        elements.append(vector)
    if not elements:
        return PresheafMap.zero(E, E2)
    return yoneda_map(E.summands, elements, E2).with_ends(E, E2)


def image_seeds(phi, step):
    """Images ``φ(x)`` of the sections of ``step``, for seeding the next cover."""
    return [(c, phi.components[c].apply(x)) for c, x in step.sections]

