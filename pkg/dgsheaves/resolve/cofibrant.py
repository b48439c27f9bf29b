# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Cofibrant replacement by columnwise resolutions."""

import logging

from ..complexes import (
    Bicomplex,
    Complex,
    ComplexMorphism,
    intersect_windows,
    tot_sum,
)
from ..errors import StrategyError
from ..proxies import current_dgsheaves
from ..site import PresheafMap
from .sr import ECONOMICAL, check_strategy, image_seeds, sr_map, sr_step

logger = logging.getLogger(__name__)


class Resolution:
    """``QK -> K`` together with the resolution bicomplex it totalizes.

    ``steps[k][n]`` is the ``k``-th cover in the resolution of ``K_n``.
    """

    def __init__(
        self,
        source,
        complex_,
        augmentation,
        bicomplex,
        steps,
        fully_resolved,
        strategy,
        depth,
    ):
        """Constructor."""
        self.source = source
        self.complex = complex_
        self.augmentation = augmentation
        self.bicomplex = bicomplex
        self.steps = steps
        self.fully_resolved = fully_resolved
        self.strategy = strategy
        self.depth = depth

    @property
    def validity(self):
        """Degrees where ``QK -> K`` is a surjective quasi-isomorphism."""
        return self.complex.validity

    def summands(self):
        """``{degree: [objects]}`` of the representable decomposition of ``QK``."""
        return {n: list(F.summands) for n, F in self.complex.levels.items()}

    def __iter__(self):
        """Unpacks as ``(QK, augmentation, validity)``."""
        return iter((self.complex, self.augmentation, self.validity))

    def to_dict(self):
        """Report data."""
        lo, hi = self.validity
        return {
            "strategy": self.strategy,
            "depth": self.depth,
            "fully_resolved": self.fully_resolved,
            "validity": [lo, hi],
            "summands": {str(n): objs for n, objs in sorted(self.summands().items())},
        }


def _depth(depth):
    if depth is None:
        depth = current_dgsheaves.config.get("DGSHEAVES_DEFAULT_DEPTH")
    if depth < 1:
        raise StrategyError(f"Resolution depth must be positive, got {depth}.")
    return depth


def cofibrant_replace(K, depth=None, strategy=ECONOMICAL):
    """Sum totalization of the columnwise resolutions of ``K``.

    Column ``n`` resolves ``K_n``; the covers of column ``n - 1`` are seeded
    with the images of the sections of column ``n`` so that the induced maps
    send summands to summands. With ``d = depth`` stages the result is exact
    in degrees ``n <= lo(K) + d - 2``, everywhere if some stage has no kernel.

    :raises StrategyError: if the strategy cannot be applied.
    """
    check_strategy(strategy)
    depth = _depth(depth)
    site, ring = K.site, K.ring
    if K.lo > K.hi or K.is_zero():
        Q = Complex.zero(site, ring)
        return Resolution(
            K, Q, ComplexMorphism.zero(Q, K), None, {}, True, strategy, depth
        )
    lo, hi = K.lo, K.hi
    presheaves = {n: K.level(n) for n in range(lo, hi + 1)}
    maps = {n: K.differential(n) for n in range(lo + 1, hi + 1)}
    steps, columns = {}, {}
    fully_resolved = False
    for k in range(depth):
        current = {}
        for n in range(hi, lo - 1, -1):
            seeds = image_seeds(maps[n + 1], current[n + 1]) if n + 1 in maps else None
            current[n] = sr_step(presheaves[n], strategy, seeds)
        induced = {
            n: sr_map(maps[n], current[n], current[n - 1]) for n in range(lo + 1, hi + 1)
        }
        steps[k], columns[k] = current, induced
        logger.debug(
            "Resolution stage %d: %s.", k, {n: len(s.sections) for n, s in current.items()}
        )
        if all(s.kernel.is_zero() for s in current.values()):
            fully_resolved = True
            break
        presheaves = {n: s.kernel for n, s in current.items()}
        maps = {
            n: (induced[n] @ current[n].inclusion).lift(current[n - 1].inclusion)
            for n in range(lo + 1, hi + 1)
        }
    stages = len(steps)
    levels, horizontal, vertical = {}, {}, {}
    for k, current in steps.items():
        for n, step in current.items():
            levels[(k, n)] = step.source
            if k > 0:
                horizontal[(k, n)] = steps[k - 1][n].inclusion @ step.cover
            if n > lo:
                vertical[(k, n)] = columns[k][n]
    B = Bicomplex.from_commuting(
        site,
        ring,
        levels,
        horizontal,
        vertical,
        p_window=(0, stages - 1),
        q_window=(lo, hi),
        open_ends=() if fully_resolved else ("p+",),
        check=False,
    )
    total = tot_sum(B)
    validity = intersect_windows(B.validity(), K.validity)
    Q = Complex(
        site,
        ring,
        total.levels,
        total.differentials,
        window=(total.lo, total.hi),
        validity=validity,
        check=False,
    )
    if not fully_resolved:
        logger.warning(
            "Resolution cut at depth %d; exact in degrees up to %s.", depth, validity[1]
        )
    components = {}
    for n in range(lo, hi + 1):
        diagonal = B.antidiagonal(n)
        components[n] = PresheafMap.block(
            [B.level(*pos) for pos in diagonal],
            [K.level(n)],
            {(0, diagonal.index((0, n))): steps[0][n].cover},
            site,
            ring,
        ).with_ends(Q.level(n), K.level(n))
    augmentation = ComplexMorphism(Q, K, components, check=False)
    return Resolution(K, Q, augmentation, B, steps, fully_resolved, strategy, depth)


def sr_resolution(F, depth=None, strategy=ECONOMICAL):
    """Resolution of a single presheaf, ``cofibrant_replace(S⁰F)``."""
    return cofibrant_replace(Complex.concentrated(F, 0), depth, strategy)
