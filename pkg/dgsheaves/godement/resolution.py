# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Godement resolution ``K -> god(K)``.

``god(K)`` is the product totalization of the bicomplex with ``N^q(K_p)``
at position ``(p, -q)``, where ``N^q`` is the part of ``G^q`` killed by
every codegeneracy. The cosimplicial direction is cut at ``q_max``, so the
total complex is complete in degrees ``n >= hi(K) - q_max + 1``.
"""

import logging

from ..complexes import (
    Bicomplex,
    Complex,
    ComplexMorphism,
    intersect_windows,
    summand_injection,
    tot_map,
    tot_prod,
)
from ..site import ModPresheaf, PresheafMap
from .comonad import PointComonad
from .cosimplicial import CosimplicialComplex, resolve_q_max

logger = logging.getLogger(__name__)


class GodementResolution:
    """``god(K)`` with its unit, bicomplex and cosimplicial data."""

    def __init__(self, source, complex_, unit, bicomplex, cosimplicial, normalized, q_max):
        """Constructor.

        :param normalized: ``{(p, q): (N^q(K_p), inclusion into G^q_p)}``.
        """
        self.source = source
        self.complex = complex_
        self.unit = unit
        self.bicomplex = bicomplex
        self.cosimplicial = cosimplicial
        self.normalized = normalized
        self.q_max = q_max

    @property
    def validity(self):
        """Degrees where ``god(K)`` agrees with the uncut resolution."""
        return self.complex.validity

    def __iter__(self):
        """Unpacks as ``(godK, unit, validity)``."""
        return iter((self.complex, self.unit, self.validity))

    def to_dict(self):
        """Report data."""
        lo, hi = self.validity
        return {
            "q_max": self.q_max,
            "validity": [lo, hi],
            "window": [self.complex.lo, self.complex.hi],
            "levels": {
                str(n): F.describe() for n, F in sorted(self.complex.levels.items())
            },
        }


def point_pullback_pushforward(K, points=None):
    """``(TK, η: K -> TK)`` for ``T = a_* a^*`` applied levelwise."""
    T = PointComonad(K.site, points)
    levels = {p: T.power(K.level(p), 1) for p in K.degrees()}
    diffs = {
        p: T.power_map(K.differential(p), 1) for p in K.degrees() if p - 1 in levels
    }
    TK = Complex(
        K.site,
        K.ring,
        levels,
        diffs,
        window=(K.lo, K.hi),
        validity=K.validity,
        check=False,
    )
    unit = ComplexMorphism(
        K, TK, {p: T.unit(K.level(p)) for p in K.degrees()}, check=False
    )
    return TK, unit


def godement_cosimplicial(K, q_max=None, points=None):
    """The coaugmented cosimplicial complex ``K -> G^•`` up to ``q_max``."""
    q_max = resolve_q_max(q_max)
    return CosimplicialComplex(K, q_max, PointComonad(K.site, points))


def _normalize(G, p):
    """``N^q(K_p)`` for every ``q``, with inclusions into ``G^q_p``."""
    site, ring = G.site, G.source.ring
    normalized = {}
    first = G.level(0).level(p)
    normalized[0] = (first, PresheafMap.identity(first))
    for q in range(1, G.q_max + 1):
        level = G.level(q).level(p)
        below = [G.level(q - 1).level(p)] * q
        stacked = PresheafMap.block(
            [level],
            below,
            {(j, 0): G.codegeneracy(q - 1, j).component(p) for j in range(q)},
            site,
            ring,
        ).with_ends(level, ModPresheaf.direct_sum(site, ring, below))
        normalized[q] = stacked.kernel()
    return normalized


def _alternating_coface(G, q, p):
    """``δ = Σ (-1)^i d^i: G^q_p -> G^{q+1}_p``."""
    total = G.coface(q + 1, 0).component(p)
    for i in range(1, q + 2):
        face = G.coface(q + 1, i).component(p)
        total = total - face if i % 2 else total + face
    return total


def godement_resolution(K, q_max=None, points=None):
    """``god(K)`` through ``q_max`` cosimplicial levels.

    On the terminal site ``T`` is the identity and ``god(K) = K``.
    """
    G = godement_cosimplicial(K, q_max, points)
    q_max = G.q_max
    site, ring = K.site, K.ring
    if K.lo > K.hi:
        zero = Complex.zero(site, ring)
        return GodementResolution(
            K, zero, ComplexMorphism.zero(K, zero), None, G, {}, q_max
        )
    normalized = {}
    for p in K.degrees():
        for q, part in _normalize(G, p).items():
            normalized[(p, q)] = part
    levels, horizontal, vertical = {}, {}, {}
    for (p, q), (N, incl) in normalized.items():
        levels[(p, -q)] = N
        if (p - 1, q) in normalized:
            d = G.level(q).differential(p) @ incl
            horizontal[(p, -q)] = d.lift(normalized[(p - 1, q)][1])
        if q < q_max:
            delta = _alternating_coface(G, q, p) @ incl
            vertical[(p, -q)] = delta.lift(normalized[(p, q + 1)][1])
    B = Bicomplex.from_commuting(
        site,
        ring,
        levels,
        horizontal,
        vertical,
        p_window=(K.lo, K.hi),
        q_window=(-q_max, 0),
        open_ends=("q-",),
        check=False,
    )
    total = tot_prod(B)
    validity = intersect_windows(B.validity(), K.validity)
    godK = Complex(
        site,
        ring,
        total.levels,
        total.differentials,
        window=(total.lo, total.hi),
        validity=validity,
        check=False,
    )
    components = {
        n: summand_injection(B, godK, n, 0) @ G.coaugmentation.component(n)
        for n in K.degrees()
    }
    unit = ComplexMorphism(K, godK, components, check=False)
    logger.debug("Godement resolution up to q=%d valid in %s.", q_max, validity)
    return GodementResolution(K, godK, unit, B, G, normalized, q_max)


def god_map(f, q_max=None, source=None, target=None):
    """``god(f)``, acting on each ``N^q`` through ``T^{q+1} f``.

    ``source`` and ``target`` may pass resolutions already computed with
    the same ``q_max``.
    """
    S = source or godement_resolution(f.source, q_max)
    T = target or godement_resolution(f.target, S.q_max)
    if S.bicomplex is None or T.bicomplex is None:
        return ComplexMorphism.zero(S.complex, T.complex)
    comonad = S.cosimplicial.comonad
    components = {}
    for (p, q), (_, incl) in S.normalized.items():
        if (p, q) not in T.normalized:
            continue
        lifted = comonad.power_map(f.component(p), q + 1) @ incl
        components[(p, -q)] = lifted.lift(T.normalized[(p, q)][1])
    return tot_map(
        S.bicomplex,
        T.bicomplex,
        components,
        total_source=S.complex,
        total_target=T.complex,
    )
