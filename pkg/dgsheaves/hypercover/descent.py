# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Descent of presheaf complexes along hypercovers."""

import logging

from ..complexes import (
    Bicomplex,
    ComplexMorphism,
    evaluate,
    in_window,
    module_map,
    module_presheaf,
    summand_injection,
    tot_prod,
)
from ..errors import ValidityError
from ..exactalg import ExactMatrix, FpModule, ModuleMap
from ..site import terminal_site

logger = logging.getLogger(__name__)


def _level_module(K, X, p, q):
    """``K_p(c_q) = ⊕_j K_p(c_{q,j})``."""
    return FpModule.direct_sum(K.ring, [K.level(p).values[c] for c in X.levels[q]])


def _coface(K, X, p, q, i):
    """``d^i: K_p(c_{q-1}) -> K_p(c_q)`` induced by the face ``d_i`` of level ``q``."""
    ring = K.ring
    F = K.level(p)
    sources = [F.values[c] for c in X.levels[q - 1]]
    targets = [F.values[c] for c in X.levels[q]]
    entries = {}
    for j, (jj, phi) in enumerate(X.faces[(q, i)]):
        entries[(j, jj)] = F.restrictions[phi].matrix
    matrix = ExactMatrix.blocks(
        ring,
        [m.generators for m in targets],
        [m.generators for m in sources],
        entries,
    )
    return ModuleMap(
        FpModule.direct_sum(ring, sources), FpModule.direct_sum(ring, targets), matrix,
        check=False,
    )


def cech_bicomplex(K, X):
    """Bicomplex ``B_{p,-q} = K_p(c_q)`` with the alternating coface sum as vertical map."""
    ring = K.ring
    levels, horizontal, vertical = {}, {}, {}
    presheaves = {}
    for q in range(X.N + 1):
        for p in range(K.lo, K.hi + 1):
            presheaves[(p, -q)] = module_presheaf(_level_module(K, X, p, q))
    for (p, nq), F in presheaves.items():
        q = -nq
        levels[(p, nq)] = F
        if (p - 1, nq) in presheaves:
            d = K.differential(p)
            blocks = [d.components[c].matrix for c in X.levels[q]]
            horizontal[(p, nq)] = module_map(
                ModuleMap(
                    F.values["*"],
                    presheaves[(p - 1, nq)].values["*"],
                    ExactMatrix.block_diagonal(ring, blocks),
                    check=False,
                ),
                F,
                presheaves[(p - 1, nq)],
            )
        if q + 1 <= X.N:
            delta = _coface(K, X, p, q + 1, 0)
            for i in range(1, q + 2):
                face = _coface(K, X, p, q + 1, i)
                delta = delta - face if i % 2 else delta + face
            vertical[(p, nq)] = module_map(delta, F, presheaves[(p, nq - 1)])
    return Bicomplex.from_commuting(
        terminal_site(),
        ring,
        levels,
        horizontal,
        vertical,
        p_window=(K.lo, K.hi),
        q_window=(-X.N, 0),
        open_ends=("q-",),
    )


def descent_comparison(K, X):
    """``K(c) -> Tot K(c_•)`` through the coaugmentation."""
    B = cech_bicomplex(K, X)
    T = tot_prod(B)
    source = evaluate(K, X.target)
    ring = K.ring
    components = {}
    for p in range(K.lo, K.hi + 1):
        F = K.level(p)
        blocks = [F.restrictions[a].matrix for a in X.augmentation]
        coaugmentation = ModuleMap(
            F.values[X.target],
            _level_module(K, X, p, 0),
            ExactMatrix.vstack(ring, F.values[X.target].generators, blocks),
            check=False,
        )
        into = summand_injection(B, T, p, 0)
        components[p] = into @ module_map(coaugmentation, source.level(p), B.level(p, 0))
    return ComplexMorphism(source, T, components, check=False), B


class DescentReport:
    """Per-degree comparison of ``H_n K(c)`` with ``H_n Tot K(c_•)``."""

    def __init__(self, verdicts, obstructions, validity):
        """Constructor."""
        self.verdicts = verdicts
        self.obstructions = obstructions
        self.validity = validity

    @property
    def passed(self):
        """Whether every checked degree agrees."""
        return all(self.verdicts.values())

    @property
    def obstruction_degrees(self):
        """Degrees where descent fails."""
        return [o["degree"] for o in self.obstructions]

    def to_dict(self):
        """Report data."""
        lo, hi = self.validity
        return {
            "passed": self.passed,
            "validity": [lo, hi],
            "verdicts": {str(n): ok for n, ok in sorted(self.verdicts.items())},
            "obstructions": self.obstructions,
        }


def descent_check(K, X, degrees=None):
    """Whether ``H_n K(c) -> H_n Tot K(c_•)`` is an isomorphism for valid ``n``.

    Valid degrees are ``n >= hi(K) - N + 1``.

    :raises ValidityError: if a requested degree lies outside that range.
    """
    if K.lo > K.hi or K.is_zero():
        validity = (None, None)
        return DescentReport({n: True for n in (degrees or [])}, [], validity)
    comparison, _ = descent_comparison(K, X)
    validity = (K.hi - X.N + 1, None)
    if degrees is None:
        degrees = list(range(max(validity[0], comparison.target.lo), K.hi + 1))
    for n in degrees:
        if not in_window(n, validity):
            raise ValidityError(n, validity)
    verdicts, obstructions = {}, []
    for n in degrees:
        H = comparison.homology_map(n)
        ok = H.is_isomorphism()
        verdicts[n] = ok
        if not ok:
            obstructions.append(
                {
                    "degree": n,
                    "source": H.source.values["*"].invariants_json(),
                    "target": H.target.values["*"].invariants_json(),
                }
            )
    logger.debug("Descent verdicts %s.", verdicts)
    return DescentReport(verdicts, obstructions, validity)

