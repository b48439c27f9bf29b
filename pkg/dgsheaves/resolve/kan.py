# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Left Kan extension along the Yoneda embedding.

For ``γ`` sending objects to complexes of modules, ``γ*K`` is the sum
totalization of the coends ``∫^c K_p(c) ⊗ γ_q(c)``.
"""

import logging

from ..complexes import (
    Bicomplex,
    Complex,
    ComplexMorphism,
    module_map,
    module_presheaf,
    tot_sum,
)
from ..errors import NonFunctorialError
from ..exactalg import ExactMatrix, FpModule, ModuleMap
from ..site import ModPresheaf, terminal_site

logger = logging.getLogger(__name__)


def _window_shift(window, lo_shift, hi_shift):
    lo, hi = window
    return (
        None if lo is None else lo + lo_shift,
        None if hi is None else hi + hi_shift,
    )


class KanData:
    """Covariant functor ``γ`` from the category of a site to complexes of modules.

    ``values[c]`` is a complex of modules; ``maps[h]`` is the chain map
    ``γ(d) -> γ(c)`` of ``h: d -> c``. Identities may be omitted.
    """

    def __init__(self, site, values, maps=None, check=True):
        """Constructor.

        :raises NonFunctorialError: if ``check`` and ``γ`` is not a functor.
        """
        self.site = site
        category = site.category
        self.values = dict(values)
        self.maps = {}
        maps = maps or {}
        for h in category.morphisms:
            if h in maps:
                self.maps[h] = maps[h]
            elif category.is_identity(h):
                self.maps[h] = ComplexMorphism.identity(self.values[category.src(h)])
            else:
                raise NonFunctorialError(f"Missing value of γ on {h}.")
        if check:
            problems = self.functoriality_problems()
            if problems:
                raise NonFunctorialError("; ".join(problems))

    @property
    def ring(self):
        """Coefficient ring."""
        return next(iter(self.values.values())).ring

    def functoriality_problems(self):
        """Violations of ``γ(1) = 1`` and ``γ(g ∘ f) = γ(g) ∘ γ(f)``."""
        cat = self.site.category
        problems = []
        for h in sorted(cat.morphisms):
            if cat.is_identity(h):
                identity = ComplexMorphism.identity(self.values[cat.src(h)])
                if not self.maps[h].equals(identity):
                    problems.append(f"γ({h}) is not the identity")
        for g in sorted(cat.morphisms):
            for f in sorted(cat.morphisms):
                if cat.src(g) != cat.dst(f):
                    continue
                if not self.maps[cat.compose(g, f)].equals(self.maps[g] @ self.maps[f]):
                    problems.append(f"γ({g} ∘ {f}) is not the composite")
        return problems

    def window(self):
        """Span of the windows of the values."""
        windows = [(K.lo, K.hi) for K in self.values.values() if K.lo <= K.hi]
        if not windows:
            return 0, -1
        return min(w[0] for w in windows), max(w[1] for w in windows)

    def module(self, c, q):
        """``γ_q(c)``."""
        return self.values[c].level(q).values["*"]

    def matrix(self, h, q):
        """``γ_q(h)``."""
        return self.maps[h].component(q).components["*"].matrix

    def differential(self, c, q):
        """``d: γ_q(c) -> γ_{q-1}(c)``."""
        return self.values[c].differential(q).components["*"].matrix


def _identity(ring, n):
    return ExactMatrix.identity(ring, n)


def _coend(gamma, K, p, q):
    """``∫^c K_p(c) ⊗ γ_q(c)`` on the generators of ``⊕_c K_p(c) ⊗ γ_q(c)``."""
    ring = K.ring
    cat = K.site.category
    objects = list(cat.objects)
    index = {c: i for i, c in enumerate(objects)}
    F = K.level(p)
    summands = [F.values[c].tensor(gamma.module(c, q)) for c in objects]
    total = FpModule.direct_sum(ring, summands)
    sizes = [m.generators for m in summands]
    columns = [total.relations]
    for h in sorted(cat.non_identities()):
        d, c = cat.src(h), cat.dst(h)
        gc, gd = F.values[c].generators, gamma.module(d, q).generators
        # K(h)x ⊗ y - x ⊗ γ(h)y
        restricted = F.restrictions[h].matrix.kron(_identity(ring, gd))
        pushed = _identity(ring, gc).kron(gamma.matrix(h, q)).scale(-1)
        if c == d:
            entries = {(index[c], 0): restricted + pushed}
        else:
            entries = {(index[d], 0): restricted, (index[c], 0): pushed}
        columns.append(ExactMatrix.blocks(ring, sizes, [gc * gd], entries))
    relations = ExactMatrix.hstack(ring, total.generators, columns)
    return FpModule(ring, total.generators, relations)


def _summand_map(source, target, matrix):
    return module_map(
        ModuleMap(source.values["*"], target.values["*"], matrix, check=False),
        source,
        target,
    )


def kan_extend(gamma, K):
    """``γ*K``, the degreewise coend followed by sum totalization.

    The horizontal differential is ``d ⊗ 1`` and the vertical one
    ``(-1)^p 1 ⊗ d``.
    """
    ring = K.ring
    cat = K.site.category
    g_lo, g_hi = gamma.window()
    if K.lo > K.hi or g_lo > g_hi:
        return Complex.of_modules(ring, {})
    site = terminal_site()
    levels = {}
    for p in range(K.lo, K.hi + 1):
        for q in range(g_lo, g_hi + 1):
            levels[(p, q)] = module_presheaf(_coend(gamma, K, p, q))
    horizontal, vertical = {}, {}
    for p, q in levels:
        if (p - 1, q) in levels:
            blocks = [
                K.differential(p).components[c].matrix.kron(
                    _identity(ring, gamma.module(c, q).generators)
                )
                for c in cat.objects
            ]
            horizontal[(p, q)] = _summand_map(
                levels[(p, q)],
                levels[(p - 1, q)],
                ExactMatrix.block_diagonal(ring, blocks),
            )
        if (p, q - 1) in levels:
            blocks = [
                _identity(ring, K.level(p).values[c].generators).kron(
                    gamma.differential(c, q)
                )
                for c in cat.objects
            ]
            vertical[(p, q)] = _summand_map(
                levels[(p, q)],
                levels[(p, q - 1)],
                ExactMatrix.block_diagonal(ring, blocks),
            )
    B = Bicomplex.from_commuting(
        site,
        ring,
        levels,
        horizontal,
        vertical,
        p_window=(K.lo, K.hi),
        q_window=(g_lo, g_hi),
        check=False,
    )
    total = tot_sum(B)
    validity = _window_shift(K.validity, g_hi, g_lo)
    logger.debug("Kan extension over %d positions.", len(levels))
    return Complex(
        site,
        ring,
        total.levels,
        total.differentials,
        window=(total.lo, total.hi),
        validity=validity,
        check=False,
    )


def kan_unit(gamma, c):
    """``γ(c) -> γ*(S⁰Λ(c))``, ``y -> [1_c ⊗ y]``, and whether it is an isomorphism."""
    ring = gamma.ring
    cat = gamma.site.category
    F = ModPresheaf.representable(gamma.site, c, ring)
    T = kan_extend(gamma, Complex.concentrated(F, 0))
    objects = list(cat.objects)
    basis = F.yoneda_basis(c)
    unit = ExactMatrix.from_columns(
        ring,
        [[ring.one if b == (0, cat.identity(c)) else ring.zero for b in basis]],
        len(basis),
    )
    source = gamma.values[c]
    components = {}
    for q in source.degrees():
        gq = gamma.module(c, q).generators
        sizes = [F.values[d].generators * gamma.module(d, q).generators for d in objects]
        matrix = ExactMatrix.blocks(
            ring, sizes, [gq], {(objects.index(c), 0): unit.kron(_identity(ring, gq))}
        )
        components[q] = _summand_map(source.level(q), T.level(q), matrix)
    unit_map = ComplexMorphism(source, T, components, check=False)
    iso = all(unit_map.component(q).is_isomorphism() for q in unit_map.degrees())
    return unit_map, iso
