# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Hom complexes of presheaf complexes.

A natural map ``α: F -> G`` is stored as the family of its matrices
``α_c``, each flattened column by column, i.e. as an element of
``⊕_c G(c)^{gens F(c)}``.
"""

from ..exactalg import ExactMatrix, FpModule, ModuleMap
from ..site import PresheafMap
from .complex import Complex


class HomModule:
    """Module of natural maps ``F -> G`` with its ambient embedding."""

    def __init__(self, source, target):
        """Computes the module as the kernel of the defining constraints."""
        self.source = source
        self.target = target
        ring = source.ring
        cat = source.site.category
        self.objects = list(cat.objects)
        blocks = [
            FpModule.direct_sum(ring, [target.values[c]] * source.values[c].generators)
            for c in self.objects
        ]
        self.blocks = blocks
        self.ambient = FpModule.direct_sum(ring, blocks)
        constraints, entries = [], {}
        for j, c in enumerate(self.objects):
            R = source.values[c].relations
            if R.ncols:
                k = len(constraints)
                constraints.append(FpModule.direct_sum(ring, [target.values[c]] * R.ncols))
                entries[(k, j)] = R.transpose().kron(
                    ExactMatrix.identity(ring, target.values[c].generators)
                )
        index = {c: j for j, c in enumerate(self.objects)}
        for h in sorted(cat.non_identities()):
            d, c = cat.src(h), cat.dst(h)
            gF_c = source.values[c].generators
            gG_d = target.values[d].generators
            k = len(constraints)
            constraints.append(FpModule.direct_sum(ring, [target.values[d]] * gF_c))
            # G(h) α_c - α_d F(h)
            post = ExactMatrix.identity(ring, gF_c).kron(target.restrictions[h].matrix)
            pre = source.restrictions[h].matrix.transpose().kron(
                ExactMatrix.identity(ring, gG_d)
            )
            entries[(k, index[c])] = post
            key = (k, index[d])
            entries[key] = entries[key] - pre if key in entries else -pre
        matrix = ExactMatrix.blocks(
            ring,
            [m.generators for m in constraints],
            [b.generators for b in blocks],
            entries,
        )
        constraint = ModuleMap(
            self.ambient, FpModule.direct_sum(ring, constraints), matrix, check=False
        )
        self.module, self.inclusion = constraint.kernel()

    def _ambient_map(self, other, per_object):
        ring = self.source.ring
        matrix = ExactMatrix.block_diagonal(ring, [per_object(c) for c in self.objects])
        return ModuleMap(self.ambient, other.ambient, matrix, check=False)

    def post(self, psi, other):
        """``α ↦ ψ ∘ α`` into ``other = Hom(F, G')``."""
        ring = self.source.ring
        ambient = self._ambient_map(
            other,
            lambda c: ExactMatrix.identity(ring, self.source.values[c].generators).kron(
                psi.components[c].matrix
            ),
        )
        return (ambient @ self.inclusion).lift(other.inclusion)

    def pre(self, phi, other):
        """``α ↦ α ∘ φ`` into ``other = Hom(F', G)``."""
        ring = self.source.ring
        ambient = self._ambient_map(
            other,
            lambda c: phi.components[c].matrix.transpose().kron(
                ExactMatrix.identity(ring, self.target.values[c].generators)
            ),
        )
        return (ambient @ self.inclusion).lift(other.inclusion)

    def to_map(self, vector):
        """Natural map represented by a module element."""
        ring = self.source.ring
        flat = self.inclusion.apply(vector)
        components, start = {}, 0
        for c in self.objects:
            rows = self.target.values[c].generators
            cols = self.source.values[c].generators
            chunk = flat[start : start + rows * cols]
            start += rows * cols
            columns = [chunk[j * rows : (j + 1) * rows] for j in range(cols)]
            components[c] = ExactMatrix.from_columns(ring, columns, rows)
        return PresheafMap(self.source, self.target, components, check=False)

    def ambient_vector(self, phi):
        """Flattened matrices of a natural map."""
        flat = []
        for c in self.objects:
            flat.extend(x for col in phi.components[c].matrix.columns() for x in col)
        return flat

    def from_map(self, phi):
        """Module element representing a natural map."""
        ring = self.source.ring
        column = ExactMatrix.from_columns(
            ring, [self.ambient_vector(phi)], self.ambient.generators
        )
        point = ModuleMap(
            FpModule.free(ring, 1), self.ambient, column, check=False
        ).lift(self.inclusion)
        return point.matrix.column(0)


def _module_block(ring, sources, targets, entries):
    matrix = ExactMatrix.blocks(
        ring,
        [t.generators for t in targets],
        [s.generators for s in sources],
        {k: m.matrix for k, m in entries.items()},
    )
    return ModuleMap(
        FpModule.direct_sum(ring, sources),
        FpModule.direct_sum(ring, targets),
        matrix,
        check=False,
    )


def dghom(K, L):
    """Hom complex ``[K, L]`` of Λ-modules over the terminal site.

    ``[K, L]_n = ⊕_p Hom(K_p, L_{p+n})`` with
    ``(D f)_p = d' f_p - (-1)^n f_{p-1} d``.
    """
    ring = K.ring
    lo, hi = L.lo - K.hi, L.hi - K.lo
    if K.lo > K.hi or L.lo > L.hi:
        return Complex.of_modules(ring, {})
    cache = {}

    def hom(p, q):
        if (p, q) not in cache:
            cache[(p, q)] = HomModule(K.level(p), L.level(q))
        return cache[(p, q)]

    summands = {n: [p for p in range(K.lo, K.hi + 1)] for n in range(lo - 1, hi + 1)}
    modules = {
        n: FpModule.direct_sum(ring, [hom(p, p + n).module for p in summands[n]])
        for n in range(lo, hi + 1)
    }
    diffs = {}
    for n in range(lo, hi + 1):
        sign = -1 if n % 2 else 1
        src = [hom(p, p + n) for p in summands[n]]
        tgt = [hom(p, p + n - 1) for p in summands[n - 1]]
        where = {p: i for i, p in enumerate(summands[n - 1])}
        entries = {}
        for j, p in enumerate(summands[n]):
            entries[(where[p], j)] = src[j].post(L.differential(p + n), tgt[where[p]])
            if p + 1 in where:
                # f_p contributes to (D f)_{p+1} through f_p ∘ d_{p+1}
                term = src[j].pre(K.differential(p + 1), tgt[where[p + 1]]).scale(-sign)
                entries[(where[p + 1], j)] = term
        diffs[n] = _module_block(
            ring, [h.module for h in src], [h.module for h in tgt], entries
        )
    complex_ = Complex.of_modules(ring, modules, diffs, window=(lo, hi))
    complex_.hom_modules = cache
    return complex_
