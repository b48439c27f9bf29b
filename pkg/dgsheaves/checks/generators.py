# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Seeded random inputs of the property suites.

Every generator takes a ``random.Random`` so that a suite case is fully
determined by its seed.
"""

from ..complexes import Complex, ComplexMorphism, direct_sum, disk, module_map, sphere
from ..exactalg import ExactMatrix, FpModule, ModuleMap
from ..resolve import KanData
from ..site import ModPresheaf, PresheafMap, yoneda_extension

PRESHEAF_PIECES = ("sphere", "disk", "constant", "point")


def random_matrix(rng, ring, nrows, ncols, bound):
    """Entries drawn uniformly from ``[-bound, bound]``."""
    rows = [[rng.randint(-bound, bound) for _ in range(ncols)] for _ in range(nrows)]
    return ExactMatrix(ring, nrows, ncols, rows)


def unimodular(rng, ring, n, steps=6):
    """``(P, P⁻¹)`` for a product of elementary row operations."""
    P = ExactMatrix.identity(ring, n)
    P_inv = ExactMatrix.identity(ring, n)
    if n < 2:
        return P, P_inv
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-2, -1, 1, 2))
        E = [[ring.one if a == b else ring.zero for b in range(n)] for a in range(n)]
        E_inv = [list(r) for r in E]
        E[i][j] = ring.coerce(k)
        E_inv[i][j] = ring.coerce(-k)
        P = ExactMatrix(ring, n, n, E) @ P
        P_inv = P_inv @ ExactMatrix(ring, n, n, E_inv)
    return P, P_inv


def random_module_complex(rng, ring, lo=0, hi=3, pieces=4):
    """Sum of spheres and scaled disks in ``[lo, hi]`` under a random change of basis.

    A scaled disk is ``Λ --k--> Λ`` in degrees ``n, n-1``; over a field
    ``k = 1``.
    """
    layout = []
    for _ in range(pieces):
        if hi > lo and rng.random() < 0.5:
            n = rng.randint(lo + 1, hi)
            k = 1 if ring.is_field else rng.choice((1, 2, 3))
            layout.append(("disk", n, k))
        else:
            layout.append(("sphere", rng.randint(lo, hi), 0))
    positions = {n: [] for n in range(lo, hi + 1)}
    for index, (kind, n, _) in enumerate(layout):
        positions[n].append(index)
        if kind == "disk":
            positions[n - 1].append(index)
    ranks = {n: len(p) for n, p in positions.items()}
    bases = {n: unimodular(rng, ring, ranks[n]) for n in positions}
    modules = {n: FpModule.free(ring, r) for n, r in ranks.items()}
    diffs = {}
    for n in range(lo + 1, hi + 1):
        rows = [[ring.zero] * ranks[n] for _ in range(ranks[n - 1])]
        for col, index in enumerate(positions[n]):
            kind, top, k = layout[index]
            if kind == "disk" and top == n:
                rows[positions[n - 1].index(index)][col] = ring.coerce(k)
        D = ExactMatrix(ring, ranks[n - 1], ranks[n], rows)
        P_below, _ = bases[n - 1]
        _, P_inv = bases[n]
        diffs[n] = ModuleMap(modules[n], modules[n - 1], P_below @ D @ P_inv, check=False)
    return Complex.of_modules(ring, modules, diffs, window=(lo, hi))


def presheaf_piece(rng, site, ring, lo, hi, kinds=PRESHEAF_PIECES):
    """One summand: a sphere or disk on a representable, a constant or a one-object piece."""
    c = rng.choice(site.objects)
    kind = rng.choice(kinds)
    if kind == "disk" and hi > lo:
        return disk(site, c, ring, rng.randint(lo + 1, hi))
    n = rng.randint(lo, hi)
    if kind == "constant":
        return Complex.concentrated(ModPresheaf.constant(site, FpModule.free(ring, 1)), n)
    if kind == "point":
        return Complex.concentrated(ModPresheaf(site, ring, {c: FpModule.free(ring, 1)}), n)
    return sphere(site, c, ring, n)


def random_presheaf_complex(rng, site, ring, lo=0, hi=1, pieces=2, kinds=PRESHEAF_PIECES):
    """Direct sum of random pieces, spanning at least ``[lo, hi]``."""
    parts = [presheaf_piece(rng, site, ring, lo, hi, kinds) for _ in range(pieces)]
    total, _, _ = direct_sum(parts)
    if total.lo > lo or total.hi < hi:
        total = Complex(
            site,
            ring,
            total.levels,
            total.differentials,
            window=(min(lo, total.lo), max(hi, total.hi)),
            check=False,
        )
    return total


def random_element(rng, module, bound=2):
    """Random vector on the generators of ``module``."""
    ring = module.ring
    return [ring.coerce(rng.randint(-bound, bound)) for _ in range(module.generators)]


def disk_map(D, Y, n, c, x):
    """``D^nΛ(c) -> Y`` sending the generator to ``x ∈ Y_n(c)``."""
    dx = Y.differential(n).component(c).apply(x)
    return ComplexMorphism(
        D,
        Y,
        {
            n: yoneda_extension(D.level(n), [x], Y.level(n)),
            n - 1: yoneda_extension(D.level(n - 1), [dx], Y.level(n - 1)),
        },
    )


def simplex_map(Delta, Y, n, c, x):
    """``Δ^nΛ(c) -> Y`` with top generator ``x`` and boundary pair ``(dx, 0)``."""
    dx = Y.differential(n).component(c).apply(x)
    zero = [Y.ring.zero] * len(dx)
    return ComplexMorphism(
        Delta,
        Y,
        {
            n: yoneda_extension(Delta.level(n), [x], Y.level(n)),
            n - 1: yoneda_extension(Delta.level(n - 1), [dx, zero], Y.level(n - 1)),
        },
    )


def sphere_map(S, Y, n, y):
    """``S^nΛ(c) -> Y`` for a cycle ``y ∈ Y_n(c)``."""
    return ComplexMorphism(S, Y, {n: yoneda_extension(S.level(n), [y], Y.level(n))})


def inclusion_chain_functor(rng, site, ring, hi=2, pieces=3):
    """``γ`` on a chain poset: nested prefixes of one sum of module pieces.

    Objects are taken in the order of the site; ``γ`` of an object is the
    sum of the first ``k`` pieces with ``k`` non-decreasing along the
    chain, and ``γ`` of a morphism is the inclusion of prefixes.
    """
    parts = [random_module_complex(rng, ring, 0, hi, pieces=1) for _ in range(pieces)]
    objects = list(site.objects)
    sizes = sorted(rng.randint(1, pieces) for _ in objects)
    values = {}
    for c, k in zip(objects, sizes):
        values[c], _, _ = direct_sum(parts[:k])
    cat = site.category
    maps = {}
    for h in cat.non_identities():
        d, c = cat.src(h), cat.dst(h)
        source, target = values[d], values[c]
        components = {}
        for n in source.degrees():
            S, T = source.level(n).values["*"], target.level(n).values["*"]
            rows = [[ring.zero] * S.generators for _ in range(T.generators)]
            for j in range(S.generators):
                rows[j][j] = ring.one
            matrix = ExactMatrix(ring, T.generators, S.generators, rows)
            components[n] = _terminal_map(source.level(n), target.level(n), matrix)
        maps[h] = ComplexMorphism(source, target, components)
    return KanData(site, values, maps)


def _terminal_map(source, target, matrix):
    return module_map(
        ModuleMap(source.values["*"], target.values["*"], matrix, check=False),
        source,
        target,
    )


def scaled_chain_functor(rng, site, ring, hi=2, pieces=2):
    """``γ`` on a chain poset: one complex ``C`` everywhere, ``γ(d -> c)`` multiplication by ``k^(i(c) - i(d))``.

    ``i`` is the position in the order of the site; ``k`` may be zero or a
    non-unit, so the maps are neither injective nor surjective in general.
    """
    parts = [random_module_complex(rng, ring, 0, hi, pieces=1) for _ in range(pieces)]
    C, _, _ = direct_sum(parts)
    k = rng.choice((0, 1) if ring.is_field else (0, 2, -3))
    objects = list(site.objects)
    cat = site.category
    maps = {}
    for h in cat.non_identities():
        factor = ring.coerce(k ** (objects.index(cat.dst(h)) - objects.index(cat.src(h))))
        maps[h] = ComplexMorphism(
            C,
            C,
            {n: PresheafMap.identity(C.level(n)).scale(factor) for n in C.degrees()},
            check=False,
        )
    return KanData(site, {c: C for c in objects}, maps)
