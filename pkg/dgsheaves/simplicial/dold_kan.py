# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Moore and normalized complexes and the inverse functor ``Γ``."""

import itertools
import logging
from functools import lru_cache

from ..complexes import Complex, ComplexMorphism
from ..errors import NonConnectiveError
from ..site import ModPresheaf, PresheafMap
from .objects import SimplicialMap, SimplicialObject

logger = logging.getLogger(__name__)


def moore(X):
    """Moore complex, ``d_n = Σ (-1)^i d_i``.

    Homology is valid in degrees ``n <= N - 1``.

    :raises SetValuedError: for set-valued input.
    """
    X.require_modules()
    diffs = {}
    for n in range(1, X.N + 1):
        total = X.face(n, 0)
        for i in range(1, n + 1):
            face = X.face(n, i)
            total = total - face if i % 2 else total + face
        diffs[n] = total
    return Complex(
        X.site,
        X.ring,
        dict(X.levels),
        diffs,
        window=(0, X.N),
        validity=(None, X.N - 1),
        check=False,
    )


def normalize(X, moore_complex=None):
    """Normalized complex ``N(X)`` with its inclusion into the Moore complex.

    ``N_n = ∩_{i<n} ker d_i`` and the differential is ``(-1)^n d_n``.
    """
    X.require_modules()
    M = moore(X) if moore_complex is None else moore_complex
    site, ring = X.site, X.ring
    levels, inclusions = {0: X.levels[0]}, {0: PresheafMap.identity(X.levels[0])}
    for n in range(1, X.N + 1):
        below = [X.levels[n - 1]] * n
        stacked = PresheafMap.block(
            [X.levels[n]],
            below,
            {(i, 0): X.face(n, i) for i in range(n)},
            site,
            ring,
        ).with_ends(X.levels[n], ModPresheaf.direct_sum(site, ring, below))
        levels[n], inclusions[n] = stacked.kernel()
    diffs = {}
    for n in range(1, X.N + 1):
        d = X.face(n, n) @ inclusions[n]
        if n % 2:
            d = -d
        diffs[n] = d.lift(inclusions[n - 1])
    N = Complex(
        site, ring, levels, diffs, window=(0, X.N), validity=(None, X.N - 1), check=False
    )
    return N, ComplexMorphism(N, M, inclusions, check=False)


def homotopy_groups(X, n):
    """``π_n X = H_n`` of the Moore complex."""
    return moore(X).homology_data(n).presheaf


@lru_cache(maxsize=None)
def surjections(n, k):
    """Monotone surjections ``[n] -> [k]`` as value tuples, lexicographically."""
    out = []
    for cuts in itertools.combinations(range(1, n + 1), k):
        values, level = [], 0
        for i in range(n + 1):
            if i in cuts:
                level += 1
            values.append(level)
        out.append(tuple(values))
    return sorted(out)


@lru_cache(maxsize=None)
def gamma_index(n, top):
    """Summands of ``Γ_n``: surjections ``[n] -> [k]``, ``k`` descending."""
    return [
        (k, sigma)
        for k in range(min(n, top), -1, -1)
        for sigma in surjections(n, k)
    ]


def face_map(n, i):
    """``δ^i: [n-1] -> [n]`` skipping ``i``."""
    return tuple(j if j < i else j + 1 for j in range(n))


def degeneracy_map(n, j):
    """``σ^j: [n+1] -> [n]`` repeating ``j``."""
    return tuple(i if i <= j else i - 1 for i in range(n + 2))


def epi_mono(values):
    """Factor a monotone map ``[m] -> [k]`` as ``μ ∘ ε``.

    Returns ``(ε, image)`` with ``ε`` a surjection onto ``[l]`` and
    ``image`` the sorted image of the map.
    """
    image = sorted(set(values))
    position = {v: i for i, v in enumerate(image)}
    return tuple(position[v] for v in values), tuple(image)


def _gamma_structure(C, n, m, theta, top):
    """Matrix blocks of ``θ*: Γ_n -> Γ_m`` for ``θ: [m] -> [n]``."""
    source = gamma_index(n, top)
    target = {s: r for r, s in enumerate(gamma_index(m, top))}
    entries = {}
    for col, (k, sigma) in enumerate(source):
        composite = tuple(sigma[t] for t in theta)
        eps, image = epi_mono(composite)
        l = len(image) - 1
        if image == tuple(range(k + 1)):
            entries[(target[(l, eps)], col)] = PresheafMap.identity(C.level(k))
        elif image == tuple(range(k)):
            d = C.differential(k)
            entries[(target[(l, eps)], col)] = -d if k % 2 else d
    return entries


def gamma(C, N):
    """``Γ(C)`` truncated at level ``N``.

    ``Γ_n = ⊕_{[n] ->> [k]} C_k``. For ``θ: [m] -> [n]`` and a summand ``σ``,
    ``σθ = μ ε``; the summand is carried identically to ``ε`` if ``μ`` is the
    identity, by ``(-1)^k d`` if ``μ`` misses only ``k``, and to zero otherwise.

    :raises NonConnectiveError: if ``C`` has nonzero negative levels.
    """
    if not C.is_connective():
        raise NonConnectiveError("Truncate the complex before applying gamma.")
    site, ring = C.site, C.ring
    top = max(C.hi, 0)
    parts = {n: [C.level(k) for k, _ in gamma_index(n, top)] for n in range(N + 1)}
    levels = {n: ModPresheaf.direct_sum(site, ring, parts[n]) for n in range(N + 1)}

    def structure(n, m, theta):
        entries = _gamma_structure(C, n, m, theta, top)
        return PresheafMap.block(parts[n], parts[m], entries, site, ring).with_ends(
            levels[n], levels[m]
        )

    faces = {
        (n, i): structure(n, n - 1, face_map(n, i))
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degeneracies = {
        (n, j): structure(n, n + 1, degeneracy_map(n, j))
        for n in range(N)
        for j in range(n + 1)
    }
    logger.debug("Built gamma up to level %d.", N)
    return SimplicialObject(site, N, levels, faces, degeneracies, check=False)


def gamma_map(f, N):
    """``Γ(f)``, acting summandwise by ``f_k``."""
    S, T = gamma(f.source, N), gamma(f.target, N)
    site, ring = f.site, f.ring
    source_top, target_top = max(f.source.hi, 0), max(f.target.hi, 0)
    components = {}
    for n in range(N + 1):
        source_index = gamma_index(n, source_top)
        target_index = gamma_index(n, target_top)
        where = {s: r for r, s in enumerate(target_index)}
        entries = {
            (where[s], j): f.component(s[0])
            for j, s in enumerate(source_index)
            if s in where
        }
        components[n] = PresheafMap.block(
            [f.source.level(k) for k, _ in source_index],
            [f.target.level(k) for k, _ in target_index],
            entries,
            site,
            ring,
        ).with_ends(S.levels[n], T.levels[n])
    return SimplicialMap(S, T, components, check=False)


def gamma_comparison(C, N):
    """Canonical chain map ``C -> N(Γ C)`` through the nondegenerate summands."""
    G = gamma(C, N)
    NG, inclusion = normalize(G)
    site, ring = C.site, C.ring
    top = max(C.hi, 0)
    components = {}
    for n in range(0, min(N, C.hi) + 1):
        parts = [C.level(k) for k, _ in gamma_index(n, top)]
        into = PresheafMap.block(
            [C.level(n)], parts, {(0, 0): PresheafMap.identity(C.level(n))}, site, ring
        ).with_ends(C.level(n), G.levels[n])
        components[n] = into.lift(inclusion.component(n))
    truncated = Complex(
        site, ring, {n: C.level(n) for n in range(0, min(N, C.hi) + 1)},
        {n: C.differential(n) for n in range(1, min(N, C.hi) + 1)},
        window=(0, min(N, C.hi)), check=False,
    )
    return ComplexMorphism(truncated, NG, components, check=False), NG


def moore_map(f):
    """Chain map of Moore complexes induced by a simplicial map."""
    return ComplexMorphism(moore(f.source), moore(f.target), dict(f.components), check=False)
