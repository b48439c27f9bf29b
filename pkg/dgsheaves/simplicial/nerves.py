# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Nerves of presheaves of finite posets."""

import itertools

from ..site import SetPresheaf, SetPresheafMap
from .objects import SimplicialObject


def _chains(elements, leq, n):
    """Weakly increasing chains ``p_0 <= ... <= p_n``."""
    return [
        chain
        for chain in itertools.product(elements, repeat=n + 1)
        if all(leq(chain[i], chain[i + 1]) for i in range(n))
    ]


def poset_nerve(site, posets, maps, N):
    """Nerve of a presheaf of posets, truncated at ``N``.

    :param posets: ``{object: (elements, relation pairs)}``, the relation
        reflexive and transitive.
    :param maps: ``{h: {element: element}}`` monotone maps ``P(c) -> P(d)``
        for ``h: d -> c``; identities may be omitted.
    """
    cat = site.category
    orders = {}
    for c, (elements, relation) in posets.items():
        pairs = set(map(tuple, relation)) | {(x, x) for x in elements}
        orders[c] = (list(elements), pairs)

    def restriction(h):
        if h in maps:
            return maps[h]
        return {x: x for x in orders[cat.dst(h)][0]}

    levels = {}
    for n in range(N + 1):
        values = {
            c: _chains(orders[c][0], lambda a, b, c=c: (a, b) in orders[c][1], n)
            for c in cat.objects
        }
        restrictions = {
            h: {
                chain: tuple(restriction(h)[x] for x in chain)
                for chain in values[cat.dst(h)]
            }
            for h in cat.morphisms
        }
        levels[n] = SetPresheaf(site, values, restrictions, check=False)

    def structure(n, m, operation):
        return SetPresheafMap(
            levels[n],
            levels[m],
            {c: {x: operation(x) for x in levels[n].values[c]} for c in cat.objects},
            check=False,
        )

    faces = {
        (n, i): structure(n, n - 1, lambda x, i=i: x[:i] + x[i + 1 :])
        for n in range(1, N + 1)
        for i in range(n + 1)
    }
    degeneracies = {
        (n, j): structure(n, n + 1, lambda x, j=j: x[: j + 1] + x[j:])
        for n in range(N)
        for j in range(n + 1)
    }
    return SimplicialObject(site, N, levels, faces, degeneracies, check=False)
