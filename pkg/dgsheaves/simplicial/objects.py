# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Truncated simplicial objects in set or module presheaves."""

import logging

from ..errors import NonFunctorialError, NotNaturalError, SetValuedError, TruncationError
from ..site import (
    ModPresheaf,
    PresheafMap,
    SetPresheaf,
    SetPresheafMap,
    linearize_map,
    linearize_presheaf,
)

logger = logging.getLogger(__name__)

MODULES = "modules"
SETS = "sets"


def kind_of(presheaf):
    """``modules`` or ``sets``."""
    return MODULES if isinstance(presheaf, ModPresheaf) else SETS


def compose(g, f):
    """``g ∘ f`` for module or set presheaf maps."""
    if isinstance(f, PresheafMap):
        return g @ f
    return SetPresheafMap(
        f.source,
        g.target,
        {
            c: {x: g.components[c][y] for x, y in f.components[c].items()}
            for c in f.source.site.objects
        },
        check=False,
    )


def maps_equal(f, g):
    """Equality of module or set presheaf maps."""
    if isinstance(f, PresheafMap):
        return f.equals(g)
    return f.components == g.components


def identity(presheaf):
    """Identity map of a module or set presheaf."""
    if isinstance(presheaf, ModPresheaf):
        return PresheafMap.identity(presheaf)
    return SetPresheafMap.identity(presheaf)


class SimplicialObject:
    """Simplicial object truncated at level ``N``.

    ``faces[(n, i)]: X_n -> X_{n-1}`` for ``0 <= i <= n``, ``1 <= n <= N``;
    ``degeneracies[(n, j)]: X_n -> X_{n+1}`` for ``0 <= j <= n``, ``n < N``.
    """

    def __init__(self, site, N, levels, faces, degeneracies, check=True):
        """Constructor.

        :raises NonFunctorialError: if ``check`` and a simplicial identity fails.
        """
        self.site = site
        self.N = N
        self.levels = {n: levels[n] for n in range(N + 1)}
        self.faces = dict(faces)
        self.degeneracies = dict(degeneracies)
        self.kind = kind_of(self.levels[0]) if self.levels else MODULES
        missing = [
            key
            for key in [(n, i) for n in range(1, N + 1) for i in range(n + 1)]
            if key not in self.faces
        ] + [
            key
            for key in [(n, j) for n in range(N) for j in range(n + 1)]
            if key not in self.degeneracies
        ]
        if check:
            if missing:
                raise NonFunctorialError(f"Missing structure maps {missing}.")
            problems = self.identity_problems()
            if problems:
                raise NonFunctorialError("; ".join(problems))

    @property
    def ring(self):
        """Coefficient ring of a module-valued object."""
        return self.levels[0].ring

    def level(self, n):
        """``X_n``.

        :raises TruncationError: beyond the truncation level.
        """
        if n > self.N or n < 0:
            raise TruncationError(f"Level {n} lies beyond the truncation {self.N}.")
        return self.levels[n]

    def face(self, n, i):
        """``d_i: X_n -> X_{n-1}``."""
        return self.faces[(n, i)]

    def degeneracy(self, n, j):
        """``s_j: X_n -> X_{n+1}``."""
        return self.degeneracies[(n, j)]

    def identity_problems(self):
        """Simplicial identities failing below the truncation."""
        N = self.N
        d, s = self.faces, self.degeneracies
        problems = []
        for n in range(2, N + 1):
            for j in range(n + 1):
                for i in range(j):
                    if not maps_equal(compose(d[(n - 1, i)], d[(n, j)]),
                                      compose(d[(n - 1, j - 1)], d[(n, i)])):
                        problems.append(f"d_{i} d_{j} != d_{j - 1} d_{i} on X_{n}")
        for n in range(N):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = compose(d[(n + 1, i)], s[(n, j)])
                    if i < j:
                        rhs = compose(s[(n - 1, j - 1)], d[(n, i)])
                    elif i in (j, j + 1):
                        rhs = identity(self.levels[n])
                    else:
                        rhs = compose(s[(n - 1, j)], d[(n, i - 1)])
                    if not maps_equal(lhs, rhs):
                        problems.append(f"d_{i} s_{j} fails on X_{n}")
        for n in range(N - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    if not maps_equal(compose(s[(n + 1, i)], s[(n, j)]),
                                      compose(s[(n + 1, j + 1)], s[(n, i)])):
                        problems.append(f"s_{i} s_{j} != s_{j + 1} s_{i} on X_{n}")
        return problems

    def check_identities(self):
        """Whether every simplicial identity holds."""
        return not self.identity_problems()

    def require_modules(self):
        """:raises SetValuedError: for set-valued objects."""
        if self.kind != MODULES:
            raise SetValuedError("Linearize set-valued simplicial objects first.")

    @classmethod
    def constant(cls, presheaf, N):
        """Constant simplicial object, every structure map the identity."""
        one = identity(presheaf)
        faces = {(n, i): one for n in range(1, N + 1) for i in range(n + 1)}
        degeneracies = {(n, j): one for n in range(N) for j in range(n + 1)}
        return cls(
            presheaf.site, N, {n: presheaf for n in range(N + 1)}, faces, degeneracies,
            check=False,
        )

    @classmethod
    def direct_sum(cls, objects):
        """Levelwise direct sum of module-valued objects."""
        objects = list(objects)
        site, ring, N = objects[0].site, objects[0].ring, objects[0].N
        levels = {
            n: ModPresheaf.direct_sum(site, ring, [X.levels[n] for X in objects])
            for n in range(N + 1)
        }

        def summed(maps, n, m):
            return PresheafMap.block(
                [X.levels[n] for X in objects],
                [X.levels[m] for X in objects],
                {(k, k): f for k, f in enumerate(maps)},
                site,
                ring,
            ).with_ends(levels[n], levels[m])

        faces = {
            (n, i): summed([X.faces[(n, i)] for X in objects], n, n - 1)
            for (n, i) in objects[0].faces
        }
        degeneracies = {
            (n, j): summed([X.degeneracies[(n, j)] for X in objects], n, n + 1)
            for (n, j) in objects[0].degeneracies
        }
        return cls(site, N, levels, faces, degeneracies, check=False)

    def truncated(self, N):
        """The same object truncated at a lower level."""
        return SimplicialObject(
            self.site,
            N,
            {n: self.levels[n] for n in range(N + 1)},
            {k: f for k, f in self.faces.items() if k[0] <= N},
            {k: f for k, f in self.degeneracies.items() if k[0] < N},
            check=False,
        )

    def __repr__(self):
        """Representation."""
        return f"SimplicialObject<{self.kind}, N={self.N}>"


class AugmentedSimplicial:
    """Simplicial object with an augmentation ``X_0 -> target``."""

    def __init__(self, simplicial, target, augmentation, check=True):
        """Constructor.

        :raises NonFunctorialError: if ``check`` and the augmentation does not
            coequalize ``d_0`` and ``d_1``.
        """
        self.simplicial = simplicial
        self.target = target
        self.augmentation = augmentation
        if check and simplicial.N >= 1:
            X = simplicial
            if not maps_equal(
                compose(augmentation, X.face(1, 0)), compose(augmentation, X.face(1, 1))
            ):
                raise NonFunctorialError("Augmentation does not coequalize d_0 and d_1.")

    @property
    def N(self):
        """Truncation level."""
        return self.simplicial.N

    @property
    def site(self):
        """Underlying site."""
        return self.simplicial.site

    def level(self, n):
        """``X_n``; level ``-1`` is the augmentation target."""
        if n == -1:
            return self.target
        return self.simplicial.level(n)

    def face(self, n, i):
        """Faces, with ``d_0`` on level 0 the augmentation."""
        if n == 0:
            return self.augmentation
        return self.simplicial.face(n, i)

    @classmethod
    def constant(cls, presheaf, N):
        """Constant augmented object with identity augmentation."""
        return cls(SimplicialObject.constant(presheaf, N), presheaf, identity(presheaf))

    def __repr__(self):
        """Representation."""
        return f"AugmentedSimplicial<{self.simplicial.kind}, N={self.N}>"


def linearize(X, ring):
    """Free module simplicial object on a set-valued one."""
    if X.kind == MODULES:
        return X
    levels = {n: linearize_presheaf(F, ring) for n, F in X.levels.items()}
    faces = {
        (n, i): linearize_map(f, levels[n], levels[n - 1]) for (n, i), f in X.faces.items()
    }
    degeneracies = {
        (n, j): linearize_map(s, levels[n], levels[n + 1])
        for (n, j), s in X.degeneracies.items()
    }
    return SimplicialObject(X.site, X.N, levels, faces, degeneracies, check=False)


def linearize_augmented(X, ring):
    """Linearization of an augmented set-valued object."""
    simplicial = linearize(X.simplicial, ring)
    target = linearize_presheaf(X.target, ring)
    augmentation = linearize_map(X.augmentation, simplicial.levels[0], target)
    return AugmentedSimplicial(simplicial, target, augmentation, check=False)


def point_object(site, N):
    """Terminal set-valued simplicial object."""
    point = SetPresheaf(
        site,
        {c: ["pt"] for c in site.objects},
        {h: {"pt": "pt"} for h in site.category.morphisms},
        check=False,
    )
    return SimplicialObject.constant(point, N)


class SimplicialMap:
    """Levelwise maps commuting with faces and degeneracies."""

    def __init__(self, source, target, components, check=True):
        """Constructor.

        :raises NotNaturalError: if ``check`` and a structure map is not respected.
        """
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            problems = self.problems()
            if problems:
                raise NotNaturalError("; ".join(problems))

    def problems(self):
        """Structure maps the components fail to commute with."""
        f = self.components
        out = []
        for (n, i), d in self.source.faces.items():
            if not maps_equal(compose(self.target.faces[(n, i)], f[n]), compose(f[n - 1], d)):
                out.append(f"d_{i} on level {n}")
        for (n, j), s in self.source.degeneracies.items():
            lhs = compose(self.target.degeneracies[(n, j)], f[n])
            if not maps_equal(lhs, compose(f[n + 1], s)):
                out.append(f"s_{j} on level {n}")
        return out
