# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Finite categories given by explicit composition tables."""

import itertools
from collections import namedtuple
from functools import cached_property

from ..errors import MissingFiberProductError, UnknownObjectError

Morphism = namedtuple("Morphism", ["id", "src", "dst"])


def identity_id(obj):
    """Default id of the identity of ``obj``."""
    return f"id_{obj}"


def inclusion_id(src, dst):
    """Id of the unique morphism ``src -> dst`` of a poset."""
    return f"{src}->{dst}"


class FinCategory:
    """Finite category.

    Composition is written ``compose(g, f) = g ∘ f`` for ``f: a -> b`` and
    ``g: b -> c``. Identity composites are filled in automatically.
    """

    def __init__(self, objects, morphisms, compose, identities=None):
        """Constructor.

        :param objects: ordered object ids.
        :param morphisms: iterable of ``(id, src, dst)``.
        :param compose: iterable of ``(g, f, g∘f)`` triples.
        :param identities: ``{object: morphism id}``; missing identities are
            created as ``id_<object>``.
        """
        self.objects = list(objects)
        self.morphisms = {}
        for m in morphisms:
            m = Morphism(*m)
            self.morphisms[m.id] = m
        identities = dict(identities or {})
        for c in self.objects:
            ident = identities.setdefault(c, identity_id(c))
            if ident not in self.morphisms:
                self.morphisms[ident] = Morphism(ident, c, c)
        self.identities = identities
        for m in self.morphisms.values():
            for end in (m.src, m.dst):
                if end not in self.objects:
                    raise UnknownObjectError(end)
        self._table = {}
        for g, f, gf in compose:
            self._table[(g, f)] = gf
        for m in self.morphisms.values():
            self._table.setdefault((m.id, identities[m.src]), m.id)
            self._table.setdefault((identities[m.dst], m.id), m.id)

    @classmethod
    def poset(cls, objects, relations):
        """Category of a finite preorder given by generating ``(smaller, larger)`` pairs.

        Morphism ids are ``"a->b"`` and identities ``"a->a"``.
        """
        objects = list(objects)
        below = {c: {c} for c in objects}
        for a, b in relations:
            below[b].add(a)
        changed = True
        while changed:
            changed = False
            for c in objects:
                extra = set().union(*(below[d] for d in below[c])) - below[c]
                if extra:
                    below[c] |= extra
                    changed = True
        morphisms = [
            (inclusion_id(a, b), a, b) for b in objects for a in objects if a in below[b]
        ]
        compose = []
        for a, b, c in itertools.product(objects, repeat=3):
            if a in below[b] and b in below[c]:
                compose.append(
                    (inclusion_id(b, c), inclusion_id(a, b), inclusion_id(a, c))
                )
        identities = {c: inclusion_id(c, c) for c in objects}
        return cls(objects, morphisms, compose, identities)

    def morphism(self, mid):
        """The morphism with the given id."""
        try:
            return self.morphisms[mid]
        except KeyError:
            raise UnknownObjectError(mid)

    def check_object(self, obj):
        """Raises :class:`UnknownObjectError` for a foreign object."""
        if obj not in self.objects:
            raise UnknownObjectError(obj)
        return obj

    def identity(self, obj):
        """Identity morphism id of ``obj``."""
        return self.identities[self.check_object(obj)]

    def is_identity(self, mid):
        """Whether ``mid`` is an identity."""
        m = self.morphism(mid)
        return self.identities[m.src] == mid

    def src(self, mid):
        """Domain."""
        return self.morphism(mid).src

    def dst(self, mid):
        """Codomain."""
        return self.morphism(mid).dst

    def compose(self, g, f):
        """``g ∘ f``."""
        try:
            return self._table[(g, f)]
        except KeyError:
            raise UnknownObjectError((g, f))

    def compose_path(self, *mids):
        """``m1 ∘ m2 ∘ ... ∘ mk`` for ``compose_path(m1, ..., mk)``."""
        result = mids[-1]
        for m in reversed(mids[:-1]):
            result = self.compose(m, result)
        return result

    @cached_property
    def _homs(self):
        homs = {(a, b): [] for a in self.objects for b in self.objects}
        for m in sorted(self.morphisms.values()):
            homs[(m.src, m.dst)].append(m.id)
        return homs

    def hom(self, src, dst):
        """Sorted ids of the morphisms ``src -> dst``."""
        self.check_object(src)
        self.check_object(dst)
        return self._homs[(src, dst)]

    def into(self, dst):
        """Sorted ids of all morphisms with codomain ``dst``."""
        return sorted(m.id for m in self.morphisms.values() if m.dst == dst)

    def non_identities(self):
        """Sorted ids of the non-identity morphisms."""
        return sorted(m for m in self.morphisms if not self.is_identity(m))

    @cached_property
    def is_poset(self):
        """Whether every hom-set has at most one element and only identities are loops."""
        for (a, b), hom in self._homs.items():
            if len(hom) > 1 or (a != b and hom and self._homs[(b, a)]):
                return False
        return True

    def factorizations(self, f, g):
        """Ids ``h`` with ``g ∘ h = f``."""
        if self.dst(f) != self.dst(g):
            return []
        return [h for h in self.hom(self.src(f), self.src(g)) if self.compose(g, h) == f]

    def factors_through(self, f, g):
        """Whether ``f`` factors through ``g``."""
        return bool(self.factorizations(f, g))

    def check_laws(self):
        """Violations of totality, identity and associativity laws."""
        problems = []
        ids = sorted(self.morphisms)
        for g, f in itertools.product(ids, repeat=2):
            if self.src(g) != self.dst(f):
                continue
            gf = self._table.get((g, f))
            if gf is None:
                problems.append(f"composition {g} ∘ {f} is missing")
            elif gf not in self.morphisms:
                problems.append(f"composition {g} ∘ {f} = {gf} is not a morphism")
            elif (self.src(gf), self.dst(gf)) != (self.src(f), self.dst(g)):
                problems.append(f"composition {g} ∘ {f} = {gf} has wrong ends")
        if problems:
            return problems
        for m in ids:
            mor = self.morphisms[m]
            if self.compose(m, self.identities[mor.src]) != m:
                problems.append(f"right identity law fails for {m}")
            if self.compose(self.identities[mor.dst], m) != m:
                problems.append(f"left identity law fails for {m}")
        for h, g, f in itertools.product(ids, repeat=3):
            if self.src(h) != self.dst(g) or self.src(g) != self.dst(f):
                continue
            if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                problems.append(f"associativity fails for {h}, {g}, {f}")
        return problems

    def fiber_product(self, legs):
        """Limit of the cospan given by ``legs`` (morphisms with a common codomain).

        Returns ``(apex, projections)`` with ``legs[i] ∘ projections[i]``
        independent of ``i``.

        :raises MissingFiberProductError: if no limit exists.
        """
        legs = list(legs)
        if not legs:
            raise MissingFiberProductError(legs)
        target = self.dst(legs[0])
        if any(self.dst(leg) != target for leg in legs):
            raise MissingFiberProductError(legs)
        if len(legs) == 1:
            src = self.src(legs[0])
            return src, [self.identity(src)]
        cones = self._cones(legs)
        for apex, proj in cones:
            if all(self._unique_factor(cone, (apex, proj)) for cone in cones):
                return apex, list(proj)
        raise MissingFiberProductError(legs)

    def _cones(self, legs):
        cones = []
        for x in self.objects:
            options = [self.hom(x, self.src(leg)) for leg in legs]
            for proj in itertools.product(*options):
                tips = {self.compose(leg, p) for leg, p in zip(legs, proj)}
                if len(tips) == 1:
                    cones.append((x, proj))
        return cones

    def _unique_factor(self, cone, limit):
        found = self.cone_factorizations(cone, limit)
        return len(found) == 1

    def cone_factorizations(self, cone, limit):
        """Ids ``u: cone apex -> limit apex`` with ``limit[i] ∘ u = cone[i]``."""
        (x, xs), (y, ys) = cone, limit
        return [
            u
            for u in self.hom(x, y)
            if all(self.compose(p, u) == q for p, q in zip(ys, xs))
        ]

    def __repr__(self):
        """Representation."""
        return f"FinCategory<{len(self.objects)} objects, {len(self.morphisms)} morphisms>"
