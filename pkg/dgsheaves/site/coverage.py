# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Sites: finite categories with a coverage."""

import itertools
import logging
from functools import cached_property, lru_cache

from ..errors import UnknownObjectError
from .category import FinCategory, identity_id, inclusion_id

logger = logging.getLogger(__name__)


class Site:
    """Finite category with covering families.

    ``covers`` maps an object to a list of families, each a tuple of morphism
    ids with that object as codomain. ``points`` is an optional list of
    :class:`dgsheaves.site.points.Point`; ``space`` keeps the underlying
    finite space of sites built with :meth:`finite_space`.
    """

    def __init__(self, category, covers, points=None, space=None, name=None):
        """Constructor."""
        self.category = category
        self.covers = {
            c: [tuple(family) for family in covers.get(c, [])] for c in category.objects
        }
        for c in covers:
            category.check_object(c)
        self.space = space
        self.name = name
        self._points = points

    @classmethod
    def terminal(cls):
        """One object, its identity, the trivial coverage and one point."""
        from .points import Point

        cat = FinCategory(["*"], [], [])
        ident = identity_id("*")
        return cls(
            cat,
            {"*": [(ident,)]},
            points=[Point("pt", "*", {"*": ident})],
            name="terminal",
        )

    @classmethod
    def trivial_poset(cls, objects, relations, name=None):
        """Poset site whose only covers contain the identity."""
        cat = FinCategory.poset(objects, relations)
        covers = {c: [(cat.identity(c),)] for c in cat.objects}
        return cls(cat, covers, name=name)

    @classmethod
    def finite_space(cls, points, opens, name=None):
        """Site of opens of a finite space under inclusion.

        :param points: the points of the space.
        :param opens: ``{open id: iterable of points}``, closed under finite
            intersections and unions.
        Covers of ``U`` are all families of subopens whose union is ``U``.
        """
        opens = {k: frozenset(v) for k, v in opens.items()}
        objects = list(opens)
        relations = [
            (a, b) for a in objects for b in objects if a != b and opens[a] <= opens[b]
        ]
        cat = FinCategory.poset(objects, relations)
        covers = {}
        for u in objects:
            subs = [v for v in objects if opens[v] <= opens[u]]
            families = []
            for size in range(len(subs) + 1):
                for family in itertools.combinations(subs, size):
                    union = frozenset().union(*(opens[v] for v in family))
                    if union == opens[u]:
                        families.append(tuple(inclusion_id(v, u) for v in family))
            covers[u] = families
        return cls(cat, covers, space=(tuple(points), opens), name=name)

    @property
    def objects(self):
        """Objects of the underlying category."""
        return self.category.objects

    @property
    def points(self):
        """Declared points, derived on demand for poset sites."""
        if self._points is None:
            from .points import derive_points

            self._points = derive_points(self)
        return self._points

    def point(self, pid):
        """Point by id."""
        from ..errors import UnknownPointError

        for p in self.points:
            if p.id == pid:
                return p
        raise UnknownPointError(pid)

    # sieves

    def generated_sieve(self, family):
        """Sieve generated by a family: every ``f ∘ g`` with ``f`` in the family."""
        cat = self.category
        sieve = set()
        for f in family:
            for g in cat.into(cat.src(f)):
                sieve.add(cat.compose(f, g))
        return frozenset(sieve)

    def pullback_sieve(self, sieve, h):
        """``h*S = {g : h ∘ g ∈ S}``."""
        cat = self.category
        return frozenset(g for g in cat.into(cat.src(h)) if cat.compose(h, g) in sieve)

    def maximal_sieve(self, c):
        """Every morphism into ``c``."""
        return frozenset(self.category.into(c))

    @cached_property
    def minimal_sieves(self):
        """Smallest covering sieve of every object, as a fixpoint.

        Starts from the maximal sieves and shrinks ``m(c)`` to
        ``{f ∘ g : f ∈ S, g ∈ m(dom f)}`` for every cover ``S`` of ``c``.
        """
        cat = self.category
        m = {c: self.maximal_sieve(c) for c in cat.objects}
        changed = True
        rounds = 0
        while changed:
            changed = False
            rounds += 1
            for c in cat.objects:
                current = m[c]
                for family in self.covers[c]:
                    refined = frozenset(
                        cat.compose(f, g) for f in family for g in m[cat.src(f)]
                    )
                    current = current & refined
                if current != m[c]:
                    m[c] = current
                    changed = True
        logger.debug("Minimal covering sieves stabilised after %d rounds.", rounds)
        return m

    def minimal_sieve(self, c):
        """Ordered members of the smallest covering sieve of ``c``."""
        self.category.check_object(c)
        return sorted(self.minimal_sieves[c])

    def sieve_generators(self, c):
        """Members of ``m(c)`` not factoring through another member non-trivially."""
        cat = self.category
        sieve = self.minimal_sieves[c]
        gens = []
        for f in sorted(sieve):
            through = [
                g
                for g in sieve
                if g != f
                and cat.factors_through(f, g)
                and not cat.factors_through(g, f)
            ]
            if not through:
                gens.append(f)
        # keep one representative of each isomorphism class of generators
        result = []
        for f in gens:
            if not any(cat.factors_through(f, g) and cat.factors_through(g, f) for g in result):
                result.append(f)
        return result

    def is_covering_sieve(self, c, sieve):
        """Whether ``sieve`` contains the minimal covering sieve of ``c``."""
        return self.minimal_sieves[c] <= frozenset(sieve)

    def to_dict(self):
        """Plain data view of the site."""
        cat = self.category
        data = {
            "objects": list(cat.objects),
            "morphisms": [
                {"id": m.id, "src": m.src, "dst": m.dst}
                for m in sorted(cat.morphisms.values())
            ],
            "identities": dict(cat.identities),
            "covers": {c: [list(f) for f in fams] for c, fams in self.covers.items()},
        }
        return data

    def __repr__(self):
        """Representation."""
        return f"Site<{self.name or '?'}; {len(self.objects)} objects>"


class SiteReport:
    """Outcome of :func:`validate_site`."""

    def __init__(self, problems):
        """Constructor."""
        self.problems = list(problems)

    @property
    def valid(self):
        """Whether no axiom is violated."""
        return not self.problems

    def to_dict(self):
        """Report data."""
        return {"valid": self.valid, "problems": list(self.problems)}


def validate_site(site):
    """Checks category laws and coverage axioms exhaustively.

    Never raises for a mathematical failure: every violation ends up in the
    returned :class:`SiteReport`.
    """
    cat = site.category
    problems = list(cat.check_laws())
    if problems:
        return SiteReport(problems)
    for c in cat.objects:
        families = site.covers[c]
        if not families:
            problems.append(f"object {c} has no covering family")
            continue
        for family in families:
            for f in family:
                if f not in cat.morphisms:
                    problems.append(f"cover of {c} uses unknown morphism {f}")
                elif cat.dst(f) != c:
                    problems.append(f"cover of {c} contains {f} with codomain {cat.dst(f)}")
    if problems:
        return SiteReport(problems)
    for c in cat.objects:
        for family in site.covers[c]:
            sieve = site.generated_sieve(family)
            for h in cat.into(c):
                d = cat.src(h)
                pulled = site.pullback_sieve(sieve, h)
                if not any(
                    site.generated_sieve(t) <= pulled for t in site.covers[d]
                ):
                    problems.append(
                        f"cover {list(family)} of {c} is not stable under pullback along {h}"
                    )
    m = site.minimal_sieves
    for h in sorted(cat.morphisms):
        d, c = cat.src(h), cat.dst(h)
        if not m[d] <= site.pullback_sieve(m[c], h):
            problems.append(f"minimal covering sieve of {c} does not pull back along {h}")
    if problems:
        logger.debug("Site %s failed validation with %d problems.", site, len(problems))
    return SiteReport(problems)


def require_object(site, obj):
    """Raises :class:`UnknownObjectError` unless ``obj`` belongs to ``site``."""
    if obj not in site.objects:
        raise UnknownObjectError(obj)
    return obj


@lru_cache(maxsize=None)
def terminal_site():
    """Shared terminal site carrying plain complexes of modules."""
    return Site.terminal()
