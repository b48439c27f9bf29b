# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Points of finite sites and stalks."""

from ..errors import InvalidPointsError, UnknownPointError
from .category import inclusion_id


class Point:
    """Point given by its neighbourhoods.

    ``minimal`` is the smallest neighbourhood ``m_p`` and ``germs`` maps every
    neighbourhood ``c`` to the morphism ``m_p -> c`` along which sections are
    restricted to the stalk.
    """

    def __init__(self, pid, minimal, germs):
        """Constructor."""
        self.id = pid
        self.minimal = minimal
        self.germs = dict(germs)

    @property
    def neighborhoods(self):
        """Objects the point lies in."""
        return set(self.germs)

    def lies_in(self, c):
        """Whether ``c`` is a neighbourhood."""
        return c in self.germs

    def germ(self, c):
        """Morphism ``m_p -> c``."""
        return self.germs[c]

    def to_dict(self):
        """Plain data view."""
        return {"id": self.id, "minimal": self.minimal, "germs": dict(self.germs)}

    def __repr__(self):
        """Representation."""
        return f"Point<{self.id} @ {self.minimal}>"


def derive_points(site):
    """Points of a poset site.

    Sites of finite spaces get one point per point of the space; other poset
    sites get one point per object, with the up-set as neighbourhoods.

    :raises InvalidPointsError: for non-poset sites without declared points.
    """
    cat = site.category
    if not cat.is_poset:
        raise InvalidPointsError(f"{site} declares no points and is not a poset site.")
    points = []
    if site.space is not None:
        space_points, opens = site.space
        for x in space_points:
            around = [u for u in cat.objects if x in opens[u]]
            minimal = min(around, key=lambda u: len(opens[u]))
            germs = {u: inclusion_id(minimal, u) for u in around}
            points.append(Point(str(x), minimal, germs))
    else:
        for c in cat.objects:
            germs = {d: cat.hom(c, d)[0] for d in cat.objects if cat.hom(c, d)}
            points.append(Point(c, c, germs))
    return points


def validate_points(site, points=None):
    """Violations of the neighbourhood conditions for a family of points.

    Checks that neighbourhoods are closed upwards with compatible germs,
    that the minimal neighbourhood of a point inside another neighbourhood
    system is transitive, and that every cover of a neighbourhood contains
    a member through which the germ factors.
    """
    cat = site.category
    points = site.points if points is None else points
    problems = []
    if not points:
        return ["no points declared"]
    ids = [p.id for p in points]
    if len(set(ids)) != len(ids):
        problems.append("duplicate point ids")
    for p in points:
        if p.minimal not in p.germs:
            problems.append(f"point {p.id}: minimal neighbourhood {p.minimal} has no germ")
            continue
        if p.germs[p.minimal] != cat.identity(p.minimal):
            problems.append(f"point {p.id}: germ at the minimal neighbourhood is not the identity")
        for c, germ in p.germs.items():
            if cat.src(germ) != p.minimal or cat.dst(germ) != c:
                problems.append(f"point {p.id}: germ {germ} is not {p.minimal} -> {c}")
        for c, germ in sorted(p.germs.items()):
            for h in cat.morphisms:
                if cat.src(h) != c:
                    continue
                d = cat.dst(h)
                if d not in p.germs:
                    problems.append(f"point {p.id}: neighbourhoods not closed upwards at {h}")
                elif cat.compose(h, germ) != p.germs[d]:
                    problems.append(f"point {p.id}: germs incompatible along {h}")
            for family in site.covers[c]:
                if not any(cat.factors_through(germ, f) for f in family):
                    problems.append(
                        f"point {p.id}: cover {list(family)} of {c} misses the point"
                    )
    for q in points:
        for r in points:
            if q.minimal in r.germs and not q.neighborhoods <= r.neighborhoods:
                problems.append(f"points {q.id}, {r.id}: neighbourhoods not transitive")
    return problems


def point_of(site, pid):
    """Point of ``site`` by id."""
    for p in site.points:
        if p.id == pid:
            return p
    raise UnknownPointError(pid)


def stalk(presheaf, point):
    """Stalk of a module or set presheaf at a point: its value at ``m_p``.

    :raises UnknownPointError: if the point is not declared for the site.
    """
    site = presheaf.site
    if isinstance(point, str):
        point = point_of(site, point)
    elif point.id not in {p.id for p in site.points}:
        raise UnknownPointError(point.id)
    return presheaf.value(point.minimal)


def stalk_map(phi, point):
    """Stalk of a presheaf map at a point."""
    if isinstance(point, str):
        point = point_of(phi.source.site, point)
    return phi.component(point.minimal)


def conservativity_certificate(site, points=None):
    """For each object, whether the germs of the points in it generate a covering sieve.

    A family with a positive certificate at every object is conservative.
    """
    points = site.points if points is None else points
    certificate = {}
    for c in site.objects:
        germs = [p.germs[c] for p in points if c in p.germs]
        certificate[c] = site.is_covering_sieve(c, site.generated_sieve(germs))
    return certificate
