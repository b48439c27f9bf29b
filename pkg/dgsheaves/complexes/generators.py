# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Generating complexes ``S^n``, ``D^n``, ``Δ^n``, ``∂Δ^n`` and their morphisms."""

from collections import namedtuple

from ..errors import DGSheavesError
from ..site import ModPresheaf, PresheafMap
from .complex import Complex, ComplexMorphism

GENERATOR_KINDS = ("S", "D", "Delta", "dDelta")
MORPHISM_KINDS = ("I", "J", "I'")


class GeneratorSpec(namedtuple("GeneratorSpec", ["kind", "n", "c"])):
    """Generator kind, degree and object."""

    __slots__ = ()

    def __new__(cls, kind, n, c):
        """Constructor with a kind check."""
        aliases = {"Δ": "Delta", "∂Δ": "dDelta"}
        kind = aliases.get(kind, kind)
        if kind not in GENERATOR_KINDS:
            raise DGSheavesError(f"Unknown generator kind {kind!r}.")
        return super().__new__(cls, kind, int(n), c)


def _pair(site, c, ring):
    """``Λ(c) ⊕ Λ(c)`` with the summand presheaf."""
    rep = ModPresheaf.representable(site, c, ring)
    return rep, ModPresheaf.direct_sum(site, ring, [rep, rep])


def _diagonal(site, ring, rep, pair):
    """``x ↦ (x, -x)``."""
    identity = PresheafMap.identity(rep)
    return PresheafMap.block(
        [rep], [rep, rep], {(0, 0): identity, (1, 0): -identity}, site, ring
    ).with_ends(rep, pair)


def _first(site, ring, rep, pair):
    """``(x, y) ↦ x``."""
    return PresheafMap.block(
        [rep, rep], [rep], {(0, 0): PresheafMap.identity(rep)}, site, ring
    ).with_ends(pair, rep)


def build_generator(spec, site, ring):
    """The generating complex described by ``spec``.

    :raises UnknownObjectError: if the object is not in the site.
    """
    kind, n, c = spec
    site.category.check_object(c)
    rep, pair = _pair(site, c, ring)
    if kind == "S":
        return Complex(site, ring, {n: rep}, check=False)
    if kind == "D":
        return Complex(
            site, ring, {n: rep, n - 1: rep}, {n: PresheafMap.identity(rep)}, check=False
        )
    if kind == "Delta":
        return Complex(
            site, ring, {n: rep, n - 1: pair}, {n: _diagonal(site, ring, rep, pair)},
            check=False,
        )
    return Complex(site, ring, {n - 1: pair}, window=(n - 1, n - 1), check=False)


def sphere(site, c, ring, n):
    """``S^nΛ(c)``."""
    return build_generator(GeneratorSpec("S", n, c), site, ring)


def disk(site, c, ring, n):
    """``D^nΛ(c)``."""
    return build_generator(GeneratorSpec("D", n, c), site, ring)


def generator_morphism(kind, n, c, site, ring):
    """``I``: ``S^{n-1} -> D^n``; ``J``: ``0 -> D^n``; ``I'``: ``∂Δ^n -> Δ^n``."""
    site.category.check_object(c)
    if kind == "I":
        source = build_generator(GeneratorSpec("S", n - 1, c), site, ring)
        target = build_generator(GeneratorSpec("D", n, c), site, ring)
        return ComplexMorphism(
            source, target, {n - 1: PresheafMap.identity(source.level(n - 1))}
        )
    if kind == "J":
        target = build_generator(GeneratorSpec("D", n, c), site, ring)
        return ComplexMorphism(Complex.zero(site, ring), target, {})
    if kind in ("I'", "I′"):
        source = build_generator(GeneratorSpec("dDelta", n, c), site, ring)
        target = build_generator(GeneratorSpec("Delta", n, c), site, ring)
        return ComplexMorphism(
            source, target, {n - 1: PresheafMap.identity(source.level(n - 1))}
        )
    raise DGSheavesError(f"Unknown generating morphism {kind!r}.")


class RetractData:
    """``(S^n -> D^{n+1})`` as a retract of ``(∂Δ^{n+1} -> Δ^{n+1})``.

    ``top = (s_top, r_top)`` and ``bottom = (s_bottom, r_bottom)`` are the two
    rows; ``left`` and ``right`` are the vertical morphisms.
    """

    def __init__(self, n, c, site, ring):
        """Builds both rows."""
        rep, pair = _pair(site, c, ring)
        self.n = n
        self.c = c
        self.left = generator_morphism("I", n + 1, c, site, ring)
        self.right = generator_morphism("I'", n + 1, c, site, ring)
        S, D = self.left.source, self.left.target
        dDelta, Delta = self.right.source, self.right.target
        diag = _diagonal(site, ring, rep, pair)
        first = _first(site, ring, rep, pair)
        identity = PresheafMap.identity(rep)
        self.top = (
            ComplexMorphism(S, dDelta, {n: diag}),
            ComplexMorphism(dDelta, S, {n: first}),
        )
        self.bottom = (
            ComplexMorphism(D, Delta, {n + 1: identity, n: diag}),
            ComplexMorphism(Delta, D, {n + 1: identity, n: first}),
        )

    def rows_are_identity(self):
        """Whether both row composites are identities."""
        top = (self.top[1] @ self.top[0]).equals(ComplexMorphism.identity(self.left.source))
        bottom = (self.bottom[1] @ self.bottom[0]).equals(
            ComplexMorphism.identity(self.left.target)
        )
        return top and bottom

    def squares_commute(self):
        """Whether both squares of the retract diagram commute."""
        first = (self.right @ self.top[0]).equals(self.bottom[0] @ self.left)
        second = (self.left @ self.top[1]).equals(self.bottom[1] @ self.right)
        return first and second

    def to_dict(self):
        """Verdicts."""
        return {
            "n": self.n,
            "object": self.c,
            "rows_identity": self.rows_are_identity(),
            "squares_commute": self.squares_commute(),
        }


def iprime_retract(n, c, site, ring):
    """:class:`RetractData` for degree ``n`` and object ``c``."""
    site.category.check_object(c)
    return RetractData(n, c, site, ring)
