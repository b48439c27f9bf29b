# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Bicomplexes on a rectangular window and their totalizations.

The horizontal differential lowers ``p``, the vertical one lowers ``q``, and
the two anticommute. A bicomplex may be the finite part of an infinite one;
``open_ends`` names the directions in which it was cut, which decides which
total degrees are complete.
"""

import logging

from ..errors import CompositionNonzeroError, DGSheavesError
from ..site import ModPresheaf, PresheafMap
from .complex import Complex, ComplexMorphism

logger = logging.getLogger(__name__)

OPEN_ENDS = ("p+", "p-", "q+", "q-")


class Bicomplex:
    """Rectangular bicomplex of module presheaves."""

    def __init__(
        self,
        site,
        ring,
        levels,
        horizontal=None,
        vertical=None,
        p_window=None,
        q_window=None,
        open_ends=(),
        check=True,
    ):
        """Constructor.

        :param levels: ``{(p, q): ModPresheaf}``.
        :param horizontal: ``{(p, q): PresheafMap B_{p,q} -> B_{p-1,q}}``.
        :param vertical: ``{(p, q): PresheafMap B_{p,q} -> B_{p,q-1}}``.
        :param open_ends: subset of ``p+``, ``p-``, ``q+``, ``q-``.
        """
        self.site = site
        self.ring = ring
        ps = [p for p, _ in levels] or [0]
        qs = [q for _, q in levels] or [0]
        self.p_window = p_window or (min(ps), max(ps))
        self.q_window = q_window or (min(qs), max(qs))
        for end in open_ends:
            if end not in OPEN_ENDS:
                raise DGSheavesError(f"Unknown open end {end!r}.")
        self.open_ends = tuple(sorted(open_ends))
        self._zero = ModPresheaf.zero(site, ring)
        self.levels = dict(levels)
        self.horizontal = dict(horizontal or {})
        self.vertical = dict(vertical or {})
        if check:
            self.check()

    @classmethod
    def from_commuting(cls, site, ring, levels, horizontal, vertical, **kwargs):
        """Bicomplex from commuting squares, signing the vertical maps by ``(-1)^p``."""
        signed = {
            (p, q): v.scale(-1) if p % 2 else v for (p, q), v in (vertical or {}).items()
        }
        return cls(site, ring, levels, horizontal, signed, **kwargs)

    def level(self, p, q):
        """``B_{p,q}``."""
        return self.levels.get((p, q), self._zero)

    def h(self, p, q):
        """Horizontal differential out of ``(p, q)``."""
        if (p, q) in self.horizontal:
            return self.horizontal[(p, q)]
        return PresheafMap.zero(self.level(p, q), self.level(p - 1, q))

    def v(self, p, q):
        """Vertical differential out of ``(p, q)``."""
        if (p, q) in self.vertical:
            return self.vertical[(p, q)]
        return PresheafMap.zero(self.level(p, q), self.level(p, q - 1))

    def positions(self):
        """Window positions ordered by ``p`` then ``q``."""
        (p0, p1), (q0, q1) = self.p_window, self.q_window
        return [(p, q) for p in range(p0, p1 + 1) for q in range(q0, q1 + 1)]

    def check(self):
        """Raises unless rows and columns are complexes and squares anticommute."""
        for p, q in self.positions():
            if not (self.h(p - 1, q) @ self.h(p, q)).is_zero():
                raise CompositionNonzeroError(f"row {q} at {p}")
            if not (self.v(p, q - 1) @ self.v(p, q)).is_zero():
                raise CompositionNonzeroError(f"column {p} at {q}")
            square = self.v(p - 1, q) @ self.h(p, q) + self.h(p, q - 1) @ self.v(p, q)
            if not square.is_zero():
                raise CompositionNonzeroError(f"square at {(p, q)} does not anticommute")
        return True

    def total_window(self):
        """Span of total degrees."""
        (p0, p1), (q0, q1) = self.p_window, self.q_window
        return p0 + q0, p1 + q1

    def complete_window(self):
        """Total degrees that receive every term of the uncut bicomplex."""
        (p0, p1), (q0, q1) = self.p_window, self.q_window
        lo, hi = None, None
        if "p+" in self.open_ends:
            hi = _min(hi, p1 + q0)
        if "q+" in self.open_ends:
            hi = _min(hi, q1 + p0)
        if "p-" in self.open_ends:
            lo = _max(lo, p0 + q1)
        if "q-" in self.open_ends:
            lo = _max(lo, q0 + p1)
        return lo, hi

    def validity(self):
        """Total degrees whose homology is that of the uncut totalization."""
        lo, hi = self.complete_window()
        return (None if lo is None else lo + 1, None if hi is None else hi - 1)

    def column(self, p):
        """Column ``p`` as a complex in ``q``."""
        q0, q1 = self.q_window
        return Complex(
            self.site,
            self.ring,
            {q: self.level(p, q) for q in range(q0, q1 + 1)},
            {q: self.v(p, q) for q in range(q0, q1 + 1)},
            window=(q0, q1),
            check=False,
        )

    def row(self, q):
        """Row ``q`` as a complex in ``p``."""
        p0, p1 = self.p_window
        return Complex(
            self.site,
            self.ring,
            {p: self.level(p, q) for p in range(p0, p1 + 1)},
            {p: self.h(p, q) for p in range(p0, p1 + 1)},
            window=(p0, p1),
            check=False,
        )

    def antidiagonal(self, n):
        """Positions of total degree ``n``, by ascending ``p``."""
        return [(p, q) for p, q in self.positions() if p + q == n]

    def __repr__(self):
        """Representation."""
        return f"Bicomplex<p{self.p_window} q{self.q_window} open {self.open_ends}>"


def _min(a, b):
    return b if a is None else min(a, b)


def _max(a, b):
    return b if a is None else max(a, b)


def _totalize(B):
    """Total complex of a finite bicomplex."""
    site, ring = B.site, B.ring
    lo, hi = B.total_window()
    if lo > hi or not B.levels:
        return Complex(site, ring, {}, validity=B.validity(), check=False), {}
    diagonals = {n: B.antidiagonal(n) for n in range(lo - 1, hi + 1)}
    levels = {
        n: ModPresheaf.direct_sum(site, ring, [B.level(*pos) for pos in diagonals[n]])
        for n in range(lo, hi + 1)
    }
    zero = ModPresheaf.zero(site, ring)
    diffs = {}
    for n in range(lo, hi + 1):
        sources, targets = diagonals[n], diagonals[n - 1]
        where = {pos: i for i, pos in enumerate(targets)}
        entries = {}
        for j, (p, q) in enumerate(sources):
            if (p - 1, q) in where:
                entries[(where[(p - 1, q)], j)] = B.h(p, q)
            if (p, q - 1) in where:
                entries[(where[(p, q - 1)], j)] = B.v(p, q)
        diffs[n] = PresheafMap.block(
            [B.level(*pos) for pos in sources],
            [B.level(*pos) for pos in targets],
            entries,
            site,
            ring,
        ).with_ends(levels[n], levels.get(n - 1, zero))
    total = Complex(
        site, ring, levels, diffs, window=(lo, hi), validity=B.validity(), check=False
    )
    if B.open_ends:
        logger.debug("Totalized %r with validity %s.", B, B.validity())
    return total, diagonals


def tot_sum(B):
    """Sum totalization, ``T_n = ⊕_{p+q=n} B_{p,q}`` with ``d = h + v``."""
    total, _ = _totalize(B)
    total.check()
    return total


def tot_prod(B):
    """Product totalization.

    On a finite window the product and the sum coincide; what differs is
    completeness, which is carried by the validity window computed from
    ``B.open_ends``.
    """
    total, _ = _totalize(B)
    total.check()
    return total


def tot_map(source, target, components, total_source=None, total_target=None):
    """Chain map of totalizations from ``{(p, q): PresheafMap}`` components."""
    site, ring = source.site, source.ring
    S = total_source or tot_sum(source)
    T = total_target or tot_sum(target)
    maps = {}
    for n in S.degrees():
        src = source.antidiagonal(n)
        tgt = target.antidiagonal(n)
        where = {pos: i for i, pos in enumerate(tgt)}
        entries = {
            (where[pos], j): components[pos]
            for j, pos in enumerate(src)
            if pos in where and pos in components
        }
        maps[n] = PresheafMap.block(
            [source.level(*pos) for pos in src],
            [target.level(*pos) for pos in tgt],
            entries,
            site,
            ring,
        ).with_ends(S.level(n), T.level(n))
    return ComplexMorphism(S, T, maps)


def summand_injection(B, total, p, q):
    """Inclusion of ``B_{p,q}`` into ``total_{p+q}``."""
    n = p + q
    diagonal = B.antidiagonal(n)
    i = diagonal.index((p, q))
    return PresheafMap.block(
        [B.level(p, q)],
        [B.level(*pos) for pos in diagonal],
        {(i, 0): PresheafMap.identity(B.level(p, q))},
        B.site,
        B.ring,
    ).with_ends(B.level(p, q), total.level(n))
