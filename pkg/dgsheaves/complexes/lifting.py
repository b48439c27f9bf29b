# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Diagonal fillers of lifting squares by exact linear solving.

A map out of a semi-representable complex ``B`` is determined by the images
``y_{n,k} ∈ X_n(c_k)`` of the Yoneda generators, so every lifting problem
with such a ``B`` is a finite linear system over the coefficient ring.
"""

import logging

from ..errors import NonCommutingSquareError, UnsupportedSourceError
from ..exactalg import ExactMatrix, solve
from ..site import yoneda_extension
from .complex import ComplexMorphism

logger = logging.getLogger(__name__)


class YonedaUnknowns:
    """Coordinates of the generator images of maps ``B -> X``."""

    def __init__(self, B, X, degrees=None):
        """Lays out one block per summand of every level of ``B``.

        :raises UnsupportedSourceError: if a level of ``B`` is not certified
            semi-representable.
        """
        if not B.is_semi_representable():
            raise UnsupportedSourceError("Source levels are not semi-representable.")
        self.B = B
        self.X = X
        self.degrees = B.degrees() if degrees is None else list(degrees)
        self.offsets = {}
        self.sizes = {}
        size = 0
        for n in self.degrees:
            for k, c in enumerate(B.level(n).summands):
                self.offsets[(n, k)] = size
                self.sizes[(n, k)] = X.level(n).values[c].generators
                size += self.sizes[(n, k)]
        self.size = size

    def summands(self, n):
        """Objects of the summands of ``B_n``."""
        if n not in self.degrees:
            return []
        return self.B.level(n).summands

    def evaluation(self, n, d, vector):
        """Coefficients of ``h_n(d)(vector)`` in the unknowns of degree ``n``.

        Generator ``(k, φ)`` of ``B_n(d)`` maps to ``X_n(φ) y_{n,k}``.
        """
        F = self.B.level(n)
        target = self.X.level(n)
        coefficients = {}
        if n not in self.degrees:
            return coefficients
        for x, (k, phi) in zip(vector, F.yoneda_basis(d)):
            if not x:
                continue
            block = target.restrictions[phi].matrix.scale(x)
            key = (n, k)
            if key in coefficients:
                coefficients[key] = coefficients[key] + block
            else:
                coefficients[key] = block
        return coefficients

    def assemble(self, solution, check=True):
        """The chain map ``B -> X`` with the given generator images."""
        components = {}
        for n in self.degrees:
            F = self.B.level(n)
            elements = [
                solution[self.offsets[(n, k)] : self.offsets[(n, k)] + self.sizes[(n, k)]]
                for k in range(len(F.summands))
            ]
            components[n] = yoneda_extension(F, elements, self.X.level(n))
        return ComplexMorphism(self.B, self.X, components, check=check)


class LinearSystem:
    """Equations ``Σ M_key y_key = rhs`` modulo target relations."""

    def __init__(self, unknowns):
        """Constructor."""
        self.unknowns = unknowns
        self.equations = []

    def add(self, coefficients, rhs, target):
        """Adds one block of equations valued in the module ``target``."""
        if target.generators:
            self.equations.append((coefficients, list(rhs), target))

    def solve(self):
        """Canonical particular solution, or ``None`` if inconsistent."""
        ring = self.unknowns.X.ring
        u = self.unknowns
        if not self.equations:
            return [ring.zero] * u.size
        row_sizes = [t.generators for _, _, t in self.equations]
        col_sizes = [u.sizes[key] for key in sorted(u.offsets, key=u.offsets.get)]
        position = {key: i for i, key in enumerate(sorted(u.offsets, key=u.offsets.get))}
        entries = {
            (i, position[key]): m
            for i, (coefficients, _, _) in enumerate(self.equations)
            for key, m in coefficients.items()
        }
        M = ExactMatrix.blocks(ring, row_sizes, col_sizes, entries)
        R = ExactMatrix.block_diagonal(ring, [t.relations for _, _, t in self.equations])
        A = ExactMatrix.hstack(ring, M.nrows, [M, R])
        rhs = [x for _, b, _ in self.equations for x in b]
        solution = solve(A, ExactMatrix.from_columns(ring, [rhs], M.nrows))
        logger.debug("Solved a %dx%d lifting system.", A.nrows, A.ncols)
        if solution is None:
            return None
        return solution.column(0)[: u.size]


def rlp_solve(i, f, u, v):
    """Diagonal filler ``h: B -> X`` of the square ``f ∘ u = v ∘ i``.

    ``i: A -> B``, ``f: X -> Y``, ``u: A -> X``, ``v: B -> Y``. Returns the
    filler with ``h ∘ i = u`` and ``f ∘ h = v``, or ``None`` when none exists.

    :raises NonCommutingSquareError: if the square does not commute.
    :raises UnsupportedSourceError: if ``B`` is not semi-representable.
    """
    if not (f @ u).equals(v @ i):
        raise NonCommutingSquareError("The lifting square does not commute.")
    A, B = i.source, i.target
    X = f.source
    unknowns = YonedaUnknowns(B, X)
    system = LinearSystem(unknowns)
    cat = B.site.category
    ring = B.ring
    # h ∘ i = u
    for n in A.degrees():
        for d in cat.objects:
            source = A.level(n).values[d]
            target = X.level(n).values[d]
            image = i.component(n).component(d)
            expected = u.component(n).component(d)
            for j in range(source.generators):
                w = image.matrix.column(j)
                system.add(
                    unknowns.evaluation(n, d, w), expected.matrix.column(j), target
                )
    for n in B.degrees():
        Bn = B.level(n)
        for k, c in enumerate(Bn.summands):
            g = Bn.generator_of(k)
            key = (n, k)
            # f ∘ h = v
            system.add(
                {key: f.component(n).component(c).matrix},
                v.component(n).component(c).apply(g),
                f.target.level(n).values[c],
            )
            # d h = h d
            lhs = {key: X.differential(n).component(c).matrix}
            boundary = B.differential(n).component(c).apply(g)
            for other, m in unknowns.evaluation(n - 1, c, boundary).items():
                lhs[other] = -m
            system.add(lhs, [ring.zero] * X.level(n - 1).values[c].generators,
                       X.level(n - 1).values[c])
    solution = system.solve()
    if solution is None:
        return None
    return unknowns.assemble(solution)
