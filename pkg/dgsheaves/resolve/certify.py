# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Certificates of projective cofibrations.

A map is certified when every degree is split injective with a cokernel
that is a sum of representables, or when it is the colimit of a tower of
such maps. A refusal names the first condition that could not be
certified; it is not a proof that the map is not a cofibration.
"""

import logging

from ..complexes import (
    Complex,
    ComplexMorphism,
    LinearSystem,
    YonedaUnknowns,
    brutal_truncation,
)
from ..exactalg import ExactMatrix, solve
from ..site import ModPresheaf, PresheafMap, yoneda_extension

logger = logging.getLogger(__name__)


class CofibrationCertificate:
    """Outcome of :func:`certify_cofibration`."""

    def __init__(self, certified, reason=None, degrees=None, transitions=None):
        """Constructor.

        :param degrees: ``{n: {"complement": [...], "retraction": [...]}}``.
        :param transitions: certificates of the tower stages, if any.
        """
        self.certified = certified
        self.reason = reason
        self.degrees = degrees or {}
        self.transitions = transitions or []

    def __bool__(self):
        """Truth of the verdict."""
        return self.certified

    def to_dict(self):
        """Report data."""
        return {
            "certified": self.certified,
            "reason": self.reason,
            "degrees": {str(n): data for n, data in sorted(self.degrees.items())},
            "transitions": [t.to_dict() for t in self.transitions],
        }

    def __repr__(self):
        """Representation."""
        if self.certified:
            return "CofibrationCertificate<certified>"
        return f"CofibrationCertificate<refused: {self.reason}>"


def _refuse(reason):
    logger.debug("Cofibration refused: %s", reason)
    return CofibrationCertificate(False, reason)


def _in_image(f_n, B, k):
    """Whether the generator of summand ``k`` of ``B`` is hit by ``f_n``."""
    ring = B.ring
    c = B.summands[k]
    target = B.values[c]
    A = ExactMatrix.hstack(
        ring, target.generators, [f_n.components[c].matrix, target.relations]
    )
    rhs = ExactMatrix.from_columns(ring, [B.generator_of(k)], target.generators)
    return solve(A, rhs) is not None


def _complement(f_n, A, B):
    """Objects of summands ``Q`` of ``B`` with ``A ⊕ Q ≅ B``, or ``None``."""
    site, ring = B.site, B.ring
    complement = [k for k in range(len(B.summands)) if not _in_image(f_n, B, k)]
    Q = ModPresheaf.semi_representable(site, [B.summands[k] for k in complement], ring)
    inclusion = yoneda_extension(Q, [B.generator_of(k) for k in complement], B)
    comparison = PresheafMap.block(
        [A, Q], [B], {(0, 0): f_n, (0, 1): inclusion}, site, ring
    )
    if not comparison.is_isomorphism():
        return None
    return list(Q.summands)


def _retraction(f_n, A, B, n):
    """Generator images of some ``r: B -> A`` with ``r ∘ f_n = 1``, or ``None``."""
    unknowns = YonedaUnknowns(Complex.concentrated(B, n), Complex.concentrated(A, n))
    system = LinearSystem(unknowns)
    for d in B.site.objects:
        image = f_n.components[d].matrix
        module = A.values[d]
        for j in range(module.generators):
            system.add(
                unknowns.evaluation(n, d, image.column(j)), module.basis_vector(j), module
            )
    solution = system.solve()
    if solution is None:
        return None
    ring = B.ring
    images = []
    for k in range(len(B.summands)):
        start = unknowns.offsets[(n, k)]
        block = solution[start : start + unknowns.sizes[(n, k)]]
        images.append([ring.format(x) for x in block])
    return images


def _certify_degrees(f):
    degrees = {}
    for n in f.degrees():
        A, B = f.source.level(n), f.target.level(n)
        f_n = f.component(n)
        if not f_n.is_injective():
            return _refuse(f"not injective in degree {n}")
        if not B.is_semi_representable():
            return _refuse(f"target level {n} carries no representable decomposition")
        complement = _complement(f_n, A, B)
        if complement is None:
            return _refuse(f"cokernel in degree {n} is not a certified sum of representables")
        retraction = _retraction(f_n, A, B, n)
        if retraction is None:
            return _refuse(f"no retraction in degree {n}")
        degrees[n] = {"complement": complement, "retraction": retraction}
    return CofibrationCertificate(True, degrees=degrees)


def _tower_transitions(B):
    """Inclusions ``σ≤m-1 B -> σ≤m B`` of the brutal truncation tower."""
    previous = Complex.zero(B.site, B.ring)
    for m in range(B.lo, B.hi + 1):
        stage, _ = brutal_truncation(B, m)
        components = {q: PresheafMap.identity(B.level(q)) for q in range(B.lo, m)}
        yield m, ComplexMorphism(previous, stage, components, check=False)
        previous = stage


def certify_cofibration(f, tower=False):
    """Certificate that ``f`` is a projective cofibration, or a refusal.

    With ``tower`` the map must start at the zero complex; its target is
    then certified as the colimit of its brutal truncations, each
    transition being a degreewise split injection with representable
    cokernel.
    """
    if not tower:
        return _certify_degrees(f)
    if not f.source.is_zero():
        return _refuse("the tower pattern needs the zero complex as source")
    transitions = []
    for m, transition in _tower_transitions(f.target):
        certificate = _certify_degrees(transition)
        if not certificate:
            return _refuse(f"transition into degree {m}: {certificate.reason}")
        transitions.append(certificate)
    return CofibrationCertificate(True, transitions=transitions)
