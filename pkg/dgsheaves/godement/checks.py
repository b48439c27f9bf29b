# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Verification of the local model structure through Godement resolutions."""

import logging

from ..complexes import (
    Bicomplex,
    Complex,
    ComplexMorphism,
    DegreeVerdict,
    in_window,
    intersect_windows,
    is_local_equivalence,
    shift_map,
    tot_sum,
    truncate_map,
)
from ..errors import FactorizationError
from ..hypercover import descent_check
from ..simplicial import gamma_map, moore_map
from ..site import PresheafMap
from .resolution import god_map, godement_resolution

logger = logging.getLogger(__name__)


class FibrancyReport:
    """Verdicts of :func:`verify_fibrant_replacement`."""

    def __init__(self, checks, details):
        """Constructor.

        :param checks: ``{name: bool}``.
        :param details: ``{name: report data}``.
        """
        self.checks = checks
        self.details = details

    @property
    def passed(self):
        """Whether every check holds."""
        return all(self.checks.values())

    def to_dict(self):
        """Report data."""
        return {"passed": self.passed, "checks": dict(self.checks), "details": self.details}


def descent_degrees(C, X):
    """Degrees of ``C`` where descent along ``X`` is decidable."""
    lo = C.hi - X.N + 1
    if C.validity[0] is not None:
        lo = max(lo, C.validity[0])
    hi = C.hi if C.validity[1] is None else min(C.hi, C.validity[1])
    return list(range(lo, hi + 1))


def _descends(C, hypercovers):
    reports = [descent_check(C, X, descent_degrees(C, X)) for X in hypercovers]
    return all(r.passed for r in reports), [r.to_dict() for r in reports]


def _levelwise_total(K, q_max):
    """Sum totalization of ``god(S⁰K_p)`` along ``god(d)``."""
    site, ring = K.site, K.ring
    columns = {
        p: godement_resolution(Complex.concentrated(K.level(p), 0), q_max)
        for p in K.degrees()
    }
    levels, horizontal, vertical = {}, {}, {}
    for p, resolution in columns.items():
        C = resolution.complex
        for m in range(-q_max, 1):
            levels[(p, m)] = C.level(m)
            if m - 1 >= -q_max:
                vertical[(p, m)] = C.differential(m)
        if p - 1 in columns:
            d = ComplexMorphism(
                Complex.concentrated(K.level(p), 0),
                Complex.concentrated(K.level(p - 1), 0),
                {0: K.differential(p)},
                check=False,
            )
            gd = god_map(d, q_max, source=resolution, target=columns[p - 1])
            for m in range(-q_max, 1):
                horizontal[(p, m)] = gd.component(m)
    B = Bicomplex.from_commuting(
        site,
        ring,
        levels,
        horizontal,
        vertical,
        p_window=(K.lo, K.hi),
        q_window=(-q_max, 0),
        open_ends=("q-",),
        check=False,
    )
    total = tot_sum(B)
    return Complex(
        site,
        ring,
        total.levels,
        total.differentials,
        window=(total.lo, total.hi),
        validity=B.validity(),
        check=False,
    )


def multiplication_sequence(K, k=2):
    """``(K --k--> K, K -> K/kK)``, levelwise ``0 -> kK -> K -> K/kK -> 0``.

    Over ℤ the reduction is degreewise surjective without being split.
    """
    factor = K.ring.coerce(k)
    times = ComplexMorphism(
        K,
        K,
        {n: PresheafMap.identity(K.level(n)).scale(factor) for n in K.degrees()},
        check=False,
    )
    _, reduction = times.cokernel()
    return times, reduction


def verify_fibrant_replacement(K, hypercovers, q_max=None, surjection=None):
    """Checks that ``god(K)`` behaves as a fibrant replacement.

    * ``descent``: ``god(K)`` satisfies descent along every hypercover;
    * ``local_equivalence``: the unit ``K -> god(K)`` is a local equivalence;
    * ``surjection``: ``god`` of a degreewise surjection is degreewise
      surjective with a kernel that satisfies descent (the reduction
      ``K -> K/2K`` unless one is given);
    * ``levelwise``: totalizing levelwise resolutions satisfies descent.

    Every verdict is restricted to the degrees where the cut resolution is
    complete.
    """
    resolution = godement_resolution(K, q_max)
    q_max = resolution.q_max
    godK = resolution.complex
    checks, details = {}, {}
    checks["descent"], details["descent"] = _descends(godK, hypercovers)
    verdict = is_local_equivalence(resolution.unit)
    checks["local_equivalence"] = verdict.holds
    details["local_equivalence"] = verdict.to_dict()
    if surjection is None:
        _, surjection = multiplication_sequence(K)
    gf = god_map(surjection, q_max)
    degrees = [n for n in gf.degrees() if in_window(n, gf.validity())]
    surjective = gf.is_degreewise_surjective(degrees)
    kernel, _ = gf.kernel()
    kernel_descends, kernel_details = _descends(kernel, hypercovers)
    checks["surjection"] = surjective and kernel_descends
    details["surjection"] = {"surjective": surjective, "kernel": kernel_details}
    if K.lo > K.hi:
        checks["levelwise"], details["levelwise"] = True, []
    else:
        total = _levelwise_total(K, q_max)
        checks["levelwise"], details["levelwise"] = _descends(total, hypercovers)
    report = FibrancyReport(checks, details)
    logger.info("Fibrant replacement checks %s.", checks)
    return report


def truncation_check(f):
    """Compares ``f`` with ``Γ(τ≥n f[n])`` degree by degree.

    ``aH_n(f)`` is an isomorphism exactly when ``aπ_0`` of the connective
    truncation is; the local equivalence of ``f`` is the conjunction.
    Returns ``{"direct", "truncated", "agree"}``.
    """
    direct = is_local_equivalence(f)
    truncated = DegreeVerdict()
    for n in direct:
        g = shift_map(truncate_map(f, n), n)
        N = max(g.source.hi, g.target.hi, 0) + 1
        verdict = is_local_equivalence(moore_map(gamma_map(g, N)))
        truncated[n] = verdict.get(0, True)
    agree = all(direct[n] == truncated[n] for n in direct)
    if not agree:
        logger.warning("Truncated verdicts disagree with the direct one.")
    return {
        "direct": direct.to_dict(),
        "truncated": truncated.to_dict(),
        "agree": agree,
        "local_equivalence": direct.holds,
    }


def _exact_at(a, b):
    if not (a.is_injective() and b.is_surjective() and (b @ a).is_zero()):
        return False
    _, inclusion = b.kernel()
    try:
        inclusion.lift(a)
    except FactorizationError:
        return False
    return True


def exactness_check(i, p, q_max=None):
    """Whether ``god`` keeps ``0 -> K' -> K -> K'' -> 0`` degreewise exact."""
    middle = godement_resolution(i.target, q_max)
    left = godement_resolution(i.source, middle.q_max)
    right = godement_resolution(p.target, middle.q_max)
    gi = god_map(i, source=left, target=middle)
    gp = god_map(p, source=middle, target=right)
    validity = intersect_windows(left.validity, middle.validity, right.validity)
    verdict = DegreeVerdict()
    for n in middle.complex.degrees():
        if in_window(n, validity):
            verdict[n] = _exact_at(gi.component(n), gp.component(n))
    logger.debug("Exactness after god: %s.", dict(verdict))
    return verdict
