# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Hypercohomology ``ℍ^n(c, K) = H_{-n}`` of a fibrant replacement at ``c``."""

import logging

from ..complexes import evaluate, sheafify_complex, tot_prod
from ..errors import DGSheavesError
from ..hypercover import cech_bicomplex, cech_nerve
from ..proxies import current_dgsheaves
from ..site import require_object
from .resolution import godement_resolution

logger = logging.getLogger(__name__)

GODEMENT = "godement"
CECH_COLIMIT = "cech-colimit"
METHODS = (GODEMENT, CECH_COLIMIT)


class HypercohomologyReport:
    """Value of ``ℍ^n(c, K)`` with how it was obtained."""

    def __init__(self, method, c, n, module, validity, stabilized=None, rounds=None):
        """Constructor."""
        self.method = method
        self.object = c
        self.degree = n
        self.module = module
        self.validity = validity
        self.stabilized = stabilized
        self.rounds = rounds

    def to_dict(self):
        """Report data."""
        data = {
            "method": self.method,
            "object": self.object,
            "degree": self.degree,
            "module": self.module.describe(),
            "invariants": self.module.invariants_json(),
            "validity": list(self.validity),
        }
        if self.method == CECH_COLIMIT:
            data["stabilized"] = self.stabilized
            data["refinements"] = self.rounds
        return data

    def __repr__(self):
        """Representation."""
        return f"HypercohomologyReport<{self.method} H^{self.degree}({self.object})>"


def _godement(c, K, n, q_max):
    if q_max is None:
        q_max = max(current_dgsheaves.config.get("DGSHEAVES_DEFAULT_QMAX"), K.hi + n + 1)
    godK, _, validity = godement_resolution(K, q_max)
    module = evaluate(godK, c).homology_data(-n).presheaf.values["*"]
    return HypercohomologyReport(GODEMENT, c, n, module, validity)


def refine(site, family):
    """Composites of each member with the sieve generators of its source."""
    cat = site.category
    refined = []
    for f in family:
        for g in site.sieve_generators(cat.src(f)):
            h = cat.compose(f, g)
            if h not in refined:
                refined.append(h)
    return refined


def cech_value(K, c, family, n):
    """``H_{-n}`` of the Čech totalization of ``K`` over a cover of ``c``."""
    N = max(K.hi + n + 1, 1)
    X = cech_nerve(K.site, family, N, target=c)
    total = tot_prod(cech_bicomplex(K, X))
    return total.homology_data(-n).presheaf.values["*"], total.validity


def _cech_colimit(c, K, n, max_refinements):
    if max_refinements is None:
        max_refinements = current_dgsheaves.config.get("DGSHEAVES_MAX_REFINEMENTS")
    site = K.site
    aK, _ = sheafify_complex(K)
    family = site.sieve_generators(c)
    module, validity = cech_value(aK, c, family, n)
    stabilized, rounds = False, 0
    while rounds < max_refinements:
        refined = refine(site, family)
        if set(refined) == set(family):
            stabilized = True
            break
        rounds += 1
        following, validity = cech_value(aK, c, refined, n)
        if following == module:
            module, stabilized = following, True
            break
        module, family = following, refined
    if not stabilized:
        logger.warning(
            "Čech colimit at %s did not stabilize after %d refinements.", c, rounds
        )
    return HypercohomologyReport(
        CECH_COLIMIT, c, n, module, validity, stabilized=stabilized, rounds=rounds
    )


def hypercohomology(c, K, n, method=GODEMENT, q_max=None, max_refinements=None):
    """``ℍ^n(c, K)`` by the Godement resolution or the Čech colimit.

    :raises DGSheavesError: for an unknown method.
    :raises UnknownObjectError: if ``c`` is not an object of the site.
    """
    require_object(K.site, c)
    if method == GODEMENT:
        report = _godement(c, K, n, q_max)
    elif method == CECH_COLIMIT:
        report = _cech_colimit(c, K, n, max_refinements)
    else:
        raise DGSheavesError(f"Unknown hypercohomology method {method!r}.")
    logger.info("H^%d(%s) = %s by %s.", n, c, report.module.describe(), method)
    return report
