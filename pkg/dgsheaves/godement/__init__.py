# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Godement resolutions, fibrant replacement and hypercohomology."""

from .checks import (
    FibrancyReport,
    descent_degrees,
    exactness_check,
    multiplication_sequence,
    truncation_check,
    verify_fibrant_replacement,
)
from .comonad import PointComonad
from .cosimplicial import CosimplicialComplex, resolve_q_max
from .hypercohomology import (
    CECH_COLIMIT,
    GODEMENT,
    METHODS,
    HypercohomologyReport,
    cech_value,
    hypercohomology,
    refine,
)
from .resolution import (
    GodementResolution,
    god_map,
    godement_cosimplicial,
    godement_resolution,
    point_pullback_pushforward,
)

__all__ = (
    "CECH_COLIMIT",
    "CosimplicialComplex",
    "FibrancyReport",
    "GODEMENT",
    "GodementResolution",
    "HypercohomologyReport",
    "METHODS",
    "PointComonad",
    "cech_value",
    "descent_degrees",
    "exactness_check",
    "god_map",
    "godement_cosimplicial",
    "godement_resolution",
    "hypercohomology",
    "multiplication_sequence",
    "point_pullback_pushforward",
    "refine",
    "resolve_q_max",
    "truncation_check",
    "verify_fibrant_replacement",
)
