# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Simplicial objects and the Dold-Kan correspondence."""

from .dold_kan import (
    epi_mono,
    gamma,
    gamma_comparison,
    gamma_index,
    gamma_map,
    homotopy_groups,
    moore,
    moore_map,
    normalize,
    surjections,
)
from .matching import matching_object
from .nerves import poset_nerve
from .objects import (
    MODULES,
    SETS,
    AugmentedSimplicial,
    SimplicialMap,
    SimplicialObject,
    linearize,
    linearize_augmented,
    point_object,
)

__all__ = (
    "AugmentedSimplicial",
    "MODULES",
    "SETS",
    "SimplicialMap",
    "SimplicialObject",
    "epi_mono",
    "gamma",
    "gamma_comparison",
    "gamma_index",
    "gamma_map",
    "homotopy_groups",
    "linearize",
    "linearize_augmented",
    "matching_object",
    "moore",
    "moore_map",
    "normalize",
    "point_object",
    "poset_nerve",
    "surjections",
)
