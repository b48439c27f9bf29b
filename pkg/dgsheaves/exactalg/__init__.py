# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact linear algebra over ℤ, ℚ and prime fields."""

from .matrices import ExactMatrix, offsets
from .modules import (
    FpModule,
    Homology,
    ModuleMap,
    hom_module,
    homology_data,
    homology_of_pair,
    modules_isomorphic,
)
from .rings import QQ, ZZ, CoefficientRing, prime_field
from .smith import (
    SmithForm,
    diagonalize,
    echelon_basis,
    image_basis,
    invariant_factors,
    kernel_basis,
    rank_reduction,
    smith_normal_form,
    solve,
)

__all__ = (
    "CoefficientRing",
    "ExactMatrix",
    "FpModule",
    "Homology",
    "ModuleMap",
    "QQ",
    "SmithForm",
    "ZZ",
    "diagonalize",
    "echelon_basis",
    "hom_module",
    "homology_data",
    "homology_of_pair",
    "image_basis",
    "invariant_factors",
    "kernel_basis",
    "modules_isomorphic",
    "offsets",
    "prime_field",
    "rank_reduction",
    "smith_normal_form",
    "solve",
)
