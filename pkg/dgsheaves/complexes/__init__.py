# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Chain complexes of module presheaves."""

from .bicomplex import Bicomplex, summand_injection, tot_map, tot_prod, tot_sum
from .complex import (
    Complex,
    ComplexMorphism,
    DegreeVerdict,
    TowerColimit,
    attach_cell,
    brutal_truncation,
    colimit_map,
    complex_from_matrices,
    cone,
    direct_sum,
    evaluate,
    evaluate_map,
    extend_over_cell,
    good_truncation,
    homology,
    homology_sheaf,
    in_window,
    intersect_windows,
    is_local_equivalence,
    is_quasi_iso,
    module_map,
    module_presheaf,
    sequential_colimit_check,
    sheafify_complex,
    shift,
    shift_map,
    t_f_ker_check,
    tower_colimit,
    truncate,
    truncate_map,
)
from .dghom import HomModule, dghom
from .generators import (
    GeneratorSpec,
    RetractData,
    build_generator,
    disk,
    generator_morphism,
    iprime_retract,
    sphere,
)
from .lifting import LinearSystem, YonedaUnknowns, rlp_solve

__all__ = (
    "Bicomplex",
    "Complex",
    "ComplexMorphism",
    "DegreeVerdict",
    "GeneratorSpec",
    "HomModule",
    "LinearSystem",
    "RetractData",
    "TowerColimit",
    "YonedaUnknowns",
    "attach_cell",
    "brutal_truncation",
    "build_generator",
    "colimit_map",
    "complex_from_matrices",
    "cone",
    "dghom",
    "direct_sum",
    "disk",
    "evaluate",
    "evaluate_map",
    "extend_over_cell",
    "generator_morphism",
    "good_truncation",
    "homology",
    "homology_sheaf",
    "in_window",
    "intersect_windows",
    "iprime_retract",
    "is_local_equivalence",
    "is_quasi_iso",
    "module_map",
    "module_presheaf",
    "rlp_solve",
    "sequential_colimit_check",
    "sheafify_complex",
    "shift",
    "shift_map",
    "sphere",
    "summand_injection",
    "t_f_ker_check",
    "tot_map",
    "tot_prod",
    "tot_sum",
    "tower_colimit",
    "truncate",
    "truncate_map",
)
