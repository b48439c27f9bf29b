# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Finite sites, presheaves, sheafification and points."""

from .category import FinCategory, Morphism, identity_id, inclusion_id
from .coverage import Site, SiteReport, require_object, terminal_site, validate_site
from .points import (
    Point,
    conservativity_certificate,
    derive_points,
    stalk,
    stalk_map,
    validate_points,
)
from .presheaves import (
    ModPresheaf,
    PresheafMap,
    SetPresheaf,
    SetPresheafMap,
    is_generalized_cover,
    linearize_map,
    linearize_presheaf,
    yoneda_extension,
    yoneda_map,
)
from .sheafify import (
    PlusConstruction,
    Sheafification,
    is_sheaf,
    sheafification,
    sheafify,
    sheafify_map,
)

__all__ = (
    "FinCategory",
    "ModPresheaf",
    "Morphism",
    "PlusConstruction",
    "Point",
    "PresheafMap",
    "SetPresheaf",
    "SetPresheafMap",
    "Sheafification",
    "Site",
    "SiteReport",
    "conservativity_certificate",
    "derive_points",
    "identity_id",
    "inclusion_id",
    "is_generalized_cover",
    "is_sheaf",
    "linearize_map",
    "linearize_presheaf",
    "require_object",
    "sheafification",
    "sheafify",
    "sheafify_map",
    "stalk",
    "stalk_map",
    "terminal_site",
    "validate_points",
    "validate_site",
    "yoneda_extension",
    "yoneda_map",
)
