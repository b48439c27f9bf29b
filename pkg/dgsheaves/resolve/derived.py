# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Derived functors computed through the cofibrant replacement."""

from collections import namedtuple

from ..complexes import dghom, in_window
from ..errors import ValidityError
from .cofibrant import cofibrant_replace
from .kan import kan_extend
from .sr import ECONOMICAL

DerivedHom = namedtuple("DerivedHom", ["module", "validity", "resolution"])


def derived_kan_extend(gamma, K, depth=None, strategy=ECONOMICAL):
    """Left derived Kan extension ``γ*(QK)``."""
    resolution = cofibrant_replace(K, depth, strategy)
    return kan_extend(gamma, resolution.complex)


def derived_hom_validity(resolution, L):
    """Degrees ``n`` where ``H_n Hom(QK, L)`` sees only complete levels of ``QK``."""
    hi = resolution.validity[1]
    if hi is None:
        return None, None
    return L.hi - hi, None


def derived_hom(K, L, n, depth=None, strategy=ECONOMICAL):
    """``H_n Hom(QK, L)``, maps ``K -> L[n]`` in the derived category.

    :raises ValidityError: if the resolution depth does not reach degree ``n``.
    """
    resolution = cofibrant_replace(K, depth, strategy)
    validity = derived_hom_validity(resolution, L)
    if not in_window(n, validity):
        raise ValidityError(n, validity)
    H = dghom(resolution.complex, L)
    module = H.homology_data(n).presheaf.values["*"]
    return DerivedHom(module, validity, resolution)
