# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Resolutions, cofibrant replacement and Kan extensions."""

from .certify import CofibrationCertificate, certify_cofibration
from .cofibrant import Resolution, cofibrant_replace, sr_resolution
from .derived import DerivedHom, derived_hom, derived_kan_extend
from .kan import KanData, kan_extend, kan_unit
from .sr import (
    ECONOMICAL,
    EXHAUSTIVE,
    STRATEGIES,
    SRStep,
    image_seeds,
    sr_map,
    sr_step,
)

__all__ = (
    "CofibrationCertificate",
    "DerivedHom",
    "ECONOMICAL",
    "EXHAUSTIVE",
    "KanData",
    "Resolution",
    "SRStep",
    "STRATEGIES",
    "certify_cofibration",
    "cofibrant_replace",
    "derived_hom",
    "derived_kan_extend",
    "image_seeds",
    "kan_extend",
    "kan_unit",
    "sr_map",
    "sr_resolution",
    "sr_step",
)
