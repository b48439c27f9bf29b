# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Hypercovers, their chain complexes and descent."""

from .chains import AcyclicityReport, chain_of_hypercover, check_acyclicity, linear_hypercover
from .covers import Hypercover, HypercoverReport, cech_nerve, verify_hypercover
from .descent import DescentReport, cech_bicomplex, descent_check, descent_comparison

__all__ = (
    "AcyclicityReport",
    "DescentReport",
    "Hypercover",
    "HypercoverReport",
    "cech_bicomplex",
    "cech_nerve",
    "chain_of_hypercover",
    "check_acyclicity",
    "descent_check",
    "descent_comparison",
    "linear_hypercover",
    "verify_hypercover",
)
