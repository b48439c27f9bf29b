# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Exact computations with presheaves of chain complexes on finite sites."""

__version__ = "0.1.0"

__all__ = ("__version__",)
