# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration.

Sites are loaded from the bundled fixtures once per test module.
"""

import pytest

from dgsheaves.ext import init_extension
from dgsheaves.fixtures import load_site, zcst


@pytest.fixture(scope="module")
def app_config():
    """Configuration overrides of the extension."""
    return {}


@pytest.fixture(scope="module")
def ext(app_config):
    """Extension initialised with the module's configuration."""
    return init_extension(dict(app_config))


@pytest.fixture(scope="module")
def terminal():
    """Terminal site."""
    return load_site("terminal")


@pytest.fixture(scope="module")
def pseudocircle():
    """Four-point space with open points a, b and closed points x, y."""
    return load_site("pseudocircle")


@pytest.fixture(scope="module")
def arrow():
    """Poset u < v."""
    return load_site("arrow")


@pytest.fixture(scope="module")
def chain():
    """Poset u < v < w."""
    return load_site("chain")


@pytest.fixture(scope="module")
def zcst_pc(pseudocircle):
    """``S⁰`` of the constant sheaf ℤ on the pseudocircle."""
    return zcst(pseudocircle)
