# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Bundled site fixtures."""

import os

import yaml

from ..complexes import Complex
from ..exactalg import ZZ, FpModule
from ..proxies import current_dgsheaves
from ..schema import SiteSchema
from ..site import ModPresheaf, sheafify

FIXTURES_DIR = os.path.dirname(__file__)


class SiteFixture:
    """Site fixture read from a bundled YAML file."""

    def __init__(self, name):
        """Constructor.

        :raises KeyError: if no fixture has that name.
        """
        filename = current_dgsheaves.config["DGSHEAVES_FIXTURES"][name]
        self.name = name
        self._filepath = os.path.join(FIXTURES_DIR, filename)

    def data(self):
        """The raw document."""
        with open(self._filepath) as f:
            return yaml.safe_load(f) or {}

    def load(self):
        """The :class:`Site`."""
        return SiteSchema().load(self.data())


def fixture_names():
    """Names of the bundled fixtures."""
    return sorted(current_dgsheaves.config["DGSHEAVES_FIXTURES"])


def load_site(name):
    """Bundled site by name."""
    return SiteFixture(name).load()


def constant_sheaf(site, ring=ZZ):
    """The constant sheaf ``a(Λ)``, sheafified from the constant presheaf."""
    sheaf, _ = sheafify(ModPresheaf.constant(site, FpModule.free(ring, 1)))
    return sheaf


def zcst(site, ring=ZZ):
    """``S⁰`` of the constant sheaf."""
    return Complex.concentrated(constant_sheaf(site, ring), 0)


ZCST_DOCUMENT = {
    "ring": "Z",
    "levels": {0: {"kind": "constant", "module": {"generators": 1}, "sheafify": True}},
}
"""Complex document of :func:`zcst` over ℤ."""
