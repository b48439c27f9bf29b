# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""DG-Sheaves extension object holding the effective configuration."""

import logging

from . import config

logger = logging.getLogger(__name__)

_extension = None


class DGSheaves(object):
    """DG-Sheaves extension."""

    def __init__(self, overrides=None):
        """Extension initialization."""
        self.config = {}
        self.init_config(overrides)

    def init_config(self, overrides=None):
        """Initialize configuration.

        Values in ``overrides`` win over the module defaults.
        """
        self.config.update(overrides or {})
        for k in dir(config):
            if k.startswith("DGSHEAVES_"):
                self.config.setdefault(k, getattr(config, k))

    def suite_options(self, name):
        """Parameters of a property suite.

        :raises KeyError: for an unknown suite.
        """
        return dict(self.config["DGSHEAVES_CHECK_SUITES"][name])


def init_extension(overrides=None):
    """Replaces the process-wide extension, e.g. from a ``--config`` file."""
    global _extension
    _extension = DGSheaves(overrides)
    if overrides:
        logger.debug("Configuration overrides: %s.", sorted(overrides))
    return _extension


def current_extension():
    """The process-wide extension, created on first use."""
    if _extension is None:
        return init_extension()
    return _extension
