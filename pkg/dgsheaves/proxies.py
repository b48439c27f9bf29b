# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Proxies to the process-wide extension."""

from werkzeug.local import LocalProxy


def _ext_proxy(attr=None):
    def lookup():
        # deferred: the configuration imports the datastream classes
        from .ext import current_extension

        ext = current_extension()
        return ext if attr is None else getattr(ext, attr)

    return LocalProxy(lookup)


current_dgsheaves = _ext_proxy()
"""Proxy to the instantiated extension."""

current_config = _ext_proxy("config")
"""Proxy to the effective configuration mapping."""
