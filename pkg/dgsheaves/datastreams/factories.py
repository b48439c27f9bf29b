# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Stream components built from the configured registries."""

from ..proxies import current_dgsheaves
from .datastreams import DataStream
from .errors import FactoryError


class Factory:
    """Builds a component from a ``{"type": ..., "args": {...}}`` config."""

    FACTORY_NAME = None
    CONFIG_VAR = None

    @classmethod
    def options(cls):
        """Registered component classes by type."""
        return current_dgsheaves.config.get(cls.CONFIG_VAR, {})

    @classmethod
    def create(cls, config):
        """Instance of the registered type, with the given arguments."""
        type_ = config.get("type")
        try:
            component = cls.options()[type_]
        except KeyError:
            raise FactoryError(name=cls.FACTORY_NAME, key=type_)
        return component(**config.get("args", {}))


class WriterFactory(Factory):
    """Writer factory."""

    FACTORY_NAME = "Writer"
    CONFIG_VAR = "DGSHEAVES_DATASTREAM_WRITERS"


class ReaderFactory(Factory):
    """Reader factory."""

    FACTORY_NAME = "Reader"
    CONFIG_VAR = "DGSHEAVES_DATASTREAM_READERS"


class TransformerFactory(Factory):
    """Transformer factory."""

    FACTORY_NAME = "Transformer"
    CONFIG_VAR = "DGSHEAVES_DATASTREAM_TRANSFORMERS"


class DataStreamFactory:
    """Data streams from lists of component configs."""

    @classmethod
    def create(cls, readers_config, writers_config, transformers_config=None):
        """Stream of the configured readers, transformers and writers."""
        return DataStream(
            readers=[ReaderFactory.create(c) for c in readers_config],
            writers=[WriterFactory.create(c) for c in writers_config],
            transformers=[TransformerFactory.create(c) for c in transformers_config or []],
        )
