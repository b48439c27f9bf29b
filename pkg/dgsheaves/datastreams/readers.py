# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Readers module."""

import json
from abc import ABC, abstractmethod
from json.decoder import JSONDecodeError

import yaml

from ..proxies import current_dgsheaves
from .errors import ReaderError


class BaseReader(ABC):
    """Base reader of documents."""

    def __init__(self, origin=None):
        """Constructor.

        :param origin: path of the document file; ``None`` for piped readers.
        """
        self._origin = origin

    @abstractmethod
    def _iter(self, fp):
        """Yields the documents of an open file."""

    def read(self, item=None):
        """Reads from a piped file object, or opens the origin."""
        if item:
            yield from self._iter(item)
            return
        try:
            file = open(self._origin)
        except OSError as err:
            raise ReaderError(f"Cannot open {self._origin}: {err.strerror}")
        with file:
            yield from self._iter(file)

    def total(self):
        """Number of documents, unknown until the file is parsed."""
        return None


def _documents(data):
    """One document, or each document of a list."""
    if isinstance(data, list):
        yield from data
    elif data is not None:
        yield data


class YamlReader(BaseReader):
    """YAML documents."""

    def _iter(self, fp):
        try:
            data = yaml.safe_load(fp)
        except yaml.YAMLError as err:
            raise ReaderError(f"Cannot decode YAML file {fp.name}: {err}")
        yield from _documents(data)


class JsonReader(BaseReader):
    """JSON documents."""

    def _iter(self, fp):
        try:
            data = json.load(fp)
        except JSONDecodeError as err:
            raise ReaderError(f"Cannot decode JSON file {fp.name}: {err}")
        yield from _documents(data)


class SuiteReader(BaseReader):
    """Cases of the configured property suites.

    Yields ``{"suite", "case", "seed", "params"}``; there is no origin.
    """

    def __init__(self, suites=None, seed=None):
        """Constructor.

        :param suites: suite names, all configured suites by default.
        :param seed: seed overriding the configured ones.
        """
        super().__init__()
        self._suites = suites
        self._seed = seed

    def _names(self):
        return self._suites or list(current_dgsheaves.config["DGSHEAVES_CHECK_SUITES"])

    def read(self, item=None):
        """Enumerates the cases in suite order."""
        yield from self._iter(item)

    def _iter(self, fp):
        config = current_dgsheaves.config["DGSHEAVES_CHECK_SUITES"]
        for name in self._names():
            if name not in config:
                raise ReaderError(f"Unknown suite {name}.")
            params = dict(config[name])
            seed = params.pop("seed", 0)
            if self._seed is not None:
                seed = self._seed
            cases = params.pop("cases", 1)
            for case in range(cases):
                yield {"suite": name, "case": case, "seed": seed, "params": params}

    def total(self):
        """Number of cases of the known selected suites."""
        config = current_dgsheaves.config["DGSHEAVES_CHECK_SUITES"]
        return sum(config[name].get("cases", 1) for name in self._names() if name in config)
