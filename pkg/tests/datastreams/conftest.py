# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration of the data streams tests.

Test readers, transformers and writers are registered on top of the
default ones through the ``app_config`` fixture.
"""

import json

import pytest
import yaml

from dgsheaves.config import (
    DGSHEAVES_DATASTREAM_READERS,
    DGSHEAVES_DATASTREAM_TRANSFORMERS,
    DGSHEAVES_DATASTREAM_WRITERS,
)
from dgsheaves.datastreams.errors import TransformerError, WriterError
from dgsheaves.datastreams.readers import BaseReader
from dgsheaves.datastreams.writers import BaseWriter
from dgsheaves.fixtures import ZCST_DOCUMENT


class TestReader(BaseReader):
    """Test reader."""

    def _iter(self, fp):
        """Yields the values in the origin."""
        yield from fp

    def read(self, item=None):
        """Reads the origin list."""
        yield from self._iter(self._origin)

    def total(self):
        """Length of the origin list."""
        return len(self._origin)


class TestTransformer:
    """Test transformer."""

    def apply(self, stream_entry):
        """Sums up one to the value."""
        if stream_entry.entry < 0:
            raise TransformerError("Value cannot be negative")

        stream_entry.entry += 1
        return stream_entry


class TestWriter(BaseWriter):
    """Test writer."""

    def write(self, stream_entry, *args, **kwargs):
        """NOP write."""
        return stream_entry


class FailingTestWriter(BaseWriter):
    """Failing test writer."""

    def __init__(self, fail_on):
        """Initialise error."""
        super().__init__()
        self.fail_on = fail_on

    def write(self, stream_entry, *args, **kwargs):
        """Return the entry."""
        if stream_entry.entry == self.fail_on:
            raise WriterError(f"{self.fail_on} value found.")
        return stream_entry


@pytest.fixture(scope="module")
def app_config(app_config):
    """Mimic a configuration with test components."""
    app_config["DGSHEAVES_DATASTREAM_READERS"] = {
        **DGSHEAVES_DATASTREAM_READERS,
        "test": TestReader,
    }
    app_config["DGSHEAVES_DATASTREAM_TRANSFORMERS"] = {
        **DGSHEAVES_DATASTREAM_TRANSFORMERS,
        "test": TestTransformer,
    }
    app_config["DGSHEAVES_DATASTREAM_WRITERS"] = {
        **DGSHEAVES_DATASTREAM_WRITERS,
        "test": TestWriter,
        "fail": FailingTestWriter,
    }
    app_config["DGSHEAVES_CHECK_SUITES"] = {
        "snf": {"cases": 3, "seed": 1, "max_dim": 3, "bound": 4},
        "acyclicity": {"levels": 3},
    }

    return app_config


@pytest.fixture(scope="module")
def terminal_document():
    """Site document of the terminal site."""
    return {"kind": "terminal", "name": "terminal"}


@pytest.fixture(scope="module")
def complex_documents():
    """A valid complex and one with a wrongly shaped differential."""
    valid = {
        "levels": {
            0: {"modules": {"*": {"generators": 1}}},
            1: {"modules": {"*": {"generators": 1}}},
        },
        "differentials": {1: {"*": [[2]]}},
    }
    invalid = {
        "levels": {0: {"modules": {"*": {"generators": 1}}}},
        "differentials": {0: {"*": [[1, 1]]}},
    }
    return [valid, invalid]


@pytest.fixture(scope="function")
def json_file(tmp_path, complex_documents):
    """JSON file holding a list of two complex documents."""
    path = tmp_path / "complexes.json"
    path.write_text(json.dumps(complex_documents))
    return path


@pytest.fixture(scope="function")
def yaml_file(tmp_path):
    """YAML file holding the constant sheaf complex."""
    path = tmp_path / "zcst.yaml"
    path.write_text(yaml.safe_dump(ZCST_DOCUMENT))
    return path
