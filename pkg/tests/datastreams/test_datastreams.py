# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""DataStreams tests."""

import io

import pytest

from dgsheaves.complexes import Complex
from dgsheaves.datastreams.errors import FactoryError
from dgsheaves.datastreams.factories import DataStreamFactory, ReaderFactory
from dgsheaves.exactalg import ZZ, FpModule


@pytest.fixture(scope="function")
def stream_config():
    """Parsed data stream configuration."""
    return {
        "transformers": [{"type": "test"}],
        "readers": [
            {
                "type": "test",
                "args": {
                    "origin": [1, -1],
                },
            }
        ],
        "writers": [{"type": "test"}],
    }


def test_base_datastream(ext, stream_config):
    datastream = DataStreamFactory.create(
        readers_config=stream_config["readers"],
        transformers_config=stream_config.get("transformers"),
        writers_config=stream_config["writers"],
    )

    stream_iter = datastream.process()
    valid = next(stream_iter)
    assert valid.entry == 2
    assert not valid.errors

    invalid = next(stream_iter)
    assert invalid.entry == -1
    assert "TestTransformer: Value cannot be negative" in invalid.errors


def test_base_datastream_fail_on_write(ext, stream_config):
    stream_config["writers"].append(
        {
            "type": "fail",
            "args": {"fail_on": 2},  # the transformer adds one to the entry
        }
    )

    datastream = DataStreamFactory.create(
        readers_config=stream_config["readers"],
        transformers_config=stream_config.get("transformers"),
        writers_config=stream_config["writers"],
    )

    stream_iter = datastream.process()
    invalid_wr = next(stream_iter)
    assert invalid_wr.entry == 2  # entry got transformed
    assert "FailingTestWriter: 2 value found." in invalid_wr.errors

    # failed on the previous but can process the next
    invalid_tr = next(stream_iter)
    assert invalid_tr.entry == -1
    assert "TestTransformer: Value cannot be negative" in invalid_tr.errors


def test_loading_complexes(ext, json_file, terminal):
    datastream = DataStreamFactory.create(
        readers_config=[{"type": "json", "args": {"origin": str(json_file)}}],
        transformers_config=[
            {"type": "schema", "args": {"schema": "complex", "site": terminal}}
        ],
        writers_config=[{"type": "test"}],
    )

    valid, invalid = list(datastream.process())
    assert isinstance(valid.entry, Complex)
    assert valid.entry.ring == ZZ
    assert valid.entry.homology_data(0).presheaf.values["*"] == FpModule.cyclic(ZZ, 2)
    assert len(invalid.errors) == 1
    assert invalid.errors[0].startswith("SchemaTransformer: complex: ")
    assert "differentials" in invalid.errors[0]


def test_missing_origin(ext, tmp_path):
    datastream = DataStreamFactory.create(
        readers_config=[{"type": "yaml", "args": {"origin": str(tmp_path / "nope.yaml")}}],
        writers_config=[{"type": "test"}],
    )

    entries = list(datastream.process())
    assert len(entries) == 1
    assert entries[0].entry is None
    assert entries[0].errors[0].startswith("BaseReader.read: Cannot open")


def test_unknown_component(ext):
    with pytest.raises(FactoryError) as err:
        ReaderFactory.create({"type": "csv"})
    assert str(err.value) == "Reader csv not configured."


def test_total(ext, stream_config, yaml_file):
    datastream = DataStreamFactory.create(
        readers_config=stream_config["readers"],
        writers_config=stream_config["writers"],
    )
    assert datastream.total() == 2
    assert len(list(datastream.process())) == 2

    datastream = DataStreamFactory.create(
        readers_config=[{"type": "yaml", "args": {"origin": str(yaml_file)}}],
        writers_config=[],
    )
    assert datastream.total() is None


def test_suite_stream_total(ext):
    datastream = DataStreamFactory.create(
        readers_config=[{"type": "suite", "args": {"suites": ["snf", "acyclicity"]}}],
        writers_config=[],
    )
    assert datastream.total() == 4
    assert len(list(datastream.read())) == 4


def test_piped_readers(ext):
    datastream = DataStreamFactory.create(
        readers_config=[
            {"type": "test", "args": {"origin": [io.StringIO("[1, 2, 3]\n")]}},
            {"type": "yaml"},
        ],
        writers_config=[],
    )
    assert [e.entry for e in datastream.process()] == [1, 2, 3]
