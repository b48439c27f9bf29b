# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Data Streams readers tests."""

import pytest

from dgsheaves.datastreams.errors import ReaderError
from dgsheaves.datastreams.readers import JsonReader, SuiteReader, YamlReader
from dgsheaves.fixtures import ZCST_DOCUMENT


def test_yaml_reader(yaml_file):
    reader = YamlReader(yaml_file)

    documents = list(reader.read())
    assert documents == [ZCST_DOCUMENT]


def test_json_reader(json_file):
    reader = JsonReader(json_file)

    documents = list(reader.read())
    assert len(documents) == 2
    assert documents[0]["differentials"] == {"1": {"*": [[2]]}}


def test_json_reader_bad_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "terminal"')
    reader = JsonReader(path)

    with pytest.raises(ReaderError) as err:
        list(reader.read())
    assert "Cannot decode JSON file" in str(err.value)


def test_yaml_reader_bad_file(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("kind: [terminal\n")
    reader = YamlReader(path)

    with pytest.raises(ReaderError) as err:
        list(reader.read())
    assert "Cannot decode YAML file" in str(err.value)


def test_missing_file(tmp_path):
    reader = YamlReader(tmp_path / "missing.yaml")

    with pytest.raises(ReaderError) as err:
        list(reader.read())
    assert "No such file or directory" in str(err.value)


def test_suite_reader(ext):
    cases = list(SuiteReader().read())

    assert [(c["suite"], c["case"]) for c in cases] == [
        ("snf", 0),
        ("snf", 1),
        ("snf", 2),
        ("acyclicity", 0),
    ]
    assert cases[0]["seed"] == 1
    assert cases[0]["params"] == {"max_dim": 3, "bound": 4}
    assert cases[3]["seed"] == 0


def test_suite_reader_seed_and_selection(ext):
    cases = list(SuiteReader(suites=["snf"], seed=9).read())

    assert len(cases) == 3
    assert {c["seed"] for c in cases} == {9}


def test_suite_reader_unknown_suite(ext):
    with pytest.raises(ReaderError):
        list(SuiteReader(suites=["nope"]).read())


def test_suite_reader_total(ext):
    assert SuiteReader().total() == 4
    assert SuiteReader(suites=["acyclicity"]).total() == 1
    assert YamlReader("any.yaml").total() is None
