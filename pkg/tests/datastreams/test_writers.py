# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Data Streams writers tests."""

import pytest

from dgsheaves.datastreams import StreamEntry
from dgsheaves.datastreams.errors import WriterError
from dgsheaves.datastreams.writers import JsonWriter, TextWriter, columns


@pytest.fixture(scope="module")
def report():
    """A small homology report."""
    return {
        "command": "homology",
        "ring": {"ring": "Z"},
        "window": [0, 1],
        "homology": {
            "1": {"*": {"module": "0", "free_rank": 0, "torsion": []}},
            "0": {"*": {"module": "Z/2", "free_rank": 0, "torsion": ["2"]}},
        },
    }


def test_json_writer_is_canonical(report):
    writer = JsonWriter()
    writer.write(StreamEntry(report))
    text = writer.getvalue()

    assert text.endswith("}\n")
    assert text.index('"command"') < text.index('"homology"') < text.index('"ring"')
    assert '  "window": [\n    0,\n    1\n  ]' in text


def test_json_writer_same_bytes(report):
    first, second = JsonWriter(), JsonWriter()
    first.write(StreamEntry(report))
    second.write(StreamEntry(dict(reversed(list(report.items())))))

    assert first.getvalue() == second.getvalue()


def test_json_writer_empty_entry():
    writer = JsonWriter()
    writer.write(StreamEntry({}))

    assert writer.getvalue() == "{}\n"


def test_json_writer_unserializable():
    writer = JsonWriter()

    with pytest.raises(WriterError):
        writer.write(StreamEntry({"value": object()}))


def test_json_writer_truncates_file(tmp_path, report):
    path = tmp_path / "report.json"
    path.write_text("stale content\n")
    writer = JsonWriter(path)
    writer.write(StreamEntry({"a": 1}))
    writer.write(StreamEntry({"b": 2}))

    assert path.read_text() == '{\n  "a": 1\n}\n{\n  "b": 2\n}\n'
    assert writer.getvalue() == ""


def test_json_writer_bad_path(tmp_path):
    writer = JsonWriter(tmp_path / "missing" / "report.json")

    with pytest.raises(WriterError):
        writer.write(StreamEntry({"a": 1}))


def test_text_writer_tables(report):
    writer = TextWriter()
    writer.write(StreamEntry(report))

    assert writer.getvalue() == (
        "degree  object  module\n"
        "0       *       Z/2\n"
        "1       *       0\n"
        "\n"
        "key        value\n"
        "command    homology\n"
        "ring.ring  Z\n"
        "window     [0, 1]\n"
    )


def test_text_writer_flags():
    writer = TextWriter()
    writer.write(StreamEntry({"passed": False, "agree": None}))

    assert writer.getvalue() == "key     value\nagree   -\npassed  no\n"


def test_text_writer_empty_entry():
    writer = TextWriter()
    writer.write(StreamEntry({}))

    assert writer.getvalue() == "{}\n"


def test_columns():
    assert columns(["a", "bb"], [["ccc", "d"]]) == ["a    bb", "ccc  d"]
