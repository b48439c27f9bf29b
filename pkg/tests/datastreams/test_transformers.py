# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Data Streams transformers tests."""

import pytest

from dgsheaves.complexes import Complex
from dgsheaves.datastreams import StreamEntry
from dgsheaves.datastreams.errors import TransformerError
from dgsheaves.datastreams.transformers import SchemaTransformer, SuiteTransformer
from dgsheaves.exactalg import ZZ, prime_field
from dgsheaves.fixtures import ZCST_DOCUMENT
from dgsheaves.site import Site


def test_site_transformer(terminal_document):
    transformer = SchemaTransformer("site")

    site = transformer.apply(StreamEntry(terminal_document)).entry
    assert isinstance(site, Site)
    assert list(site.objects) == ["*"]


def test_site_transformer_missing_fields():
    transformer = SchemaTransformer("site")

    with pytest.raises(TransformerError) as err:
        transformer.apply(StreamEntry({"kind": "space"}))
    assert "points" in str(err.value)
    assert "opens" in str(err.value)


def test_complex_transformer_default_ring(ext, pseudocircle):
    document = {k: v for k, v in ZCST_DOCUMENT.items() if k != "ring"}
    transformer = SchemaTransformer("complex", site=pseudocircle)

    K = transformer.apply(StreamEntry(document)).entry
    assert isinstance(K, Complex)
    assert K.ring == ZZ
    assert K.level(0).values["Uab"].invariants == (2, ())


def test_complex_transformer_ring_override(ext, pseudocircle):
    transformer = SchemaTransformer("complex", site=pseudocircle, ring={"ring": "Fp", "p": 2})

    K = transformer.apply(StreamEntry(dict(ZCST_DOCUMENT))).entry
    assert K.ring == prime_field(2)


def test_complex_transformer_bad_ring(ext, pseudocircle):
    transformer = SchemaTransformer("complex", site=pseudocircle, ring={"ring": "Fp"})

    with pytest.raises(TransformerError) as err:
        transformer.apply(StreamEntry(dict(ZCST_DOCUMENT)))
    assert "ring" in str(err.value)


def test_unknown_schema():
    with pytest.raises(TransformerError):
        SchemaTransformer("sheaf")


def test_suite_transformer(ext):
    case = {"suite": "snf", "case": 0, "seed": 1, "params": {"max_dim": 3, "bound": 4}}
    entry = SuiteTransformer().apply(StreamEntry(case)).entry

    assert entry["suite"] == "snf"
    assert entry["passed"] is True
    assert entry["detail"]["passed"] is True
    assert "factors" in entry["detail"]


def test_suite_transformer_unknown_suite(ext):
    case = {"suite": "nope", "case": 0, "seed": 1, "params": {}}

    with pytest.raises(TransformerError) as err:
        SuiteTransformer().apply(StreamEntry(case))
    assert str(err.value).startswith("nope case 0: ")
