# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""DG-Sheaves configuration."""

from .datastreams.readers import JsonReader, SuiteReader, YamlReader
from .datastreams.transformers import SchemaTransformer, SuiteTransformer
from .datastreams.writers import JsonWriter, TextWriter

DGSHEAVES_DEFAULT_RING = "Z"
"""Ring tag used when an input document does not carry one."""

DGSHEAVES_DEFAULT_DEPTH = 4
"""Number of resolution stages of the cofibrant replacement."""

DGSHEAVES_DEFAULT_LEVELS = 3
"""Truncation level ``N`` of Čech nerves built on the command line."""

DGSHEAVES_DEFAULT_QMAX = 3
"""Cosimplicial height of the Godement resolution."""

DGSHEAVES_MAX_REFINEMENTS = 4
"""Čech refinements tried before a colimit is reported as unstabilized."""

DGSHEAVES_EXHAUSTIVE_LIMIT = 4096
"""Largest number of sections the exhaustive cover may enumerate."""

DGSHEAVES_DATASTREAM_READERS = {
    "json": JsonReader,
    "yaml": YamlReader,
    "suite": SuiteReader,
}
"""Data Streams readers."""

DGSHEAVES_DATASTREAM_TRANSFORMERS = {
    "schema": SchemaTransformer,
    "suite": SuiteTransformer,
}
"""Data Streams transformers."""

DGSHEAVES_DATASTREAM_WRITERS = {
    "json": JsonWriter,
    "text": TextWriter,
}
"""Data Streams writers."""

DGSHEAVES_CHECK_SUITES = {
    "snf": {"cases": 200, "seed": 1, "max_dim": 4, "bound": 5},
    "dold-kan": {"cases": 50, "seed": 2, "levels": 4},
    "moore": {"cases": 30, "seed": 3, "levels": 3},
    "iprime": {"degrees": [-1, 0, 1, 2], "sites": ["terminal", "arrow", "chain"]},
    "cofrep": {"cases": 20, "seed": 5},
    "lifting": {"cases": 10, "seed": 6},
    "colimit": {"cases": 10, "seed": 13, "stages": 3},
    "acyclicity": {"levels": 4},
    "descent": {"levels": 3, "q_max": 3},
    "hypercoh": {"degrees": [0, 1, 2]},
    "local-equivalence": {"cases": 20, "seed": 10},
    "kan": {"cases": 10, "seed": 11},
    "truncation": {"cases": 10, "seed": 12, "pieces": 1},
}
"""Property suites run by ``dgsheaves check``, with their case counts and seeds."""

DGSHEAVES_FIXTURES = {
    "terminal": "terminal.yaml",
    "pseudocircle": "pseudocircle.yaml",
    "arrow": "arrow.yaml",
    "chain": "chain.yaml",
}
"""Bundled site fixtures, relative to the ``fixtures`` directory."""
