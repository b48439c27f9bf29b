# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Transformers module.

A transformer is any object with ``apply(stream_entry)`` returning the
transformed entry or raising :class:`TransformerError`.
"""

from marshmallow import ValidationError

from ..checks import run_case
from ..errors import DGSheavesError
from ..proxies import current_dgsheaves
from ..schema import ComplexSchema, HypercoverSchema, KanSchema, PresheafSchema, SiteSchema
from .errors import TransformerError

SCHEMAS = {
    "site": SiteSchema,
    "presheaf": PresheafSchema,
    "complex": ComplexSchema,
    "hypercover": HypercoverSchema,
    "kan": KanSchema,
}

RING_SCHEMAS = ("presheaf", "complex", "kan")


class SchemaTransformer:
    """Loads a document into a domain object through its schema."""

    def __init__(self, schema, site=None, ring=None):
        """Constructor.

        :param schema: one of ``site``, ``presheaf``, ``complex``,
            ``hypercover``, ``kan``.
        :param site: the site of site-bound documents.
        :param ring: ring tag replacing the one of the document.
        """
        if schema not in SCHEMAS:
            raise TransformerError(f"Unknown schema {schema}.")
        self._name = schema
        self._ring = ring
        self._schema = SCHEMAS[schema]() if schema == "site" else SCHEMAS[schema](site=site)

    def apply(self, stream_entry):
        """Replaces the entry by the loaded object."""
        entry = stream_entry.entry
        if self._name in RING_SCHEMAS and isinstance(entry, dict):
            entry = dict(entry)
            if self._ring is not None:
                entry["ring"] = self._ring
            else:
                entry.setdefault("ring", current_dgsheaves.config["DGSHEAVES_DEFAULT_RING"])
        try:
            stream_entry.entry = self._schema.load(entry)
        except ValidationError as err:
            raise TransformerError(f"{self._name}: {err.messages}")
        except DGSheavesError as err:
            raise TransformerError(f"{self._name}: {str(err)}")
        return stream_entry


class SuiteTransformer:
    """Runs one property suite case."""

    def apply(self, stream_entry):
        """Replaces the case by ``{"suite", "case", "seed", "passed", "detail"}``."""
        case = stream_entry.entry
        try:
            detail = run_case(case["suite"], case["case"], case["seed"], case["params"])
        except DGSheavesError as err:
            raise TransformerError(f"{case['suite']} case {case['case']}: {str(err)}")
        stream_entry.entry = {
            "suite": case["suite"],
            "case": case["case"],
            "seed": case["seed"],
            "passed": detail["passed"],
            "detail": detail,
        }
        return stream_entry
