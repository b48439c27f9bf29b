# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Seeded property suites run by ``dgsheaves check``."""

import logging
import random

from ..errors import DGSheavesError
from .suites import SUITES

logger = logging.getLogger(__name__)


def case_rng(seed, case):
    """Generator of one case; distinct cases of a seed never share a stream."""
    return random.Random(seed * 1_000_003 + case)


def run_case(suite, case=0, seed=0, params=None):
    """Runs one case and returns its detail, ``passed`` included.

    :raises DGSheavesError: for an unknown suite.
    """
    try:
        function = SUITES[suite]
    except KeyError:
        raise DGSheavesError(f"Unknown suite {suite!r}.")
    detail = function(case_rng(seed, case), dict(params or {}))
    logger.debug("Suite %s case %d: %s.", suite, case, detail["passed"])
    return detail


__all__ = (
    "SUITES",
    "case_rng",
    "run_case",
)
