# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Property suite tests, with reduced case counts."""

import pytest

from dgsheaves.checks import SUITES, case_rng, run_case
from dgsheaves.config import DGSHEAVES_CHECK_SUITES
from dgsheaves.errors import DGSheavesError


def test_every_suite_is_configured():
    assert set(SUITES) == set(DGSHEAVES_CHECK_SUITES)


def test_case_streams():
    assert case_rng(1, 0).random() == case_rng(1, 0).random()
    assert case_rng(1, 0).random() != case_rng(1, 1).random()


@pytest.mark.parametrize(
    "suite,cases,params",
    [
        ("snf", 20, {"max_dim": 4, "bound": 5}),
        ("dold-kan", 3, {"levels": 3}),
        ("moore", 2, {"levels": 3}),
        ("iprime", 1, {"degrees": [-1, 0, 1], "sites": ["terminal", "arrow"]}),
        ("cofrep", 2, {}),
        ("lifting", 2, {}),
        ("colimit", 2, {"stages": 3}),
        ("acyclicity", 1, {"levels": 3}),
        ("descent", 1, {"levels": 3, "q_max": 3}),
        ("hypercoh", 1, {"degrees": [0, 1]}),
        ("local-equivalence", 3, {}),
        ("kan", 3, {}),
        ("truncation", 3, {}),
    ],
)
def test_suite(ext, suite, cases, params):
    for case in range(cases):
        detail = run_case(suite, case, seed=7, params=params)
        assert detail["passed"], detail


def test_descent_detail(ext):
    detail = run_case("descent", params={"levels": 3, "q_max": 3})
    assert detail["plain"]["obstructions"][0]["degree"] == -1
    assert detail["resolved"]["passed"] is True


def test_same_seed_same_detail(ext):
    assert run_case("snf", 3, 5) == run_case("snf", 3, 5)


def test_unknown_suite():
    with pytest.raises(DGSheavesError):
        run_case("nope")


@pytest.mark.parametrize("source", ["gamma", "nerve"])
def test_moore_inputs(ext, source):
    for case in range(2):
        detail = run_case("moore", case, seed=3, params={"levels": 3, "inputs": [source]})
        assert detail["input"] == source
        assert detail["passed"], detail


@pytest.mark.parametrize("functor", ["inclusion", "scaled"])
def test_kan_functors(ext, functor):
    for case in range(2):
        detail = run_case("kan", case, seed=11, params={"functors": [functor]})
        assert detail["functor"] == functor
        assert detail["passed"], detail


def test_colimit_detail(ext):
    detail = run_case("colimit", 0, seed=13, params={"stages": 3})
    assert len(detail["cells"]) == 3
    assert len(detail["stages"]) == 4
    assert detail["compatible"] and detail["comparison"] and detail["colimit"]
