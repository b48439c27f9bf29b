# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""CLI Module tests."""

import json

import pytest
import yaml
from click.testing import CliRunner

from dgsheaves.cli import dgsheaves
from dgsheaves.fixtures import ZCST_DOCUMENT


@pytest.fixture(scope="function")
def runner():
    """Click runner."""
    return CliRunner()


@pytest.fixture(scope="function")
def zcst_file(tmp_path):
    """The constant sheaf complex as a JSON document."""
    path = tmp_path / "zcst.json"
    path.write_text(json.dumps(ZCST_DOCUMENT))
    return str(path)


@pytest.fixture(scope="function")
def cyclic_file(tmp_path):
    """``ℤ --2--> ℤ`` in degrees 1 and 0 over the terminal site."""
    path = tmp_path / "cyclic.yaml"
    path.write_text(
        yaml.safe_dump(
            {
                "levels": {
                    0: {"modules": {"*": {"generators": 1}}},
                    1: {"modules": {"*": {"generators": 1}}},
                },
                "differentials": {1: {"*": [[2]]}},
            }
        )
    )
    return str(path)


def test_site_validate(runner):
    result = runner.invoke(dgsheaves, ["site-validate", "--fixture", "terminal"])

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["command"] == "site-validate"
    assert report["valid"] is True


def test_site_validate_from_file(runner, tmp_path):
    path = tmp_path / "arrow.yaml"
    path.write_text(yaml.safe_dump({"kind": "poset", "objects": ["u", "v"], "relations": [["u", "v"]]}))
    result = runner.invoke(dgsheaves, ["site-validate", "--site", str(path)])

    assert result.exit_code == 0
    assert json.loads(result.output)["valid"] is True


def test_unknown_fixture(runner):
    result = runner.invoke(dgsheaves, ["site-validate", "--fixture", "moebius"])

    assert result.exit_code == 2
    assert "Unknown fixture moebius" in result.output


def test_homology(runner, cyclic_file):
    result = runner.invoke(
        dgsheaves, ["homology", "--fixture", "terminal", "--complex", cyclic_file]
    )

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["window"] == [0, 1]
    assert report["homology"]["0"]["*"] == {"module": "Z/2", "free_rank": 0, "torsion": ["2"]}
    assert report["homology"]["1"]["*"]["module"] == "0"


def test_homology_over_field(runner, cyclic_file):
    result = runner.invoke(
        dgsheaves,
        ["homology", "--fixture", "terminal", "-c", cyclic_file, "--ring", "Fp", "--p", "3"],
    )

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["ring"] == {"ring": "Fp", "p": 3}
    assert report["homology"]["0"]["*"]["module"] == "0"


def test_homology_text(runner, cyclic_file):
    result = runner.invoke(
        dgsheaves,
        ["homology", "--fixture", "terminal", "-c", cyclic_file, "--format", "text"],
    )

    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0].split() == ["degree", "object", "module"]
    assert lines[1].split() == ["0", "*", "Z/2"]


def test_hypercoh(runner, zcst_file):
    args = [
        "hypercoh",
        "--fixture",
        "pseudocircle",
        "--complex",
        zcst_file,
        "--object",
        "X",
        "--range",
        "0..2",
    ]
    first = runner.invoke(dgsheaves, args)
    second = runner.invoke(dgsheaves, args)

    assert first.exit_code == 0
    assert first.output == second.output
    report = json.loads(first.output)
    expected = {"X": {"0": "Z", "1": "Z", "2": "0"}}
    assert report["table"] == {"godement": expected, "cech-colimit": expected}
    assert report["agree"] is True


def test_hypercoh_output_file(runner, zcst_file, tmp_path):
    output = tmp_path / "hypercoh.json"
    result = runner.invoke(
        dgsheaves,
        [
            "hypercoh",
            "--fixture",
            "pseudocircle",
            "-c",
            zcst_file,
            "--object",
            "X",
            "--range",
            "1..1",
            "--method",
            "godement",
            "-o",
            str(output),
        ],
    )

    assert result.exit_code == 0
    assert result.output == ""
    report = json.loads(output.read_text())
    assert report["table"] == {"godement": {"X": {"1": "Z"}}}
    assert report["agree"] is None


def test_descent_obstruction(runner, zcst_file):
    result = runner.invoke(
        dgsheaves,
        ["descent", "--fixture", "pseudocircle", "-c", zcst_file, "--object", "X"],
    )

    assert result.exit_code == 1
    report = json.loads(result.output)
    assert report["passed"] is False
    assert [o["degree"] for o in report["obstructions"]] == [-1]


def test_descent_unknown_object(runner, zcst_file):
    result = runner.invoke(
        dgsheaves,
        ["descent", "--fixture", "pseudocircle", "-c", zcst_file, "--object", "Uz"],
    )

    assert result.exit_code == 2


def test_bad_complex(runner, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {
                "levels": {"0": {"modules": {"*": {"generators": 1}}}},
                "differentials": {"0": {"*": [[1, 1]]}},
            }
        )
    )
    result = runner.invoke(
        dgsheaves, ["homology", "--fixture", "terminal", "--complex", str(path)]
    )

    assert result.exit_code == 2
    assert "differentials" in result.output


def test_missing_complex(runner):
    result = runner.invoke(dgsheaves, ["homology", "--fixture", "terminal"])

    assert result.exit_code == 2
    assert "--complex must be present" in result.output


def test_cofrep(runner, cyclic_file):
    result = runner.invoke(
        dgsheaves,
        ["cofrep", "--fixture", "terminal", "-c", cyclic_file, "--depth", "2"],
    )

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["certified"] is True
    assert report["homology"]["0"]["*"]["module"] == "Z/2"


def test_sheafify(runner, zcst_file):
    result = runner.invoke(
        dgsheaves, ["sheafify", "--fixture", "pseudocircle", "-c", zcst_file]
    )

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["command"] == "sheafify"
    assert report["homology"]["0"]["Uab"]["module"] == "Z^2"


def test_check(runner, tmp_path):
    config = tmp_path / "config.yaml"
    config.write_text(yaml.safe_dump({"DGSHEAVES_CHECK_SUITES": {"snf": {"cases": 5}}}))
    result = runner.invoke(dgsheaves, ["--config", str(config), "check", "--suite", "snf"])

    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["passed"] is True
    assert report["suites"]["snf"]["cases"] == 5
    assert report["suites"]["snf"]["seed"] == 1


def test_check_unknown_suite(runner):
    result = runner.invoke(dgsheaves, ["check", "--suite", "nope"])

    assert result.exit_code == 2
