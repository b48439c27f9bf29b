# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Document schema tests."""

import pytest
from marshmallow import ValidationError

from dgsheaves.complexes import Complex
from dgsheaves.exactalg import QQ, ZZ, FpModule
from dgsheaves.fixtures import zcst
from dgsheaves.godement import CECH_COLIMIT, GODEMENT, hypercohomology
from dgsheaves.hypercover import Hypercover
from dgsheaves.resolve import KanData
from dgsheaves.schema import (
    ComplexSchema,
    HomologyReportSchema,
    HypercohomologyReportSchema,
    HypercoverSchema,
    KanSchema,
    PresheafSchema,
    SiteSchema,
    homology_report,
    hypercohomology_report,
    load_module_complex,
)


def test_site_kinds():
    assert list(SiteSchema().load({"kind": "terminal"}).objects) == ["*"]
    poset = SiteSchema().load({"kind": "poset", "objects": ["u", "v"], "relations": [["u", "v"]]})
    assert sorted(poset.objects) == ["u", "v"]


def test_site_missing_fields():
    with pytest.raises(ValidationError) as err:
        SiteSchema().load({"kind": "space"})
    assert set(err.value.messages) == {"points", "opens"}


def test_site_unknown_kind():
    with pytest.raises(ValidationError) as err:
        SiteSchema().load({"kind": "topos"})
    assert "kind" in err.value.messages


def test_complex(terminal):
    K = ComplexSchema(site=terminal).load(
        {
            "ring": "Z",
            "levels": {"0": {"modules": {"*": {"generators": 1}}}, "1": {"modules": {"*": {"generators": 1}}}},
            "differentials": {"1": {"*": [[2]]}},
        }
    )
    assert isinstance(K, Complex)
    assert K.homology_data(0).presheaf.values["*"] == FpModule.cyclic(ZZ, 2)


def test_complex_rational_entries(terminal):
    K = ComplexSchema(site=terminal).load(
        {
            "ring": "Q",
            "levels": {"0": {"modules": {"*": {"generators": 1}}}, "1": {"modules": {"*": {"generators": 1}}}},
            "differentials": {"1": {"*": [["1/2"]]}},
        }
    )
    assert K.ring == QQ
    assert K.homology_data(0).presheaf.is_zero()


def test_complex_d_squared_nonzero(terminal):
    one = {"modules": {"*": {"generators": 1}}}
    with pytest.raises(ValidationError) as err:
        ComplexSchema(site=terminal).load(
            {
                "ring": "Z",
                "levels": {"0": one, "1": one, "2": one},
                "differentials": {"1": {"*": [[1]]}, "2": {"*": [[1]]}},
            }
        )
    assert "differentials" in err.value.messages


def test_complex_bad_entries(terminal):
    with pytest.raises(ValidationError) as err:
        ComplexSchema(site=terminal).load(
            {
                "ring": "Z",
                "levels": {"0": {"modules": {"*": {"generators": 1}}}},
                "differentials": {"1": {"*": [["two"]]}},
            }
        )
    assert "differentials" in err.value.messages


def test_complex_bad_ring(terminal):
    with pytest.raises(ValidationError) as err:
        ComplexSchema(site=terminal).load({"ring": {"ring": "Fp", "p": 4}, "levels": {}})
    assert "ring" in err.value.messages


def test_presheaf_kinds(arrow):
    schema = PresheafSchema(site=arrow)
    F = schema.load({"ring": "Z", "kind": "representable", "object": "v"})
    assert F.values["u"].invariants == (1, ())
    with pytest.raises(ValidationError) as err:
        schema.load({"ring": "Z", "kind": "constant"})
    assert err.value.messages == {"module": ["Missing data for required field."]}
    with pytest.raises(ValidationError) as err:
        schema.load({"ring": "Z", "modules": {"w": {"generators": 1}}})
    assert "modules" in err.value.messages


def test_hypercover(pseudocircle):
    X = HypercoverSchema(site=pseudocircle).load(
        {"object": "X", "N": 2, "cover": ["Ux->X", "Uy->X"]}
    )
    assert isinstance(X, Hypercover)
    assert X.objects(0) == ["Ux", "Uy"]
    with pytest.raises(ValidationError) as err:
        HypercoverSchema(site=pseudocircle).load({"object": "Z", "N": 2})
    assert "object" in err.value.messages
    with pytest.raises(ValidationError) as err:
        HypercoverSchema(site=pseudocircle).load({"kind": "explicit", "object": "X", "N": 1})
    assert set(err.value.messages) == {"levels", "faces", "augmentation"}


def test_kan(arrow):
    one = {"levels": {"0": {"generators": 1}}}
    gamma = KanSchema(site=arrow).load(
        {"ring": "Z", "values": {"u": one, "v": one}, "maps": {"u->v": {"0": [[1]]}}}
    )
    assert isinstance(gamma, KanData)
    with pytest.raises(ValidationError) as err:
        KanSchema(site=arrow).load({"ring": "Z", "values": {"u": one}})
    assert "values" in err.value.messages


def test_module_complex():
    K = load_module_complex(ZZ, {"levels": {"0": {"generators": 2}}})
    assert K.level(0).values["*"] == FpModule.free(ZZ, 2)


def test_homology_report_round_trip(zcst_pc):
    report = homology_report(zcst_pc)
    assert report["window"] == [0, 0]
    assert report["homology"]["0"]["Uab"]["module"] == "Z^2"
    assert HomologyReportSchema().dump(report) == report


def test_homology_report_window(zcst_pc):
    report = homology_report(zcst_pc, window=(-1, None))
    assert report["window"] == [-1, 0]
    assert report["homology"]["-1"]["X"]["module"] == "0"


def test_hypercohomology_report(pseudocircle):
    K = zcst(pseudocircle)
    reports = [hypercohomology("X", K, 1, m) for m in (GODEMENT, CECH_COLIMIT)]
    data = hypercohomology_report(ZZ, reports)
    assert data["agree"] is True
    assert data["table"] == {"godement": {"X": {"1": "Z"}}, "cech-colimit": {"X": {"1": "Z"}}}
    assert data["rows"][0]["free_rank"] == 1
    assert HypercohomologyReportSchema().dump(data) == data
