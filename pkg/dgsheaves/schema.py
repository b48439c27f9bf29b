# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Marshmallow schemas of the input documents and of the emitted reports.

Input schemas validate the shape of a document and build the domain object
in ``post_load``. Schemas of presheaf-like documents need the site they live
on, passed as ``SiteBound(site=...)``. Domain errors raised while building
are reported as :class:`marshmallow.ValidationError` naming the field.
"""

import re

from marshmallow import (
    Schema,
    ValidationError,
    fields,
    post_load,
    validate,
    validates_schema,
)

from .complexes import Complex, ComplexMorphism, module_map
from .errors import DGSheavesError
from .exactalg import CoefficientRing, ExactMatrix, FpModule, ModuleMap
from .hypercover import Hypercover, cech_nerve
from .resolve import KanData
from .site import FinCategory, ModPresheaf, Point, PresheafMap, Site, sheafify

DECIMAL = re.compile(r"^-?\d+(/\d+)?$")

SITE_KINDS = ("terminal", "space", "poset", "category")
PRESHEAF_KINDS = ("modules", "constant", "representable")
HYPERCOVER_KINDS = ("cech", "explicit")


class RingTag(fields.Field):
    """Ring tag ``"Z"``, ``"Q"`` or ``{"ring": "Fp", "p": 5}``."""

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return CoefficientRing.from_tag(value)
        except DGSheavesError as err:
            raise ValidationError(str(err))

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return value.to_tag()


class Entry(fields.Field):
    """Matrix entry: an integer or a decimal string such as ``"-3"`` or ``"1/2"``."""

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, bool):
            raise ValidationError("Not a number.")
        if isinstance(value, int):
            return str(value)
        if isinstance(value, str) and DECIMAL.match(value.strip()):
            return value.strip()
        raise ValidationError(f"Not a decimal string: {value!r}.")


def Matrix(**kwargs):
    """Rows of entries."""
    return fields.List(fields.List(Entry()), **kwargs)


def _fail(field, err):
    """Domain error as a validation error on ``field``."""
    raise ValidationError({field: [str(err)]})


def build_matrix(ring, rows, nrows, ncols):
    """``ExactMatrix`` of the given shape from loaded rows."""
    rows = rows or []
    if rows and (len(rows) != nrows or any(len(r) != ncols for r in rows)):
        raise DGSheavesError(
            f"Matrix has shape {len(rows)}x{len(rows[0])}, expected {nrows}x{ncols}."
        )
    if not rows and nrows and ncols:
        raise DGSheavesError(f"Empty matrix, expected {nrows}x{ncols}.")
    if not rows:
        return ExactMatrix.zero(ring, nrows, ncols)
    return ExactMatrix.from_json(ring, rows, nrows, ncols)


class ModuleSchema(Schema):
    """Finitely presented module ``{generators, relations}``.

    ``relations`` has one row per generator and one column per relator.
    """

    generators = fields.Integer(required=True, validate=validate.Range(min=0))
    relations = Matrix(load_default=list)


def build_module(ring, data):
    """``FpModule`` from loaded :class:`ModuleSchema` data."""
    rows = data.get("relations") or []
    g = data["generators"]
    ncols = len(rows[0]) if rows else 0
    return FpModule(ring, g, build_matrix(ring, rows, g, ncols))


class PointSchema(Schema):
    """Point of a category site."""

    id = fields.String(required=True)
    minimal = fields.String(required=True)
    germs = fields.Dict(keys=fields.String(), values=fields.String(), required=True)


class MorphismSchema(Schema):
    """Morphism ``{id, src, dst}``."""

    id = fields.String(required=True)
    src = fields.String(required=True)
    dst = fields.String(required=True)


class SiteSchema(Schema):
    """Site document.

    * ``terminal``: no further fields;
    * ``space``: ``points`` and ``opens``, covers are all open covers;
    * ``poset``: ``objects`` and generating ``relations``, with optional
      ``covers`` (identity covers otherwise);
    * ``category``: ``objects``, ``morphisms``, ``compose`` triples,
      ``identities``, ``covers`` and optional ``points``.
    """

    kind = fields.String(required=True, validate=validate.OneOf(SITE_KINDS))
    name = fields.String()
    points = fields.List(fields.Raw())
    opens = fields.Dict(keys=fields.String(), values=fields.List(fields.String()))
    objects = fields.List(fields.String())
    relations = fields.List(fields.List(fields.String(), validate=validate.Length(equal=2)))
    morphisms = fields.List(fields.Nested(MorphismSchema))
    compose = fields.List(fields.List(fields.String(), validate=validate.Length(equal=3)))
    identities = fields.Dict(keys=fields.String(), values=fields.String())
    covers = fields.Dict(
        keys=fields.String(), values=fields.List(fields.List(fields.String()))
    )

    @validates_schema
    def validate_kind(self, data, **kwargs):
        """Checks the fields each kind needs."""
        required = {
            "terminal": (),
            "space": ("points", "opens"),
            "poset": ("objects",),
            "category": ("objects", "morphisms", "covers"),
        }[data["kind"]]
        missing = {k: ["Missing data for required field."] for k in required if k not in data}
        if missing:
            raise ValidationError(missing)

    @post_load
    def make_site(self, data, **kwargs):
        """Builds the :class:`Site`."""
        kind, name = data["kind"], data.get("name")
        try:
            if kind == "terminal":
                return Site.terminal()
            if kind == "space":
                return Site.finite_space(data["points"], data["opens"], name=name)
            if kind == "poset":
                if "covers" not in data:
                    return Site.trivial_poset(
                        data["objects"], data.get("relations", []), name=name
                    )
                category = FinCategory.poset(data["objects"], data.get("relations", []))
                return Site(category, data["covers"], name=name)
        except DGSheavesError as err:
            _fail("opens" if kind == "space" else "relations", err)
        try:
            category = FinCategory(
                data["objects"],
                [(m["id"], m["src"], m["dst"]) for m in data["morphisms"]],
                data.get("compose", []),
                data.get("identities"),
            )
        except DGSheavesError as err:
            _fail("morphisms", err)
        points = None
        if "points" in data:
            try:
                loaded = PointSchema(many=True).load(data["points"])
            except ValidationError as err:
                raise ValidationError({"points": err.messages})
            points = [Point(p["id"], p["minimal"], p["germs"]) for p in loaded]
        try:
            return Site(category, data["covers"], points=points, name=name)
        except DGSheavesError as err:
            _fail("covers", err)


class PresheafDataSchema(Schema):
    """Presheaf of modules.

    * ``modules``: ``{object: module}`` and ``{morphism: matrix}``
      restrictions, with identities omitted;
    * ``constant``: one ``module``, sheafified when ``sheafify`` is set;
    * ``representable``: ``Λ(object)``.
    """

    kind = fields.String(load_default="modules", validate=validate.OneOf(PRESHEAF_KINDS))
    module = fields.Nested(ModuleSchema)
    sheafify = fields.Boolean(load_default=False)
    object = fields.String()
    modules = fields.Dict(keys=fields.String(), values=fields.Nested(ModuleSchema))
    restrictions = fields.Dict(keys=fields.String(), values=Matrix())


def build_presheaf(site, ring, data):
    """``ModPresheaf`` from loaded :class:`PresheafDataSchema` data."""
    kind = data.get("kind", "modules")
    cat = site.category
    if kind == "constant":
        if "module" not in data:
            raise ValidationError({"module": ["Missing data for required field."]})
        F = ModPresheaf.constant(site, build_module(ring, data["module"]))
        if data.get("sheafify"):
            F, _ = sheafify(F)
        return F
    if kind == "representable":
        if "object" not in data:
            raise ValidationError({"object": ["Missing data for required field."]})
        try:
            return ModPresheaf.representable(site, data["object"], ring)
        except DGSheavesError as err:
            _fail("object", err)
    modules = data.get("modules", {})
    for c in modules:
        if c not in cat.objects:
            raise ValidationError({"modules": {c: ["Unknown object."]}})
    values = {c: build_module(ring, m) for c, m in modules.items()}
    zero = FpModule.zero(ring)
    restrictions = {}
    for h, rows in data.get("restrictions", {}).items():
        try:
            d, c = cat.src(h), cat.dst(h)
            restrictions[h] = build_matrix(
                ring,
                rows,
                values.get(d, zero).generators,
                values.get(c, zero).generators,
            )
        except DGSheavesError as err:
            raise ValidationError({"restrictions": {h: [str(err)]}})
    try:
        return ModPresheaf(site, ring, values, restrictions)
    except DGSheavesError as err:
        _fail("restrictions", err)


class SiteBound(Schema):
    """Schema of a document living on a given site."""

    def __init__(self, *args, site=None, **kwargs):
        """Constructor.

        :param site: the :class:`Site` the document lives on.
        """
        super().__init__(*args, **kwargs)
        self.site = site


class PresheafSchema(SiteBound, PresheafDataSchema):
    """Presheaf document with its ring."""

    ring = RingTag(required=True)

    @post_load
    def make_presheaf(self, data, **kwargs):
        """Builds the :class:`ModPresheaf`."""
        return build_presheaf(self.site, data["ring"], data)


class ComplexSchema(SiteBound):
    """Complex of presheaves.

    ``levels`` maps degrees to presheaf documents and ``differentials`` maps
    a degree ``n`` to the components ``{object: matrix}`` of ``d_n``.
    """

    ring = RingTag(required=True)
    levels = fields.Dict(
        keys=fields.Integer(), values=fields.Nested(PresheafDataSchema), required=True
    )
    differentials = fields.Dict(
        keys=fields.Integer(),
        values=fields.Dict(keys=fields.String(), values=Matrix()),
        load_default=dict,
    )
    window = fields.List(fields.Integer(), validate=validate.Length(equal=2))

    @post_load
    def make_complex(self, data, **kwargs):
        """Builds the :class:`Complex`."""
        site, ring = self.site, data["ring"]
        levels = {}
        for n, level in data["levels"].items():
            try:
                levels[n] = build_presheaf(site, ring, level)
            except ValidationError as err:
                raise ValidationError({"levels": {n: err.messages}})
        zero = ModPresheaf.zero(site, ring)
        diffs = {}
        for n, comps in data["differentials"].items():
            src, tgt = levels.get(n, zero), levels.get(n - 1, zero)
            try:
                matrices = {}
                for c, rows in comps.items():
                    site.category.check_object(c)
                    matrices[c] = build_matrix(
                        ring, rows, tgt.values[c].generators, src.values[c].generators
                    )
                diffs[n] = PresheafMap(src, tgt, matrices)
            except DGSheavesError as err:
                raise ValidationError({"differentials": {n: [str(err)]}})
        window = tuple(data["window"]) if "window" in data else None
        try:
            return Complex(site, ring, levels, diffs, window=window)
        except DGSheavesError as err:
            _fail("differentials", err)


class StructureMapSchema(Schema):
    """Face or degeneracy ``(level, index)`` given per summand as ``[j, morphism]``."""

    level = fields.Integer(required=True, validate=validate.Range(min=0))
    index = fields.Integer(required=True, validate=validate.Range(min=0))
    maps = fields.List(
        fields.Tuple((fields.Integer(), fields.String())), required=True
    )


class HypercoverSchema(SiteBound):
    """Hypercover: the Čech nerve of a cover, or explicit levels and maps."""

    kind = fields.String(load_default="cech", validate=validate.OneOf(HYPERCOVER_KINDS))
    object = fields.String(required=True)
    N = fields.Integer(required=True, validate=validate.Range(min=0))
    cover = fields.List(fields.String())
    levels = fields.List(fields.List(fields.String()))
    faces = fields.List(fields.Nested(StructureMapSchema))
    degeneracies = fields.List(fields.Nested(StructureMapSchema), load_default=list)
    augmentation = fields.List(fields.String())

    @post_load
    def make_hypercover(self, data, **kwargs):
        """Builds the :class:`Hypercover`."""
        site, target, N = self.site, data["object"], data["N"]
        if target not in site.objects:
            raise ValidationError({"object": [f"Unknown object {target!r}."]})
        if data["kind"] == "cech":
            cover = data.get("cover", [])
            try:
                return cech_nerve(site, cover, N, target=target)
            except DGSheavesError as err:
                _fail("cover", err)
        missing = [k for k in ("levels", "faces", "augmentation") if k not in data]
        if missing:
            raise ValidationError({k: ["Missing data for required field."] for k in missing})
        faces = {(f["level"], f["index"]): f["maps"] for f in data["faces"]}
        degeneracies = {(s["level"], s["index"]): s["maps"] for s in data["degeneracies"]}
        try:
            return Hypercover(
                site, target, N, data["levels"], faces, degeneracies, data["augmentation"]
            )
        except DGSheavesError as err:
            _fail("levels", err)


class ModuleComplexSchema(Schema):
    """Complex of modules: ``levels`` by degree, ``differentials`` by degree."""

    levels = fields.Dict(keys=fields.Integer(), values=fields.Nested(ModuleSchema))
    differentials = fields.Dict(keys=fields.Integer(), values=Matrix(), load_default=dict)


def build_module_complex(ring, data):
    """``Complex`` on the terminal site from :class:`ModuleComplexSchema` data."""
    modules = {n: build_module(ring, m) for n, m in data.get("levels", {}).items()}
    zero = FpModule.zero(ring)
    diffs = {}
    for n, rows in data.get("differentials", {}).items():
        src, tgt = modules.get(n, zero), modules.get(n - 1, zero)
        diffs[n] = ModuleMap(src, tgt, build_matrix(ring, rows, tgt.generators, src.generators))
    return Complex.of_modules(ring, modules, diffs)


class KanSchema(SiteBound):
    """Covariant ``γ`` from the site's category to complexes of modules.

    ``values`` maps objects to complexes of modules; ``maps`` maps a
    morphism ``h: d -> c`` to the components ``{degree: matrix}`` of
    ``γ(h): γ(d) -> γ(c)``.
    """

    ring = RingTag(required=True)
    values = fields.Dict(
        keys=fields.String(), values=fields.Nested(ModuleComplexSchema), required=True
    )
    maps = fields.Dict(
        keys=fields.String(),
        values=fields.Dict(keys=fields.Integer(), values=Matrix()),
        load_default=dict,
    )

    @post_load
    def make_kan_data(self, data, **kwargs):
        """Builds the :class:`KanData`."""
        site, ring = self.site, data["ring"]
        cat = site.category
        values = {}
        for c in cat.objects:
            if c not in data["values"]:
                raise ValidationError({"values": {c: ["Missing value of an object."]}})
            try:
                values[c] = build_module_complex(ring, data["values"][c])
            except DGSheavesError as err:
                raise ValidationError({"values": {c: [str(err)]}})
        maps = {}
        for h, comps in data["maps"].items():
            try:
                source, target = values[cat.src(h)], values[cat.dst(h)]
                components = {}
                for n, rows in comps.items():
                    S, T = source.level(n), target.level(n)
                    matrix = build_matrix(
                        ring,
                        rows,
                        T.values["*"].generators,
                        S.values["*"].generators,
                    )
                    components[n] = module_map(
                        ModuleMap(S.values["*"], T.values["*"], matrix), S, T
                    )
                maps[h] = ComplexMorphism(source, target, components)
            except DGSheavesError as err:
                raise ValidationError({"maps": {h: [str(err)]}})
        try:
            return KanData(site, values, maps)
        except DGSheavesError as err:
            _fail("maps", err)


#
# Reports
#
class RingTagSchema(Schema):
    """Ring tag as emitted."""

    ring = fields.String(required=True, validate=validate.OneOf(("Z", "Q", "Fp")))
    p = fields.Integer()


class InvariantsSchema(Schema):
    """Invariants ``{free_rank, torsion}`` of a module."""

    free_rank = fields.Integer(required=True)
    torsion = fields.List(fields.String(), required=True)


class ModuleReportSchema(InvariantsSchema):
    """Module with its description."""

    module = fields.String(required=True)


class HomologyReportSchema(Schema):
    """``homology``: ``{degree: {object: module}}``."""

    command = fields.String(required=True)
    ring = fields.Nested(RingTagSchema, required=True)
    window = fields.List(fields.Integer(), required=True)
    homology = fields.Dict(
        keys=fields.String(),
        values=fields.Dict(keys=fields.String(), values=fields.Nested(ModuleReportSchema)),
        required=True,
    )


class HypercohomologyRowSchema(ModuleReportSchema):
    """One ``ℍ^n(c, K)`` value."""

    method = fields.String(required=True)
    object = fields.String(required=True)
    degree = fields.Integer(required=True)
    validity = fields.List(fields.Integer(allow_none=True), required=True)
    stabilized = fields.Boolean(allow_none=True)
    refinements = fields.Integer(allow_none=True)


class HypercohomologyReportSchema(Schema):
    """``table``: ``{method: {object: {degree: module}}}`` with the raw rows."""

    command = fields.String(required=True)
    ring = fields.Nested(RingTagSchema, required=True)
    table = fields.Dict(keys=fields.String(), values=fields.Dict(), required=True)
    rows = fields.List(fields.Nested(HypercohomologyRowSchema), required=True)
    agree = fields.Boolean(allow_none=True)


def module_report(module):
    """Report data of a module."""
    return {"module": module.describe(), **module.invariants_json()}


def homology_report(K, command="homology", window=None):
    """``HomologyReportSchema`` data of a complex.

    :param window: ``(lo, hi)`` restricting the reported degrees; either
        bound may be ``None``.
    """
    lo, hi = window or (None, None)
    lo = K.lo if lo is None else lo
    hi = K.hi if hi is None else hi
    homology = {}
    for n in range(lo, hi + 1):
        H = K.homology_data(n).presheaf
        homology[str(n)] = {c: module_report(H.values[c]) for c in K.site.objects}
    return HomologyReportSchema().load(
        {
            "command": command,
            "ring": K.ring.to_tag(),
            "window": [lo, hi],
            "homology": homology,
        }
    )


def hypercohomology_report(ring, reports):
    """``HypercohomologyReportSchema`` data of a list of hypercohomology reports.

    ``agree`` compares the methods on every ``(object, degree)`` computed by
    more than one of them, and is ``None`` when there is nothing to compare.
    """
    table, rows, values = {}, [], {}
    for report in reports:
        data = report.to_dict()
        invariants = data.pop("invariants")
        rows.append({**data, **invariants})
        by_object = table.setdefault(report.method, {}).setdefault(report.object, {})
        by_object[str(report.degree)] = report.module.describe()
        values.setdefault((report.object, report.degree), []).append(report.module)
    compared = [modules for modules in values.values() if len(modules) > 1]
    agree = None
    if compared:
        agree = all(m == modules[0] for modules in compared for m in modules)
    return HypercohomologyReportSchema().load(
        {
            "command": "hypercoh",
            "ring": ring.to_tag(),
            "table": table,
            "rows": rows,
            "agree": agree,
        }
    )


def load_module_complex(ring, data):
    """Loads and builds a complex of modules from a plain document."""
    loaded = ModuleComplexSchema().load(data)
    try:
        return build_module_complex(ring, loaded)
    except DGSheavesError as err:
        _fail("differentials", err)


__all__ = (
    "ComplexSchema",
    "HomologyReportSchema",
    "HypercohomologyReportSchema",
    "HypercoverSchema",
    "InvariantsSchema",
    "KanSchema",
    "ModuleSchema",
    "PresheafSchema",
    "SiteSchema",
    "homology_report",
    "hypercohomology_report",
    "load_module_complex",
    "module_report",
)
