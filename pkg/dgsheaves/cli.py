# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Commands to validate inputs and run computations.

Exit status is 0 on success, 1 when the computed verdict fails and 2 when
an input cannot be read or does not match its schema.
"""

import logging
import os

import click
import yaml

from . import config
from .complexes import (
    Complex,
    ComplexMorphism,
    is_local_equivalence,
    is_quasi_iso,
    sheafify_complex,
)
from .datastreams import DataStreamFactory, StreamEntry
from .datastreams.factories import WriterFactory
from .errors import DGSheavesError
from .ext import init_extension
from .fixtures import load_site
from .godement import METHODS, godement_resolution, hypercohomology
from .hypercover import cech_nerve, descent_check
from .proxies import current_config
from .resolve import certify_cofibration, cofibrant_replace, derived_kan_extend, kan_extend
from .schema import homology_report, hypercohomology_report
from .site import require_object, validate_site

logger = logging.getLogger(__name__)

FORMATS = ("json", "text")


class InputError(click.ClickException):
    """Input that cannot be read or loaded."""

    exit_code = 2


class Window(click.ParamType):
    """Degree range ``lo..hi``; either bound may be omitted."""

    name = "window"

    def convert(self, value, param, ctx):
        """Parses ``lo..hi`` into a pair of ints or ``None``."""
        if isinstance(value, tuple):
            return value
        lo, sep, hi = value.partition("..")
        try:
            if not sep:
                raise ValueError(value)
            return (int(lo) if lo else None, int(hi) if hi else None)
        except ValueError:
            self.fail(f"{value!r} is not a range lo..hi", param, ctx)


WINDOW = Window()


def _reader_type(path):
    return "json" if os.path.splitext(path)[1].lower() == ".json" else "yaml"


def _load(path, schema, **args):
    """Reads one document and loads it through a schema transformer."""
    ds = DataStreamFactory.create(
        readers_config=[{"type": _reader_type(path), "args": {"origin": path}}],
        transformers_config=[{"type": "schema", "args": {"schema": schema, **args}}],
        writers_config=[],
    )
    results = list(ds.process())
    if len(results) != 1:
        raise InputError(f"{path}: expected one {schema} document, found {len(results)}.")
    result = results[0]
    if result.errors:
        raise InputError(f"{path}: " + "; ".join(result.errors))
    logger.debug("Loaded %s from %s.", schema, path)
    return result.entry


def _ring_tag(ring, p):
    if ring is None:
        return None
    if ring == "Fp":
        if p is None:
            raise InputError("--ring Fp needs --p.")
        return {"ring": "Fp", "p": p}
    return ring


def emit(report, fmt="json", output=None):
    """Writes a report in the given format, to ``output`` or to stdout."""
    writer = WriterFactory.create({"type": fmt, "args": {"filepath": output}})
    entry = writer.write(StreamEntry(report))
    if entry.errors:
        raise InputError("; ".join(entry.errors))
    if output is None:
        click.echo(writer.getvalue(), nl=False)


def _finish(report, passed, fmt, output):
    emit(report, fmt, output)
    if not passed:
        click.get_current_context().exit(1)


class Job:
    """Inputs shared by the subcommands."""

    def __init__(self, site_path, fixture, complex_path, ring, p):
        """Constructor."""
        self.site_path = site_path
        self.fixture = fixture
        self.complex_path = complex_path
        self.ring = _ring_tag(ring, p)
        self._site = None

    @property
    def site(self):
        """The site, from a file or a bundled fixture."""
        if self._site is None:
            if self.site_path:
                self._site = _load(self.site_path, "site")
            elif self.fixture:
                try:
                    self._site = load_site(self.fixture)
                except KeyError:
                    raise InputError(f"Unknown fixture {self.fixture}.")
            else:
                raise InputError("One of --site or --fixture must be present.")
        return self._site

    def load(self, path, schema):
        """A site-bound document."""
        return _load(path, schema, site=self.site, ring=self.ring)

    def complex(self):
        """The complex given by ``--complex``."""
        if not self.complex_path:
            raise InputError("--complex must be present.")
        return self.load(self.complex_path, "complex")


def job_options(f):
    """Site, complex and ring options."""
    options = [
        click.option("-s", "--site", "site_path", type=click.Path(dir_okay=False)),
        click.option("--fixture", type=click.STRING, help="Bundled site by name."),
        click.option("-c", "--complex", "complex_path", type=click.Path(dir_okay=False)),
        click.option("--ring", type=click.Choice(("Z", "Q", "Fp"))),
        click.option("--p", type=click.INT, help="Characteristic of Fp."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def output_options(f):
    """Format and output options."""
    f = click.option("-o", "--output", type=click.Path(dir_okay=False))(f)
    f = click.option("--format", "fmt", type=click.Choice(FORMATS), default="json")(f)
    return f


def _overrides(path):
    """``DGSHEAVES_*`` values of a YAML file; suite parameters are merged."""
    try:
        with open(path) as f:
            data = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as err:
        raise InputError(f"Cannot read configuration {path}: {err}")
    if not isinstance(data, dict):
        raise InputError(f"{path}: configuration must be a mapping.")
    suites = data.get("DGSHEAVES_CHECK_SUITES")
    if suites:
        merged = {k: dict(v) for k, v in config.DGSHEAVES_CHECK_SUITES.items()}
        for name, params in suites.items():
            merged.setdefault(name, {}).update(params or {})
        data["DGSHEAVES_CHECK_SUITES"] = merged
    return data


@click.group()
@click.option("-v", "--verbose", is_flag=True, default=False)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
def dgsheaves(verbose, config_path=None):
    """DG-Sheaves command."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING)
    init_extension(_overrides(config_path) if config_path else None)


def _compute(func, *args, **kwargs):
    """Runs a library call, reporting its errors as input errors."""
    try:
        return func(*args, **kwargs)
    except DGSheavesError as err:
        raise InputError(str(err))


@dgsheaves.command(name="site-validate")
@click.option("-s", "--site", "site_path", type=click.Path(dir_okay=False))
@click.option("--fixture", type=click.STRING)
@output_options
def site_validate(site_path, fixture, fmt, output):
    """Check the category laws and coverage axioms of a site."""
    site = Job(site_path, fixture, None, None, None).site
    report = validate_site(site)
    data = {"command": "site-validate", "site": site.name, **report.to_dict()}
    _finish(data, report.valid, fmt, output)


@dgsheaves.command()
@job_options
@click.option("--window", type=WINDOW, help="Degrees lo..hi to report.")
@output_options
def homology(site_path, fixture, complex_path, ring, p, window, fmt, output):
    """Homology presheaves of a complex."""
    K = Job(site_path, fixture, complex_path, ring, p).complex()
    emit(_compute(homology_report, K, window=window), fmt, output)


@dgsheaves.command()
@job_options
@output_options
def sheafify(site_path, fixture, complex_path, ring, p, fmt, output):
    """Levelwise sheafification and its homology."""
    K = Job(site_path, fixture, complex_path, ring, p).complex()
    aK, unit = _compute(sheafify_complex, K)
    report = _compute(homology_report, aK, command="sheafify")
    verdict = is_local_equivalence(unit)
    report["local_equivalence"] = verdict.to_dict()
    _finish(report, verdict.holds, fmt, output)


@dgsheaves.command()
@job_options
@click.option("--hypercover", "hypercover_path", type=click.Path(dir_okay=False))
@click.option("--object", "obj", type=click.STRING, help="Target of the Čech nerve.")
@click.option("--levels", type=click.INT, help="Truncation level of the Čech nerve.")
@output_options
def descent(site_path, fixture, complex_path, ring, p, hypercover_path, obj, levels, fmt, output):
    """Descent of a complex along a hypercover."""
    job = Job(site_path, fixture, complex_path, ring, p)
    K = job.complex()
    if hypercover_path:
        X = job.load(hypercover_path, "hypercover")
    else:
        if obj is None:
            raise InputError("One of --hypercover or --object must be present.")
        N = levels or current_config["DGSHEAVES_DEFAULT_LEVELS"]
        site = job.site
        _compute(require_object, site, obj)
        X = _compute(cech_nerve, site, site.sieve_generators(obj), N, target=obj)
    report = _compute(descent_check, K, X)
    data = {"command": "descent", "object": X.target, "levels": X.N, **report.to_dict()}
    _finish(data, report.passed, fmt, output)


@dgsheaves.command()
@job_options
@click.option("--depth", type=click.INT, help="Resolution stages.")
@output_options
def cofrep(site_path, fixture, complex_path, ring, p, depth, fmt, output):
    """Cofibrant replacement by representables."""
    K = Job(site_path, fixture, complex_path, ring, p).complex()
    resolution = _compute(cofibrant_replace, K, depth)
    QK, augmentation, _ = resolution
    quasi_iso = is_quasi_iso(augmentation)
    certificate = certify_cofibration(ComplexMorphism.zero(Complex.zero(K.site, K.ring), QK))
    data = {
        "command": "cofrep",
        **resolution.to_dict(),
        "quasi_iso": quasi_iso.to_dict(),
        "certified": certificate.certified,
        "homology": _compute(homology_report, QK)["homology"],
    }
    _finish(data, quasi_iso.holds and certificate.certified, fmt, output)


@dgsheaves.command()
@job_options
@click.option("--levels", "q_max", type=click.INT, help="Cosimplicial height.")
@output_options
def godement(site_path, fixture, complex_path, ring, p, q_max, fmt, output):
    """Godement resolution of a complex."""
    K = Job(site_path, fixture, complex_path, ring, p).complex()
    q_max = q_max or current_config["DGSHEAVES_DEFAULT_QMAX"]
    resolution = _compute(godement_resolution, K, q_max)
    verdict = is_local_equivalence(resolution.unit)
    data = {
        "command": "godement",
        **resolution.to_dict(),
        "local_equivalence": verdict.to_dict(),
    }
    _finish(data, verdict.holds, fmt, output)


@dgsheaves.command()
@job_options
@click.option("--object", "obj", type=click.STRING, required=True)
@click.option("--range", "degrees", type=WINDOW, default="0..2", show_default=True)
@click.option(
    "--method",
    type=click.Choice(METHODS + ("both",)),
    default="both",
    show_default=True,
)
@output_options
def hypercoh(site_path, fixture, complex_path, ring, p, obj, degrees, method, fmt, output):
    """Hypercohomology of a complex on an object."""
    K = Job(site_path, fixture, complex_path, ring, p).complex()
    lo, hi = degrees
    if lo is None or hi is None:
        raise InputError("--range needs both bounds.")
    methods = METHODS if method == "both" else (method,)
    reports = [
        _compute(hypercohomology, obj, K, n, m) for m in methods for n in range(lo, hi + 1)
    ]
    data = hypercohomology_report(K.ring, reports)
    _finish(data, data["agree"] is not False, fmt, output)


@dgsheaves.command()
@job_options
@click.option("--kan", "kan_path", type=click.Path(dir_okay=False), required=True)
@click.option("--depth", type=click.INT, help="Derive through a cofibrant replacement.")
@output_options
def kan(site_path, fixture, complex_path, ring, p, kan_path, depth, fmt, output):
    """Left Kan extension of a complex along a functor to complexes."""
    job = Job(site_path, fixture, complex_path, ring, p)
    gamma = job.load(kan_path, "kan")
    K = job.complex()
    if depth is None:
        extended = _compute(kan_extend, gamma, K)
    else:
        extended = _compute(derived_kan_extend, gamma, K, depth)
    emit(_compute(homology_report, extended, command="kan"), fmt, output)


@dgsheaves.command()
@click.option("--suite", "suites", multiple=True, help="Suite to run, all by default.")
@click.option("--seed", type=click.INT, help="Seed replacing the configured ones.")
@output_options
def check(suites, seed, fmt, output):
    """Run the property suites."""
    ds = DataStreamFactory.create(
        readers_config=[{"type": "suite", "args": {"suites": list(suites), "seed": seed}}],
        transformers_config=[{"type": "suite"}],
        writers_config=[],
    )
    results, total = {}, ds.total()
    for done, result in enumerate(ds.process(), 1):
        if result.entry is None:
            raise InputError("; ".join(result.errors))
        entry = result.entry
        summary = results.setdefault(
            entry["suite"], {"cases": 0, "seed": entry["seed"], "failed": [], "errors": []}
        )
        summary["cases"] += 1
        if result.errors:
            summary["errors"].extend(result.errors)
            summary["failed"].append(entry["case"])
        elif not entry["passed"]:
            summary["failed"].append(entry["case"])
        logger.debug(
            "Suite %s case %s done, %s of %s.", entry["suite"], entry["case"], done, total
        )
    for summary in results.values():
        summary["passed"] = not summary["failed"]
    passed = all(s["passed"] for s in results.values())
    _finish({"command": "check", "passed": passed, "suites": results}, passed, fmt, output)
