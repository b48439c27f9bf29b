# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Property suites.

A suite case is a function ``(rng, params) -> detail`` where ``detail`` is
a JSON-ready mapping carrying at least ``passed``. Suites without random
input ignore ``rng`` and run their single case.
"""

import logging
from functools import lru_cache

from ..complexes import (
    Complex,
    ComplexMorphism,
    attach_cell,
    direct_sum,
    disk,
    generator_morphism,
    in_window,
    iprime_retract,
    is_local_equivalence,
    is_quasi_iso,
    rlp_solve,
    sequential_colimit_check,
    sheafify_complex,
)
from ..exactalg import ZZ, invariant_factors, prime_field
from ..fixtures import load_site, zcst
from ..godement import (
    CECH_COLIMIT,
    GODEMENT,
    descent_degrees,
    godement_resolution,
    hypercohomology,
    truncation_check,
)
from ..hypercover import cech_nerve, check_acyclicity, descent_check
from ..resolve import certify_cofibration, cofibrant_replace, kan_unit
from ..simplicial import (
    gamma,
    gamma_comparison,
    homotopy_groups,
    linearize,
    normalize,
    poset_nerve,
)
from .generators import (
    disk_map,
    inclusion_chain_functor,
    random_element,
    random_matrix,
    random_module_complex,
    random_presheaf_complex,
    scaled_chain_functor,
    simplex_map,
    sphere_map,
)
from .oracles import determinantal_invariants

logger = logging.getLogger(__name__)

F2 = prime_field(2)


@lru_cache(maxsize=None)
def _site(name):
    return load_site(name)


def snf(rng, params):
    """Invariant factors against determinantal divisors."""
    bound, max_dim = params.get("bound", 5), params.get("max_dim", 4)
    m = random_matrix(rng, ZZ, rng.randint(1, max_dim), rng.randint(1, max_dim), bound)
    rows = [list(r) for r in m.rows]
    computed = invariant_factors(m)
    expected = determinantal_invariants(rows)
    return {
        "passed": computed == expected,
        "matrix": m.to_json(),
        "factors": [str(d) for d in computed],
    }


def dold_kan(rng, params):
    """``N Γ C = C`` through the comparison and ``π_n Γ C = H_n C``."""
    N = params.get("levels", 4)
    C = random_module_complex(rng, ZZ, 0, N - 1)
    comparison, _ = gamma_comparison(C, N)
    identity = all(
        comparison.component(n).is_isomorphism() for n in comparison.source.degrees()
    )
    G = gamma(C, N)
    homotopy = {
        n: homotopy_groups(G, n).values["*"] == C.homology_data(n).presheaf.values["*"]
        for n in range(N)
    }
    return {
        "passed": identity and all(homotopy.values()),
        "normalized_identity": identity,
        "homotopy": {str(n): ok for n, ok in homotopy.items()},
    }


def _random_poset(rng, size):
    """Transitive closure of random relations ``p_i < p_j`` with ``i < j``."""
    elements = [f"p{i}" for i in range(size)]
    pairs = {
        (a, b)
        for i, a in enumerate(elements)
        for b in elements[i + 1 :]
        if rng.random() < 0.5
    }
    closed = False
    while not closed:
        extra = {(a, d) for a, b in pairs for c, d in pairs if b == c} - pairs
        pairs |= extra
        closed = not extra
    return elements, sorted(pairs)


def moore(rng, params):
    """The normalized complex is quasi-isomorphic to the Moore complex.

    Inputs are ``Γ`` of a random complex or a linearized poset nerve.
    """
    N = params.get("levels", 3)
    site = _site("arrow")
    source = rng.choice(params.get("inputs", ["gamma", "nerve"]))
    if source == "nerve":
        poset = _random_poset(rng, rng.randint(2, 3))
        X = linearize(poset_nerve(site, {c: poset for c in site.objects}, {}, N), ZZ)
    else:
        X = gamma(random_presheaf_complex(rng, site, ZZ, 0, 2, pieces=2), N)
    _, inclusion = normalize(X)
    verdict = is_quasi_iso(inclusion)
    return {"passed": verdict.holds, "input": source, "verdict": verdict.to_dict()}


def iprime(rng, params):
    """Retract data of ``S^n -> D^{n+1}`` in ``∂Δ^{n+1} -> Δ^{n+1}``."""
    results = []
    for name in params.get("sites", ["terminal"]):
        site = _site(name)
        for c in site.objects:
            for n in params.get("degrees", [0]):
                data = iprime_retract(n, c, site, ZZ).to_dict()
                data["site"] = name
                results.append(data)
    passed = all(r["rows_identity"] and r["squares_commute"] for r in results)
    return {"passed": passed, "retracts": results}


def cofrep(rng, params):
    """``QK -> K`` is surjective and ``H``-iso on its window and ``0 -> QK`` certifies."""
    site = _site("arrow")
    K = random_presheaf_complex(rng, site, F2, -1, 1, pieces=2)
    resolution = cofibrant_replace(K, params.get("depth"))
    QK, augmentation, validity = resolution
    degrees = [n for n in augmentation.degrees() if in_window(n, validity)]
    surjective = augmentation.is_degreewise_surjective(degrees)
    quasi_iso = is_quasi_iso(augmentation).holds
    representable = QK.is_semi_representable()
    certificate = certify_cofibration(ComplexMorphism.zero(Complex.zero(site, F2), QK))
    return {
        "passed": surjective and quasi_iso and representable and certificate.certified,
        "surjective": surjective,
        "quasi_iso": quasi_iso,
        "semi_representable": representable,
        "certified": certificate.certified,
        "resolution": resolution.to_dict(),
    }


def _lifting_squares(rng, site, K, injections, D, m):
    """I and I′ squares against ``K ⊕ D -> K`` with fillers through ``K``."""
    include, include_disk = injections
    squares = []
    for c in site.objects:
        for n in range(K.lo, K.hi + 2):
            i = generator_morphism("I", n, c, site, K.ring)
            x = random_element(rng, K.level(n).values[c])
            v = disk_map(i.target, K, n, c, x)
            u = include @ v @ i
            if n == m:
                y = random_element(rng, D.level(m - 1).values[c])
                u = u + include_disk @ sphere_map(i.source, D, n - 1, y)
            squares.append(("I", n, c, i, u, v))
            i = generator_morphism("I'", n, c, site, K.ring)
            x = random_element(rng, K.level(n).values[c])
            v = simplex_map(i.target, K, n, c, x)
            squares.append(("I'", n, c, i, include @ v @ i, v))
    return squares


def _fails_some_j_square(site, f):
    """Whether some ``0 -> D^n`` square against ``f`` has no filler."""
    Y = f.target
    zero = Complex.zero(site, Y.ring)
    for n in Y.degrees():
        for c in site.objects:
            module = Y.level(n).values[c]
            for k in range(module.generators):
                j = generator_morphism("J", n, c, site, Y.ring)
                v = disk_map(j.target, Y, n, c, module.basis_vector(k))
                if rlp_solve(j, f, ComplexMorphism.zero(zero, f.source), v) is None:
                    return True
    return False


def lifting(rng, params):
    """Trivial fibrations lift against I and I′; non-surjections fail a J square."""
    site = _site("arrow")
    K = random_presheaf_complex(rng, site, ZZ, 0, 1, pieces=2)
    e, m = rng.choice(site.objects), rng.randint(0, 2)
    D = generator_morphism("I", m, e, site, ZZ).target
    _, injections, projections = direct_sum([K, D])
    f = projections[0]
    failures = []
    for kind, n, c, i, u, v in _lifting_squares(rng, site, K, injections, D, m):
        if rlp_solve(i, f, u, v) is None:
            failures.append({"kind": kind, "degree": n, "object": c})
    S = generator_morphism("I", m + 1, e, site, ZZ).source
    _, inclusions, _ = direct_sum([K, S])
    j_fails = _fails_some_j_square(site, inclusions[0])
    return {"passed": not failures and j_fails, "failures": failures, "j_fails": j_fails}


def colimit(rng, params):
    """A quasi-isomorphism extended over a tower of cells stays one on the colimit."""
    site = _site("arrow")
    K = random_presheaf_complex(rng, site, ZZ, 0, 1, pieces=2)
    D = disk(site, rng.choice(site.objects), ZZ, rng.randint(1, 2))
    _, _, projections = direct_sum([K, D])
    stage, cells = projections[0].source, []
    for _ in range(params.get("stages", 3)):
        n = rng.randint(stage.lo + 1, stage.hi + 1)
        c = rng.choice(site.objects)
        Z, inclusion = stage.cycles(n - 1)
        x = inclusion.component(c).apply(random_element(rng, Z.values[c]))
        cells.append((n, c, x))
        stage, _ = attach_cell(stage, n, c, x)
    result = sequential_colimit_check(projections[0], cells)
    result["cells"] = [[n, c, [str(v) for v in x]] for n, c, x in cells]
    return result


def acyclicity(rng, params):
    """The pseudocircle Čech nerve is acyclic after sheafification."""
    site = _site("pseudocircle")
    X = cech_nerve(site, site.sieve_generators("X"), params.get("levels", 4), target="X")
    report = check_acyclicity(X, ZZ)
    return {"passed": report.passed, "report": report.to_dict()}


def descent(rng, params):
    """``S⁰ℤ`` fails descent at ``-1`` with obstruction ℤ; its ``god`` descends."""
    site = _site("pseudocircle")
    q_max = params.get("q_max", 3)
    X = cech_nerve(site, site.sieve_generators("X"), params.get("levels", 3), target="X")
    K = zcst(site)
    plain = descent_check(K, X)
    expected = [{"degree": -1, "source": {"free_rank": 0, "torsion": []},
                 "target": {"free_rank": 1, "torsion": []}}]
    godK, _, _ = godement_resolution(K, q_max)
    resolved = descent_check(godK, X, descent_degrees(godK, X))
    return {
        "passed": plain.obstructions == expected and resolved.passed,
        "plain": plain.to_dict(),
        "resolved": resolved.to_dict(),
    }


HYPERCOHOMOLOGY_RANKS = {0: 1, 1: 1}
"""Ranks of ``ℍ^n(X)`` of the constant sheaf on the pseudocircle."""


def hypercoh(rng, params):
    """``ℍ^n(X)`` of the constant sheaf by both methods, over ℤ and 𝔽₂."""
    site = _site("pseudocircle")
    rows, passed = [], True
    for ring in (ZZ, F2):
        K = zcst(site, ring)
        for n in params.get("degrees", [0, 1, 2]):
            expected = HYPERCOHOMOLOGY_RANKS.get(n, 0)
            for method in (GODEMENT, CECH_COLIMIT):
                report = hypercohomology("X", K, n, method)
                ok = report.module.invariants == (expected, ())
                passed = passed and ok
                rows.append({"ring": ring.to_tag(), "ok": ok, **report.to_dict()})
    return {"passed": passed, "rows": rows}


def local_equivalence(rng, params):
    """``K -> aK`` is a local equivalence."""
    K = random_presheaf_complex(rng, _site("pseudocircle"), ZZ, 0, 1, pieces=2)
    _, unit = sheafify_complex(K)
    verdict = is_local_equivalence(unit)
    return {"passed": verdict.holds, "verdict": verdict.to_dict()}


FUNCTORS = {"inclusion": inclusion_chain_functor, "scaled": scaled_chain_functor}
"""Random functors ``γ`` of the Kan suite."""


def kan(rng, params):
    """``γ*(S⁰Λ(c)) ≅ γ(c)`` through the unit."""
    site = _site(rng.choice(("arrow", "chain")))
    kind = rng.choice(params.get("functors", sorted(FUNCTORS)))
    gamma_ = FUNCTORS[kind](rng, site, ZZ)
    verdicts = {c: kan_unit(gamma_, c)[1] for c in site.objects}
    return {
        "passed": all(verdicts.values()),
        "site": site.name,
        "functor": kind,
        "units": verdicts,
    }


def _random_morphism(rng, site, pieces=2):
    K = random_presheaf_complex(rng, site, ZZ, 0, 1, pieces=pieces)
    kind = rng.choice(("unit", "projection", "inclusion"))
    if kind == "unit":
        _, f = sheafify_complex(K)
        return kind, f
    L = random_presheaf_complex(rng, site, ZZ, 0, 1, pieces=1)
    _, injections, projections = direct_sum([K, L])
    return kind, projections[0] if kind == "projection" else injections[0]


def truncation(rng, params):
    """Direct and truncated local-equivalence verdicts agree."""
    kind, f = _random_morphism(rng, _site("pseudocircle"), params.get("pieces", 1))
    result = truncation_check(f)
    return {"passed": result["agree"], "morphism": kind, **result}


SUITES = {
    "snf": snf,
    "dold-kan": dold_kan,
    "moore": moore,
    "iprime": iprime,
    "cofrep": cofrep,
    "lifting": lifting,
    "colimit": colimit,
    "acyclicity": acyclicity,
    "descent": descent,
    "hypercoh": hypercoh,
    "local-equivalence": local_equivalence,
    "kan": kan,
    "truncation": truncation,
}
"""Suite name to case function."""
