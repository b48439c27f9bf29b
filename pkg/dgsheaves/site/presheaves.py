# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Set- and module-valued presheaves on a finite site."""

from ..errors import DimensionError, NonFunctorialError, NotNaturalError, RingMismatchError
from ..exactalg import ExactMatrix, FpModule, ModuleMap


class ModPresheaf:
    """Presheaf of finitely presented modules.

    ``restrictions`` maps a morphism ``h: d -> c`` to a :class:`ModuleMap`
    ``F(c) -> F(d)``; identities may be omitted. ``summands`` is an optional
    list of objects certifying ``F = ⊕ Λ(c_i)`` on the nose.
    """

    def __init__(self, site, ring, values, restrictions=None, summands=None, check=True):
        """Constructor.

        :raises NonFunctorialError: if ``check`` and the data is not a functor.
        """
        self.site = site
        self.ring = ring
        cat = site.category
        self.values = {c: values.get(c) or FpModule.zero(ring) for c in cat.objects}
        for c, m in self.values.items():
            if m.ring != ring:
                raise RingMismatchError(ring, m.ring)
        self.restrictions = {}
        restrictions = restrictions or {}
        for h in cat.morphisms:
            d, c = cat.src(h), cat.dst(h)
            if h in restrictions:
                r = restrictions[h]
                if not isinstance(r, ModuleMap):
                    r = ModuleMap(self.values[c], self.values[d], r, check=False)
            elif cat.is_identity(h):
                r = ModuleMap.identity(self.values[c])
            elif self.values[c].generators == 0 or self.values[d].generators == 0:
                r = ModuleMap.zero(self.values[c], self.values[d])
            else:
                raise NonFunctorialError(f"Missing restriction along {h}.")
            self.restrictions[h] = r
        self.summands = list(summands) if summands is not None else None
        if check:
            problems = self.functoriality_problems()
            if problems:
                raise NonFunctorialError("; ".join(problems))

    def functoriality_problems(self):
        """Violations of well-definedness and functoriality."""
        cat = self.site.category
        problems = []
        for h, r in sorted(self.restrictions.items()):
            d, c = cat.src(h), cat.dst(h)
            if r.matrix.shape != (self.values[d].generators, self.values[c].generators):
                problems.append(f"restriction along {h} has shape {r.matrix.shape}")
                continue
            for col in (r.matrix @ self.values[c].relations).columns():
                if not self.values[d].is_zero_element(col):
                    problems.append(f"restriction along {h} is not well defined")
                    break
        if problems:
            return problems
        for h in cat.morphisms:
            if cat.is_identity(h) and not self.restrictions[h].equals(
                ModuleMap.identity(self.values[cat.src(h)])
            ):
                problems.append(f"identity {h} does not act as the identity")
        for g in cat.morphisms:
            for f in cat.morphisms:
                if cat.src(g) != cat.dst(f):
                    continue
                # F(g ∘ f) = F(f) ∘ F(g)
                lhs = self.restrictions[cat.compose(g, f)]
                rhs = self.restrictions[f] @ self.restrictions[g]
                if not lhs.equals(rhs):
                    problems.append(f"restriction along {g} ∘ {f} is not the composite")
        return problems

    @classmethod
    def zero(cls, site, ring):
        """The zero presheaf."""
        return cls(site, ring, {}, summands=[], check=False)

    @classmethod
    def constant(cls, site, module):
        """Constant presheaf with identity restrictions."""
        cat = site.category
        values = {c: module for c in cat.objects}
        restrictions = {h: ModuleMap.identity(module) for h in cat.morphisms}
        return cls(site, module.ring, values, restrictions, check=False)

    @classmethod
    def representable(cls, site, c, ring):
        """``Λ(c)``: free on ``Hom(d, c)`` at ``d``, restriction by precomposition."""
        return cls.semi_representable(site, [c], ring)

    @classmethod
    def semi_representable(cls, site, objects, ring):
        """``⊕ Λ(c_i)`` with generator ``(i, h)`` ordered by ``i`` then ``h``."""
        cat = site.category
        objects = [cat.check_object(c) for c in objects]
        basis = {d: _yoneda_basis(cat, objects, d) for d in cat.objects}
        values = {d: FpModule.free(ring, len(basis[d])) for d in cat.objects}
        restrictions = {}
        for g in cat.morphisms:
            d2, d = cat.src(g), cat.dst(g)
            index = {b: k for k, b in enumerate(basis[d2])}
            rows = [[0] * len(basis[d]) for _ in basis[d2]]
            for j, (i, h) in enumerate(basis[d]):
                rows[index[(i, cat.compose(h, g))]][j] = 1
            restrictions[g] = ModuleMap(
                values[d],
                values[d2],
                ExactMatrix.from_rows(ring, rows, len(basis[d])),
                check=False,
            )
        return cls(site, ring, values, restrictions, summands=objects, check=False)

    @classmethod
    def direct_sum(cls, site, ring, presheaves):
        """Objectwise direct sum; summand certificates concatenate."""
        presheaves = list(presheaves)
        cat = site.category
        values = {
            c: FpModule.direct_sum(ring, [F.values[c] for F in presheaves])
            for c in cat.objects
        }
        restrictions = {
            h: ModuleMap(
                values[cat.dst(h)],
                values[cat.src(h)],
                ExactMatrix.block_diagonal(
                    ring, [F.restrictions[h].matrix for F in presheaves]
                ),
                check=False,
            )
            for h in cat.morphisms
        }
        summands = None
        if all(F.summands is not None for F in presheaves):
            summands = [c for F in presheaves for c in F.summands]
        return cls(site, ring, values, restrictions, summands=summands, check=False)

    def value(self, c):
        """``F(c)``."""
        self.site.category.check_object(c)
        return self.values[c]

    def restriction(self, h):
        """``F(h): F(c) -> F(d)`` for ``h: d -> c``."""
        self.site.category.morphism(h)
        return self.restrictions[h]

    def is_zero(self):
        """Whether every value vanishes."""
        return all(m.is_zero() for m in self.values.values())

    def is_semi_representable(self):
        """Whether a representable decomposition is certified."""
        return self.summands is not None

    def yoneda_basis(self, c):
        """Generator labels ``(summand, morphism)`` at ``c``, for certified presheaves."""
        return _yoneda_basis(self.site.category, self.summands, c)

    def generator_of(self, k):
        """Generator vector of summand ``k`` at its own object."""
        c = self.summands[k]
        basis = self.yoneda_basis(c)
        v = [self.ring.zero] * len(basis)
        v[basis.index((k, self.site.category.identity(c)))] = self.ring.one
        return v

    def invariants(self):
        """``{object: invariants}``."""
        return {c: self.values[c].invariants_json() for c in self.site.objects}

    def describe(self):
        """``{object: "Z^2 + Z/2"}``."""
        return {c: self.values[c].describe() for c in self.site.objects}

    def to_dict(self):
        """Presentation data."""
        return {
            "modules": {c: m.to_json() for c, m in self.values.items()},
            "restrictions": {
                h: r.matrix.to_json()
                for h, r in sorted(self.restrictions.items())
                if not self.site.category.is_identity(h)
            },
        }

    def __repr__(self):
        """Representation."""
        body = ", ".join(f"{c}: {d}" for c, d in self.describe().items())
        return f"ModPresheaf<{body}>"


def _yoneda_basis(cat, objects, d):
    return [(i, h) for i, c in enumerate(objects) for h in cat.hom(d, c)]


class PresheafMap:
    """Natural transformation of module presheaves."""

    def __init__(self, source, target, components, check=True):
        """Constructor.

        :param components: ``{object: ModuleMap}``; missing components are zero.
        :raises NotNaturalError: if ``check`` and a naturality square fails.
        """
        self.source = source
        self.target = target
        self.components = {}
        for c in source.site.objects:
            comp = components.get(c)
            if comp is None:
                comp = ModuleMap.zero(source.values[c], target.values[c])
            elif not isinstance(comp, ModuleMap):
                comp = ModuleMap(source.values[c], target.values[c], comp, check=check)
            if comp.matrix.shape != (
                target.values[c].generators,
                source.values[c].generators,
            ):
                raise DimensionError(f"Component at {c} has shape {comp.matrix.shape}.")
            self.components[c] = comp
        if check:
            bad = self.naturality_problems()
            if bad:
                raise NotNaturalError("; ".join(bad))

    @property
    def site(self):
        """Underlying site."""
        return self.source.site

    @property
    def ring(self):
        """Coefficient ring."""
        return self.source.ring

    def naturality_problems(self):
        """Morphisms whose naturality square fails."""
        cat = self.site.category
        bad = []
        for h in sorted(cat.morphisms):
            if cat.is_identity(h):
                continue
            d, c = cat.src(h), cat.dst(h)
            lhs = self.target.restrictions[h] @ self.components[c]
            rhs = self.components[d] @ self.source.restrictions[h]
            if not lhs.equals(rhs):
                bad.append(f"naturality fails along {h}")
        return bad

    @classmethod
    def identity(cls, presheaf):
        """Identity map."""
        return cls(
            presheaf,
            presheaf,
            {c: ModuleMap.identity(m) for c, m in presheaf.values.items()},
            check=False,
        )

    @classmethod
    def zero(cls, source, target):
        """Zero map."""
        return cls(source, target, {}, check=False)

    @classmethod
    def block(cls, sources, targets, entries, site, ring):
        """Map of direct sums from ``{(i, j): PresheafMap}`` (summand ``j`` to ``i``)."""
        src = ModPresheaf.direct_sum(site, ring, sources)
        tgt = ModPresheaf.direct_sum(site, ring, targets)
        components = {}
        for c in site.objects:
            matrix = ExactMatrix.blocks(
                ring,
                [t.values[c].generators for t in targets],
                [s.values[c].generators for s in sources],
                {k: m.components[c].matrix for k, m in entries.items()},
            )
            components[c] = ModuleMap(src.values[c], tgt.values[c], matrix, check=False)
        return cls(src, tgt, components, check=False)

    def component(self, c):
        """Component at ``c``."""
        self.site.category.check_object(c)
        return self.components[c]

    def compose(self, other):
        """``self ∘ other``."""
        return PresheafMap(
            other.source,
            self.target,
            {c: self.components[c] @ other.components[c] for c in self.site.objects},
            check=False,
        )

    __matmul__ = compose

    def _pointwise(self, other, op):
        return PresheafMap(
            self.source,
            self.target,
            {c: op(self.components[c], other.components[c]) for c in self.site.objects},
            check=False,
        )

    def __add__(self, other):
        """Sum."""
        return self._pointwise(other, lambda a, b: a + b)

    def __sub__(self, other):
        """Difference."""
        return self._pointwise(other, lambda a, b: a - b)

    def __neg__(self):
        """Negation."""
        return PresheafMap(
            self.source,
            self.target,
            {c: -m for c, m in self.components.items()},
            check=False,
        )

    def scale(self, factor):
        """Scalar multiple."""
        return PresheafMap(
            self.source,
            self.target,
            {c: m.scale(factor) for c, m in self.components.items()},
            check=False,
        )

    def is_zero(self):
        """Whether every component vanishes."""
        return all(m.is_zero() for m in self.components.values())

    def equals(self, other):
        """Equality of natural transformations."""
        return (self - other).is_zero()

    def kernel(self):
        """Objectwise kernel ``(presheaf, inclusion)``."""
        cat = self.site.category
        parts = {c: m.kernel() for c, m in self.components.items()}
        values = {c: k for c, (k, _) in parts.items()}
        incl = {c: i for c, (_, i) in parts.items()}
        restrictions = {}
        for h in cat.morphisms:
            d, c = cat.src(h), cat.dst(h)
            restrictions[h] = (self.source.restrictions[h] @ incl[c]).lift(incl[d])
        K = ModPresheaf(self.site, self.ring, values, restrictions, check=False)
        return K, PresheafMap(K, self.source, incl, check=False)

    def cokernel(self):
        """Objectwise cokernel ``(presheaf, projection)``."""
        cat = self.site.category
        parts = {c: m.cokernel() for c, m in self.components.items()}
        values = {c: q for c, (q, _) in parts.items()}
        restrictions = {
            h: ModuleMap(
                values[cat.dst(h)],
                values[cat.src(h)],
                self.target.restrictions[h].matrix,
                check=False,
            )
            for h in cat.morphisms
        }
        Q = ModPresheaf(self.site, self.ring, values, restrictions, check=False)
        proj = {c: p for c, (_, p) in parts.items()}
        return Q, PresheafMap(self.target, Q, proj, check=False)

    def image(self):
        """Image as ``(presheaf, inclusion into target)``."""
        Q, proj = self.cokernel()
        return proj.kernel()

    def lift(self, inclusion):
        """Objectwise factorisation through ``inclusion``.

        :raises FactorizationError: if some component does not factor.
        """
        return PresheafMap(
            self.source,
            inclusion.source,
            {c: self.components[c].lift(inclusion.components[c]) for c in self.site.objects},
            check=False,
        )

    def with_ends(self, source, target):
        """The same matrices viewed between other presentations with equal generators."""
        return PresheafMap(
            source,
            target,
            {
                c: ModuleMap(source.values[c], target.values[c], m.matrix, check=False)
                for c, m in self.components.items()
            },
            check=False,
        )

    def failing_objects(self, test):
        """Objects whose component fails ``test``."""
        return [c for c in self.site.objects if not test(self.components[c])]

    def is_injective(self):
        """Objectwise injectivity."""
        return not self.failing_objects(ModuleMap.is_injective)

    def is_surjective(self):
        """Objectwise surjectivity."""
        return not self.failing_objects(ModuleMap.is_surjective)

    def is_isomorphism(self):
        """Objectwise bijectivity."""
        return not self.failing_objects(ModuleMap.is_isomorphism)

    def __repr__(self):
        """Representation."""
        return f"PresheafMap<{self.source!r} -> {self.target!r}>"


def yoneda_map(objects, elements, target):
    """Map ``⊕ Λ(c_i) -> F`` sending the generator of summand ``i`` to ``x_i ∈ F(c_i)``."""
    site, ring = target.site, target.ring
    cat = site.category
    source = ModPresheaf.semi_representable(site, objects, ring)
    components = {}
    for d in cat.objects:
        cols = []
        for i, h in source.yoneda_basis(d):
            cols.append(target.restrictions[h].apply(elements[i]))
        matrix = ExactMatrix.from_columns(ring, cols, target.values[d].generators)
        components[d] = ModuleMap(source.values[d], target.values[d], matrix, check=False)
    return PresheafMap(source, target, components, check=False)


def yoneda_extension(source, elements, target):
    """Map out of a certified semi-representable ``source`` given by ``x_i ∈ F(c_i)``."""
    phi = yoneda_map(source.summands, elements, target)
    return phi.with_ends(source, target)


class SetPresheaf:
    """Presheaf of finite sets.

    Elements are hashable labels; ``restrictions[h]`` maps ``F(c)`` into
    ``F(d)`` for ``h: d -> c`` as a dict. Identities may be omitted.
    """

    def __init__(self, site, values, restrictions=None, check=True):
        """Constructor."""
        self.site = site
        cat = site.category
        self.values = {c: list(values.get(c, [])) for c in cat.objects}
        restrictions = restrictions or {}
        self.restrictions = {}
        for h in cat.morphisms:
            if h in restrictions:
                self.restrictions[h] = dict(restrictions[h])
            elif cat.is_identity(h):
                self.restrictions[h] = {x: x for x in self.values[cat.src(h)]}
            elif not self.values[cat.dst(h)]:
                self.restrictions[h] = {}
            else:
                raise NonFunctorialError(f"Missing restriction along {h}.")
        if check:
            problems = self.functoriality_problems()
            if problems:
                raise NonFunctorialError("; ".join(problems))

    def functoriality_problems(self):
        """Violations of functoriality."""
        cat = self.site.category
        problems = []
        for h, r in self.restrictions.items():
            d, c = cat.src(h), cat.dst(h)
            targets = set(self.values[d])
            if set(r) != set(self.values[c]) or not set(r.values()) <= targets:
                problems.append(f"restriction along {h} is not a map {c} -> {d}")
        if problems:
            return problems
        for g in cat.morphisms:
            for f in cat.morphisms:
                if cat.src(g) != cat.dst(f):
                    continue
                gf = self.restrictions[cat.compose(g, f)]
                rg, rf = self.restrictions[g], self.restrictions[f]
                if any(gf[x] != rf[rg[x]] for x in gf):
                    problems.append(f"restriction along {g} ∘ {f} is not the composite")
        return problems

    @classmethod
    def representables(cls, site, objects):
        """``⊔ y(c_i)`` with elements ``(i, h)``."""
        cat = site.category
        values = {d: _yoneda_basis(cat, objects, d) for d in cat.objects}
        restrictions = {
            g: {(i, h): (i, cat.compose(h, g)) for (i, h) in values[cat.dst(g)]}
            for g in cat.morphisms
        }
        return cls(site, values, restrictions, check=False)

    @classmethod
    def empty(cls, site):
        """Empty presheaf."""
        return cls(site, {}, check=False)

    def value(self, c):
        """``F(c)``."""
        self.site.category.check_object(c)
        return self.values[c]

    def restrict(self, h, x):
        """``F(h)(x)``."""
        return self.restrictions[h][x]

    def __repr__(self):
        """Representation."""
        sizes = ", ".join(f"{c}: {len(v)}" for c, v in self.values.items())
        return f"SetPresheaf<{sizes}>"


class SetPresheafMap:
    """Natural map of set presheaves given by dict components."""

    def __init__(self, source, target, components, check=True):
        """Constructor."""
        self.source = source
        self.target = target
        self.components = {
            c: dict(components.get(c, {})) for c in source.site.objects
        }
        if check:
            cat = source.site.category
            for h in cat.morphisms:
                d, c = cat.src(h), cat.dst(h)
                for x in source.values[c]:
                    lhs = target.restrictions[h][self.components[c][x]]
                    rhs = self.components[d][source.restrictions[h][x]]
                    if lhs != rhs:
                        raise NotNaturalError(f"naturality fails along {h} at {x!r}")

    @classmethod
    def identity(cls, presheaf):
        """Identity map."""
        return cls(
            presheaf,
            presheaf,
            {c: {x: x for x in v} for c, v in presheaf.values.items()},
            check=False,
        )

    def image(self, c):
        """Image at ``c``."""
        return set(self.components[c].values())

    def apply(self, c, x):
        """Component at ``c`` applied to ``x``."""
        return self.components[c][x]


def is_generalized_cover(f):
    """Whether ``f`` is locally surjective.

    For every section ``s`` of the target over ``c`` the sieve of
    morphisms ``h`` with ``s|h`` in the image must cover ``c``.
    """
    site = f.target.site
    cat = site.category
    images = {c: f.image(c) for c in cat.objects}
    for c in cat.objects:
        for s in f.target.values[c]:
            sieve = [
                h for h in cat.into(c) if f.target.restrict(h, s) in images[cat.src(h)]
            ]
            if not site.is_covering_sieve(c, sieve):
                return False
    return True


def linearize_presheaf(presheaf, ring):
    """Free module presheaf on a set presheaf; generators follow the value order."""
    site = presheaf.site
    cat = site.category
    values = {c: FpModule.free(ring, len(v)) for c, v in presheaf.values.items()}
    restrictions = {}
    for h in cat.morphisms:
        d, c = cat.src(h), cat.dst(h)
        restrictions[h] = ModuleMap(
            values[c], values[d], _function_matrix(ring, presheaf.restrictions[h],
                                                   presheaf.values[c], presheaf.values[d]),
            check=False,
        )
    return ModPresheaf(site, ring, values, restrictions, check=False)


def linearize_map(f, source, target):
    """Linear extension of a set presheaf map between linearized presheaves."""
    ring = source.ring
    components = {
        c: ModuleMap(
            source.values[c],
            target.values[c],
            _function_matrix(ring, f.components[c], f.source.values[c], f.target.values[c]),
            check=False,
        )
        for c in source.site.objects
    }
    return PresheafMap(source, target, components, check=False)


def _function_matrix(ring, mapping, domain, codomain):
    index = {y: i for i, y in enumerate(codomain)}
    rows = [[0] * len(domain) for _ in codomain]
    for j, x in enumerate(domain):
        rows[index[mapping[x]]][j] = 1
    return ExactMatrix.from_rows(ring, rows, len(domain))
