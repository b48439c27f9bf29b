# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Finitely presented modules and maps between presentations."""

import itertools
from functools import cached_property

from ..errors import (
    CompositionNonzeroError,
    DimensionError,
    FactorizationError,
    IllDefinedMapError,
    InfiniteModuleError,
    RingMismatchError,
)
from .matrices import ExactMatrix
from .smith import diagonalize, echelon_basis, kernel_basis, solve


class FpModule:
    """Finitely presented module ``ring^generators / relations``.

    The relation matrix has one column per relator. Two modules compare equal
    iff their invariants (free rank, torsion coefficients) coincide.
    """

    def __init__(self, ring, generators, relations=None):
        """Constructor."""
        if relations is None:
            relations = ExactMatrix.zero(ring, generators, 0)
        if relations.nrows != generators:
            raise DimensionError(
                f"Relation matrix has {relations.nrows} rows for {generators} generators."
            )
        if relations.ring != ring:
            raise RingMismatchError(ring, relations.ring)
        self.ring = ring
        self.generators = generators
        self.relations = relations

    @classmethod
    def free(cls, ring, rank):
        """Free module of the given rank."""
        return cls(ring, rank)

    @classmethod
    def zero(cls, ring):
        """The zero module."""
        return cls(ring, 0)

    @classmethod
    def cyclic(cls, ring, order):
        """``ring / order``."""
        return cls(ring, 1, ExactMatrix.from_rows(ring, [[order]]))

    @classmethod
    def direct_sum(cls, ring, modules):
        """Direct sum with block diagonal relations."""
        modules = list(modules)
        return cls(
            ring,
            sum(m.generators for m in modules),
            ExactMatrix.block_diagonal(ring, [m.relations for m in modules]),
        )

    @cached_property
    def smith(self):
        """Smith form of the relation matrix."""
        return diagonalize(self.relations)

    @cached_property
    def invariants(self):
        """``(free rank, torsion coefficients)``."""
        ring = self.ring
        torsion = tuple(d for d in self.smith.diagonal if not ring.is_unit(d))
        return self.generators - self.smith.rank, torsion

    @property
    def free_rank(self):
        """Rank of the free part."""
        return self.invariants[0]

    @property
    def torsion(self):
        """Torsion coefficients, each dividing the next."""
        return self.invariants[1]

    def is_zero(self):
        """Whether the module vanishes."""
        return self.invariants == (0, ())

    def is_finite(self):
        """Whether the module has finitely many elements."""
        if self.free_rank == 0:
            return True
        return self.ring.kind == "Fp"

    def cardinality(self):
        """Number of elements, ``None`` if infinite."""
        if not self.is_finite():
            return None
        size = self.ring.p ** self.free_rank if self.free_rank else 1
        for d in self.torsion:
            size *= d if self.ring.kind == "Z" else 1
        return size

    def canonical(self, vector):
        """Canonical form of the class of ``vector`` modulo the relations."""
        ring = self.ring
        S = self.smith
        w = S.U.apply(vector)
        out = []
        for i, x in enumerate(w):
            if i < S.rank:
                d = S.diagonal[i]
                x = ring.zero if ring.is_unit(d) else x % d
            out.append(x)
        return tuple(out)

    def is_zero_element(self, vector):
        """Whether ``vector`` lies in the relation lattice."""
        return not any(self.canonical(vector))

    def equal_elements(self, v, w):
        """Whether two generator vectors define the same element."""
        ring = self.ring
        return self.is_zero_element([ring.reduce(a - b) for a, b in zip(v, w)])

    def elements(self):
        """Generator vectors of all elements, zero first.

        :raises InfiniteModuleError: if the module is infinite.
        """
        if not self.is_finite():
            raise InfiniteModuleError(f"{self} has infinitely many elements.")
        ring = self.ring
        S = self.smith
        ranges = []
        for i in range(self.generators):
            if i < S.rank:
                d = S.diagonal[i]
                ranges.append([0] if ring.is_unit(d) else range(d))
            else:
                ranges.append(range(ring.p))
        for coords in itertools.product(*ranges):
            yield S.U_inv.apply(list(coords))

    def basis_vector(self, i):
        """The ``i``-th generator."""
        v = [self.ring.zero] * self.generators
        v[i] = self.ring.one
        return v

    def tensor(self, other):
        """Tensor product, generator ``(i, j) -> i * other.generators + j``."""
        ring = self.ring
        g1, g2 = self.generators, other.generators
        rel = ExactMatrix.hstack(
            ring,
            g1 * g2,
            [
                self.relations.kron(ExactMatrix.identity(ring, g2)),
                ExactMatrix.identity(ring, g1).kron(other.relations),
            ],
        )
        return FpModule(ring, g1 * g2, rel)

    def describe(self):
        """Human readable invariants, e.g. ``Z^2 + Z/2``."""
        rank, torsion = self.invariants
        name = str(self.ring)
        parts = []
        if rank == 1:
            parts.append(name)
        elif rank > 1:
            parts.append(f"{name}^{rank}")
        parts.extend(f"{name}/{self.ring.format(d)}" for d in torsion)
        return " + ".join(parts) if parts else "0"

    def invariants_json(self):
        """Invariants as JSON."""
        rank, torsion = self.invariants
        return {
            "free_rank": rank,
            "torsion": [self.ring.format(d) for d in torsion],
        }

    def to_json(self):
        """Presentation as JSON."""
        return {
            "generators": self.generators,
            "relations": self.relations.to_json(),
        }

    def __eq__(self, other):
        """Equality of invariants."""
        if not isinstance(other, FpModule):
            return NotImplemented
        return self.ring == other.ring and self.invariants == other.invariants

    def __hash__(self):
        """Hash of the invariants."""
        return hash((self.ring, self.invariants))

    def __repr__(self):
        """Representation."""
        return f"FpModule<{self.describe()}; {self.generators} gens>"


class ModuleMap:
    """Map of presentations given by a matrix on generators."""

    def __init__(self, source, target, matrix, check=True):
        """Constructor.

        :param matrix: ``target.generators x source.generators``.
        :raises IllDefinedMapError: if source relations are not carried into
            the target relation lattice.
        """
        if source.ring != target.ring:
            raise RingMismatchError(source.ring, target.ring)
        if matrix.shape != (target.generators, source.generators):
            raise DimensionError(
                f"Map matrix is {matrix.shape}, expected "
                f"{(target.generators, source.generators)}."
            )
        self.source = source
        self.target = target
        self.matrix = matrix
        if check and source.relations.ncols:
            images = matrix @ source.relations
            for col in images.columns():
                if not target.is_zero_element(col):
                    raise IllDefinedMapError(
                        "Matrix does not carry source relations into target relations."
                    )

    @property
    def ring(self):
        """Coefficient ring."""
        return self.source.ring

    @classmethod
    def zero(cls, source, target):
        """Zero map."""
        return cls(
            source,
            target,
            ExactMatrix.zero(source.ring, target.generators, source.generators),
            check=False,
        )

    @classmethod
    def identity(cls, module):
        """Identity map."""
        return cls(
            module,
            module,
            ExactMatrix.identity(module.ring, module.generators),
            check=False,
        )

    @classmethod
    def block(cls, sources, targets, entries):
        """Map between direct sums from a ``{(i, j): map}`` mapping.

        Entry ``(i, j)`` maps summand ``j`` of the source into summand ``i``
        of the target.
        """
        ring = (sources or targets)[0].ring
        matrix = ExactMatrix.blocks(
            ring,
            [t.generators for t in targets],
            [s.generators for s in sources],
            {k: m.matrix for k, m in entries.items()},
        )
        return cls(
            FpModule.direct_sum(ring, sources),
            FpModule.direct_sum(ring, targets),
            matrix,
            check=False,
        )

    def apply(self, vector):
        """Image of a generator vector."""
        return self.matrix.apply(vector)

    def compose(self, other):
        """``self ∘ other``."""
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix, check=False)

    __matmul__ = compose

    def __add__(self, other):
        """Sum of parallel maps."""
        return ModuleMap(self.source, self.target, self.matrix + other.matrix, check=False)

    def __sub__(self, other):
        """Difference of parallel maps."""
        return ModuleMap(self.source, self.target, self.matrix - other.matrix, check=False)

    def __neg__(self):
        """Negated map."""
        return ModuleMap(self.source, self.target, -self.matrix, check=False)

    def scale(self, factor):
        """Scalar multiple."""
        return ModuleMap(self.source, self.target, self.matrix.scale(factor), check=False)

    def is_zero(self):
        """Whether every generator maps to zero."""
        return all(self.target.is_zero_element(c) for c in self.matrix.columns())

    def equals(self, other):
        """Equality as maps of modules (modulo target relations)."""
        return (self - other).is_zero()

    def kernel(self):
        """Kernel as ``(module, inclusion)``.

        The generators are a canonical basis of the preimage lattice of the
        target relations; the source relations are rewritten in that basis.
        """
        ring = self.ring
        src, tgt = self.source, self.target
        stacked = ExactMatrix.hstack(ring, tgt.generators, [self.matrix, tgt.relations])
        K = kernel_basis(stacked)
        P = echelon_basis(K.submatrix(rows=range(src.generators)))
        X = solve(P, src.relations)
        if X is None:  # pragma: no cover - relations always lie in the preimage
            raise IllDefinedMapError("Source relations escape the preimage lattice.")
        module = FpModule(ring, P.ncols, X)
        return module, ModuleMap(module, src, P, check=False)

    def cokernel(self):
        """Cokernel as ``(module, projection)``."""
        ring = self.ring
        tgt = self.target
        rel = ExactMatrix.hstack(ring, tgt.generators, [tgt.relations, self.matrix])
        module = FpModule(ring, tgt.generators, rel)
        return module, ModuleMap(
            tgt, module, ExactMatrix.identity(ring, tgt.generators), check=False
        )

    def lift(self, inclusion):
        """Factors ``self`` through ``inclusion``: returns ``g`` with ``inclusion ∘ g = self``.

        :raises FactorizationError: if no factorisation exists.
        """
        ring = self.ring
        M = inclusion.target
        A = ExactMatrix.hstack(ring, M.generators, [inclusion.matrix, M.relations])
        X = solve(A, self.matrix)
        if X is None:
            raise FactorizationError("Map does not factor through the inclusion.")
        g = X.submatrix(rows=range(inclusion.source.generators))
        return ModuleMap(self.source, inclusion.source, g, check=False)

    def is_injective(self):
        """Whether the kernel vanishes."""
        return self.kernel()[0].is_zero()

    def is_surjective(self):
        """Whether the cokernel vanishes."""
        return self.cokernel()[0].is_zero()

    def is_isomorphism(self):
        """Whether the map is bijective."""
        return self.is_surjective() and self.is_injective()

    def __repr__(self):
        """Representation."""
        return f"ModuleMap<{self.source.describe()} -> {self.target.describe()}>"


def modules_isomorphic(a, b):
    """Whether two modules are isomorphic (same invariants).

    :raises RingMismatchError: if the rings differ.
    """
    if a.ring != b.ring:
        raise RingMismatchError(a.ring, b.ring)
    return a.invariants == b.invariants


class Homology:
    """``ker(d_out) / im(d_in)`` with the cycle inclusion kept around."""

    def __init__(self, module, cycles, inclusion, boundaries):
        """Constructor."""
        self.module = module
        self.cycles = cycles
        self.inclusion = inclusion
        self.boundaries = boundaries

    def induced(self, other, chain_map):
        """Map ``H -> H'`` induced by ``chain_map`` on the middle terms."""
        z = (chain_map @ self.inclusion).lift(other.inclusion)
        return ModuleMap(self.module, other.module, z.matrix, check=False)


def homology_data(d_in, d_out):
    """Homology of ``A --d_in--> B --d_out--> C`` with structure maps.

    :raises CompositionNonzeroError: if ``d_out ∘ d_in`` is not zero.
    """
    if not (d_out @ d_in).is_zero():
        raise CompositionNonzeroError()
    Z, inclusion = d_out.kernel()
    boundaries = d_in.lift(inclusion)
    H, _ = boundaries.cokernel()
    return Homology(H, Z, inclusion, boundaries)


def homology_of_pair(d_in, d_out):
    """``ker(d_out) / im(d_in)`` as a finitely presented module."""
    return homology_data(d_in, d_out).module


def hom_module(source, target):
    """``Hom(source, target)`` as ``(module, inclusion into target^g)``.

    An element is the tuple of images of the source generators.
    """
    ring = source.ring
    g = source.generators
    ambient = FpModule.direct_sum(ring, [target] * g)
    R = source.relations
    constraint_target = FpModule.direct_sum(ring, [target] * R.ncols)
    matrix = R.transpose().kron(ExactMatrix.identity(ring, target.generators))
    constraint = ModuleMap(ambient, constraint_target, matrix, check=False)
    return constraint.kernel()
