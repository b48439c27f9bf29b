# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Errors."""


class DGSheavesError(Exception):
    """Base error of the engine."""


class InvalidRingError(DGSheavesError):
    """Malformed coefficient ring tag."""

    def __init__(self, tag):
        """Initialise error."""
        super().__init__(f"Invalid coefficient ring: {tag!r}.")


class RingMismatchError(DGSheavesError):
    """Operands live over different coefficient rings."""

    def __init__(self, left, right):
        """Initialise error."""
        super().__init__(f"Ring mismatch: {left} vs {right}.")


class FieldPathError(DGSheavesError):
    """Smith normal form requested over the rationals.

    Rational matrices go through rank reduction instead.
    """

    def __init__(self, ring):
        """Initialise error."""
        super().__init__(
            f"Smith normal form is not defined on the field path for {ring}; "
            "use rank reduction."
        )


class DimensionError(DGSheavesError):
    """Matrix or vector shapes do not fit."""


class IllDefinedMapError(DGSheavesError):
    """A matrix does not carry source relations into target relations."""


class CompositionNonzeroError(DGSheavesError):
    """Two consecutive maps do not compose to zero."""

    def __init__(self, where=""):
        """Initialise error."""
        suffix = f" ({where})" if where else ""
        super().__init__(f"Composition of differentials is nonzero{suffix}.")


class FactorizationError(DGSheavesError):
    """A map does not factor through the given inclusion."""


class InfiniteModuleError(DGSheavesError):
    """Element enumeration requested for an infinite module."""


class UnknownObjectError(DGSheavesError):
    """Object or morphism not in the site."""

    def __init__(self, key):
        """Initialise error."""
        super().__init__(f"Unknown object or morphism: {key!r}.")


class UnknownPointError(DGSheavesError):
    """Point not declared for the site."""

    def __init__(self, key):
        """Initialise error."""
        super().__init__(f"Point {key!r} is not declared for this site.")


class InvalidPointsError(DGSheavesError):
    """Declared points violate the neighbourhood conditions."""


class NonFunctorialError(DGSheavesError):
    """Restriction data or a functor fails functoriality."""


class NotNaturalError(DGSheavesError):
    """Components of a presheaf map do not commute with restrictions."""


class MissingFiberProductError(DGSheavesError):
    """An iterated fiber product does not exist in the site."""

    def __init__(self, legs):
        """Initialise error."""
        super().__init__(f"No fiber product for the legs {list(legs)}.")


class TruncationError(DGSheavesError):
    """A simplicial level beyond the truncation was requested."""


class ValidityError(DGSheavesError):
    """A degree outside the validity window was requested."""

    def __init__(self, degree, window):
        """Initialise error."""
        lo, hi = window
        lo = "-inf" if lo is None else lo
        hi = "+inf" if hi is None else hi
        super().__init__(f"Degree {degree} lies outside the validity window [{lo}, {hi}].")


class NonConnectiveError(DGSheavesError):
    """Complex has nonzero levels in negative degrees."""


class SetValuedError(DGSheavesError):
    """Module-valued input expected, got a set-valued simplicial object."""


class StrategyError(DGSheavesError):
    """A resolution strategy cannot be applied to the input."""


class NonCommutingSquareError(DGSheavesError):
    """The lifting square does not commute."""


class UnsupportedSourceError(DGSheavesError):
    """Lifting needs semi-representable certified source levels."""


class NotChainMapError(NotNaturalError):
    """Components do not commute with the differentials."""
