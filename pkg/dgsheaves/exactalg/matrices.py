# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Dense exact matrices."""

from ..errors import DimensionError, RingMismatchError


class ExactMatrix:
    """Dense matrix over a coefficient ring.

    Matrices are treated as immutable once built; every operation returns a
    new matrix. Shapes with zero rows or columns are legal.
    """

    __slots__ = ("ring", "nrows", "ncols", "_rows")

    def __init__(self, ring, nrows, ncols, rows=None):
        """Constructor.

        :param rows: list of ``nrows`` lists of ``ncols`` ring elements.
        """
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [[ring.zero] * ncols for _ in range(nrows)]
        else:
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise DimensionError(
                    f"Expected {nrows}x{ncols} entries, got {len(rows)} rows."
                )
            rows = [[ring.coerce(x) for x in r] for r in rows]
        self._rows = rows

    @classmethod
    def _raw(cls, ring, nrows, ncols, rows):
        """Builds from already coerced rows, without copying."""
        m = cls.__new__(cls)
        m.ring = ring
        m.nrows = nrows
        m.ncols = ncols
        m._rows = rows
        return m

    @classmethod
    def from_rows(cls, ring, rows, ncols=None):
        """Matrix from a list of rows; ``ncols`` is needed when empty."""
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(ring, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, ring, columns, nrows):
        """Matrix whose columns are the given vectors."""
        columns = [list(c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise DimensionError(f"Column of length {len(c)}, expected {nrows}.")
        rows = [[ring.coerce(c[i]) for c in columns] for i in range(nrows)]
        return cls._raw(ring, nrows, len(columns), rows)

    @classmethod
    def zero(cls, ring, nrows, ncols):
        """Zero matrix."""
        return cls(ring, nrows, ncols)

    @classmethod
    def identity(cls, ring, n):
        """Identity matrix."""
        m = cls(ring, n, n)
        for i in range(n):
            m._rows[i][i] = ring.one
        return m

    @classmethod
    def diagonal(cls, ring, entries, nrows=None, ncols=None):
        """Rectangular diagonal matrix."""
        nrows = len(entries) if nrows is None else nrows
        ncols = len(entries) if ncols is None else ncols
        m = cls(ring, nrows, ncols)
        for i, x in enumerate(entries):
            m._rows[i][i] = ring.coerce(x)
        return m

    @classmethod
    def hstack(cls, ring, nrows, blocks):
        """Concatenates matrices side by side."""
        for b in blocks:
            if b.nrows != nrows:
                raise DimensionError(f"hstack: {b.nrows} rows, expected {nrows}.")
        rows = [sum((b._rows[i] for b in blocks), []) for i in range(nrows)]
        return cls._raw(ring, nrows, sum(b.ncols for b in blocks), rows)

    @classmethod
    def vstack(cls, ring, ncols, blocks):
        """Stacks matrices on top of each other."""
        rows = []
        for b in blocks:
            if b.ncols != ncols:
                raise DimensionError(f"vstack: {b.ncols} columns, expected {ncols}.")
            rows.extend(list(r) for r in b._rows)
        return cls._raw(ring, len(rows), ncols, rows)

    @classmethod
    def block_diagonal(cls, ring, blocks):
        """Block diagonal matrix."""
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        m = cls(ring, nrows, ncols)
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.nrows):
                m._rows[r0 + i][c0 : c0 + b.ncols] = b._rows[i]
            r0 += b.nrows
            c0 += b.ncols
        return m

    @classmethod
    def blocks(cls, ring, row_sizes, col_sizes, entries):
        """Assembles a block matrix from a ``{(i, j): matrix}`` mapping."""
        m = cls(ring, sum(row_sizes), sum(col_sizes))
        row_offsets = _offsets(row_sizes)
        col_offsets = _offsets(col_sizes)
        for (i, j), b in entries.items():
            if b.nrows != row_sizes[i] or b.ncols != col_sizes[j]:
                raise DimensionError(
                    f"Block ({i}, {j}) is {b.nrows}x{b.ncols}, "
                    f"expected {row_sizes[i]}x{col_sizes[j]}."
                )
            r0, c0 = row_offsets[i], col_offsets[j]
            for a in range(b.nrows):
                row = m._rows[r0 + a]
                for c in range(b.ncols):
                    if b._rows[a][c]:
                        row[c0 + c] = ring.reduce(row[c0 + c] + b._rows[a][c])
        return m

    @property
    def shape(self):
        """``(nrows, ncols)``."""
        return self.nrows, self.ncols

    @property
    def rows(self):
        """Rows as tuples."""
        return tuple(tuple(r) for r in self._rows)

    def entry(self, i, j):
        """Entry at row ``i``, column ``j``."""
        return self._rows[i][j]

    def row(self, i):
        """Row ``i`` as a list."""
        return list(self._rows[i])

    def column(self, j):
        """Column ``j`` as a list."""
        return [r[j] for r in self._rows]

    def columns(self):
        """All columns."""
        return [self.column(j) for j in range(self.ncols)]

    def submatrix(self, rows=None, cols=None):
        """Matrix on the selected row and column indices."""
        rows = range(self.nrows) if rows is None else list(rows)
        cols = range(self.ncols) if cols is None else list(cols)
        data = [[self._rows[i][j] for j in cols] for i in rows]
        return ExactMatrix._raw(self.ring, len(data), len(cols), data)

    def transpose(self):
        """Transposed matrix."""
        data = [list(c) for c in zip(*self._rows)] if self.nrows else []
        if not data:
            data = [[] for _ in range(self.ncols)]
        return ExactMatrix._raw(self.ring, self.ncols, self.nrows, data)

    def apply(self, vector):
        """Matrix-vector product."""
        if len(vector) != self.ncols:
            raise DimensionError(f"Vector of length {len(vector)}, expected {self.ncols}.")
        ring = self.ring
        return [
            ring.reduce(sum(a * x for a, x in zip(r, vector) if a and x))
            for r in self._rows
        ]

    def is_zero(self):
        """Whether every entry vanishes."""
        return not any(x for r in self._rows for x in r)

    def scale(self, factor):
        """Scalar multiple."""
        ring = self.ring
        factor = ring.coerce(factor)
        data = [[ring.reduce(factor * x) for x in r] for r in self._rows]
        return ExactMatrix._raw(ring, self.nrows, self.ncols, data)

    def kron(self, other):
        """Kronecker product, row index ``(i, k) -> i * other.nrows + k``."""
        ring = self.ring
        rows = []
        for r in self._rows:
            for s in other._rows:
                rows.append([ring.reduce(a * b) for a in r for b in s])
        return ExactMatrix._raw(
            ring, self.nrows * other.nrows, self.ncols * other.ncols, rows
        )

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(self.ring, other.ring)

    def __matmul__(self, other):
        """Matrix product."""
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionError(
                f"Cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}."
            )
        ring = self.ring
        cols = other.transpose()._rows
        data = [
            [ring.reduce(sum(a * b for a, b in zip(r, c) if a and b)) for c in cols]
            for r in self._rows
        ]
        return ExactMatrix._raw(ring, self.nrows, other.ncols, data)

    def __add__(self, other):
        """Entrywise sum."""
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError(f"Cannot add {self.shape} and {other.shape}.")
        ring = self.ring
        data = [
            [ring.reduce(a + b) for a, b in zip(r, s)]
            for r, s in zip(self._rows, other._rows)
        ]
        return ExactMatrix._raw(ring, self.nrows, self.ncols, data)

    def __neg__(self):
        """Negation."""
        return self.scale(-1)

    def __sub__(self, other):
        """Entrywise difference."""
        return self + (-other)

    def __eq__(self, other):
        """Exact entrywise equality."""
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        """Hash of the entries."""
        return hash((self.ring, self.shape, self.rows))

    def to_json(self):
        """Rows of decimal strings."""
        return [[self.ring.format(x) for x in r] for r in self._rows]

    @classmethod
    def from_json(cls, ring, data, nrows=None, ncols=None):
        """Inverse of :meth:`to_json`; shapes are needed for empty matrices."""
        data = data or []
        if nrows is None:
            nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if not data:
            data = [[] for _ in range(nrows)] if ncols == 0 else None
        return cls(ring, nrows, ncols, data)

    def __repr__(self):
        """Representation."""
        body = "; ".join(" ".join(self.ring.format(x) for x in r) for r in self._rows)
        return f"ExactMatrix<{self.nrows}x{self.ncols} over {self.ring}>[{body}]"


def _offsets(sizes):
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out


def offsets(sizes):
    """Start index of every block of the given sizes."""
    return _offsets(sizes)
