# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Smith normal form with transforms and the linear algebra built on it."""

from ..errors import DimensionError, FieldPathError
from .matrices import ExactMatrix
from .rings import RATIONALS


class SmithForm:
    """Result of a diagonalisation ``D = U * M * V``.

    ``U`` and ``V`` are invertible over the ring and ``U_inv`` is the inverse
    of ``U``. ``diagonal`` holds the nonzero invariant factors
    ``d1 | d2 | ...`` (positive over ℤ, 1 over a field).
    """

    def __init__(self, matrix, D, U, U_inv, V, diagonal):
        """Constructor."""
        self.matrix = matrix
        self.D = D
        self.U = U
        self.U_inv = U_inv
        self.V = V
        self.diagonal = diagonal

    @property
    def rank(self):
        """Number of nonzero invariant factors."""
        return len(self.diagonal)

    def check(self):
        """Asserts ``U * M * V == D`` and ``U * U_inv == 1``."""
        ring = self.matrix.ring
        assert self.U @ self.matrix @ self.V == self.D
        assert self.U @ self.U_inv == ExactMatrix.identity(ring, self.U.nrows)
        for a, b in zip(self.diagonal, self.diagonal[1:]):
            assert ring.divides(a, b)
        return True


class _Work:
    """Mutable state of the elimination."""

    def __init__(self, matrix):
        ring = matrix.ring
        self.ring = ring
        self.m, self.n = matrix.shape
        self.A = [list(r) for r in matrix.rows]
        self.U = [list(r) for r in ExactMatrix.identity(ring, self.m).rows]
        self.Ui = [list(r) for r in ExactMatrix.identity(ring, self.m).rows]
        self.V = [list(r) for r in ExactMatrix.identity(ring, self.n).rows]

    # row operations act on A and U, and inversely (on columns) on U_inv

    def swap_rows(self, i, j):
        if i == j:
            return
        for M in (self.A, self.U):
            M[i], M[j] = M[j], M[i]
        for r in self.Ui:
            r[i], r[j] = r[j], r[i]

    def add_row(self, target, source, factor):
        """row_target += factor * row_source."""
        if not factor:
            return
        red = self.ring.reduce
        for M in (self.A, self.U):
            t, s = M[target], M[source]
            for k, x in enumerate(s):
                if x:
                    t[k] = red(t[k] + factor * x)
        # inverse: col_source -= factor * col_target
        for r in self.Ui:
            if r[target]:
                r[source] = red(r[source] - factor * r[target])

    def scale_row(self, i, unit):
        red = self.ring.reduce
        inv = self.ring.inverse(unit)
        for M in (self.A, self.U):
            M[i] = [red(unit * x) for x in M[i]]
        for r in self.Ui:
            r[i] = red(inv * r[i])

    def swap_cols(self, i, j):
        if i == j:
            return
        for M in (self.A, self.V):
            for r in M:
                r[i], r[j] = r[j], r[i]

    def add_col(self, target, source, factor):
        """col_target += factor * col_source."""
        if not factor:
            return
        red = self.ring.reduce
        for M in (self.A, self.V):
            for r in M:
                if r[source]:
                    r[target] = red(r[target] + factor * r[source])


def _pivot(work, t):
    """Position of a nonzero entry of minimal size in ``A[t:, t:]``."""
    best = None
    size = work.ring.size
    for i in range(t, work.m):
        for j in range(t, work.n):
            x = work.A[i][j]
            if x and (best is None or size(x) < best[0]):
                best = (size(x), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else (best[1], best[2])


def diagonalize(matrix):
    """Smith normal form with transforms over any supported ring.

    Over a field this is Gauss-Jordan elimination with unit pivots.
    """
    work = _Work(matrix)
    ring = work.ring
    A = work.A
    t = 0
    while t < min(work.m, work.n):
        pos = _pivot(work, t)
        if pos is None:
            break
        work.swap_rows(t, pos[0])
        work.swap_cols(t, pos[1])
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, work.m):
                if A[i][t]:
                    work.add_row(i, t, -ring.quo(A[i][t], p))
                    dirty = dirty or bool(A[i][t])
            for j in range(t + 1, work.n):
                if A[t][j]:
                    work.add_col(j, t, -ring.quo(A[t][j], p))
                    dirty = dirty or bool(A[t][j])
            if dirty:
                # a remainder smaller than the pivot appeared; move it up
                best = (ring.size(p), t, t)
                for i in range(t + 1, work.m):
                    if A[i][t] and ring.size(A[i][t]) < best[0]:
                        best = (ring.size(A[i][t]), i, t)
                for j in range(t + 1, work.n):
                    if A[t][j] and ring.size(A[t][j]) < best[0]:
                        best = (ring.size(A[t][j]), t, j)
                work.swap_rows(t, best[1])
                work.swap_cols(t, best[2])
                continue
            offender = None
            for i in range(t + 1, work.m):
                for j in range(t + 1, work.n):
                    if not ring.divides(p, A[i][j]):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            work.add_row(t, offender, ring.one)
        unit = ring.normalize(A[t][t])
        if unit != ring.one:
            work.scale_row(t, unit)
        t += 1

    D = ExactMatrix._raw(ring, work.m, work.n, A)
    U = ExactMatrix._raw(ring, work.m, work.m, work.U)
    U_inv = ExactMatrix._raw(ring, work.m, work.m, work.Ui)
    V = ExactMatrix._raw(ring, work.n, work.n, work.V)
    diagonal = [A[i][i] for i in range(t)]
    return SmithForm(matrix, D, U, U_inv, V, diagonal)


def smith_normal_form(matrix):
    """Smith normal form ``D = U * M * V`` over ℤ or a prime field.

    :raises FieldPathError: for rational matrices, which go through
        :func:`rank_reduction`.
    """
    if matrix.ring.kind == RATIONALS:
        raise FieldPathError(matrix.ring)
    return diagonalize(matrix)


def rank_reduction(matrix):
    """Rank-revealing reduction over a field (ℚ or 𝔽p)."""
    if not matrix.ring.is_field:
        raise FieldPathError(matrix.ring)
    return diagonalize(matrix)


def invariant_factors(matrix):
    """The nonzero invariant factors of ``matrix``."""
    return list(diagonalize(matrix).diagonal)


def solve(A, B, smith=None):
    """Solves ``A * X = B`` over the ring.

    Returns the canonical particular solution (free parameters set to zero)
    or ``None`` if some column has no solution.
    """
    if A.nrows != B.nrows:
        raise DimensionError(f"solve: {A.nrows} rows vs {B.nrows} rows.")
    ring = A.ring
    S = smith or diagonalize(A)
    C = S.U @ B
    r = S.rank
    Y = []
    for i in range(A.ncols):
        if i < r:
            d = S.diagonal[i]
            row = []
            for x in C.row(i):
                if not ring.divides(d, x):
                    return None
                row.append(ring.quo(x, d) if x else ring.zero)
            Y.append(row)
        else:
            Y.append([ring.zero] * B.ncols)
    for i in range(r, A.nrows):
        if any(C.row(i)):
            return None
    Y = ExactMatrix._raw(ring, A.ncols, B.ncols, Y)
    return S.V @ Y


def kernel_basis(A, smith=None):
    """Columns spanning ``{x : A x = 0}``, in canonical echelon form."""
    S = smith or diagonalize(A)
    K = S.V.submatrix(cols=range(S.rank, A.ncols))
    return echelon_basis(K)


def image_basis(A, smith=None):
    """Columns spanning the image lattice ``A * ring^n``."""
    S = smith or diagonalize(A)
    r = S.rank
    cols = []
    for i in range(r):
        col = S.U_inv.column(i)
        cols.append([A.ring.reduce(S.diagonal[i] * x) for x in col])
    return ExactMatrix.from_columns(A.ring, cols, A.nrows)


def echelon_basis(M):
    """Canonical basis of the lattice spanned by the columns of ``M``.

    Hermite normal form over ℤ (positive pivots, entries beside a pivot
    reduced into ``[0, pivot)``) and reduced echelon form over a field. The
    basis vectors are ordered by pivot position from the top.
    """
    ring = M.ring
    n = M.nrows
    vectors = [list(c) for c in M.columns() if any(c)]
    basis = []
    row = 0
    while vectors and row < n:
        live = [v for v in vectors if v[row]]
        rest = [v for v in vectors if not v[row]]
        if not live:
            row += 1
            continue
        # euclid on the entries at ``row``
        while len(live) > 1:
            live.sort(key=lambda v: ring.size(v[row]))
            pivot = live[0]
            nxt = [pivot]
            for v in live[1:]:
                q = ring.quo(v[row], pivot[row])
                w = [ring.reduce(a - q * b) for a, b in zip(v, pivot)]
                if w[row]:
                    nxt.append(w)
                elif any(w):
                    rest.append(w)
            live = nxt
        pivot = live[0]
        unit = ring.normalize(pivot[row])
        pivot = [ring.reduce(unit * x) for x in pivot]
        basis.append((row, pivot))
        vectors = rest
        row += 1
    # reduce entries at earlier pivot rows of later vectors and vice versa
    for k, (prow, pvec) in enumerate(basis):
        for j, (orow, ovec) in enumerate(basis):
            if j == k or not ovec[prow]:
                continue
            q = _reduction_quotient(ring, ovec[prow], pvec[prow])
            if q:
                basis[j] = (orow, [ring.reduce(a - q * b) for a, b in zip(ovec, pvec)])
    return ExactMatrix.from_columns(ring, [v for _, v in basis], n)


def _reduction_quotient(ring, x, pivot):
    if ring.is_field:
        return ring.quo(x, pivot)
    # floor division keeps the remainder in [0, pivot) for positive pivots
    return x // pivot
