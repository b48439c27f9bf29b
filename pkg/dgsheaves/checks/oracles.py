# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 DG-Sheaves contributors.
#
# DG-Sheaves is free software; you can redistribute it and/or modify it
# under the terms of the MIT License; see LICENSE file for more details.

"""Independent oracles for integer matrices."""

import math
from itertools import combinations

from sympy import Matrix


def determinantal_divisors(rows):
    """``d_k``: gcd of the ``k x k`` minors, up to the rank."""
    M = Matrix(rows)
    m, n = M.shape
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                g = math.gcd(g, int(M.extract(list(r), list(c)).det()))
        if g == 0:
            break
        divisors.append(g)
    return divisors


def determinantal_invariants(rows):
    """Nonzero invariant factors ``d_k / d_{k-1}``."""
    d = determinantal_divisors(rows)
    return [d[k] // d[k - 1] for k in range(1, len(d))]
