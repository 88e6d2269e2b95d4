"""Constructors for classical code families: simplex, Hamming, and
generalized Reed-Muller codes over GF(2), GF(3), GF(4).

Column and row orders are fixed (lexicographic) so generated matrices are
reproducible byte for byte.  Simplex and Hamming codes over GF(4) carry
the Hermitian inner product, matching the convention that quaternary LCD
means Hermitian LCD.  Reed-Muller codes are built with the Euclidean
product for every q: the duality R(r, m)^perp = R(m(q-1)-1-r, m) that
drives their hull structure holds for the Euclidean pairing, and fails
Hermitian-wise over GF(4) (already for r = m = 2).
"""

from __future__ import annotations

import itertools

import numpy as np

from .code import EUCLIDEAN, HERMITIAN, LinearCode
from .errors import GuardExceededError
from .gf import field
from .matgf import GfMatrix

GRM_POINT_GUARD = 2 ** 14


def _check_qr(q: int, r: int) -> None:
    if q not in (2, 3, 4):
        raise ValueError(f"q must be 2, 3, or 4, got {q}")
    if r < 2:
        raise ValueError(f"r must be at least 2, got {r}")


def simplex(q: int, r: int) -> LinearCode:
    """The q-ary simplex code of order r: [(q^r-1)/(q-1), r, q^(r-1)].

    Columns are the projective points of F_q^r, one representative per
    point normalized to leading coefficient 1, in lexicographic order.
    """
    _check_qr(q, r)
    f = field(q)
    cols = [v for v in itertools.product(range(q), repeat=r)
            if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1]
    gen = GfMatrix(f, np.array(cols, dtype=np.uint8).T)
    ip = HERMITIAN if q == 4 else EUCLIDEAN
    return LinearCode(gen, ip)


def hamming(q: int, r: int) -> LinearCode:
    """The q-ary Hamming code: [(q^r-1)/(q-1), (q^r-1)/(q-1) - r, 3].

    Constructed as the dual of the simplex code (Hermitian dual for q = 4).
    """
    _check_qr(q, r)
    return simplex(q, r).dual


def grm(q: int, r: int, m: int) -> LinearCode:
    """The q-ary generalized Reed-Muller code of order r in m variables.

    Generator rows evaluate the monomials x1^e1 ... xm^em with every
    exponent at most q - 1 and total degree at most r, over all q^m points
    in lexicographic order; rows are ordered lexicographically by exponent
    tuple.  The code is self-orthogonal (hull = code) for
    r <= floor((m(q-1)-1)/2) and contains its dual (hull = dual) for
    strictly larger r; at exact equality with m(q-1) even the code is
    self-orthogonal but not dual-containing, so the hull dimension is k.
    """
    if q not in (2, 3, 4):
        raise ValueError(f"q must be 2, 3, or 4, got {q}")
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if not 0 <= r <= m * (q - 1):
        raise ValueError(f"order r must satisfy 0 <= r <= m(q-1) = {m * (q - 1)}")
    n = q ** m
    if n > GRM_POINT_GUARD:
        raise GuardExceededError(f"q^m = {n} exceeds the evaluation guard {GRM_POINT_GUARD}")
    f = field(q)
    points = np.array(list(itertools.product(range(q), repeat=m)), dtype=np.uint8)
    # pow_table[v, e] = v^e with 0^0 = 1
    pow_table = np.ones((q, q), dtype=np.uint8)
    for v in range(q):
        for e in range(1, q):
            pow_table[v, e] = f.mul(int(pow_table[v, e - 1]), v)
    rows = []
    for exps in itertools.product(range(q), repeat=m):
        if sum(exps) > r:
            continue
        row = np.ones(n, dtype=np.uint8)
        for i, e in enumerate(exps):
            if e:
                row = f.mul_arrays(row, pow_table[points[:, i], e])
        rows.append(row)
    gen = GfMatrix(f, np.array(rows, dtype=np.uint8))
    return LinearCode(gen, EUCLIDEAN)
