"""Independent oracles used to cross-check the package.

Everything here is deliberately naive pure Python over element indices
(triple-loop products, cofactor determinants, list-based elimination,
Zassenhaus intersection, brute-force codeword walks) and shares no code
path with the library implementations it checks.
"""

from __future__ import annotations

import itertools

import numpy as np

from lcdembed.gf import FieldSpec
from lcdembed.rng import SplitMix64


def naive_matmul(f: FieldSpec, a, b):
    a = [list(map(int, row)) for row in a]
    b = [list(map(int, row)) for row in b]
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            acc = 0
            for t in range(inner):
                acc = f.add(acc, f.mul(a[i][t], b[t][j]))
            out[i][j] = acc
    return out


def rank_by_random_elimination(f: FieldSpec, m, rng: SplitMix64) -> int:
    """Gaussian elimination choosing a random pivot row in each column."""
    mat = [list(map(int, row)) for row in m]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    r = 0
    for c in range(cols):
        candidates = [i for i in range(r, rows) if mat[i][c] != 0]
        if not candidates:
            continue
        piv = candidates[rng.below(len(candidates))]
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                fac = f.mul(mat[i][c], f.inv(mat[r][c]))
                mat[i] = [f.sub(x, f.mul(fac, y)) for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == rows:
            break
    return sum(1 for row in mat if any(row))


def laplace_det(f: FieldSpec, m) -> int:
    mat = [list(map(int, row)) for row in m]
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    total = 0
    sign = 1
    for j in range(n):
        if mat[0][j] != 0:
            minor = [[mat[i][t] for t in range(n) if t != j] for i in range(1, n)]
            term = f.mul(mat[0][j], laplace_det(f, minor))
            if sign < 0:
                term = f.neg(term)
            total = f.add(total, term)
        sign = -sign
    return total


def _rref_py(f: FieldSpec, mat):
    """Plain list-based reduced row echelon form; returns (rows, pivot cols)."""
    mat = [list(map(int, row)) for row in mat]
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        ipv = f.inv(mat[r][c])
        mat[r] = [f.mul(ipv, x) for x in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                fac = mat[i][c]
                mat[i] = [f.sub(x, f.mul(fac, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return mat, pivots


def dual_basis(f: FieldSpec, gen, conjugate: bool) -> list[list[int]]:
    """Basis of {x : <x, g> = 0 for all rows g}, via elimination on star(G)."""
    rows = len(gen)
    cols = len(gen[0]) if rows else 0
    starg = [[f.conj(int(gen[i][j])) if conjugate else int(gen[i][j])
              for i in range(rows)] for j in range(cols)]
    # left kernel of starg: eliminate [starg | I] and read rows that vanished
    aug = [starg[i] + [1 if t == i else 0 for t in range(cols)]
           for i in range(cols)]
    reduced, _ = _rref_py(f, aug)
    out = []
    for row in reduced:
        if not any(row[:rows]):
            out.append(row[rows:])
    return out


def zassenhaus_intersection(f: FieldSpec, a, b) -> list[list[int]]:
    """Basis of rowspace(a) intersected with rowspace(b)."""
    n = len(a[0]) if a else len(b[0])
    stacked = [list(r) + list(r) for r in a] + [list(r) + [0] * n for r in b]
    if not stacked:
        return []
    reduced, _ = _rref_py(f, stacked)
    basis = []
    for row in reduced:
        if not any(row[:n]) and any(row[n:]):
            basis.append(row[n:])
    return basis


def hull_dimension_oracle(f: FieldSpec, gen, conjugate: bool) -> int:
    gen_list = [list(map(int, row)) for row in gen]
    dual = dual_basis(f, gen_list, conjugate)
    return len(zassenhaus_intersection(f, gen_list, dual))


def bruteforce_min_weight(f: FieldSpec, gen) -> int:
    gen = [list(map(int, row)) for row in gen]
    k = len(gen)
    best = None
    for msg in itertools.product(range(f.order), repeat=k):
        if not any(msg):
            continue
        word = [0] * len(gen[0])
        for coef, row in zip(msg, gen):
            if coef:
                word = [f.add(x, f.mul(coef, y)) for x, y in zip(word, row)]
        w = sum(1 for x in word if x)
        if best is None or w < best:
            best = w
    return best


def bruteforce_weight_counts(f: FieldSpec, gen) -> list[int]:
    gen = [list(map(int, row)) for row in gen]
    k = len(gen)
    n = len(gen[0]) if gen else 0
    counts = [0] * (n + 1)
    for msg in itertools.product(range(f.order), repeat=k):
        word = [0] * n
        for coef, row in zip(msg, gen):
            if coef:
                word = [f.add(x, f.mul(coef, y)) for x, y in zip(word, row)]
        counts[sum(1 for x in word if x)] += 1
    return counts


# -- deterministic random data ------------------------------------------------

def rand_array(f: FieldSpec, rows: int, cols: int, rng: SplitMix64) -> np.ndarray:
    return np.array([[rng.below(f.order) for _ in range(cols)]
                     for _ in range(rows)], dtype=np.uint8).reshape(rows, cols)


def rand_full_rank(f: FieldSpec, k: int, n: int, rng: SplitMix64) -> np.ndarray:
    from lcdembed.matgf import _rank_data
    while True:
        a = rand_array(f, k, n, rng)
        if _rank_data(f, a) == k:
            return a


def rand_invertible(f: FieldSpec, n: int, rng: SplitMix64) -> np.ndarray:
    return rand_full_rank(f, n, n, rng)
