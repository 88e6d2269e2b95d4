"""Dense exact matrix algebra over a FieldSpec.

Products, star-transpose, reduced row echelon form, rank, inverse,
determinant, left kernels, and the Schur determinant identity.  Matrices
are immutable uint8 arrays; all operations return new values, so
concurrent reads need no locking.

Representation notes: products route through float64 BLAS (exact, since
every intermediate integer stays far below 2^53) with GF(4) handled on
its two GF(2) bit planes; rank computation over GF(2) packs rows into
64-bit words so elimination is word-parallel.  Elimination pivots on the
leftmost nonzero column, topmost nonzero row, pivot scaled to 1, which
makes every reduced form byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, FieldMismatchError, SingularMatrixError
from .gf import GF4_INV, GF4_MUL, FieldSpec


class GfMatrix:
    """Immutable dense matrix over a FieldSpec, entries stored row-major."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.uint8, copy=True, order="C")
        if arr.ndim != 2:
            if arr.ndim == 1 and arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise DimensionError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        if arr.size and int(arr.max()) >= field.order:
            bad = int(arr.max())
            raise FieldMismatchError(
                f"field mismatch: entry {bad} is not an element of GF({field.order})")
        arr.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("GfMatrix is immutable")

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def row(self, i: int) -> np.ndarray:
        return self.data[i]

    def take_columns(self, indices: Sequence[int]) -> "GfMatrix":
        return GfMatrix(self.field, self.data[:, list(indices)])

    def delete_columns(self, indices: Iterable[int]) -> "GfMatrix":
        drop = sorted(set(int(i) for i in indices))
        keep = [j for j in range(self.cols) if j not in drop]
        return GfMatrix(self.field, self.data[:, keep])

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __eq__(self, other) -> bool:
        return (isinstance(other, GfMatrix) and other.field == self.field
                and other.data.shape == self.data.shape
                and bool(np.array_equal(other.data, self.data)))

    def __hash__(self) -> int:
        return hash((self.field.order, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"GfMatrix(GF({self.field.order}), {self.rows}x{self.cols})"


def zeros(field: FieldSpec, rows: int, cols: int) -> GfMatrix:
    return GfMatrix(field, np.zeros((rows, cols), dtype=np.uint8))


def identity(field: FieldSpec, n: int) -> GfMatrix:
    return GfMatrix(field, np.eye(n, dtype=np.uint8))


def _require_same_field(a: GfMatrix, b: GfMatrix) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatchError(
            f"field mismatch: GF({a.field.order}) vs GF({b.field.order})")
    return a.field


# ---------------------------------------------------------------------------
# raw kernels on plain uint8 arrays
# ---------------------------------------------------------------------------

def _dot_data(f: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of uint8 matrices over f, via float64 BLAS."""
    if f.order == 4:
        a0 = (a & 1).astype(np.float64)
        a1 = (a >> 1).astype(np.float64)
        b0 = (b & 1).astype(np.float64)
        b1 = (b >> 1).astype(np.float64)
        m11 = a1 @ b1
        hi = (np.rint(m11 + a1 @ b0 + a0 @ b1).astype(np.int64)) & 1
        lo = (np.rint(m11 + a0 @ b0).astype(np.int64)) & 1
        return (lo + 2 * hi).astype(np.uint8)
    c = a.astype(np.float64) @ b.astype(np.float64)
    return (np.rint(c).astype(np.int64) % f.order).astype(np.uint8)


def _rank2_data(a: np.ndarray) -> int:
    """GF(2) rank with rows packed 64 columns per word."""
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return 0
    packed = np.packbits(np.ascontiguousarray(a), axis=1, bitorder="little")
    pad = (-packed.shape[1]) % 8
    if pad:
        packed = np.concatenate(
            [packed, np.zeros((rows, pad), dtype=np.uint8)], axis=1)
    r = np.ascontiguousarray(packed).view(np.uint64).copy()
    pr = 0
    for c in range(cols):
        w, b = divmod(c, 64)
        colbits = (r[pr:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.flatnonzero(colbits)
        if nz.size == 0:
            continue
        piv = pr + int(nz[0])
        if piv != pr:
            r[[pr, piv]] = r[[piv, pr]]
        below = (r[pr + 1:, w] >> np.uint64(b)) & np.uint64(1)
        hit = np.flatnonzero(below)
        if hit.size:
            r[pr + 1 + hit] ^= r[pr]
        pr += 1
        if pr == rows:
            break
    return pr


def _rank_data(f: FieldSpec, a: np.ndarray) -> int:
    """Rank by forward elimination; no transform bookkeeping."""
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return 0
    if f.order == 2:
        return _rank2_data(a)
    if f.order == 4:
        r = a.copy()
        pr = 0
        for c in range(cols):
            nz = np.flatnonzero(r[pr:, c])
            if nz.size == 0:
                continue
            piv = pr + int(nz[0])
            if piv != pr:
                r[[pr, piv]] = r[[piv, pr]]
            fac = GF4_MUL[GF4_INV[r[pr, c]], r[pr + 1:, c]]
            r[pr + 1:] ^= GF4_MUL[fac[:, None], r[pr][None, :]]
            pr += 1
            if pr == rows:
                break
        return pr
    p = f.order
    r = a.astype(np.int64)
    pr = 0
    for c in range(cols):
        nz = np.flatnonzero(r[pr:, c])
        if nz.size == 0:
            continue
        piv = pr + int(nz[0])
        if piv != pr:
            r[[pr, piv]] = r[[piv, pr]]
        inv_pv = int(f._inv[r[pr, c]])
        fac = (r[pr + 1:, c] * inv_pv) % p
        r[pr + 1:] = (r[pr + 1:] - fac[:, None] * r[pr][None, :]) % p
        pr += 1
        if pr == rows:
            break
    return pr


def _rref_data(f: FieldSpec, a: np.ndarray) -> tuple[np.ndarray, list[int], np.ndarray]:
    """Gauss-Jordan on [a | I]; returns (rref, pivot columns, transform)."""
    rows, cols = a.shape
    aug = np.concatenate(
        [a.astype(np.int64), np.eye(rows, dtype=np.int64)], axis=1)
    p = f.order
    pivots: list[int] = []
    pr = 0
    for c in range(cols):
        if pr == rows:
            break
        nz = np.flatnonzero(aug[pr:, c])
        if nz.size == 0:
            continue
        piv = pr + int(nz[0])
        if piv != pr:
            aug[[pr, piv]] = aug[[piv, pr]]
        if f.order == 4:
            aug[pr] = GF4_MUL[GF4_INV[aug[pr, c]], aug[pr].astype(np.uint8)]
            fac = aug[:, c].astype(np.uint8).copy()
            fac[pr] = 0
            aug ^= GF4_MUL[fac[:, None], aug[pr].astype(np.uint8)[None, :]]
        else:
            aug[pr] = (aug[pr] * int(f._inv[aug[pr, c]])) % p
            fac = aug[:, c].copy()
            fac[pr] = 0
            aug = (aug - fac[:, None] * aug[pr][None, :]) % p
        pivots.append(c)
        pr += 1
    rref = aug[:, :cols].astype(np.uint8)
    transform = aug[:, cols:].astype(np.uint8)
    return rref, pivots, transform


def _det_data(f: FieldSpec, a: np.ndarray) -> int:
    """Determinant by forward elimination; empty product convention det([]) = 1."""
    n = a.shape[0]
    p = f.order
    r = a.astype(np.int64)
    det = 1
    pr = 0
    for c in range(n):
        nz = np.flatnonzero(r[pr:, c])
        if nz.size == 0:
            return 0
        piv = pr + int(nz[0])
        if piv != pr:
            r[[pr, piv]] = r[[piv, pr]]
            det = f.mul(det, f.neg(1))
        pv = int(r[pr, c])
        det = f.mul(det, pv)
        if f.order == 4:
            fac = GF4_MUL[GF4_INV[pv], r[pr + 1:, c].astype(np.uint8)]
            r[pr + 1:] ^= GF4_MUL[fac[:, None], r[pr].astype(np.uint8)[None, :]]
        else:
            fac = (r[pr + 1:, c] * int(f._inv[pv])) % p
            r[pr + 1:] = (r[pr + 1:] - fac[:, None] * r[pr][None, :]) % p
        pr += 1
    return det


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form with pivot bookkeeping.

    ``transform`` is an invertible rows x rows matrix with
    transform @ input = rref; this identity is asserted on every call.
    """

    rref: GfMatrix
    rank: int
    pivot_cols: tuple[int, ...]
    transform: GfMatrix


def matmul(a: GfMatrix, b: GfMatrix) -> GfMatrix:
    f = _require_same_field(a, b)
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return GfMatrix(f, _dot_data(f, a.data, b.data))


def transpose(m: GfMatrix) -> GfMatrix:
    return GfMatrix(m.field, m.data.T)


def star(m: GfMatrix) -> GfMatrix:
    """Transpose for prime fields, conjugate transpose for GF(4)."""
    if m.field.conj_exponent == 1:
        return GfMatrix(m.field, m.data.T)
    return GfMatrix(m.field, m.field.conj_array(m.data).T)


def hstack(*mats: GfMatrix) -> GfMatrix:
    f = mats[0].field
    for m in mats[1:]:
        _require_same_field(mats[0], m)
        if m.rows != mats[0].rows:
            raise DimensionError("hstack requires equal row counts")
    return GfMatrix(f, np.concatenate([m.data for m in mats], axis=1))


def vstack(*mats: GfMatrix) -> GfMatrix:
    f = mats[0].field
    for m in mats[1:]:
        _require_same_field(mats[0], m)
        if m.cols != mats[0].cols:
            raise DimensionError("vstack requires equal column counts")
    return GfMatrix(f, np.concatenate([m.data for m in mats], axis=0))


def block(a: GfMatrix, b: GfMatrix, c: GfMatrix, d: GfMatrix) -> GfMatrix:
    """Assemble the 2x2 block matrix [[a, b], [c, d]]."""
    return vstack(hstack(a, b), hstack(c, d))


def rref(m: GfMatrix) -> RrefResult:
    r, pivots, t = _rref_data(m.field, m.data)
    result = RrefResult(
        rref=GfMatrix(m.field, r),
        rank=len(pivots),
        pivot_cols=tuple(pivots),
        transform=GfMatrix(m.field, t),
    )
    assert np.array_equal(_dot_data(m.field, t, m.data), r), "rref transform check failed"
    return result


def rank(m: GfMatrix) -> int:
    return _rank_data(m.field, m.data)


def inverse(m: GfMatrix) -> GfMatrix:
    if m.rows != m.cols:
        raise DimensionError(f"cannot invert a {m.rows}x{m.cols} matrix")
    res = rref(m)
    if res.rank < m.rows:
        raise SingularMatrixError(f"singular matrix: rank {res.rank} < {m.rows}")
    return res.transform


def determinant(m: GfMatrix) -> int:
    if m.rows != m.cols:
        raise DimensionError(f"determinant requires a square matrix, got {m.rows}x{m.cols}")
    return _det_data(m.field, m.data)


def left_kernel(m: GfMatrix) -> GfMatrix:
    """Basis of {x : x @ m = 0}, one basis vector per row.

    Row count always equals m.rows - rank(m).
    """
    res = rref(m)
    return GfMatrix(m.field, res.transform.data[res.rank:])


def schur_det(a: GfMatrix, b: GfMatrix, c: GfMatrix, d: GfMatrix) -> int:
    """det of [[a, b], [c, d]] via det(a) * det(d - c a^-1 b); a must be invertible."""
    f = _require_same_field(a, b)
    _require_same_field(a, c)
    _require_same_field(a, d)
    if a.rows != a.cols or d.rows != d.cols:
        raise DimensionError("diagonal blocks must be square")
    if b.rows != a.rows or c.cols != a.cols or b.cols != d.cols or c.rows != d.rows:
        raise DimensionError("block shapes are not conformal")
    det_a = determinant(a)
    if det_a == 0:
        raise SingularMatrixError("Schur pivot singular: block a is not invertible")
    corr = matmul(matmul(c, inverse(a)), b)
    inner = GfMatrix(f, f.sub_arrays(d.data, corr.data))
    return f.mul(det_a, determinant(inner))


def same_row_space(a: GfMatrix, b: GfMatrix) -> bool:
    """True when both matrices generate the same row space."""
    _require_same_field(a, b)
    if a.cols != b.cols:
        return False
    ra = rank(a)
    rb = rank(b)
    if ra != rb:
        return False
    stacked = np.concatenate([a.data, b.data], axis=0)
    return _rank_data(a.field, stacked) == ra
