"""Linear codes over small finite fields.

Provides the LinearCode value type plus everything derived from it:
parameters, duals, hull (dimension and an explicit decomposition), the
LCD predicate, minimum distance via two independent engines, weight
enumerators, puncturing, and a weight-distribution fingerprint.

A code carries its inner product kind.  Over GF(2) and GF(3) the product
is Euclidean; over GF(4) it defaults to Hermitian (conjugate the right
operand entrywise), though Euclidean GF(4) codes may be constructed
explicitly.  The hull is the intersection of a code with its dual under
the chosen product; its dimension equals k - rank(G G*), where G* is the
(conjugate) transpose of the generator matrix.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from . import matgf
from .errors import GuardExceededError, RankDeficientError
from .gf import FieldSpec
from .matgf import GfMatrix

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"

ENUMERATION_AUTO_LIMIT = 2 ** 24
ENUMERATOR_GUARD = 2 ** 26

_BLOCK_TARGET = 2 ** 16


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] linear code given by a full-row-rank generator matrix."""

    gen: GfMatrix
    inner_product: str | None = None

    def __post_init__(self):
        ip = self.inner_product
        if ip is None:
            ip = HERMITIAN if self.gen.field.order == 4 else EUCLIDEAN
            object.__setattr__(self, "inner_product", ip)
        if ip not in (EUCLIDEAN, HERMITIAN):
            raise ValueError(f"unknown inner product {ip!r}")
        if ip == HERMITIAN and self.gen.field.order != 4:
            raise ValueError("hermitian inner product requires GF(4)")
        if matgf.rank(self.gen) != self.gen.rows:
            raise RankDeficientError(
                "generator not full rank; row-reduce and drop dependent rows first")

    @property
    def field(self) -> FieldSpec:
        return self.gen.field

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def star(self, m: GfMatrix) -> GfMatrix:
        """m with rows and columns swapped, conjugated first when Hermitian."""
        if self.inner_product == HERMITIAN:
            return GfMatrix(self.field, self.field.conj_array(m.data).T)
        return matgf.transpose(m)

    @cached_property
    def gram(self) -> GfMatrix:
        """G G* (k x k); its rank controls the hull dimension."""
        return matgf.matmul(self.gen, self.star(self.gen))

    @cached_property
    def hull_dimension(self) -> int:
        return self.k - matgf.rank(self.gram)

    @property
    def is_lcd(self) -> bool:
        return self.hull_dimension == 0

    @cached_property
    def dual(self) -> "LinearCode":
        """The [n, n-k] dual code under this code's inner product."""
        basis = matgf.left_kernel(self.star(self.gen))
        return LinearCode(basis, self.inner_product)

    @cached_property
    def hull_decomposition(self) -> "HullDecomposition":
        """Generator basis reordered as hull rows followed by complement rows.

        Hull rows are x @ G for x ranging over a basis of the left kernel
        of G G*: such x G lie in the code and are orthogonal to all of it.
        Complement rows are the original generator rows that extend the
        hull rows to a full basis, taken in order.
        """
        ker = matgf.left_kernel(self.gram)
        hull_rows = matgf.matmul(ker, self.gen)
        ell = hull_rows.rows
        kept: list[np.ndarray] = []
        current = hull_rows.data
        current_rank = ell
        for row in self.gen.data:
            trial = np.concatenate([current, row[None, :]], axis=0)
            r = matgf._rank_data(self.field, trial)
            if r > current_rank:
                kept.append(row)
                current = trial
                current_rank = r
            if current_rank == self.k:
                break
        complement = GfMatrix(self.field, np.array(kept, dtype=np.uint8).reshape(len(kept), self.n))
        assembled = GfMatrix(self.field, current)
        assert current_rank == self.k
        return HullDecomposition(ell=ell, hull_rows=hull_rows,
                                 complement_rows=complement, assembled=assembled)

    def min_distance(self, method: str = "auto", w_max: int | None = None) -> "DistanceReport":
        """Exact minimum distance, or a lower bound when w_max cuts off the search.

        ``enumerate`` walks all q^k - 1 nonzero codewords.  ``low-weight``
        looks for the smallest w such that some w columns of a parity check
        matrix are linearly dependent, raising w incrementally up to the
        Singleton bound when no w_max is given.  ``auto`` enumerates while
        q^k <= 2^24 and otherwise switches to the low-weight search.
        """
        if self.k == 0:
            raise ValueError("zero code has no minimum distance")
        if method == "auto":
            if self.field.order ** self.k <= ENUMERATION_AUTO_LIMIT:
                method = "enumerate"
            else:
                method = "low-weight"
        if method == "enumerate":
            w, witness = _min_weight_by_enumeration(self.field, self.gen.data)
            return DistanceReport(method="enumeration", distance=w,
                                  lower_bound=w, witness=witness)
        if method != "low-weight":
            raise ValueError(f"unknown distance method {method!r}")
        limit = w_max if w_max is not None else self.n - self.k + 1
        hit = _low_weight_codeword(self, limit)
        if hit is None:
            if w_max is None:
                raise AssertionError("low-weight search exceeded the Singleton bound")
            return DistanceReport(method="low-weight-search", distance=None,
                                  lower_bound=w_max + 1, witness=None)
        w, witness = hit
        return DistanceReport(method="low-weight-search", distance=w,
                              lower_bound=w, witness=witness)

    def weight_enumerator(self) -> "WeightEnumerator":
        """Full weight distribution by exhaustive codeword enumeration."""
        size = self.field.order ** self.k
        if size > ENUMERATOR_GUARD:
            raise GuardExceededError(
                f"enumerator guard exceeded: q^k = {size} > 2^26")
        counts = _weight_counts_by_enumeration(self.field, self.gen.data, self.n)
        return WeightEnumerator(counts=tuple(int(c) for c in counts))

    def puncture(self, coords) -> "LinearCode":
        """Delete the given coordinates; dimension may drop and is re-derived."""
        drop = sorted(set(int(i) for i in coords))
        for i in drop:
            if not 0 <= i < self.n:
                raise ValueError(f"puncture coordinate {i} outside [0, {self.n})")
        keep = [j for j in range(self.n) if j not in set(drop)]
        data = self.gen.data[:, keep]
        f = self.field
        r = matgf._rank_data(f, data)
        if r == self.k:
            return LinearCode(GfMatrix(f, data), self.inner_product)
        reduced, pivots, _ = matgf._rref_data(f, data)
        return LinearCode(GfMatrix(f, reduced[:len(pivots)]), self.inner_product)

    def fingerprint(self) -> str:
        """Digest of (n, k, q, inner product, weight enumerator).

        Monomially equivalent codes share a fingerprint; distinct
        fingerprints certify inequivalence.  The converse does not hold.
        """
        we = self.weight_enumerator()
        text = "lcdembed-code-v1|q={}|n={}|k={}|ip={}|we={}".format(
            self.field.order, self.n, self.k, self.inner_product,
            ",".join(str(c) for c in we.counts))
        return hashlib.sha256(text.encode("ascii")).hexdigest()


def new_code(gen: GfMatrix, inner_product: str | None = None) -> LinearCode:
    """Validating constructor; rejects rank-deficient generators."""
    return LinearCode(gen, inner_product)


@dataclass(frozen=True)
class HullDecomposition:
    """A generator basis split into hull rows and complement rows."""

    ell: int
    hull_rows: GfMatrix
    complement_rows: GfMatrix
    assembled: GfMatrix


@dataclass(frozen=True)
class WeightEnumerator:
    """counts[w] = number of codewords of Hamming weight w, 0 <= w <= n."""

    counts: tuple[int, ...]

    @property
    def min_weight(self) -> int:
        for w, c in enumerate(self.counts):
            if w > 0 and c > 0:
                return w
        raise ValueError("no nonzero codeword")

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of a minimum distance computation.

    ``distance`` is the exact value when known, else None with
    ``lower_bound`` still valid (d >= lower_bound).  ``witness`` is a
    minimum-weight codeword whenever the value is exact.
    """

    method: str
    distance: int | None
    lower_bound: int
    witness: np.ndarray | None = dc_field(repr=False, default=None)

    @property
    def exact(self) -> bool:
        return self.distance is not None


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """True when both codes have the same codeword set."""
    if a.field != b.field or a.n != b.n or a.k != b.k:
        return False
    return matgf.same_row_space(a.gen, b.gen)


# ---------------------------------------------------------------------------
# enumeration engine
# ---------------------------------------------------------------------------

def _tail_block(f: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """All q^t combinations of the given t generator rows, as a (q^t, n) array."""
    n = rows.shape[1]
    blockv = np.zeros((1, n), dtype=np.uint8)
    for row in rows:
        parts = [f.add_arrays(blockv, f.scale_array(c, row)[None, :])
                 for c in range(f.order)]
        blockv = np.concatenate(parts, axis=0)
    return blockv


def _enum_blocks(f: FieldSpec, gen: np.ndarray):
    """Yield the codeword set in blocks of at most ~2^16 rows."""
    k, n = gen.shape
    q = f.order
    t = 0
    while t < k and q ** (t + 1) <= _BLOCK_TARGET:
        t += 1
    tail = _tail_block(f, gen[k - t:])
    head_rows = gen[:k - t]
    if k - t == 0:
        yield tail
        return
    for msg in itertools.product(range(q), repeat=k - t):
        prefix = np.zeros(n, dtype=np.uint8)
        for c, row in zip(msg, head_rows):
            if c:
                prefix = f.add_arrays(prefix, f.scale_array(c, row))
        yield f.add_arrays(tail, prefix[None, :])


def _min_weight_by_enumeration(f: FieldSpec, gen: np.ndarray,
                               abort_below: int | None = None):
    """Exact (min weight, lexicographically smallest witness).

    With ``abort_below`` set, returns None as soon as any nonzero codeword
    lighter than the cutoff is seen; callers use this to discard search
    candidates that cannot beat an incumbent.
    """
    best_w: int | None = None
    best_row: np.ndarray | None = None
    for blockv in _enum_blocks(f, gen):
        w = np.count_nonzero(blockv, axis=1)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            continue
        wmin = int(w[nz].min())
        if best_w is not None and wmin > best_w:
            continue
        cand_idx = nz[w[nz] == wmin]
        cand = blockv[cand_idx]
        if cand.shape[0] == 1:
            row = cand[0]
        else:
            order = np.lexsort(cand.T[::-1])
            row = cand[order[0]]
        if best_w is None or wmin < best_w or (wmin == best_w and
                                               row.tobytes() < best_row.tobytes()):
            best_w = wmin
            best_row = row.copy()
        if abort_below is not None and best_w < abort_below:
            return None
    assert best_w is not None, "enumeration over a zero-dimensional code"
    return best_w, best_row


def _weight_counts_by_enumeration(f: FieldSpec, gen: np.ndarray, n: int) -> np.ndarray:
    counts = np.zeros(n + 1, dtype=np.int64)
    for blockv in _enum_blocks(f, gen):
        w = np.count_nonzero(blockv, axis=1)
        counts += np.bincount(w, minlength=n + 1)
    return counts


# ---------------------------------------------------------------------------
# low-weight engine
# ---------------------------------------------------------------------------

def _reduce_columns(f: FieldSpec, cols: np.ndarray, pivot_col: np.ndarray,
                    pivot_row: int) -> np.ndarray:
    """Eliminate pivot_col's pivot_row component from every column in cols."""
    if cols.shape[1] == 0:
        return cols
    if f.order == 4:
        from .gf import GF4_INV, GF4_MUL
        fac = GF4_MUL[GF4_INV[pivot_col[pivot_row]], cols[pivot_row, :]]
        return cols ^ GF4_MUL[pivot_col[:, None], fac[None, :]]
    p = f.order
    inv_pv = int(f._inv[pivot_col[pivot_row]])
    fac = (cols[pivot_row, :].astype(np.int64) * inv_pv) % p
    out = (cols.astype(np.int64) - pivot_col.astype(np.int64)[:, None] * fac[None, :]) % p
    return out.astype(np.uint8)


def _find_dependent_columns(f: FieldSpec, h: np.ndarray, w: int):
    """First (lexicographic) w-subset of columns of h with rank < w.

    Precondition: every subset of fewer than w columns is independent,
    which holds when callers raise w one step at a time.
    """
    n = h.shape[1]
    if w > n:
        return None
    if w == 1:
        empty = np.flatnonzero(~h.any(axis=0))
        return [int(empty[0])] if empty.size else None

    def descend(chosen: list[int], cols: np.ndarray, first: int):
        need = w - len(chosen)
        m = cols.shape[1]
        if need == 1:
            zerocols = np.flatnonzero(~cols.any(axis=0))
            if zerocols.size:
                return chosen + [first + int(zerocols[0])]
            return None
        for j in range(m - (need - 1)):
            col = cols[:, j]
            support = np.flatnonzero(col)
            if support.size == 0:
                raise AssertionError("dependency below the current search level")
            rest = _reduce_columns(f, cols[:, j + 1:], col, int(support[0]))
            hit = descend(chosen + [first + j], rest, first + j + 1)
            if hit is not None:
                return hit
        return None

    return descend([], h.copy(), 0)


def _low_weight_codeword(code: LinearCode, w_limit: int):
    """Smallest-weight codeword with weight <= w_limit, or None.

    Weight-w codewords of C correspond to w linearly dependent columns of
    a parity check matrix H (for the Hermitian product the dependency
    coefficients are conjugated to land back in C).
    """
    f = code.field
    h = code.dual.gen.data
    for w in range(1, min(w_limit, code.n) + 1):
        subset = _find_dependent_columns(f, h, w)
        if subset is None:
            continue
        coeffs = _dependency_coefficients(f, h[:, subset])
        word = np.zeros(code.n, dtype=np.uint8)
        if code.inner_product == HERMITIAN:
            coeffs = f.conj_array(coeffs)
        word[subset] = coeffs
        stacked = np.concatenate([code.gen.data, word[None, :]], axis=0)
        assert matgf._rank_data(f, stacked) == code.k, "low-weight witness not in code"
        return w, word
    return None


def _dependency_coefficients(f: FieldSpec, sub: np.ndarray) -> np.ndarray:
    """Nonzero y with sub @ y = 0, for sub of shape (rows, w) and rank w - 1."""
    w = sub.shape[1]
    reduced, pivots, _ = matgf._rref_data(f, sub)
    assert len(pivots) == w - 1, "dependent subset does not have corank 1"
    free = next(j for j in range(w) if j not in pivots)
    y = np.zeros(w, dtype=np.uint8)
    y[free] = 1
    for i, pc in enumerate(pivots):
        y[pc] = f.neg(int(reduced[i, free]))
    lead = int(y[np.flatnonzero(y)[0]])
    if lead != 1:
        y = f.scale_array(f.inv(lead), y)
    return y
