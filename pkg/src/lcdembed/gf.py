"""Exact arithmetic for GF(2), GF(3), GF(4), and odd prime fields up to GF(251).

Field elements are integer indices in ``[0, q)``.  For GF(4) the indices
0, 1, 2, 3 stand for 0, 1, w, v where w is a root of x^2 + x + 1 and
v = w^2 = w + 1.  With that encoding GF(4) addition is XOR of indices and
multiplication, inversion, and conjugation go through 4x4 lookup tables.
Prime fields use arithmetic mod p with a precomputed inverse table.

Conjugation (x -> x^q on GF(q^2), the identity on prime fields) is what
distinguishes the Hermitian inner product from the Euclidean one.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import FieldMismatchError

PRIME = "prime"
QUADRATIC_EXTENSION = "quadratic-extension"

MAX_PRIME = 251

# GF(4) = GF(2)[w]/(w^2+w+1) with indices 0,1,w,v; addition is XOR.
GF4_MUL = np.array(
    [[0, 0, 0, 0],
     [0, 1, 2, 3],
     [0, 2, 3, 1],
     [0, 3, 1, 2]], dtype=np.uint8)
# x^-1 = x^2 for the cubic roots of unity, so INV and CONJ coincide on GF(4).
GF4_INV = np.array([0, 1, 3, 2], dtype=np.uint8)
GF4_CONJ = np.array([0, 1, 3, 2], dtype=np.uint8)

_GF4_SYMBOLS = ("0", "1", "w", "v")


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """One supported finite field together with its arithmetic tables.

    Immutable after construction; every operation is a pure function of its
    arguments, so instances may be shared freely between threads.  Use the
    :func:`field` factory, which interns one instance per order.
    """

    __slots__ = ("order", "kind", "conj_exponent", "characteristic",
                 "_add", "_mul", "_inv", "_neg", "_conj")

    def __init__(self, order: int):
        if order == 4:
            self.kind = QUADRATIC_EXTENSION
            self.characteristic = 2
            self.conj_exponent = 2
            self._mul = GF4_MUL
            self._inv = GF4_INV
            self._conj = GF4_CONJ
            idx = np.arange(4, dtype=np.uint8)
            self._add = idx[:, None] ^ idx[None, :]
            self._neg = idx.copy()
        elif order == 2 or _is_odd_prime(order):
            if order > MAX_PRIME:
                raise ValueError(f"unsupported field order {order}: primes above "
                                 f"{MAX_PRIME} are not supported")
            self.kind = PRIME
            self.characteristic = order
            self.conj_exponent = 1
            idx = np.arange(order, dtype=np.int32)
            self._add = ((idx[:, None] + idx[None, :]) % order).astype(np.uint8)
            self._mul = ((idx[:, None] * idx[None, :]) % order).astype(np.uint8)
            inv = np.zeros(order, dtype=np.uint8)
            for a in range(1, order):
                inv[a] = pow(a, order - 2, order)
            self._inv = inv
            self._neg = ((order - idx) % order).astype(np.uint8)
            self._conj = idx.astype(np.uint8)
        else:
            raise ValueError(f"unsupported field order {order}: must be 2, 3, 4, "
                             f"or an odd prime <= {MAX_PRIME}")
        self.order = order
        for t in ("_add", "_mul", "_inv", "_neg", "_conj"):
            getattr(self, t).setflags(write=False)

    # -- scalar operations -------------------------------------------------

    def _check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise FieldMismatchError(f"field mismatch: {a} is not an element of GF({self.order})")
        return a

    def add(self, a: int, b: int) -> int:
        return int(self._add[self._check(a), self._check(b)])

    def sub(self, a: int, b: int) -> int:
        return int(self._add[self._check(a), self._neg[self._check(b)]])

    def mul(self, a: int, b: int) -> int:
        return int(self._mul[self._check(a), self._check(b)])

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise ZeroDivisionError("zero has no inverse")
        return int(self._inv[a])

    def neg(self, a: int) -> int:
        return int(self._neg[self._check(a)])

    def conj(self, a: int) -> int:
        """Conjugate: identity on prime fields, x -> x^2 on GF(4)."""
        return int(self._conj[self._check(a)])

    def elements(self) -> range:
        return range(self.order)

    # -- vectorized operations on uint8 arrays (inputs assumed valid) ------

    def add_arrays(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.order == 4:
            return x ^ y
        if self.order == 2:
            return x ^ y
        return ((x.astype(np.int16) + y) % self.order).astype(np.uint8)

    def sub_arrays(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.characteristic == 2:
            return x ^ y
        return ((x.astype(np.int16) - y) % self.order).astype(np.uint8)

    def mul_arrays(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.order == 4:
            return GF4_MUL[x, y]
        return ((x.astype(np.int32) * y) % self.order).astype(np.uint8)

    def scale_array(self, c: int, x: np.ndarray) -> np.ndarray:
        if self.order == 4:
            return GF4_MUL[c, x]
        return ((int(c) * x.astype(np.int32)) % self.order).astype(np.uint8)

    def conj_array(self, x: np.ndarray) -> np.ndarray:
        if self.conj_exponent == 1:
            return x.copy()
        return GF4_CONJ[x]

    # -- symbol alphabet (shared with the matrix file format) --------------

    def to_symbol(self, a: int) -> str:
        if self.order == 4:
            return _GF4_SYMBOLS[self._check(a)]
        return str(self._check(a))

    def from_symbol(self, token: str) -> int:
        if self.order == 4:
            try:
                return _GF4_SYMBOLS.index(token)
            except ValueError:
                raise ValueError(f"invalid GF(4) symbol {token!r}") from None
        try:
            value = int(token, 10)
        except ValueError:
            raise ValueError(f"invalid GF({self.order}) symbol {token!r}") from None
        if not 0 <= value < self.order:
            raise ValueError(f"invalid GF({self.order}) symbol {token!r}")
        return value

    def symbols(self) -> tuple[str, ...]:
        if self.order == 4:
            return _GF4_SYMBOLS
        return tuple(str(v) for v in range(self.order))

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.order))

    def __repr__(self) -> str:
        return f"GF({self.order})"


@lru_cache(maxsize=None)
def field(order: int) -> FieldSpec:
    """Interned FieldSpec for a supported order (2, 3, 4, odd prime <= 251)."""
    return FieldSpec(order)


GF2 = field(2)
GF3 = field(3)
GF4 = field(4)
