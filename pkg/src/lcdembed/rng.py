"""SplitMix64, a tiny fixed-for-all-time 64-bit generator.

Search results are pinned in golden tests, so the generator must produce
the same stream on every platform and in every future release.  SplitMix64
is trivial to specify exactly, which is why it is used here instead of a
library generator whose stream may change between versions.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic stream of 64-bit words from a single integer seed."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_uint64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), exact via rejection sampling."""
        if n <= 0:
            raise ValueError("below() requires a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_uint64()
            if r < limit:
                return r % n


def stream_for_trial(seed: int, index: int) -> SplitMix64:
    """Independent stream for one search trial, derived from (seed, index).

    Both inputs pass through the SplitMix64 finalizer before combining so
    that consecutive trial indices do not produce overlapping streams.
    """
    return SplitMix64(_mix(seed) ^ _mix((index + 1) * _GAMMA))
