"""Deterministic 64-bit random streams (SplitMix64).

Reproducibility across runs, platforms and thread counts matters more here
than statistical sophistication, so everything random in the package is
driven by SplitMix64 with its standard constants:

    state advance:  s  <- (s + 0x9E3779B97F4A7C15)  mod 2^64
    output mix:     z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
                    z ^= z >> 27;  z *= 0x94D049BB133111EB
                    z ^= z >> 31

The generator is also usable in counter mode: output i of the stream with
seed s is mix64(s + (i+1)*GOLDEN), which has no sequential dependency and
vectorizes. Counter mode gives the prefix property the samplers rely on:
the first k draws are identical no matter how many draws follow.
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 output mix of a 64-bit integer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def derive_stream(seed: int, index: int) -> int:
    """Sub-seed for worker `index` (e.g. one independent stream per vertex)."""
    return mix64(mix64(seed & MASK64) ^ (((index + 1) * GOLDEN) & MASK64))


class SplitMix64:
    """Sequential SplitMix64 stream."""

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN) & MASK64
        return mix64(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via the fixed-point multiply method."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return (self.next_u64() * n) >> 64

    def uniform(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def counter_uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """Draws `count` uniforms in [0,1) at counters start..start+count-1.

    Vectorized counter-mode SplitMix64; draw i of a stream is a pure
    function of (seed, i), so disjoint counter ranges never overlap.
    """
    if count < 0:
        raise ValueError("count must be >= 0")
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK64) + idx * np.uint64(GOLDEN)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z = z ^ (z >> np.uint64(31))
    return (z >> np.uint64(11)).astype(np.float64) * 2.0**-53
