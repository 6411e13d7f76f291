"""Deterministic random number generation.

A splitmix64 stream expands a 64-bit seed into the four xoshiro256++ state
words; all uniform/Gaussian draws come from the xoshiro stream.  The whole
chain is integer arithmetic plus libm, so identical seeds give bit-identical
draw sequences on every platform.
"""

from __future__ import annotations

import math

_MASK = 0xFFFFFFFFFFFFFFFF


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK


class SplitMix64:
    """Seed expander; also used to derive independent run seeds."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)


class Xoshiro256pp:
    """xoshiro256++ with splitmix64 state initialization."""

    def __init__(self, seed: int):
        sm = SplitMix64(seed)
        self._s = [sm.next(), sm.next(), sm.next(), sm.next()]
        self._spare_gauss: float | None = None

    def next_u64(self) -> int:
        s = self._s
        result = (_rotl((s[0] + s[3]) & _MASK, 23) + s[0]) & _MASK
        t = (s[1] << 17) & _MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def uniform(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform_in(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.uniform()

    def gauss(self, sigma: float = 1.0) -> float:
        """Standard Box-Muller; the sine draw is cached as a spare."""
        if self._spare_gauss is not None:
            z = self._spare_gauss
            self._spare_gauss = None
            return z * sigma
        # u1 in (0, 1] so log() is always defined
        u1 = ((self.next_u64() >> 11) + 1) * 2.0**-53
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        self._spare_gauss = r * math.sin(2.0 * math.pi * u2)
        return r * math.cos(2.0 * math.pi * u2) * sigma

    def below(self, n: int) -> int:
        """Integer in [0, n). Plain modulo; the bias is irrelevant here."""
        return self.next_u64() % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seeds(base_seed: int, count: int) -> list[int]:
    """Independent run seeds from one base seed (successive splitmix64 outputs)."""
    sm = SplitMix64(base_seed)
    return [sm.next() for _ in range(count)]
