"""SplitMix64: portabler, bit-exakter 64-Bit-Zufallsgenerator.

Pythons random.Random ist an CPython gebunden; Startpositionen sollen aber
plattform- und sprachunabhängig reproduzierbar sein. Konstanten:

    GOLDEN_GAMMA = 0x9E3779B97F4A7C15
    mix64(z):  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
               z = (z ^ (z >> 27)) * 0x94D049BB133111EB
               z ^ (z >> 31)                      (alles mod 2^64)
"""

from __future__ import annotations

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """Avalanche-Finalizer von SplitMix64."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, episode_index: int) -> int:
    """Episoden-Seed aus Basis-Seed und Episodenindex."""
    return mix64((base_seed + GOLDEN_GAMMA * (episode_index + 1)) & MASK64)


class SplitMix64:
    """Deterministischer Zufallsstrom mit 64-Bit-Zustand."""

    def __init__(self, seed: int):
        self._seed = seed & MASK64
        self._state = self._seed

    @property
    def seed(self) -> int:
        return self._seed

    def next_u64(self) -> int:
        self._state = (self._state + GOLDEN_GAMMA) & MASK64
        return mix64(self._state)

    def randbelow(self, n: int) -> int:
        """Gleichverteilt in [0, n) per Rejection-Sampling (kein Modulo-Bias)."""
        if n <= 0:
            raise ValueError(f"n muss positiv sein, war {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            wert = self.next_u64()
            if wert < limit:
                return wert % n
