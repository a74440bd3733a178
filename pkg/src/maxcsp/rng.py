"""Counter-based random bits: word (seed, index) -> value, no stream state.

SplitMix64: the value at counter c is finalize(seed + (c+1)*GAMMA). Every
output is a pure function of (seed, counter), so disjoint index ranges can
be generated independently, in any order, with identical results.
"""

from __future__ import annotations

import numpy as np

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = 0xFFFFFFFFFFFFFFFF


def _mix(x: np.ndarray) -> np.ndarray:
    x = (x ^ (x >> np.uint64(30))) * _MIX1
    x = (x ^ (x >> np.uint64(27))) * _MIX2
    return x ^ (x >> np.uint64(31))


def random_words(seed: int, start: int, count: int, words_per_item: int) -> np.ndarray:
    """(count, words_per_item) uint64 block for item indices [start, start+count)."""
    idx = np.arange(start, start + count, dtype=np.uint64)
    c = idx[:, None] * np.uint64(words_per_item) + np.arange(words_per_item, dtype=np.uint64)[None, :]
    x = np.uint64(seed & _MASK64) + (c + np.uint64(1)) * _GAMMA
    return _mix(x)


def assignment_bits(seed: int, start: int, count: int, num_vars: int) -> np.ndarray:
    """(count, num_vars) uint8 matrix of uniform assignment bits.

    Row i holds the assignment for iteration index start+i; it depends only
    on (seed, start+i), never on the batch boundaries.
    """
    words_per_item = (num_vars + 63) // 64
    words = random_words(seed, start, count, words_per_item)
    out = np.empty((count, num_vars), dtype=np.uint8)
    for v in range(num_vars):
        out[:, v] = ((words[:, v >> 6] >> np.uint64(v & 63)) & np.uint64(1)).astype(np.uint8)
    return out
