"""Deterministic random streams: SplitMix64 feeding a Box-Muller transform.

Every stochastic feature of the toolkit (noise synthesis, weight
initialization, causality-trial sampling) draws from the streams defined
here, so identical seeds give bitwise-identical results regardless of
scheduling or thread count.

Stream definition: the n-th raw output (n = 0, 1, ...) of a stream with
seed ``s`` is ``mix64(s + (n + 1) * 0x9E3779B97F4A7C15)`` where ``mix64``
is the SplitMix64 finalizer.  Because the n-th output is a closed-form
function of (seed, n), any position of the stream can be generated
independently - the property that makes position-keyed per-pixel noise
parallelizable without changing its value.

Gaussian draw g_n consumes raw outputs 2n and 2n+1:
``u1 = ((out_{2n} >> 11) + 1) * 2^-53`` in (0, 1],
``u2 = (out_{2n+1} >> 11) * 2^-53`` in [0, 1),
``g_n = sqrt(-2 ln u1) * cos(2 pi u2)``.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_U53_SCALE = 2.0 ** -53


def mix64(z: np.ndarray) -> np.ndarray:
    """SplitMix64 finalizer, vectorized over a uint64 array."""
    z = np.asarray(z, dtype=np.uint64)
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def raw_outputs(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the SplitMix64 stream ``seed``."""
    if count < 0:
        raise ValueError("count must be non-negative")
    n = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    return mix64(np.uint64(seed & _MASK64) + n * _GOLDEN)


def uniforms(seed: int, start: int, count: int) -> np.ndarray:
    """``count`` uniform float64 draws in [0, 1) at stream positions ``start..``."""
    bits = raw_outputs(seed, start, count)
    return (bits >> np.uint64(11)).astype(np.float64) * _U53_SCALE


def gaussians(seed: int, start: int, count: int) -> np.ndarray:
    """Standard-normal draws ``start .. start+count-1`` of stream ``seed``.

    Draw n consumes raw outputs 2n and 2n+1, so disjoint index ranges never
    overlap and the draws can be produced in any order or partitioning.
    """
    bits = raw_outputs(seed, 2 * start, 2 * count)
    u1 = ((bits[0::2] >> np.uint64(11)).astype(np.float64) + 1.0) * _U53_SCALE
    u2 = (bits[1::2] >> np.uint64(11)).astype(np.float64) * _U53_SCALE
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)


class GaussianStream:
    """Sequential view of the gaussian stream; used for weight initialization."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._pos = 0

    def take(self, count: int) -> np.ndarray:
        out = gaussians(self.seed, self._pos, count)
        self._pos += count
        return out


class UniformStream:
    """Sequential view of the uniform stream; used for trial sampling."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._pos = 0

    def take(self, count: int) -> np.ndarray:
        out = uniforms(self.seed, self._pos, count)
        self._pos += count
        return out

    def integer(self, n: int) -> int:
        """One draw mapped to {0, ..., n-1}."""
        return min(int(self.take(1)[0] * n), n - 1)
