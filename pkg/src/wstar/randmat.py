"""Deterministic random matrix draws.

Streams are counter-based (Philox) and keyed by (seed, index), so the
i-th draw of a run is the same no matter what order trials execute in,
and the same on every platform.
"""

import numpy as np

_MASK64 = (1 << 64) - 1


def random_state(seed: int, index: int = 0) -> np.random.Generator:
    """Independent generator for stream (seed, index)."""
    return np.random.Generator(np.random.Philox(key=((index & _MASK64) << 64) | (seed & _MASK64)))


def random_complex(rng: np.random.Generator, rows: int, cols: int | None = None) -> np.ndarray:
    """Standard complex Gaussian matrix."""
    if cols is None:
        cols = rows
    return rng.normal(size=(rows, cols)) + 1j * rng.normal(size=(rows, cols))


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    """Hermitian draw A + A*."""
    a = random_complex(rng, n)
    return a + a.conj().T


def random_positive(rng: np.random.Generator, n: int) -> np.ndarray:
    """Positive semidefinite draw A A*."""
    a = random_complex(rng, n)
    return a @ a.conj().T


def random_projection(rng: np.random.Generator, n: int, rank: int) -> np.ndarray:
    """Orthogonal projection onto a Haar-random rank-dimensional subspace."""
    if not 1 <= rank <= n:
        raise ValueError(f"rank must be in 1..{n}, got {rank}")
    q, _ = np.linalg.qr(random_complex(rng, n, rank))
    return q @ q.conj().T
