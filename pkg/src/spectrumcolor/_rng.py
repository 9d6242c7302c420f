"""Seed plumbing.

Python-level randomness uses numpy's PCG64; the numerical kernels carry
their own MINSTD stream (see _kernels) so the numba and fallback paths
stay bit-identical. Derived seeds are a pure function of their inputs.
"""

from __future__ import annotations

import hashlib

import numpy as np

MINSTD_MOD = 2147483647  # 2**31 - 1


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from a tuple of labels/values."""
    blob = "|".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.blake2b(blob, digest_size=8).digest(), "big")


def minstd_state(seed: int) -> int:
    """Map a 64-bit seed into a valid MINSTD state (1..m-2)."""
    return seed % (MINSTD_MOD - 1) + 1


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))
