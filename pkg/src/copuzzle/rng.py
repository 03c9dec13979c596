"""Deterministic seed derivation.

All randomness in the package flows from 64-bit seeds.  Derived seeds are
produced by hashing the parent seed together with string/int labels, so
adding new consumers (puzzles, runs, retry attempts) never shifts the
streams handed to existing ones.
"""

from __future__ import annotations

import hashlib
import random

MAX_SEED = 2**64 - 1


def derive_seed(base: int, *labels: object) -> int:
    """Derive a child seed from `base` and a label path.

    Stable across processes and platforms: uses SHA-256 over a canonical
    text encoding, truncated to 64 bits.
    """
    h = hashlib.sha256()
    h.update(str(base).encode())
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode())
    return int.from_bytes(h.digest()[:8], "big")


def rng_from(base: int, *labels: object) -> random.Random:
    """A `random.Random` seeded from a derived seed."""
    return random.Random(derive_seed(base, *labels))
