"""Shared helpers: seeded RNG streams and deterministic serialization."""

from __future__ import annotations

import numpy as np


def spawn_rng(seed: int, *path: int) -> np.random.Generator:
    """Independent generator for a task addressed by ``path`` under one seed.

    Uses the counter-based Philox bit generator keyed through SeedSequence
    spawn keys, so parallel tasks get reproducible, non-overlapping streams
    regardless of execution order.
    """
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(ss))


def format_float(x: float) -> str:
    """Shortest round-trip decimal form; deterministic across runs."""
    return repr(float(x))
