"""Seeded random generator construction shared by all sampling code.

Every sampling function takes an explicit seed; there is no module-level
generator and no hidden state.  The bit generator is the counter-based
Philox engine, whose stream for a given seed is identical on every
platform, so seeded runs are reproducible everywhere.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameter


def make_rng(seed: int) -> np.random.Generator:
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise InvalidParameter(f"seed must be a nonnegative integer, got {seed!r}")
    return np.random.Generator(np.random.Philox(seed))
