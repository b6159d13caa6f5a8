"""Shared tunables for exhaustive computations."""

# Largest field order for which exhaustive enumeration (permutation tests,
# value tables, interpolation, catalog searches) is attempted by default.
DEFAULT_EXHAUSTIVE_CAP = 1 << 16

# Default seed for every randomized routine, so repeated runs agree.
DEFAULT_SEED = 12345

# Points drawn by sampled (non-exhaustive) inverse verification.
DEFAULT_SAMPLES = 64


def resolve_cap(cap=None):
    """Return the effective exhaustive cap: the override, or the default."""
    if cap is None:
        return DEFAULT_EXHAUSTIVE_CAP
    cap = int(cap)
    if cap < 2:
        raise ValueError("exhaustive cap must be at least 2")
    return cap
