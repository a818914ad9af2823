"""Pure-numpy kernels, used when numba is unavailable or disabled."""

import numpy as np


def _extended(mask, base, lo, hi):
    """Membership of [lo, hi) as a uint8 array under the window convention."""
    out = np.zeros(hi - lo, dtype=np.uint8)
    top = base + mask.shape[0]
    a, b = max(lo, base), min(hi, top)
    if a < b:
        out[a - lo:b - lo] = mask[a - base:b - base]
    if hi > top:
        out[max(top, lo) - lo:] = 1
    return out


def ord_table(gens, width):
    gens = np.asarray(gens, dtype=np.int64)
    out = np.full(width, -1, dtype=np.int64)
    if width == 0:
        return out
    out[0] = 0
    for s in range(1, width):
        prev = s - gens[gens <= s]
        if prev.size:
            vals = out[prev]
            vals = vals[vals >= 0]
            if vals.size:
                out[s] = vals.max() + 1
    return out


def shift_reduce(mask, base, shifts, out_base, out_len, require_all):
    shifts = np.asarray(shifts, dtype=np.int64)
    if out_len <= 0:
        return np.zeros(0, dtype=np.uint8)
    if shifts.size == 0:
        return np.full(out_len, 1 if require_all else 0, dtype=np.uint8)
    lo = out_base + int(shifts.min())
    hi = out_base + out_len + int(shifts.max())
    ext = _extended(mask, base, lo, hi)
    idx = np.arange(out_len)[None, :] + (shifts - shifts.min())[:, None]
    picked = ext[idx]
    red = picked.all(axis=0) if require_all else picked.any(axis=0)
    return red.astype(np.uint8)


def generator_flags(mask, base, sgens, lo, n):
    sgens = np.asarray(sgens, dtype=np.int64)
    if n <= 0:
        return np.zeros(0, dtype=np.uint8)
    here = _extended(mask, base, lo, lo + n).astype(bool)
    below = shift_reduce(mask, base, -sgens, lo, n, False).astype(bool)
    return (here & ~below).astype(np.uint8)
