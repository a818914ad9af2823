"""numba kernels. Signatures match ``_kernels_numpy`` one-for-one.

Windowed sets use one convention throughout: ``mask[i]`` says whether
``base + i`` is a member, everything below ``base`` is absent and everything
at or past ``base + len(mask)`` is present.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _member(mask, base, z):
    i = z - base
    if i < 0:
        return False
    if i >= mask.shape[0]:
        return True
    return mask[i] != 0


@njit(cache=True)
def ord_table(gens, width):
    out = np.full(width, -1, dtype=np.int64)
    if width == 0:
        return out
    out[0] = 0
    for s in range(1, width):
        best = -1
        for a in gens:
            if a <= s and out[s - a] >= 0 and out[s - a] + 1 > best:
                best = out[s - a] + 1
        out[s] = best
    return out


@njit(cache=True)
def shift_reduce(mask, base, shifts, out_base, out_len, require_all):
    out = np.zeros(out_len, dtype=np.uint8)
    for i in range(out_len):
        z = out_base + i
        if require_all:
            ok = True
            for d in shifts:
                if not _member(mask, base, z + d):
                    ok = False
                    break
        else:
            ok = False
            for d in shifts:
                if _member(mask, base, z + d):
                    ok = True
                    break
        if ok:
            out[i] = 1
    return out


@njit(cache=True)
def generator_flags(mask, base, sgens, lo, n):
    out = np.zeros(n, dtype=np.uint8)
    for i in range(n):
        z = lo + i
        if not _member(mask, base, z):
            continue
        keep = True
        for a in sgens:
            if _member(mask, base, z - a):
                keep = False
                break
        if keep:
            out[i] = 1
    return out
