"""Compiled corpus scans over all ideals of one semigroup.

Conventions shared with :mod:`._batch_numpy`:

* ``smem[z]`` is membership of z in S for 0 <= z < len(smem); z past the end is in S.
* ``G`` is an (n, k) table of minimal generators padded with -1, ``ng`` their counts.
* ``rows[i, z]`` is membership of z in ideal i for 0 <= z < W; everything >= W is in.
* ``F`` is the Frobenius number; K = {z >= 0 : F - z not in S}.
"""

from __future__ import annotations

import numpy as np
from numba import njit

PAIR_PROPS = ("C3.15", "P3.21", "P3.22", "C3.24", "P3.25", "C3.26a", "C3.26b")


@njit(cache=True, inline="always")
def _at(arr, z):
    if z < 0:
        return 0
    if z >= arr.shape[0]:
        return 1
    return arr[z]


@njit(cache=True, inline="always")
def _canon(smem, F, z):
    return z >= 0 and _at(smem, F - z) == 0


@njit(cache=True)
def build_rows(G, ng, smem, W):
    n = G.shape[0]
    rows = np.zeros((n, W), dtype=np.uint8)
    for i in range(n):
        for z in range(W):
            for k in range(ng[i]):
                if _at(smem, z - G[i, k]):
                    rows[i, z] = 1
                    break
    return rows


@njit(cache=True)
def _times_m(row, sg, out):
    W = row.shape[0]
    for z in range(W):
        v = 0
        for s in sg:
            if _at(row, z - s):
                v = 1
                break
        out[z] = v


@njit(cache=True)
def _colon_m(row, smem, sg, out):
    W = row.shape[0]
    for z in range(W):
        v = _at(smem, z)
        if v:
            for s in sg:
                if not _at(row, z + s):
                    v = 0
                    break
        out[z] = v


@njit(cache=True)
def _burch_row(row, smem, sg):
    W = row.shape[0]
    a = np.empty(W, dtype=np.uint8)
    c = np.empty(W, dtype=np.uint8)
    b = np.empty(W, dtype=np.uint8)
    _times_m(row, sg, a)
    _colon_m(row, smem, sg, c)
    _times_m(c, sg, b)
    for z in range(W):
        if a[z] != b[z]:
            return True
    return False


@njit(cache=True)
def ideal_stats(rows, G, ng, smem, sg, e, F):
    """Per-ideal verdicts.

    Returns (stats, mrows) where mrows[i] is m * ideal_i and the stats columns are
    type_of_quotient, type_of_ideal, burch, ulrich_witness_ok, socle_criterion,
    double_duality_ok, square_differs (I^2 != I (I:m)).
    """
    n, W = rows.shape
    stats = np.zeros((n, 7), dtype=np.int64)
    mrows = np.zeros((n, W), dtype=np.uint8)
    C = np.empty(W, dtype=np.uint8)
    mC = np.empty(W, dtype=np.uint8)
    gmax = 0
    for s in sg:
        gmax = max(gmax, s)
    span = F + 1 + e + gmax + 2 * W + 2
    D = np.zeros(span, dtype=np.uint8)
    dg = np.empty(span, dtype=np.int64)
    for i in range(n):
        r = rows[i]
        mi = mrows[i]
        _times_m(r, sg, mi)
        _colon_m(r, smem, sg, C)
        _times_m(C, sg, mC)

        tq = 0
        for z in range(W):
            if C[z] and not r[z]:
                tq += 1
        ti = 0
        for z in range(W):
            if r[z] and not _at(r, z - e):
                ok = True
                for s in sg:
                    if not _at(r, z + s - e):
                        ok = False
                        break
                if ok:
                    ti += 1
        burch = 0
        for z in range(W):
            if mi[z] != mC[z]:
                burch = 1
                break
        wit = 1
        for z in range(W):
            if _at(r, z - e) != mi[z]:
                wit = 0
                break
        soc = 1
        for z in range(-gmax, W):
            inside = True
            for s in sg:
                if not _at(r, z + s):
                    inside = False
                    break
            if inside and not _at(smem, z):
                soc = 0
                break

        # K - (K - I) = I.  D = K - I lives on [lo, F + 1), everything above is in.
        gtop = G[i, ng[i] - 1]
        lo = -gtop
        top = F + 1 + e
        for z in range(lo, top):
            v = 1
            for k in range(ng[i]):
                if not _canon(smem, F, z + G[i, k]):
                    v = 0
                    break
            D[z - lo] = v
        nd = 0
        for z in range(lo, top):
            if D[z - lo]:
                keep = True
                for s in sg:
                    y = z - s
                    if y >= lo and D[y - lo]:
                        keep = False
                        break
                if keep:
                    dg[nd] = z
                    nd += 1
        dual = 1
        for z in range(-top - gtop, W):
            v = 1
            for q in range(nd):
                if not _canon(smem, F, z + dg[q]):
                    v = 0
                    break
            if v != _at(r, z):
                dual = 0
                break

        sq = 0
        for z in range(2 * W):
            a = 0
            for k in range(ng[i]):
                if _at(r, z - G[i, k]):
                    a = 1
                    break
            b = 0
            for k in range(ng[i]):
                if _at(C, z - G[i, k]):
                    b = 1
                    break
            if a != b:
                sq = 1
                break

        stats[i, 0] = tq
        stats[i, 1] = ti
        stats[i, 2] = burch
        stats[i, 3] = wit
        stats[i, 4] = soc
        stats[i, 5] = dual
        stats[i, 6] = sq
    return stats, mrows


@njit(cache=True)
def colon_criteria(G, ng, smem, sg, avals):
    """out[i, j]: a_j in m (a_j R :_Q I_i), i.e. some s in m has a_j - s + I_i inside a_j + S."""
    n = G.shape[0]
    out = np.zeros((n, avals.shape[0]), dtype=np.uint8)
    for i in range(n):
        for j in range(avals.shape[0]):
            a = avals[j]
            for s in sg:
                z = a - s
                ok = True
                for k in range(ng[i]):
                    if not _at(smem, z + G[i, k] - a):
                        ok = False
                        break
                if ok:
                    out[i, j] = 1
                    break
    return out


@njit(cache=True)
def downward_violations(rows, G, ng, elias):
    """Pairs (i, j) with ideal_j inside Elias ideal_i but ideal_j not Elias."""
    n = rows.shape[0]
    W = rows.shape[1]
    count = 0
    first_i, first_j = -1, -1
    for j in range(n):
        if elias[j]:
            continue
        for i in range(n):
            if not elias[i] or i == j:
                continue
            inside = True
            for k in range(ng[j]):
                g = G[j, k]
                if g < W and not rows[i, g]:
                    inside = False
                    break
            if inside:
                count += 1
                if first_i < 0:
                    first_i, first_j = i, j
    return count, first_i, first_j


@njit(cache=True)
def _in_principal(G, ng, i, j, smem, shift):
    for k in range(ng[i]):
        for l in range(ng[j]):
            if not _at(smem, G[i, k] + G[j, l] - shift):
                return False
    return True


@njit(cache=True)
def pair_scan(rows, mrows, G, ng, partners, smem, sg, elias, burch, ulrich, active):
    """Witness x (or 0 when x plays no role, -1 when the hypotheses fail) and violation flags.

    Axis 2 follows PAIR_PROPS. ``active[p]`` switches proposition p on.
    """
    n, W = rows.shape
    npart = partners.shape[0]
    npr = 7
    wit = np.full((n, npart, npr), -1, dtype=np.int64)
    viol = np.zeros((n, npart, npr), dtype=np.uint8)
    L = np.empty(W, dtype=np.uint8)
    for i in range(n):
        mi = i
        for q in range(npart):
            j = partners[q]
            top = G[i, 0] + G[j, 0]
            # Jm not inside Im, tested on the generators h + s of Jm
            not_sub = False
            for l in range(ng[j]):
                for s in sg:
                    if not _at(mrows[mi], G[j, l] + s):
                        not_sub = True
                        break
                if not_sub:
                    break

            if active[1]:
                if not_sub:
                    wit[i, q, 1] = 0
                    for z in range(W):
                        L[z] = rows[i, z] | mrows[j, z]
                    if not _burch_row(L, smem, sg):
                        viol[i, q, 1] = 1

            for x in range(1, top + 1):
                if not _at(smem, x):
                    continue
                inx = -1  # lazily evaluated IJ inside xR
                if active[0] and wit[i, q, 0] < 0 or active[2] and wit[i, q, 2] < 0 or active[3] and wit[i, q, 3] < 0:
                    inx = 1 if _in_principal(G, ng, i, j, smem, x) else 0
                if inx == 1:
                    x_in_jm = _at(mrows[j], x) == 1
                    if active[0] and wit[i, q, 0] < 0 and x_in_jm:
                        wit[i, q, 0] = x
                        viol[i, q, 0] = not elias[i]
                    if active[2] and wit[i, q, 2] < 0 and not_sub:
                        wit[i, q, 2] = x
                        viol[i, q, 2] = burch[i] == 0
                    if active[3] and wit[i, q, 3] < 0 and x_in_jm and not burch[i]:
                        wit[i, q, 3] = x
                        viol[i, q, 3] = not (elias[i] and elias[j])
                if 2 * x <= top:
                    need = (active[4] and wit[i, q, 4] < 0) or (active[5] and wit[i, q, 5] < 0) \
                        or (active[6] and wit[i, q, 6] < 0)
                    if need and _in_principal(G, ng, i, j, smem, 2 * x):
                        if _at(rows[i], x) and _at(mrows[j], x):
                            if active[4] and wit[i, q, 4] < 0:
                                wit[i, q, 4] = x
                                viol[i, q, 4] = burch[i] == 1
                            if active[5] and wit[i, q, 5] < 0:
                                wit[i, q, 5] = x
                                viol[i, q, 5] = not (elias[i] and elias[j] and not ulrich[i])
                        if active[6] and wit[i, q, 6] < 0 and _at(rows[j], x) and _at(mrows[i], x):
                            wit[i, q, 6] = x
                            viol[i, q, 6] = not (elias[i] and elias[j] and not ulrich[j])
    return wit, viol


@njit(cache=True)
def _row_gens(row, sg, out):
    W = row.shape[0]
    emax = 0
    for s in sg:
        emax = max(emax, s)
    n = 0
    for z in range(W + emax):
        if _at(row, z):
            keep = True
            for s in sg:
                if _at(row, z - s):
                    keep = False
                    break
            if keep:
                out[n] = z
                n += 1
    return n


@njit(cache=True)
def dual_pair_scan(rows, mrows, G, ng, family, smem, sg, F, burch):
    """For K, I in ``family``: J = (K :_R I); hypotheses I = (K :_R J), J = (K :_R I), Im = Jm.

    K is read from ``rows``. Returns (held, violation) arrays of shape (len(family), len(family)),
    indexed [k, i].
    """
    n, W = rows.shape
    nf = family.shape[0]
    held = np.zeros((nf, nf), dtype=np.uint8)
    viol = np.zeros((nf, nf), dtype=np.uint8)
    Jr = np.empty(W, dtype=np.uint8)
    Jm = np.empty(W, dtype=np.uint8)
    jg = np.empty(W + 64, dtype=np.int64)
    for a in range(nf):
        kk = family[a]
        K = rows[kk]
        for b in range(nf):
            i = family[b]
            for z in range(W):
                v = _at(smem, z)
                if v:
                    for t in range(ng[i]):
                        if not _at(K, z + G[i, t]):
                            v = 0
                            break
                Jr[z] = v
            nj = _row_gens(Jr, sg, jg)
            ok = True
            for z in range(W):
                v = _at(smem, z)
                if v:
                    for t in range(nj):
                        if not _at(K, z + jg[t]):
                            v = 0
                            break
                if v != rows[i, z]:
                    ok = False
                    break
            if not ok:
                continue
            _times_m(Jr, sg, Jm)
            for z in range(W):
                if Jm[z] != mrows[i, z]:
                    ok = False
                    break
            if not ok:
                continue
            held[a, b] = 1
            if (burch[i] == 1) != _burch_row(Jr, smem, sg):
                viol[a, b] = 1
    return held, viol
