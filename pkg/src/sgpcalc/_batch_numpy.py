"""Pure-numpy corpus scans; same contracts as :mod:`._batch_numba`."""

from __future__ import annotations

import numpy as np

PAIR_PROPS = ("C3.15", "P3.21", "P3.22", "C3.24", "P3.25", "C3.26a", "C3.26b")


def _ext(arr, lo, hi):
    """Membership of [lo, hi) under the 'absent below 0, present past the end' rule."""
    z = np.arange(lo, hi)
    out = np.ones(z.shape, dtype=np.uint8)
    out[z < 0] = 0
    inside = (z >= 0) & (z < arr.shape[0])
    out[inside] = arr[z[inside]]
    return out


def _at_many(arr, z):
    z = np.asarray(z)
    out = np.ones(z.shape, dtype=np.uint8)
    out[z < 0] = 0
    inside = (z >= 0) & (z < arr.shape[0])
    out[inside] = arr[z[inside]]
    return out


def _canon(smem, F, z):
    z = np.asarray(z)
    return ((z >= 0) & (_at_many(smem, F - z) == 0)).astype(np.uint8)


def build_rows(G, ng, smem, W):
    n = G.shape[0]
    rows = np.zeros((n, W), dtype=np.uint8)
    for i in range(n):
        for k in range(ng[i]):
            rows[i] |= _ext(smem, -int(G[i, k]), W - int(G[i, k]))
    return rows


def _times_m(row, sg):
    W = row.shape[0]
    out = np.zeros(W, dtype=np.uint8)
    for s in sg:
        out |= _ext(row, -int(s), W - int(s))
    return out


def _colon_m(row, smem, sg):
    W = row.shape[0]
    out = _ext(smem, 0, W)
    for s in sg:
        out &= _ext(row, int(s), W + int(s))
    return out


def _burch_row(row, smem, sg):
    return bool(np.any(_times_m(row, sg) != _times_m(_colon_m(row, smem, sg), sg)))


def _row_gens(row, sg):
    W = row.shape[0]
    emax = int(max(sg))
    cand = _ext(row, 0, W + emax).astype(bool)
    for s in sg:
        cand &= _ext(row, -int(s), W + emax - int(s)) == 0
    return np.flatnonzero(cand)


def ideal_stats(rows, G, ng, smem, sg, e, F):
    n, W = rows.shape
    stats = np.zeros((n, 7), dtype=np.int64)
    mrows = np.zeros((n, W), dtype=np.uint8)
    gmax = int(max(sg))
    for i in range(n):
        r = rows[i]
        gens = G[i, : ng[i]]
        mi = _times_m(r, sg)
        mrows[i] = mi
        C = _colon_m(r, smem, sg)
        mC = _times_m(C, sg)
        tq = int(np.sum((C == 1) & (r == 0)))

        soc = r.astype(bool) & (_ext(r, -e, W - e) == 0)
        for s in sg:
            soc &= _ext(r, int(s) - e, W + int(s) - e) == 1
        ti = int(np.sum(soc))

        burch = int(np.any(mi != mC))
        wit = int(np.array_equal(_ext(r, -e, W - e), mi))

        inside = np.ones(W + gmax, dtype=bool)
        for s in sg:
            inside &= _ext(r, -gmax + int(s), W + int(s)) == 1
        socc = int(not np.any(inside & (_ext(smem, -gmax, W) == 0)))

        gtop = int(gens[-1])
        lo, top = -gtop, F + 1 + e
        zs = np.arange(lo, top)
        D = np.ones(zs.shape, dtype=bool)
        for g in gens:
            D &= _canon(smem, F, zs + int(g)) == 1
        keep = D.copy()
        for s in sg:
            y = zs - int(s)
            prev = np.zeros(zs.shape, dtype=bool)
            ok = y >= lo
            prev[ok] = D[y[ok] - lo]
            keep &= ~prev
        dg = zs[keep]
        zz = np.arange(-top - gtop, W)
        E2 = np.ones(zz.shape, dtype=np.uint8)
        for d in dg:
            E2 &= _canon(smem, F, zz + int(d))
        dual = int(np.array_equal(E2, _at_many(r, zz)))

        sq_a = np.zeros(2 * W, dtype=np.uint8)
        sq_b = np.zeros(2 * W, dtype=np.uint8)
        for g in gens:
            sq_a |= _ext(r, -int(g), 2 * W - int(g))
            sq_b |= _ext(C, -int(g), 2 * W - int(g))
        sq = int(np.any(sq_a != sq_b))

        stats[i] = (tq, ti, burch, wit, socc, dual, sq)
    return stats, mrows


def colon_criteria(G, ng, smem, sg, avals):
    n = G.shape[0]
    out = np.zeros((n, avals.shape[0]), dtype=np.uint8)
    for i in range(n):
        gens = G[i, : ng[i]]
        for j, a in enumerate(avals):
            z = a - np.asarray(sg)  # candidate a - s, one per generator s
            ok = np.ones(z.shape, dtype=bool)
            for g in gens:
                ok &= _at_many(smem, z + g - a) == 1
            out[i, j] = int(ok.any())
    return out


def downward_violations(rows, G, ng, elias):
    n, W = rows.shape
    count, first = 0, (-1, -1)
    el = np.flatnonzero(elias)
    for j in np.flatnonzero(~elias.astype(bool)):
        gens = G[j, : ng[j]]
        gens = gens[gens < W]
        inside = np.all(rows[np.ix_(el, gens)] == 1, axis=1) if gens.size else np.ones(el.size, bool)
        inside &= el != j
        hits = el[inside]
        if hits.size:
            if first[0] < 0:
                first = (int(hits[0]), int(j))
            count += int(hits.size)
    return count, first[0], first[1]


def _in_principal(G, ng, i, j, smem, shift):
    a = G[i, : ng[i]][:, None] + G[j, : ng[j]][None, :] - shift
    return bool(np.all(_at_many(smem, a) == 1))


def pair_scan(rows, mrows, G, ng, partners, smem, sg, elias, burch, ulrich, active):
    n, W = rows.shape
    npart = partners.shape[0]
    wit = np.full((n, npart, 7), -1, dtype=np.int64)
    viol = np.zeros((n, npart, 7), dtype=np.uint8)
    for i in range(n):
        for q, j in enumerate(partners):
            top = int(G[i, 0] + G[j, 0])
            hs = (G[j, : ng[j]][:, None] + np.asarray(sg)[None, :]).ravel()
            not_sub = bool(np.any(_at_many(mrows[i], hs) == 0))
            if active[1] and not_sub:
                wit[i, q, 1] = 0
                viol[i, q, 1] = not _burch_row(rows[i] | mrows[j], smem, sg)
            xs = [x for x in range(1, top + 1) if _at_many(smem, x) == 1]
            for x in xs:
                if _in_principal(G, ng, i, j, smem, x):
                    x_in_jm = bool(_at_many(mrows[j], x))
                    if active[0] and wit[i, q, 0] < 0 and x_in_jm:
                        wit[i, q, 0] = x
                        viol[i, q, 0] = not elias[i]
                    if active[2] and wit[i, q, 2] < 0 and not_sub:
                        wit[i, q, 2] = x
                        viol[i, q, 2] = burch[i] == 0
                    if active[3] and wit[i, q, 3] < 0 and x_in_jm and not burch[i]:
                        wit[i, q, 3] = x
                        viol[i, q, 3] = not (elias[i] and elias[j])
                if 2 * x <= top and _in_principal(G, ng, i, j, smem, 2 * x):
                    if _at_many(rows[i], x) and _at_many(mrows[j], x):
                        if active[4] and wit[i, q, 4] < 0:
                            wit[i, q, 4] = x
                            viol[i, q, 4] = burch[i] == 1
                        if active[5] and wit[i, q, 5] < 0:
                            wit[i, q, 5] = x
                            viol[i, q, 5] = not (elias[i] and elias[j] and not ulrich[i])
                    if active[6] and wit[i, q, 6] < 0 and _at_many(rows[j], x) and _at_many(mrows[i], x):
                        wit[i, q, 6] = x
                        viol[i, q, 6] = not (elias[i] and elias[j] and not ulrich[j])
    return wit, viol


def dual_pair_scan(rows, mrows, G, ng, family, smem, sg, F, burch):
    n, W = rows.shape
    nf = family.shape[0]
    held = np.zeros((nf, nf), dtype=np.uint8)
    viol = np.zeros((nf, nf), dtype=np.uint8)
    S = _ext(smem, 0, W)
    for a, kk in enumerate(family):
        K = rows[kk]
        for b, i in enumerate(family):
            Jr = S.copy()
            for g in G[i, : ng[i]]:
                Jr &= _ext(K, int(g), W + int(g))
            KJ = S.copy()
            for y in _row_gens(Jr, sg):
                KJ &= _ext(K, int(y), W + int(y))
            if not np.array_equal(KJ, rows[i]):
                continue
            if not np.array_equal(_times_m(Jr, sg), mrows[i]):
                continue
            held[a, b] = 1
            viol[a, b] = (burch[i] == 1) != _burch_row(Jr, smem, sg)
    return held, viol
