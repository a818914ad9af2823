"""Corpus-wide proposition search and property sweeps.

Work is split per semigroup. Each worker returns plain data, and results are
merged in corpus order, so a report does not depend on the worker count.
Every violation the scans flag is replayed through the per-instance checker
before it is written out. A disagreement raises :class:`BackendDisagreement`.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass

import numpy as np

from . import kernels
from .classify import PROPOSITION_IDS, InstanceSpec, _burch, check_proposition
from .corpus import SearchConfig, ideal_generator_sets, search_corpus
from .errors import BackendDisagreement
from .ideals import colength, colon_r, ideal_from_generators, power_of_maximal, principal, valuation_truncation
from .invariants import elias_index, gll_monomial, gr_is_cm, samuel_length, ulrich_index
from .semigroup import NumericalSemigroup, make_semigroup

SCHEMA_VERSION = 1

PER_SEMIGROUP = ("P2.3g", "L2.13", "T3.5", "C3.8a")
PER_ELEMENT = ("T2.20", "C2.21")
PER_IDEAL = ("P3.11", "P3.14", "P3.18", "P3.19")
PAIR = ("C3.15", "P3.21", "P3.22", "C3.24", "P3.25", "C3.26a", "C3.26b")
TRIPLE = ("P3.27",)
SEARCHABLE = PER_SEMIGROUP + PER_ELEMENT + PER_IDEAL + PAIR + TRIPLE

assert set(SEARCHABLE) == set(PROPOSITION_IDS)


@dataclass
class SemigroupBatch:
    """Dense membership rows for every enumerated ideal of one semigroup."""

    S: NumericalSemigroup
    bound: int
    gensets: list
    G: np.ndarray
    ng: np.ndarray
    smem: np.ndarray
    sg: np.ndarray
    W: int
    rows: np.ndarray
    stats: np.ndarray
    mrows: np.ndarray

    @classmethod
    def build(cls, S: NumericalSemigroup, config: SearchConfig, backend=None):
        impl = kernels.batch if backend is None else kernels.batch_module(backend)
        bound = config.bound_for(S)
        gensets = ideal_generator_sets(S, bound, config.max_gens)
        n, k = len(gensets), max(config.max_gens, 1)
        G = np.full((n, k), -1, dtype=np.int64)
        ng = np.zeros(n, dtype=np.int64)
        for i, gs in enumerate(gensets):
            G[i, : len(gs)] = gs
            ng[i] = len(gs)
        c, e = S.conductor, S.multiplicity
        W = bound + c + e + 1
        L = 2 * W + 2 * e
        smem = np.fromiter((z in S for z in range(L)), dtype=np.uint8, count=L)
        sg = np.asarray(S.generators, dtype=np.int64)
        rows = impl.build_rows(G, ng, smem, W)
        stats, mrows = impl.ideal_stats(rows, G, ng, smem, sg, e, S.frobenius)
        return cls(S, bound, gensets, G, ng, smem, sg, W, rows, stats, mrows)

    @property
    def elias(self):
        return self.stats[:, 0] == self.stats[:, 1]

    @property
    def burch(self):
        return self.stats[:, 2].astype(bool)

    @property
    def ulrich(self):
        return self.ng == self.S.multiplicity

    def ideal(self, i):
        return ideal_from_generators(self.S, self.gensets[i])

    def partners(self, config: SearchConfig) -> np.ndarray:
        return np.asarray([i for i, gs in enumerate(self.gensets) if len(gs) <= config.partner_max_gens],
                          dtype=np.int64)

    def elements(self):
        return [a for a in range(1, self.bound + 1) if a in self.S]


# -- per-semigroup worker ---------------------------------------------------------------

def _key(S, I=None, J=None, K=None, x=None):
    out = {"S": list(S.generators)}
    if I is not None:
        out["I"] = list(I)
    if J is not None:
        out["J"] = list(J)
    if K is not None:
        out["K"] = list(K)
    if x is not None:
        out["x"] = int(x)
    return out


def _replay(prop, inst: InstanceSpec, expect_violation: bool):
    out = check_proposition(prop, inst)
    if out.violation != expect_violation:
        raise BackendDisagreement(
            f"{prop} on {inst.descriptor()}: scan says violation={expect_violation}, checker says {out.violation}"
        )
    return out


class _Collector:
    """Per-proposition tallies for one semigroup.

    Every violation is counted. Only the first ``samples`` per proposition, and
    any pinned instance, are replayed and written out with a certificate.
    """

    def __init__(self, S, config: SearchConfig):
        self.S = S
        self.samples = config.samples_per_semigroup
        self.pinned = {(p, tuple(k.get("I", ())), tuple(k.get("J", ())), tuple(k.get("K", ())))
                       for p, k in config.pinned if tuple(k["S"]) == S.generators}
        self.tallies = {}

    def tally(self, prop):
        return self.tallies.setdefault(
            prop, {"instances_checked": 0, "hypotheses_held": 0, "violation_count": 0, "violations": []})

    def count(self, prop, checked, held):
        t = self.tally(prop)
        t["instances_checked"] += int(checked)
        t["hypotheses_held"] += int(held)

    def violation(self, prop, key, make_instance):
        self.bulk(prop, [None], lambda _: (key, make_instance))

    def bulk(self, prop, hits, describe):
        """Record many violations; ``describe(hit)`` gives (key, instance factory)."""
        t = self.tally(prop)
        t["violation_count"] += len(hits)
        scan_all = any(tag[0] == prop for tag in self.pinned)
        for n, hit in enumerate(hits):
            if n >= self.samples and not scan_all:
                break
            key, make_instance = describe(hit)
            tag = (prop, tuple(key.get("I", ())), tuple(key.get("J", ())), tuple(key.get("K", ())))
            if n < self.samples or tag in self.pinned:
                t["violations"].append(_replay(prop, make_instance(), True).certificate())


def scan_semigroup(gens, config: SearchConfig, backend=None) -> dict:
    S = make_semigroup(gens)
    props = set(config.props or SEARCHABLE)
    impl = kernels.batch if backend is None else kernels.batch_module(backend)
    col = _Collector(S, config)

    for prop in PER_SEMIGROUP:
        if prop in props:
            out = check_proposition(prop, InstanceSpec(S))
            col.count(prop, 1, out.hypotheses_hold)
            if out.violation:
                col.violation(prop, _key(S), lambda: InstanceSpec(S))

    if S.symmetric and props & set(PER_ELEMENT):
        for a in S.elements(1, config.bound_for(S) + 1):
            for prop in PER_ELEMENT:
                if prop in props:
                    out = check_proposition(prop, InstanceSpec(S, x=a))
                    col.count(prop, 1, out.hypotheses_hold)
                    if out.violation:
                        col.violation(prop, _key(S, x=a), lambda a=a: InstanceSpec(S, x=a))

    if not props & set(PER_IDEAL + PAIR + TRIPLE):
        return col.tallies

    batch = SemigroupBatch.build(S, config, backend)
    n = len(batch.gensets)
    gs = batch.gensets
    elias, burch, ulrich = batch.elias, batch.burch, batch.ulrich
    avals = np.asarray(batch.elements(), dtype=np.int64)

    if "P3.11" in props:
        crit = impl.colon_criteria(batch.G, batch.ng, batch.smem, batch.sg, avals)
        col.count("P3.11", crit.size, crit.sum())
        col.bulk("P3.11", list(zip(*np.nonzero(crit & ~elias[:, None]))),
                 lambda h: (_key(S, gs[h[0]], x=avals[h[1]]),
                            lambda: InstanceSpec(S, I=batch.ideal(h[0]), x=int(avals[h[1]]))))

    if "P3.14" in props:
        sgens = np.asarray(S.generators, dtype=np.int64)
        crit = impl.colon_criteria(batch.G, batch.ng, batch.smem, batch.sg, sgens)
        for j, a in enumerate(S.generators):
            holds = batch.rows[:, a] == 1 if a < batch.W else np.ones(n, dtype=bool)
            col.count("P3.14", holds.sum(), holds.sum())
            principal_here = np.asarray([g == (a,) for g in gs], dtype=bool)
            col.bulk("P3.14", np.flatnonzero(holds & ((crit[:, j] == 1) != principal_here)),
                     lambda i, a=a: (_key(S, gs[i], x=a), lambda: InstanceSpec(S, I=batch.ideal(i), x=a)))

    for prop, extra in (("P3.18", elias), ("P3.19", batch.stats[:, 6].astype(bool))):
        if prop in props:
            held = ulrich & extra
            col.count(prop, n, held.sum())
            col.bulk(prop, np.flatnonzero(held & ~burch),
                     lambda i: (_key(S, gs[i]), lambda: InstanceSpec(S, I=batch.ideal(i))))

    active = np.asarray([p in props for p in PAIR], dtype=np.uint8)
    if active.any():
        partners = batch.partners(config)
        wit, viol = impl.pair_scan(batch.rows, batch.mrows, batch.G, batch.ng, partners, batch.smem,
                                   batch.sg, elias.astype(np.uint8), burch.astype(np.uint8),
                                   ulrich.astype(np.uint8), active)
        for p, prop in enumerate(PAIR):
            if not active[p]:
                continue
            col.count(prop, n * len(partners), (wit[:, :, p] >= 0).sum())
            def describe(h, p=p, prop=prop):
                i, j = h[0], int(partners[h[1]])
                x = None if prop == "P3.21" else int(wit[h[0], h[1], p])
                return (_key(S, gs[i], gs[j], x=x),
                        lambda: InstanceSpec(S, I=batch.ideal(i), J=batch.ideal(j), x=x))

            col.bulk(prop, list(zip(*np.nonzero(viol[:, :, p]))), describe)

    if "P3.27" in props:
        fam = batch.partners(config)
        held, viol = impl.dual_pair_scan(batch.rows, batch.mrows, batch.G, batch.ng, fam, batch.smem,
                                         batch.sg, S.frobenius, burch.astype(np.uint8))
        col.count("P3.27", held.size, held.sum())
        def describe27(h):
            K, I = batch.ideal(int(fam[h[0]])), batch.ideal(int(fam[h[1]]))
            J = colon_r(K, I)
            return _key(S, I.generators, J.generators, K.generators), lambda: InstanceSpec(S, I=I, J=J, K=K)

        col.bulk("P3.27", list(zip(*np.nonzero(viol))), describe27)

    return col.tallies


# -- driver -----------------------------------------------------------------------------

def _worker(args):
    gens, config, backend = args
    return scan_semigroup(gens, config, backend)


def _map(fn, items, jobs):
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(processes=jobs) as pool:
        return pool.map(fn, items, chunksize=1)


def run_search(config: SearchConfig, backend=None) -> dict:
    """Search report as a plain dict; :func:`dumps_report` gives the byte-stable file form."""
    corpus = search_corpus(config.max_genus)
    props = tuple(p for p in SEARCHABLE if config.props is None or p in config.props)
    results = _map(_worker, [(S.generators, config, backend) for S in corpus], config.jobs)
    outcomes = {p: {"instances_checked": 0, "hypotheses_held": 0, "violation_count": 0,
                    "violations_by_semigroup": {}, "violations": []} for p in props}
    for S, res in zip(corpus, results):
        for p, t in res.items():
            o = outcomes[p]
            o["instances_checked"] += t["instances_checked"]
            o["hypotheses_held"] += t["hypotheses_held"]
            o["violation_count"] += t["violation_count"]
            if t["violation_count"]:
                o["violations_by_semigroup"][S.literal()] = t["violation_count"]
            o["violations"].extend(t["violations"])
    for o in outcomes.values():
        o["violations_listed"] = len(o["violations"])
    n_ideals = sum(len(ideal_generator_sets(S, config.bound_for(S), config.max_gens)) for S in corpus)
    return {
        "schema_version": SCHEMA_VERSION,
        "config": {
            "max_genus": config.max_genus,
            "gen_bound": config.gen_bound if config.gen_bound is not None else "conductor+2e",
            "max_gens": config.max_gens,
            "partner_max_gens": config.partner_max_gens,
            "samples_per_semigroup": config.samples_per_semigroup,
            "pinned": [dict(k, prop=p) for p, k in config.pinned],
            "props": list(props),
        },
        "corpus": {"semigroups": len(corpus), "ideals": n_ideals},
        "witness_search": "monomial",
        "outcomes": outcomes,
    }


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


# -- corpus property sweep ------------------------------------------------------------------

PROPERTY_NAMES = {
    "a_colon_criterion_sound": "colon criterion implies Elias",
    "a_socle_criterion_sound": "(I :_Q m) inside R implies Elias",
    "b_elias_downward_closed": "ideals inside an Elias ideal are Elias",
    "c_powers_burch": "m^t is Burch for t = 1..5",
    "c_truncations_burch": "S ∩ [v, oo) is Burch",
    "d_ulrich_witness": "mu(I) = e iff t^e I = m I",
    "e_type_inequality": "type(R/I) <= type(I)",
    "f_double_duality": "K - (K - I) = I",
    "g_index_bounds": "Gorenstein: index <= gll_mono and index <= e",
    "h_gr_cm_identity": "gr CM: eli = ulr + 1 = gll_mono",
    "i_samuel_stable": "l(m^n/m^(n+1)) = e for n >= conductor",
    "j_multiplicity_colength": "l(R/t^e R) = e",
}


def semigroup_properties(gens, config: SearchConfig, backend=None) -> dict:
    """(checked, violations, first counterexample) per property for one semigroup."""
    S = make_semigroup(gens)
    out = {k: [0, 0, None] for k in PROPERTY_NAMES}

    def record(name, ok, witness):
        rec = out[name]
        rec[0] += 1
        if not ok:
            rec[1] += 1
            if rec[2] is None:
                rec[2] = witness

    impl = kernels.batch if backend is None else kernels.batch_module(backend)
    batch = SemigroupBatch.build(S, config, backend)
    n = len(batch.gensets)
    elias = batch.elias
    avals = np.asarray(batch.elements(), dtype=np.int64)
    crit = impl.colon_criteria(batch.G, batch.ng, batch.smem, batch.sg, avals)
    for i in range(n):
        key = _key(S, batch.gensets[i])
        for j in range(len(avals)):
            record("a_colon_criterion_sound", not crit[i, j] or elias[i], dict(key, x=int(avals[j])))
        record("a_socle_criterion_sound", not batch.stats[i, 4] or elias[i], key)
        record("d_ulrich_witness", batch.ulrich[i] == bool(batch.stats[i, 3]), key)
        record("e_type_inequality", batch.stats[i, 0] <= batch.stats[i, 1], key)
        record("f_double_duality", bool(batch.stats[i, 5]), key)
    count, fi, fj = impl.downward_violations(batch.rows, batch.G, batch.ng, elias.astype(np.uint8))
    rec = out["b_elias_downward_closed"]
    rec[0] += int(elias.sum()) * (n - 1)
    rec[1] += int(count)
    if count:
        rec[2] = {"S": list(S.generators), "E": list(batch.gensets[fi]), "sub": list(batch.gensets[fj])}

    for t in range(1, 6):
        record("c_powers_burch", _burch(power_of_maximal(S, t)), _key(S, x=t))
    for v in batch.elements():
        record("c_truncations_burch", _burch(valuation_truncation(S, v)), _key(S, x=v))

    eli, ulr, (g, _) = elias_index(S), ulrich_index(S), gll_monomial(S)
    e, c = S.multiplicity, S.conductor
    if S.symmetric:
        record("g_index_bounds", eli <= g and eli <= e, _key(S))
    if gr_is_cm(S):
        record("h_gr_cm_identity", eli == g == ulr + 1, _key(S))
    for m in range(c, c + 3):
        record("i_samuel_stable", samuel_length(S, m + 1) - samuel_length(S, m) == e, _key(S, x=m))
    record("j_multiplicity_colength", colength(principal(S, e)) == e, _key(S))
    return out


def _prop_worker(args):
    gens, config, backend = args
    return semigroup_properties(gens, config, backend)


def corpus_properties(config: SearchConfig, backend=None) -> dict:
    corpus = search_corpus(config.max_genus)
    results = _map(_prop_worker, [(S.generators, config, backend) for S in corpus], config.jobs)
    merged = {k: {"description": d, "checked": 0, "violations": 0, "first_counterexample": None}
              for k, d in PROPERTY_NAMES.items()}
    for res in results:
        for k, (checked, bad, first) in res.items():
            m = merged[k]
            m["checked"] += checked
            m["violations"] += bad
            if m["first_counterexample"] is None and first is not None:
                m["first_counterexample"] = first
    return merged
