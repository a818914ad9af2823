"""Independent re-evaluation of proposition instances on raw bit sets.

Everything here goes through :class:`sgpcalc.oracle.Window`, which never
uses generator shortcuts or canonical duality. ``verify_certificate``
accepts a certificate emitted by a checker and recomputes its evidence,
hypotheses and conclusion from scratch.
"""

from __future__ import annotations

from .oracle import Window

_HARD = 2  # searches stop at conductor + 2, like the fast path


def oracle_window(gens, *ideal_gens, x: int | None = None) -> Window:
    g = sorted(gens)
    w0 = Window(g, 0, g[0] * g[-1] + 1)  # F < a1 * an
    c, e = w0.frobenius + 1, w0.multiplicity
    top = max([g for gs in ideal_gens if gs for g in gs] + [x or 0, 1])
    hi = max(c + (c + _HARD + 2) * e, 2 * top + 2 * c + 4 * e + 8)
    return Window(gens, 0, hi)


class _Ring:
    """Ring-level data read off an oracle window."""

    def __init__(self, w: Window):
        self.w = w
        self.e = w.multiplicity
        self.c = w.frobenius + 1
        self.bound = self.c + _HARD
        self._pow = {}
        self._ords = None

    def power(self, n):
        if n not in self._pow:
            self._pow[n] = self.w.power_m(n)
        return self._pow[n]

    def ords(self):
        if self._ords is None:
            self._ords = self.w.ord_table(self.w.hi)
        return self._ords

    def symmetric(self):
        w = self.w
        F = w.frobenius
        return all(w.contains(w.S, F - z) != w.contains(w.S, z) for z in range(0, F + 1))

    def in_principal(self, A, a):
        w = self.w
        return w.subset(A, w.ideal([a]))

    def eli(self):
        for s in range(1, self.bound + 1):
            if self.w.is_elias(self.power(s)):
                return s
        return None

    def ulr(self):
        for s in range(1, self.bound + 1):
            if self.w.mu(self.power(s)) == self.e:
                return s
        return None

    def gll(self):
        w = self.w
        for n in range(1, self.bound + 1):
            P = self.power(n)
            for a in range(1, self.w.hi):
                if w.contains(w.S, a) and w.subset(P, w.ideal([a])):
                    return n, a
        return None

    def ord_regular(self, a):
        ords = self.ords()
        t = ords[a]
        top = self.w.hi
        return all(ords[s + a] == ords[s] + t for s in ords if s + a < top)

    def nearly_gorenstein(self):
        w = self.w
        K = w.canonical()
        trace = w.product(w.colon(w.S, K), K)
        return w.subset(w.m, trace)

    def reduction_number(self, a):
        w = self.w
        x = w.ideal([a])
        for n in range(0, self.bound + 1):
            if w.product(x, self.power(n)) == self.power(n + 1):
                return n
        return None


def _search(w, bound, hyp_fn, x):
    if x is not None:
        return x, hyp_fn(x)
    for a in range(1, bound + 1):
        if w.contains(w.S, a):
            hyps = hyp_fn(a)
            if all(hyps.values()):
                return a, hyps
    return None, {"witness_exists": False}


def evaluate(prop_id: str, gens, I=None, J=None, K=None, x=None):
    """(x, hypotheses, conclusion, evidence-bits) for one instance, via the oracle."""
    w = oracle_window(gens, I, J, K, x=x)
    R = _Ring(w)
    m = w.m
    bI = w.ideal(I) if I else None
    bJ = w.ideal(J) if J else None
    bK = w.ideal(K) if K else None
    ev = {}

    def burch(A):
        return w.is_burch(A)

    def pair_ev():
        ev.update({"I": bI, "J": bJ, "IJ": w.product(bI, bJ), "Im": w.product(bI, m),
                   "Jm": w.product(bJ, m), "I:m": w.colon_r(bI, m),
                   "m(I:m)": w.product(m, w.colon_r(bI, m))})

    minI = min(I) if I else 0
    minJ = min(J) if J else 0

    if prop_id == "P2.3g":
        hyps = {"gorenstein": R.symmetric()}
        concl = {}
        if hyps["gorenstein"]:
            idx, (g, _) = R.eli(), R.gll()
            concl = {"index_le_gll": idx <= g, "index_le_e": idx <= R.e}
    elif prop_id == "L2.13":
        xr = w.ideal([R.e])
        ev["xR"] = xr
        hyps = {"superficial_parameter": True}
        concl = {"colength_equals_e": w.colength(xr) == R.e}
    elif prop_id == "T2.20":
        s, ords = R.eli(), R.ords()
        t = ords[x]
        inj = all(ords[z + x] == ords[z] + t for z in ords if ords[z] < s and z + x < w.hi)
        hyps = {"injective_up_to_index": inj}
        concl = {}
        if inj:
            g, _ = R.gll()
            P = R.power(s + t - 1)
            ev["m^(s+t-1)"] = P
            concl = {"gll_bound": g <= s + t - 1,
                     "containment": w.mu(P) <= 1 or R.in_principal(P, x)}
    elif prop_id == "C2.21":
        hyps = {"nearly_gorenstein": R.nearly_gorenstein(), "initial_form_regular": R.ord_regular(x)}
        idx, (g, _), t = R.eli(), R.gll(), R.ords()[x]
        concl = {"index_le_gll": idx <= g, "gll_le_index_plus_t_minus_1": g <= idx + t - 1}
    elif prop_id == "T3.5":
        hyps = {"gr_cm": R.ord_regular(R.e)}
        eli, ulr, (g, _) = R.eli(), R.ulr(), R.gll()
        concl = {"eli_eq_gll": eli == g, "gll_eq_ulr_plus_1": g == ulr + 1}
    elif prop_id == "C3.8a":
        hyps = {"gr_cm": R.ord_regular(R.e)}
        ulr, (g, _) = R.ulr(), R.gll()
        P = R.power(g)
        ev["m^gll"] = P
        concl = {"reduction_number_eq_ulr": R.reduction_number(R.e) == ulr,
                 "multiplicity_element_attains_gll": R.in_principal(P, R.e)}
    elif prop_id == "P3.11":
        def hyp(a):
            C = w.colon(w.ideal([a]), bI)
            return {"x_in_m_colon": w.contains(w.product(m, C), a)}
        x, hyps = _search(w, minI + R.e, hyp, x)
        ev["I"] = bI
        if x is not None:
            C = w.colon(w.ideal([x]), bI)
            ev["xR:I"] = C
            ev["m(xR:I)"] = w.product(m, C)
        concl = {"I_elias": w.is_elias(bI)}
    elif prop_id == "P3.14":
        C = w.colon(w.ideal([x]), bI)
        ev.update({"I": bI, "xR:I": C, "m(xR:I)": w.product(m, C)})
        crit = w.contains(w.product(m, C), x)
        hyps = {"x_in_m_minus_m2": True, "x_in_I": True}
        concl = {"criterion_iff_principal": crit == (bI == w.ideal([x]))}
    elif prop_id in ("C3.15", "C3.24"):
        def hyp(a):
            out = {"IJ_in_xR": R.in_principal(w.product(bI, bJ), a),
                   "x_in_Jm": w.contains(w.product(bJ, m), a)}
            if prop_id == "C3.24":
                out["I_not_burch"] = not burch(bI)
            return out
        x, hyps = _search(w, minI + minJ, hyp, x)
        pair_ev()
        concl = {"I_elias": w.is_elias(bI)}
        if prop_id == "C3.24":
            concl["J_elias"] = w.is_elias(bJ)
    elif prop_id in ("P3.18", "P3.19"):
        C = w.colon_r(bI, m)
        ev.update({"I": bI, "mI": w.product(m, bI), "m(I:m)": w.product(m, C)})
        hyps = {"I_ulrich": w.is_ulrich(bI)}
        if prop_id == "P3.18":
            hyps["I_elias"] = w.is_elias(bI)
        else:
            I2, IC = w.product(bI, bI), w.product(bI, C)
            ev.update({"I^2": I2, "I(I:m)": IC})
            hyps["I2_ne_I(I:m)"] = I2 != IC
        concl = {"I_burch": burch(bI)}
    elif prop_id == "P3.21":
        Im, Jm = w.product(bI, m), w.product(bJ, m)
        L = bI | Jm
        ev.update({"I": bI, "J": bJ, "Im": Im, "Jm": Jm, "I+Jm": L,
                   "m(I+Jm)": w.product(m, L), "m(I+Jm:m)": w.product(m, w.colon_r(L, m))})
        hyps = {"Jm_not_in_Im": not w.subset(Jm, Im)}
        concl = {"I+Jm_burch": burch(L)}
    elif prop_id == "P3.22":
        def hyp(a):
            return {"IJ_in_xR": R.in_principal(w.product(bI, bJ), a),
                    "Jm_not_in_Im": not w.subset(w.product(bJ, m), w.product(bI, m))}
        x, hyps = _search(w, minI + minJ, hyp, x)
        pair_ev()
        concl = {"I_burch": burch(bI)}
    elif prop_id in ("P3.25", "C3.26a", "C3.26b"):
        def hyp(a):
            if prop_id == "C3.26b":
                return {"IJ_in_x2R": R.in_principal(w.product(bI, bJ), 2 * a),
                        "x_in_J": w.contains(bJ, a),
                        "x_in_Im": w.contains(w.product(bI, m), a)}
            return {"IJ_in_x2R": R.in_principal(w.product(bI, bJ), 2 * a),
                    "x_in_I": w.contains(bI, a),
                    "x_in_Jm": w.contains(w.product(bJ, m), a)}
        x, hyps = _search(w, (minI + minJ) // 2, hyp, x)
        pair_ev()
        if prop_id == "P3.25":
            concl = {"I_not_burch": not burch(bI)}
        elif prop_id == "C3.26a":
            concl = {"I_elias": w.is_elias(bI), "J_elias": w.is_elias(bJ), "I_not_ulrich": not w.is_ulrich(bI)}
        else:
            concl = {"I_elias": w.is_elias(bI), "J_elias": w.is_elias(bJ), "J_not_ulrich": not w.is_ulrich(bJ)}
    elif prop_id == "P3.27":
        KJ, KI = w.colon_r(bK, bJ), w.colon_r(bK, bI)
        Im, Jm = w.product(bI, m), w.product(bJ, m)
        ev.update({"I": bI, "J": bJ, "K": bK, "K:J": KJ, "K:I": KI, "Im": Im, "Jm": Jm})
        hyps = {"I_eq_K:J": bI == KJ, "J_eq_K:I": bJ == KI, "Im_eq_Jm": Im == Jm}
        concl = {"burch_iff": burch(bI) == burch(bJ)}
    else:
        raise KeyError(prop_id)
    return x, hyps, concl, ev, w


def verify_certificate(cert: dict) -> tuple[bool, list[str]]:
    """Recompute a violation certificate; returns (ok, list of discrepancies)."""
    inst = cert["instance"]
    x, hyps, concl, ev, w = evaluate(cert["prop"], inst["semigroup"], inst.get("I"), inst.get("J"),
                                     inst.get("K"), inst.get("x"))
    problems = []
    if x != inst.get("x"):
        problems.append(f"witness x: oracle {x}, certificate {inst.get('x')}")
    if hyps != cert["hypotheses"]:
        problems.append(f"hypotheses: oracle {hyps}, certificate {cert['hypotheses']}")
    if concl != cert["conclusion"]:
        problems.append(f"conclusion: oracle {concl}, certificate {cert['conclusion']}")
    if not all(hyps.values()) or all(concl.values()):
        problems.append("oracle does not see a violation")
    for name, nf in cert.get("evidence", {}).items():
        if name not in ev:
            problems.append(f"evidence {name} has no oracle recipe")
            continue
        sporadic, threshold = w.normal_form(ev[name])
        if list(sporadic) != nf["sporadic"] or threshold != nf["threshold"]:
            problems.append(f"evidence {name}: oracle {(sporadic, threshold)}, certificate {nf}")
        if sorted(w.minimal_generators(ev[name])) != nf["generators"]:
            problems.append(f"evidence {name}: generators differ")
    return not problems, problems
