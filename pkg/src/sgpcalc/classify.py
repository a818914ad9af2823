"""Elias / Burch / Ulrich verdicts and the proposition checkers.

Nonzerodivisors x in m are always monomials t^a. A checker never assumes a
statement is true: it evaluates the hypotheses and the conclusion
separately, and ``violation`` is simply "hypotheses hold, conclusion fails".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ImproperIdeal, NotIntegral, PreconditionFailed, UnknownProposition
from .ideals import (
    FractionalIdeal,
    colength,
    colon_q,
    colon_r,
    is_nearly_gorenstein,
    maximal_ideal,
    mu,
    power_of_maximal,
    principal,
    product,
    socle,
    sum_ideal,
    type_of_ideal,
    type_of_quotient,
)
from .invariants import (
    check_thm_2_20,
    elias_index,
    gll_monomial,
    gr_is_cm,
    index_of_gorenstein,
    is_ord_regular,
    reduction_number_of_m,
    ulrich_index,
)
from .semigroup import NumericalSemigroup

PROPOSITION_IDS = (
    "P2.3g", "L2.13", "T2.20", "C2.21", "T3.5", "C3.8a",
    "P3.11", "P3.14", "C3.15", "P3.18", "P3.19", "P3.21", "P3.22",
    "C3.24", "P3.25", "C3.26a", "C3.26b", "P3.27",
)


def _require_integral(E: FractionalIdeal) -> None:
    if not E.is_integral():
        raise NotIntegral(f"{E} is not an ideal of R")


def _require_proper(E: FractionalIdeal) -> None:
    _require_integral(E)
    if 0 in E:
        raise ImproperIdeal(f"{E} is the unit ideal")


# -- single-ideal verdicts ---------------------------------------------------------

def is_elias(S: NumericalSemigroup, E: FractionalIdeal) -> bool:
    _require_proper(E)
    return type_of_quotient(E) == type_of_ideal(E)


def _burch(E: FractionalIdeal) -> bool:
    m = maximal_ideal(E.semigroup)
    return product(m, E) != product(m, colon_r(E, m))


def is_burch(S: NumericalSemigroup, E: FractionalIdeal) -> bool:
    _require_proper(E)
    return _burch(E)


def is_ulrich(S: NumericalSemigroup, E: FractionalIdeal) -> bool:
    _require_integral(E)
    return mu(E) == S.multiplicity


def ulrich_witness_ok(S: NumericalSemigroup, E: FractionalIdeal) -> bool:
    """t^e E = m E, with t^e the multiplicity element (l(R/t^e R) = e)."""
    _require_integral(E)
    return E.shift(S.multiplicity) == product(maximal_ideal(S), E)


def elias_socle_criterion(S: NumericalSemigroup, E: FractionalIdeal) -> bool:
    """(E :_Q m) lies inside R."""
    _require_integral(E)
    return colon_q(E, maximal_ideal(S)).is_integral()


def elias_colon_criterion(S: NumericalSemigroup, E: FractionalIdeal, a: int) -> bool:
    """t^a in m (t^a R :_Q E)."""
    _require_integral(E)
    if a <= 0 or a not in S:
        raise PreconditionFailed(f"witness exponent {a} is not a nonzero element of {S}")
    return a in product(maximal_ideal(S), colon_q(principal(S, a), E))


@dataclass
class ClassificationReport:
    ideal: FractionalIdeal
    elias: bool
    type_of_quotient: int
    type_of_ideal: int
    socle: tuple[int, ...]
    burch: bool
    m_times_ideal: FractionalIdeal
    m_times_colon: FractionalIdeal
    ulrich: bool
    mu: int
    e: int
    ulrich_witness_ok: bool
    socle_criterion: bool
    colon_criteria: list[tuple[int, bool]] = field(default_factory=list)
    colength: int = 0

    def to_json(self) -> dict:
        return {
            "elias": self.elias,
            "burch": self.burch,
            "ulrich": self.ulrich,
            "evidence": {
                "type_of_quotient": self.type_of_quotient,
                "type_of_ideal": self.type_of_ideal,
                "socle": list(self.socle),
                "m_times_ideal": self.m_times_ideal.normal_form(),
                "m_times_colon": self.m_times_colon.normal_form(),
                "mu": self.mu,
                "e": self.e,
                "ulrich_witness_ok": self.ulrich_witness_ok,
                "socle_criterion": self.socle_criterion,
                "colon_criteria": [{"x": a, "holds": v} for a, v in self.colon_criteria],
                "witness_search": "monomial",
            },
        }


def classify(S: NumericalSemigroup, E: FractionalIdeal, witness_exponents=None) -> ClassificationReport:
    _require_proper(E)
    m = maximal_ideal(S)
    if witness_exponents is None:
        witness_exponents = sorted(set(E.generators) | set(S.generators))
    tq, ti = type_of_quotient(E), type_of_ideal(E)
    mE, mC = product(m, E), product(m, colon_r(E, m))
    return ClassificationReport(
        ideal=E,
        elias=tq == ti,
        type_of_quotient=tq,
        type_of_ideal=ti,
        socle=socle(E),
        burch=mE != mC,
        m_times_ideal=mE,
        m_times_colon=mC,
        ulrich=mu(E) == S.multiplicity,
        mu=mu(E),
        e=S.multiplicity,
        ulrich_witness_ok=ulrich_witness_ok(S, E),
        socle_criterion=elias_socle_criterion(S, E),
        colon_criteria=[(a, elias_colon_criterion(S, E, a)) for a in witness_exponents],
        colength=colength(E),
    )


# -- proposition checkers -------------------------------------------------------------

@dataclass
class InstanceSpec:
    """Objects a proposition quantifies over. Unused slots stay None."""

    semigroup: NumericalSemigroup
    I: FractionalIdeal | None = None
    J: FractionalIdeal | None = None
    K: FractionalIdeal | None = None
    x: int | None = None

    def descriptor(self) -> dict:
        out = {"semigroup": list(self.semigroup.generators)}
        for name in ("I", "J", "K"):
            ideal = getattr(self, name)
            if ideal is not None:
                out[name] = list(ideal.generators)
        if self.x is not None:
            out["x"] = self.x
        return out


@dataclass
class PropositionOutcome:
    prop_id: str
    instance: InstanceSpec
    hypotheses_hold: bool
    conclusion_holds: bool
    hypotheses: dict = field(default_factory=dict)
    conclusion: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)
    note: str = ""

    @property
    def violation(self) -> bool:
        return self.hypotheses_hold and not self.conclusion_holds

    def to_json(self) -> dict:
        out = {
            "prop": self.prop_id,
            "instance": self.instance.descriptor(),
            "hypotheses_hold": self.hypotheses_hold,
            "conclusion_holds": self.conclusion_holds,
            "violation": self.violation,
            "hypotheses": dict(self.hypotheses),
            "conclusion": dict(self.conclusion),
        }
        if self.note:
            out["note"] = self.note
        return out

    def certificate(self) -> dict:
        """Closed evidence for a violation; re-checkable by :mod:`sgpcalc.certify`."""
        out = self.to_json()
        out["evidence"] = {k: v.normal_form() for k, v in sorted(self.evidence.items())}
        return out


def _need(inst: InstanceSpec, *names):
    for name in names:
        if getattr(inst, name) is None:
            raise PreconditionFailed(f"this proposition needs {name}")
    for name in ("I", "J", "K"):
        ideal = getattr(inst, name)
        if ideal is not None:
            if ideal.semigroup != inst.semigroup:
                raise PreconditionFailed(f"{name} lives over a different semigroup")
            _require_integral(ideal)


def _in_principal(E: FractionalIdeal, a: int) -> bool:
    S = E.semigroup
    return all((g - a) in S for g in E.generators)


def _outcome(pid, inst, hyps, concl, evidence=None, note=""):
    return PropositionOutcome(
        prop_id=pid,
        instance=inst,
        hypotheses_hold=all(hyps.values()),
        conclusion_holds=all(concl.values()),
        hypotheses=hyps,
        conclusion=concl,
        evidence=evidence or {},
        note=note,
    )


def witness_range(S: NumericalSemigroup, bound: int) -> list[int]:
    return [a for a in range(1, bound + 1) if a in S]


def _search_x(inst: InstanceSpec, bound: int, hyp_fn):
    """Least monomial witness exponent whose hypotheses all hold."""
    for a in witness_range(inst.semigroup, bound):
        hyps = hyp_fn(a)
        if all(hyps.values()):
            return a, hyps
    return None, {"witness_exists": False}


def check_proposition(prop_id: str, inst: InstanceSpec) -> PropositionOutcome:
    try:
        fn = _CHECKERS[prop_id]
    except KeyError:
        raise UnknownProposition(f"unknown proposition id {prop_id!r}; known: {', '.join(PROPOSITION_IDS)}")
    return fn(inst)


def _p23g(inst):
    S = inst.semigroup
    hyps = {"gorenstein": S.symmetric}
    if not S.symmetric:
        return _outcome("P2.3g", inst, hyps, {}, note="index is only computed for Gorenstein rings")
    idx = index_of_gorenstein(S)
    g, _ = gll_monomial(S)
    return _outcome("P2.3g", inst, hyps, {"index_le_gll": idx <= g, "index_le_e": idx <= S.multiplicity})


def _l213(inst):
    S = inst.semigroup
    x = principal(S, S.multiplicity)
    return _outcome("L2.13", inst, {"superficial_parameter": True},
                    {"colength_equals_e": colength(x) == S.multiplicity}, {"xR": x})


def _t220(inst):
    _need(inst, "x")
    S, a = inst.semigroup, inst.x
    res = check_thm_2_20(S, a)
    hyps = {"injective_up_to_index": res.injective_up_to_s}
    concl = {}
    if res.injective_up_to_s:
        concl = {"gll_bound": bool(res.gll_bound_holds), "containment": bool(res.containment_holds)}
    ev = {}
    if res.injective_up_to_s:
        ev["m^(s+t-1)"] = power_of_maximal(S, res.s + res.t - 1)
    return _outcome("T2.20", inst, hyps, concl, ev, note=f"t={res.t} s={res.s}")


def _c221(inst):
    _need(inst, "x")
    S, a = inst.semigroup, inst.x
    if a <= 0 or a not in S:
        raise PreconditionFailed(f"{a} is not a nonzero element of {S}")
    hyps = {"nearly_gorenstein": is_nearly_gorenstein(S), "initial_form_regular": is_ord_regular(S, a)}
    idx = index_of_gorenstein(S)
    g, _ = gll_monomial(S)
    t = S.ord(a)
    return _outcome("C2.21", inst, hyps, {"index_le_gll": idx <= g, "gll_le_index_plus_t_minus_1": g <= idx + t - 1},
                    note=f"t={t} index={idx} gll_mono={g}")


def _t35(inst):
    S = inst.semigroup
    hyps = {"gr_cm": gr_is_cm(S)}
    eli, ulr = elias_index(S), ulrich_index(S)
    g, _ = gll_monomial(S)
    return _outcome("T3.5", inst, hyps, {"eli_eq_gll": eli == g, "gll_eq_ulr_plus_1": g == ulr + 1},
                    note=f"eli={eli} gll_mono={g} ulr={ulr}")


def _c38a(inst):
    S = inst.semigroup
    hyps = {"gr_cm": gr_is_cm(S)}
    ulr = ulrich_index(S)
    g, _ = gll_monomial(S)
    e = S.multiplicity
    P = power_of_maximal(S, g)
    try:
        r = reduction_number_of_m(S, e)
    except Exception:  # noqa: BLE001 - recorded as a failed conclusion
        r = None
    concl = {"reduction_number_eq_ulr": r == ulr, "multiplicity_element_attains_gll": _in_principal(P, e)}
    return _outcome("C3.8a", inst, hyps, concl, {"m^gll": P}, note=f"r={r} ulr={ulr} gll_mono={g}")


def _p311(inst):
    _need(inst, "I")
    S, I = inst.semigroup, inst.I
    _require_proper(I)

    def hyp(a):
        return {"x_in_m_colon": elias_colon_criterion(S, I, a)}

    if inst.x is None:
        a, hyps = _search_x(inst, I.min + S.multiplicity, hyp)
        inst = InstanceSpec(S, I=I, x=a)
    else:
        hyps = hyp(inst.x)
    ev = {"I": I}
    if inst.x is not None:
        C = colon_q(principal(S, inst.x), I)
        ev["xR:I"] = C
        ev["m(xR:I)"] = product(maximal_ideal(S), C)
    return _outcome("P3.11", inst, hyps, {"I_elias": is_elias(S, I)}, ev)


def _p314(inst):
    _need(inst, "I", "x")
    S, I, a = inst.semigroup, inst.I, inst.x
    _require_proper(I)
    if a not in S.generators or a not in I:
        raise PreconditionFailed("P3.14 needs x a minimal generator of S (x in m \\ m^2) with x in I")
    crit = elias_colon_criterion(S, I, a)
    principal_eq = I == principal(S, a)
    C = colon_q(principal(S, a), I)
    return _outcome("P3.14", inst, {"x_in_m_minus_m2": True, "x_in_I": True},
                    {"criterion_iff_principal": crit == principal_eq},
                    {"I": I, "xR:I": C, "m(xR:I)": product(maximal_ideal(S), C)},
                    note=f"criterion={crit} I_eq_xR={principal_eq}")


def _pair_hyps_x(S, I, J, a):
    m = maximal_ideal(S)
    return {
        "IJ_in_xR": _in_principal(product(I, J), a),
        "x_in_Jm": a in product(J, m),
    }


def _pair_common(inst, pid, hyp_fn, bound_fn=None):
    _need(inst, "I", "J")
    S, I, J = inst.semigroup, inst.I, inst.J
    _require_proper(I)
    _require_proper(J)
    if inst.x is None:
        bound = I.min + J.min if bound_fn is None else bound_fn(I, J)
        a, hyps = _search_x(inst, bound, lambda a: hyp_fn(S, I, J, a))
        inst = InstanceSpec(S, I=I, J=J, x=a)
    else:
        if inst.x <= 0 or inst.x not in S:
            raise PreconditionFailed(f"x={inst.x} is not a nonzero element of {S}")
        hyps = hyp_fn(S, I, J, inst.x)
    return inst, S, I, J, hyps


def _pair_evidence(S, I, J, x=None):
    m = maximal_ideal(S)
    ev = {"I": I, "J": J, "IJ": product(I, J), "Im": product(I, m), "Jm": product(J, m),
          "I:m": colon_r(I, m), "m(I:m)": product(m, colon_r(I, m))}
    return ev


def _c315(inst):
    inst, S, I, J, hyps = _pair_common(inst, "C3.15", _pair_hyps_x)
    return _outcome("C3.15", inst, hyps, {"I_elias": is_elias(S, I)}, _pair_evidence(S, I, J))


def _p318(inst):
    _need(inst, "I")
    S, I = inst.semigroup, inst.I
    _require_proper(I)
    hyps = {"I_ulrich": is_ulrich(S, I), "I_elias": is_elias(S, I)}
    m = maximal_ideal(S)
    return _outcome("P3.18", inst, hyps, {"I_burch": is_burch(S, I)},
                    {"I": I, "mI": product(m, I), "m(I:m)": product(m, colon_r(I, m))})


def _p319(inst):
    _need(inst, "I")
    S, I = inst.semigroup, inst.I
    _require_proper(I)
    m = maximal_ideal(S)
    I2 = product(I, I)
    IC = product(I, colon_r(I, m))
    hyps = {"I_ulrich": is_ulrich(S, I), "I2_ne_I(I:m)": I2 != IC}
    return _outcome("P3.19", inst, hyps, {"I_burch": is_burch(S, I)},
                    {"I": I, "I^2": I2, "I(I:m)": IC, "mI": product(m, I), "m(I:m)": product(m, colon_r(I, m))})


def _p321(inst):
    _need(inst, "I", "J")
    S, I, J = inst.semigroup, inst.I, inst.J
    _require_proper(I)
    _require_proper(J)
    m = maximal_ideal(S)
    Jm, Im = product(J, m), product(I, m)
    L = sum_ideal(I, Jm)
    return _outcome("P3.21", inst, {"Jm_not_in_Im": not Jm.issubset(Im)}, {"I+Jm_burch": _burch(L)},
                    {"I": I, "J": J, "Im": Im, "Jm": Jm, "I+Jm": L,
                     "m(I+Jm)": product(m, L), "m(I+Jm:m)": product(m, colon_r(L, m))})


def _hyp_322(S, I, J, a):
    m = maximal_ideal(S)
    return {"IJ_in_xR": _in_principal(product(I, J), a),
            "Jm_not_in_Im": not product(J, m).issubset(product(I, m))}


def _p322(inst):
    inst, S, I, J, hyps = _pair_common(inst, "P3.22", _hyp_322)
    return _outcome("P3.22", inst, hyps, {"I_burch": is_burch(S, I)}, _pair_evidence(S, I, J))


def _hyp_324(S, I, J, a):
    out = _pair_hyps_x(S, I, J, a)
    out["I_not_burch"] = not _burch(I)
    return out


def _c324(inst):
    inst, S, I, J, hyps = _pair_common(inst, "C3.24", _hyp_324)
    return _outcome("C3.24", inst, hyps, {"I_elias": is_elias(S, I), "J_elias": is_elias(S, J)},
                    _pair_evidence(S, I, J))


def _hyp_325(S, I, J, a):
    m = maximal_ideal(S)
    return {"IJ_in_x2R": _in_principal(product(I, J), 2 * a),
            "x_in_I": a in I,
            "x_in_Jm": a in product(J, m)}


def _hyp_326b(S, I, J, a):
    m = maximal_ideal(S)
    return {"IJ_in_x2R": _in_principal(product(I, J), 2 * a),
            "x_in_J": a in J,
            "x_in_Im": a in product(I, m)}


def _x2_bound(I, J):
    return (I.min + J.min) // 2


def _p325(inst):
    inst, S, I, J, hyps = _pair_common(inst, "P3.25", _hyp_325, _x2_bound)
    return _outcome("P3.25", inst, hyps, {"I_not_burch": not is_burch(S, I)}, _pair_evidence(S, I, J))


def _c326a(inst):
    inst, S, I, J, hyps = _pair_common(inst, "C3.26a", _hyp_325, _x2_bound)
    concl = {"I_elias": is_elias(S, I), "J_elias": is_elias(S, J), "I_not_ulrich": not is_ulrich(S, I)}
    return _outcome("C3.26a", inst, hyps, concl, _pair_evidence(S, I, J))


def _c326b(inst):
    inst, S, I, J, hyps = _pair_common(inst, "C3.26b", _hyp_326b, _x2_bound)
    concl = {"I_elias": is_elias(S, I), "J_elias": is_elias(S, J), "J_not_ulrich": not is_ulrich(S, J)}
    return _outcome("C3.26b", inst, hyps, concl, _pair_evidence(S, I, J))


def _p327(inst):
    _need(inst, "I", "J", "K")
    S, I, J, K = inst.semigroup, inst.I, inst.J, inst.K
    m = maximal_ideal(S)
    KJ, KI = colon_r(K, J), colon_r(K, I)
    Im, Jm = product(I, m), product(J, m)
    hyps = {"I_eq_K:J": I == KJ, "J_eq_K:I": J == KI, "Im_eq_Jm": Im == Jm}
    bi, bj = _burch(I), _burch(J)
    return _outcome("P3.27", inst, hyps, {"burch_iff": bi == bj},
                    {"I": I, "J": J, "K": K, "K:J": KJ, "K:I": KI, "Im": Im, "Jm": Jm},
                    note=f"I_burch={bi} J_burch={bj}")


_CHECKERS = {
    "P2.3g": _p23g, "L2.13": _l213, "T2.20": _t220, "C2.21": _c221,
    "T3.5": _t35, "C3.8a": _c38a, "P3.11": _p311, "P3.14": _p314,
    "C3.15": _c315, "P3.18": _p318, "P3.19": _p319, "P3.21": _p321,
    "P3.22": _p322, "C3.24": _c324, "P3.25": _p325, "C3.26a": _c326a,
    "C3.26b": _c326b, "P3.27": _p327,
}


def criterion_3_14(S: NumericalSemigroup, E: FractionalIdeal, a: int) -> PropositionOutcome:
    return check_proposition("P3.14", InstanceSpec(S, I=E, x=a))
