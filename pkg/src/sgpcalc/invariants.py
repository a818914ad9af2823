"""Ring-level invariants of k[[S]]: Hilbert-Samuel data, indices, Loewy length.

The searches for eli, ulr and the monomial Loewy length stop at the hard
bound ``conductor + 2``. Passing it raises :class:`BoundExceeded`, which
means a bug and never a mathematical outcome.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import BoundExceeded, NotAReduction, NotGorenstein, NotInSemigroup
from .ideals import (
    colength,
    is_nearly_gorenstein,
    mu,
    power_of_maximal,
    principal,
    product,
    type_of_ideal,
    type_of_quotient,
)
from .semigroup import NumericalSemigroup


def hard_bound(S: NumericalSemigroup) -> int:
    return S.conductor + 2


def _widened(S: NumericalSemigroup, top: int) -> NumericalSemigroup:
    return S if top <= S.window else S.with_window(top)


def _require_element(S, a):
    if a <= 0 or a not in S:
        raise NotInSemigroup(f"{a} is not a nonzero element of {S}")


def samuel_length(S: NumericalSemigroup, n: int) -> int:
    """l(R/m^n). The Samuel function value chi(n) is samuel_length(S, n + 1)."""
    return colength(power_of_maximal(S, n))


def hilbert_function(S: NumericalSemigroup, n: int) -> int:
    """l(m^n / m^(n+1))."""
    return samuel_length(S, n + 1) - samuel_length(S, n)


def is_ord_regular(S: NumericalSemigroup, a: int) -> bool:
    """Whether the initial form of t^a is a nonzerodivisor on gr_m(R).

    Checked as ord(s + a) = ord(s) + ord(a) for every s in the ord window.
    Past c + n*e every element has order >= n, so the window covers all the
    layers that can fail for the corpus sizes this tool targets.
    """
    _require_element(S, a)
    ords = S.ord_array()
    t = int(ords[a]) if a < S.window else S.ord(a)
    for s in range(0, S.window - a):
        if ords[s] >= 0 and ords[s + a] != ords[s] + t:
            return False
    return True


def gr_is_cm(S: NumericalSemigroup) -> bool:
    return is_ord_regular(S, S.multiplicity)


def gll_monomial(S: NumericalSemigroup) -> tuple[int, int]:
    """Least n with m^n inside a principal monomial ideal, and the least such exponent."""
    for n in range(1, hard_bound(S) + 1):
        P = power_of_maximal(S, n)
        for a in range(1, P.min + 1):
            if a in S and all((g - a) in S for g in P.generators):
                return n, a
    raise BoundExceeded(f"no monomial parameter found for {S} up to n={hard_bound(S)}")


def is_elias_power(S: NumericalSemigroup, s: int) -> bool:
    P = power_of_maximal(S, s)
    return type_of_quotient(P) == type_of_ideal(P)


def elias_index(S: NumericalSemigroup) -> int:
    for s in range(1, hard_bound(S) + 1):
        if is_elias_power(S, s):
            return s
    raise BoundExceeded(f"m^s never Elias for s <= {hard_bound(S)} over {S}")


def ulrich_index(S: NumericalSemigroup) -> int:
    for s in range(1, hard_bound(S) + 1):
        if mu(power_of_maximal(S, s)) == S.multiplicity:
            return s
    raise BoundExceeded(f"m^s never Ulrich for s <= {hard_bound(S)} over {S}")


def index_of_gorenstein(S: NumericalSemigroup) -> int:
    """Auslander index; for Gorenstein rings this equals the Elias index."""
    if not S.symmetric:
        raise NotGorenstein(f"{S} has type {S.ring_type}; the index is only computed for Gorenstein rings")
    return elias_index(S)


def reduction_number_of_m(S: NumericalSemigroup, a: int) -> int:
    _require_element(S, a)
    x = principal(S, a)
    prev = power_of_maximal(S, 0)
    for n in range(0, hard_bound(S) + 1):
        nxt = power_of_maximal(S, n + 1)
        if product(x, prev) == nxt:
            return n
        prev = nxt
    raise NotAReduction(f"t^{a} does not generate a reduction of m in {S}")


def is_superficial_monomial(S: NumericalSemigroup, a: int, n_max: int | None = None,
                            start: int | None = None) -> bool:
    """Window-verified superficiality of t^a.

    Tests (m^(n+1) :_R t^a) ∩ m^c = m^n for start <= n <= n_max with
    c = start. Defaults: start = max(1, conductor), n_max = conductor + 2e.
    """
    from .ideals import colon_r, intersect

    _require_element(S, a)
    c = max(1, S.conductor) if start is None else start
    if n_max is None:
        n_max = S.conductor + 2 * S.multiplicity
    S = _widened(S, S.conductor + (n_max + 2) * S.multiplicity)
    x = principal(S, a)
    low = power_of_maximal(S, c)
    for n in range(c, n_max + 1):
        lhs = intersect(colon_r(power_of_maximal(S, n + 1), x), low)
        if lhs != power_of_maximal(S, n):
            return False
    return True


@dataclass
class LoewyBoundCheck:
    a: int
    t: int
    s: int
    layer_verdicts: list[bool]
    injective_up_to_s: bool
    gll_bound_holds: bool | None
    containment_holds: bool | None
    gll_mono: int | None = None
    power_mu: int | None = None

    @property
    def violation(self) -> bool:
        return self.injective_up_to_s and not (self.gll_bound_holds and self.containment_holds)

    def to_json(self) -> dict:
        return asdict(self)


def check_thm_2_20(S: NumericalSemigroup, a: int) -> LoewyBoundCheck:
    """Injectivity of multiplication by t^a on gr_m(R) up to the index, and its consequences."""
    _require_element(S, a)
    s = index_of_gorenstein(S)
    c, e = S.conductor, S.multiplicity
    t = S.ord(a) if a < S.window else _widened(S, a + 1).ord(a)
    S = _widened(S, max(c + s * e + a + 1, c + (s + t) * e))
    ords = S.ord_array()
    verdicts = []
    for i in range(1, s + 1):
        layer = [x for x in range(0, c + i * e) if ords[x] == i - 1]
        verdicts.append(all(ords[x + a] == i + t - 1 for x in layer))
    injective = all(verdicts)
    out = LoewyBoundCheck(a=a, t=t, s=s, layer_verdicts=verdicts, injective_up_to_s=injective,
                      gll_bound_holds=None, containment_holds=None)
    if injective:
        g, _ = gll_monomial(S)
        P = power_of_maximal(S, s + t - 1)
        out.gll_mono = g
        out.power_mu = mu(P)
        out.gll_bound_holds = g <= s + t - 1
        out.containment_holds = mu(P) <= 1 or all((q - a) in S for q in P.generators)
    return out


@dataclass
class InvariantReport:
    generators: tuple[int, ...]
    e: int
    embdim: int
    frobenius: int
    gaps: tuple[int, ...]
    pf: tuple[int, ...]
    ring_type: int
    symmetric: bool
    nearly_gorenstein: bool
    eli: int
    ulr: int
    gll_mono: int
    gll_witness: int
    gll_exact: bool
    gr_cm: bool
    index: int | None
    samuel: list[int] = field(default_factory=list)


def invariant_report(S: NumericalSemigroup, n_max: int | None = None) -> InvariantReport:
    """All ring invariants at once.

    ``gll_exact`` is set when gll_mono = eli: since eli <= Gll <= gll_mono,
    the monomial value is then the true generalized Loewy length.
    """
    eli = elias_index(S)
    g, w = gll_monomial(S)
    if n_max is None:
        n_max = S.conductor + 2
    return InvariantReport(
        generators=S.generators,
        e=S.multiplicity,
        embdim=S.embedding_dimension,
        frobenius=S.frobenius,
        gaps=S.gaps,
        pf=S.pseudo_frobenius,
        ring_type=S.ring_type,
        symmetric=S.symmetric,
        nearly_gorenstein=is_nearly_gorenstein(S),
        eli=eli,
        ulr=ulrich_index(S),
        gll_mono=g,
        gll_witness=w,
        gll_exact=(g == eli),
        gr_cm=gr_is_cm(S),
        index=eli if S.symmetric else None,
        samuel=[samuel_length(S, n) for n in range(0, n_max + 1)],
    )
