"""Fractional monomial ideals of a numerical semigroup ring.

A fractional ideal is a set E of integers, bounded below and closed under
adding elements of S. It is stored in normal form: ``threshold`` is the
least N with [N, oo) inside E and ``sporadic`` lists the members below N.
Negative members stand in for elements of the total ring of fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import kernels
from .errors import (
    EmptyGenerators,
    ImproperIdeal,
    NotIntegral,
    OutOfWindow,
    ParentMismatch,
)
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class FractionalIdeal:
    semigroup: NumericalSemigroup = field(repr=False)
    sporadic: tuple[int, ...]
    threshold: int
    generators: tuple[int, ...] = field(compare=False)

    # -- basic queries ------------------------------------------------------

    @property
    def min(self) -> int:
        return self.sporadic[0] if self.sporadic else self.threshold

    @property
    def mu(self) -> int:
        return len(self.generators)

    def __contains__(self, z) -> bool:
        z = int(z)
        return z >= self.threshold or z in self._sporadic_set

    def __post_init__(self):
        object.__setattr__(self, "_sporadic_set", frozenset(self.sporadic))

    def window(self, lo: int, hi: int) -> np.ndarray:
        """uint8 membership of [lo, hi)."""
        out = np.zeros(max(hi - lo, 0), dtype=np.uint8)
        for z in self.sporadic:
            if lo <= z < hi:
                out[z - lo] = 1
        start = max(self.threshold, lo)
        if start < hi:
            out[start - lo:] = 1
        return out

    def members(self, hi: int) -> list[int]:
        """Members below ``hi``."""
        return [z for z in self.sporadic if z < hi] + list(range(self.threshold, hi))

    def is_integral(self) -> bool:
        S = self.semigroup
        if self.min < 0:
            return False
        if any(z not in S for z in self.sporadic):
            return False
        return all(z in S for z in range(self.threshold, S.conductor))

    def is_proper(self) -> bool:
        return self.is_integral() and 0 not in self

    def is_principal(self) -> bool:
        return len(self.generators) == 1

    def issubset(self, other: "FractionalIdeal") -> bool:
        _same_parent(self, other)
        return all(g in other for g in self.generators)

    def __le__(self, other):
        return self.issubset(other)

    def __lt__(self, other):
        return self.issubset(other) and self != other

    def __mul__(self, other):
        return product(self, other)

    def __add__(self, other):
        return sum_ideal(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def shift(self, a: int) -> "FractionalIdeal":
        """The translate a + E, i.e. t^a E."""
        return FractionalIdeal(
            self.semigroup,
            tuple(z + a for z in self.sporadic),
            self.threshold + a,
            tuple(g + a for g in self.generators),
        )

    def literal(self) -> str:
        return "(" + ",".join(map(str, self.generators)) + ")"

    def normal_form(self) -> dict:
        return {
            "generators": list(self.generators),
            "sporadic": list(self.sporadic),
            "threshold": self.threshold,
        }

    def __str__(self) -> str:
        return self.literal()


def _same_parent(E: FractionalIdeal, F: FractionalIdeal) -> None:
    if E.semigroup != F.semigroup:
        raise ParentMismatch(f"{E.semigroup} vs {F.semigroup}")


def from_mask(S: NumericalSemigroup, mask: np.ndarray, lo: int) -> FractionalIdeal:
    """Normalize a windowed member set over [lo, lo+len(mask)) (all members past it)."""
    mask = np.asarray(mask, dtype=np.uint8)
    zeros = np.flatnonzero(mask == 0)
    threshold = lo + int(zeros[-1]) + 1 if zeros.size else lo
    sporadic = tuple(int(i) + lo for i in np.flatnonzero(mask[: threshold - lo]))
    start = sporadic[0] if sporadic else threshold
    e = S.multiplicity
    head = np.zeros(threshold - start, dtype=np.uint8)
    for z in sporadic:
        head[z - start] = 1
    flags = kernels.generator_flags(
        head, start, np.asarray(S.generators, dtype=np.int64), start, threshold + e - start
    )
    gens = tuple(int(i) + start for i in np.flatnonzero(flags))
    return FractionalIdeal(S, sporadic, threshold, gens)


def _dense(E: FractionalIdeal) -> tuple[np.ndarray, int]:
    lo = E.min
    return E.window(lo, E.threshold), lo


# -- constructors -------------------------------------------------------------

def ideal_from_generators(S: NumericalSemigroup, gens: Iterable[int]) -> FractionalIdeal:
    gens = sorted({int(g) for g in gens})
    if not gens:
        raise EmptyGenerators("an ideal needs at least one generator")
    lo = gens[0]
    hi = lo + max(S.conductor, 0)
    shifts = -np.asarray(gens, dtype=np.int64)
    mask = kernels.shift_reduce(S.members_mask(), 0, shifts, lo, hi - lo, False)
    return from_mask(S, mask, lo)


def unit_ideal(S: NumericalSemigroup) -> FractionalIdeal:
    return ideal_from_generators(S, [0])


def principal(S: NumericalSemigroup, a: int) -> FractionalIdeal:
    return ideal_from_generators(S, [a])


def maximal_ideal(S: NumericalSemigroup) -> FractionalIdeal:
    return ideal_from_generators(S, S.generators)


def valuation_truncation(S: NumericalSemigroup, v: int) -> FractionalIdeal:
    """S ∩ [v, oo); the integral closure of any monomial ideal with least element v."""
    lo = max(v, 0)
    hi = max(lo, S.conductor)
    mask = np.fromiter((z in S for z in range(lo, hi)), dtype=np.uint8, count=hi - lo)
    return from_mask(S, mask, lo)


def canonical_ideal(S: NumericalSemigroup) -> FractionalIdeal:
    """K = {z : F - z not in S}; K = S exactly when S is symmetric."""
    F = S.frobenius
    n = F + 1
    mask = np.fromiter(((F - z) not in S for z in range(n)), dtype=np.uint8, count=max(n, 0))
    return from_mask(S, mask, 0)


def power_of_maximal(S: NumericalSemigroup, n: int) -> FractionalIdeal:
    """m^n, the exponents s with ord(s) >= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return unit_ideal(S)
    hi = S.conductor + n * S.multiplicity
    if hi > S.window:
        raise OutOfWindow(f"m^{n} needs ord up to {hi}, window is {S.window}")
    mask = (S.ord_array()[:hi] >= n).astype(np.uint8)
    return from_mask(S, mask, 0)


# -- arithmetic -----------------------------------------------------------------

def minimal_generators(E: FractionalIdeal) -> tuple[int, ...]:
    return E.generators


def mu(E: FractionalIdeal) -> int:
    return len(E.generators)


def product(E: FractionalIdeal, F: FractionalIdeal) -> FractionalIdeal:
    _same_parent(E, F)
    lo = E.min + F.min
    hi = min(E.threshold + F.min, F.threshold + E.min)
    mask, base = _dense(E)
    shifts = -np.asarray(F.generators, dtype=np.int64)
    out = kernels.shift_reduce(mask, base, shifts, lo, hi - lo, False)
    return from_mask(E.semigroup, out, lo)


def sum_ideal(E: FractionalIdeal, F: FractionalIdeal) -> FractionalIdeal:
    _same_parent(E, F)
    lo = min(E.min, F.min)
    hi = max(E.threshold, F.threshold)
    return from_mask(E.semigroup, E.window(lo, hi) | F.window(lo, hi), lo)


def intersect(E: FractionalIdeal, F: FractionalIdeal) -> FractionalIdeal:
    _same_parent(E, F)
    lo = max(E.min, F.min)
    hi = max(E.threshold, F.threshold, lo)
    return from_mask(E.semigroup, E.window(lo, hi) & F.window(lo, hi), lo)


def colon_q(E: FractionalIdeal, F: FractionalIdeal) -> FractionalIdeal:
    """(E :_Q F) = {z : z + F inside E}."""
    _same_parent(E, F)
    lo = E.min - F.min
    hi = E.threshold - F.min
    mask, base = _dense(E)
    shifts = np.asarray(F.generators, dtype=np.int64)
    out = kernels.shift_reduce(mask, base, shifts, lo, hi - lo, True)
    return from_mask(E.semigroup, out, lo)


def colon_r(E: FractionalIdeal, F: FractionalIdeal) -> FractionalIdeal:
    """(E :_R F), the ring colon; E must be integral."""
    _same_parent(E, F)
    if not E.is_integral():
        raise NotIntegral(f"{E} is not an ideal of R")
    return intersect(colon_q(E, F), unit_ideal(E.semigroup))


def colength(E: FractionalIdeal) -> int:
    """Length of R/E, i.e. the number of elements of S missing from E."""
    if not E.is_integral():
        raise NotIntegral(f"{E} is not an ideal of R")
    S = E.semigroup
    return sum(1 for z in range(E.threshold) if z in S and z not in E)


def type_of_ideal(E: FractionalIdeal) -> int:
    """type_R(E) = mu(K : E) by canonical duality."""
    return mu(colon_q(canonical_ideal(E.semigroup), E))


def socle(E: FractionalIdeal) -> tuple[int, ...]:
    """Exponents spanning the socle of R/E: (E :_R m) minus E."""
    _require_proper(E)
    top = colon_r(E, maximal_ideal(E.semigroup))
    return tuple(z for z in top.members(E.threshold) if z not in E)


def type_of_quotient(E: FractionalIdeal) -> int:
    return len(socle(E))


def trace_of_canonical(S: NumericalSemigroup) -> FractionalIdeal:
    """tr(omega) = (R : K) K."""
    K = canonical_ideal(S)
    return product(colon_q(unit_ideal(S), K), K)


def is_nearly_gorenstein(S: NumericalSemigroup) -> bool:
    return maximal_ideal(S).issubset(trace_of_canonical(S))


def _require_proper(E: FractionalIdeal) -> None:
    if not E.is_integral():
        raise NotIntegral(f"{E} is not an ideal of R")
    if 0 in E:
        raise ImproperIdeal(f"{E} is the unit ideal")
