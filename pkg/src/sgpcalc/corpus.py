"""Semigroups by genus and the integral ideals the searches run over."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .ideals import FractionalIdeal, ideal_from_generators
from .semigroup import NumericalSemigroup, make_semigroup


# Instances always written out with a certificate when they violate.
DEFAULT_PINNED = (("P3.22", {"S": (4, 6, 7), "I": (7, 8), "J": (4,)}),)


@dataclass(frozen=True)
class SearchConfig:
    max_genus: int = 8
    gen_bound: int | None = None  # None: conductor + 2e per semigroup
    max_gens: int = 4
    props: tuple[str, ...] | None = None  # None: every searchable proposition
    jobs: int = 1
    out: str | None = None
    partner_max_gens: int = 2
    samples_per_semigroup: int = 2
    pinned: tuple = DEFAULT_PINNED

    def __post_init__(self):
        if self.max_genus < 0:
            raise ValueError("max_genus must be nonnegative")
        if self.gen_bound is not None and self.gen_bound <= 0:
            raise ValueError("gen_bound must be positive")
        for name in ("max_gens", "jobs", "partner_max_gens"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.samples_per_semigroup < 0:
            raise ValueError("samples_per_semigroup must be nonnegative")

    def bound_for(self, S: NumericalSemigroup) -> int:
        if self.gen_bound is not None:
            return self.gen_bound
        return S.conductor + 2 * S.multiplicity


def _gap_sets(max_genus: int):
    """(gaps, minimal generators) along the genus tree, genus by genus."""
    level = [((), (1,))]
    for g in range(max_genus + 1):
        yield g, level
        nxt = []
        for gaps, gens in level:
            frob = gaps[-1] if gaps else -1
            for a in gens:
                if a > frob:
                    nxt.append(tuple(sorted(gaps + (a,))))
        level = [(gaps, _min_gens(gaps)) for gaps in nxt]


def _min_gens(gaps):
    gapset = set(gaps)
    top = (max(gaps) if gaps else 0) + 1
    mem = [z not in gapset for z in range(2 * top + 2)]
    e = next(z for z in range(1, len(mem)) if mem[z])
    out = []
    for z in range(1, top + e + 1):
        if z < len(mem) and not mem[z]:
            continue
        if not any(mem[s] and (z - s < len(mem) and mem[z - s] or z - s >= top) for s in range(1, z)):
            out.append(z)
    return tuple(out)


def enumerate_semigroups(max_genus: int, include_trivial: bool = True) -> Iterator[NumericalSemigroup]:
    """Every numerical semigroup of genus <= max_genus once, ordered by (genus, generators)."""
    if max_genus < 0:
        raise ValueError("max_genus must be nonnegative")
    for g, level in _gap_sets(max_genus):
        for gens in sorted(gens for _, gens in level):
            if g == 0 and not include_trivial:
                continue
            yield make_semigroup(gens)


def genus_counts(max_genus: int) -> list[int]:
    return [len(level) for _, level in _gap_sets(max_genus)]


def _antichains(elems, divides, k):
    """Subsets of ``elems`` of size 1..k with no element dividing another."""
    n = len(elems)
    out = []

    def grow(start, chosen):
        out.append(tuple(chosen))
        if len(chosen) == k:
            return
        for j in range(start, n):
            b = elems[j]
            if all(not divides(a, b) for a in chosen):
                chosen.append(b)
                grow(j + 1, chosen)
                chosen.pop()

    for i in range(n):
        grow(i + 1, [elems[i]])
    return sorted(out)


def ideal_generator_sets(S: NumericalSemigroup, bound: int, max_gens: int) -> list[tuple[int, ...]]:
    """Minimal generating sets of the ideals generated by <= max_gens elements of S ∩ [1, bound].

    Any such ideal is minimally generated by an antichain of S ∩ [1, bound]
    under a | b  <=>  b - a in S, and distinct antichains give distinct ideals.
    """
    elems = [z for z in range(1, bound + 1) if z in S]
    return _antichains(elems, lambda a, b: (b - a) in S, max_gens)


def enumerate_ideals(S: NumericalSemigroup, config: SearchConfig | None = None) -> Iterator[FractionalIdeal]:
    config = config or SearchConfig()
    for gens in ideal_generator_sets(S, config.bound_for(S), config.max_gens):
        yield ideal_from_generators(S, gens)


def search_corpus(max_genus: int) -> list[NumericalSemigroup]:
    """The semigroups the searches run over; the trivial <1> is left out."""
    return list(enumerate_semigroups(max_genus, include_trivial=False))
