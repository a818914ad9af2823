"""Numerical semigroups and their combinatorial invariants."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable

import numpy as np

from . import kernels
from .errors import EmptyGenerators, NonCoprime, NonPositive, NotInSemigroup, OutOfWindow


def _apery_residues(gens: list[int], e: int) -> list[int]:
    """Least element of S in each residue class mod ``e`` (shortest paths)."""
    dist = [-1] * e
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for a in gens:
            nd, nr = d + a, (r + a) % e
            if dist[nr] < 0 or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


@dataclass(frozen=True)
class NumericalSemigroup:
    """S = <a1,...,an>, the value semigroup of k[[t^a1,...,t^an]].

    Build with :func:`make_semigroup`. Everything is computed eagerly, so
    instances are immutable and safe to share between workers.
    """

    generators: tuple[int, ...]
    multiplicity: int = field(compare=False)
    frobenius: int = field(compare=False)
    gaps: tuple[int, ...] = field(compare=False, repr=False)
    pseudo_frobenius: tuple[int, ...] = field(compare=False, repr=False)
    window: int = field(compare=False, repr=False)
    _apery: tuple[int, ...] = field(compare=False, repr=False)
    _members: np.ndarray = field(compare=False, repr=False)
    _ord: np.ndarray = field(compare=False, repr=False)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def ring_type(self) -> int:
        # <1> has PF empty; the DVR has type 1
        return max(1, len(self.pseudo_frobenius))

    @property
    def symmetric(self) -> bool:
        return self.ring_type == 1

    def __contains__(self, z) -> bool:
        z = int(z)
        return z >= 0 and z >= self._apery[z % self.multiplicity]

    def contains(self, z: int) -> bool:
        return z in self

    def elements(self, lo: int, hi: int) -> list[int]:
        """Members of S in [lo, hi)."""
        return [z for z in range(max(lo, 0), hi) if z in self]

    def members_mask(self) -> np.ndarray:
        """uint8 membership of [0, window); read-only view."""
        return self._members

    def apery_set(self, a: int) -> tuple[int, ...]:
        if a <= 0 or a not in self:
            raise NotInSemigroup(f"{a} is not a nonzero element of {self}")
        least: dict[int, int] = {}
        z = 0
        # every residue class is hit below F + a + 1
        while len(least) < a:
            if z in self and z % a not in least:
                least[z % a] = z
            z += 1
        return tuple(sorted(least.values()))

    def ord(self, s: int) -> int:
        """Maximum number of parts in a factorization of ``s``."""
        if s < 0 or s not in self:
            raise NotInSemigroup(f"{s} is not in {self}")
        if s >= self.window:
            raise OutOfWindow(f"ord({s}) needs a window past {self.window}; rebuild with with_window()")
        return int(self._ord[s])

    def ord_array(self) -> np.ndarray:
        return self._ord

    def with_window(self, width: int) -> "NumericalSemigroup":
        return make_semigroup(self.generators, window=width)

    def literal(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __str__(self) -> str:
        return self.literal()


def default_window(conductor: int, multiplicity: int) -> int:
    # big enough for m^n with n up to conductor + 4 (eli/ulr/gll hard bounds)
    c, e = conductor, multiplicity
    return max(2 * (c + 4 * e), c + (c + 4) * e, 8)


def make_semigroup(generators: Iterable[int], window: int | None = None) -> NumericalSemigroup:
    gens = [int(g) for g in generators]
    if not gens:
        raise EmptyGenerators("a numerical semigroup needs at least one generator")
    if any(g <= 0 for g in gens):
        raise NonPositive(f"generators must be positive: {gens}")
    if reduce(math.gcd, gens) != 1:
        raise NonCoprime(f"gcd of {sorted(set(gens))} is {reduce(math.gcd, gens)}, not 1")

    e = min(gens)
    apery = _apery_residues(sorted(set(gens)), e)
    frobenius = max(apery) - e
    c = frobenius + 1

    def member(z):
        return z >= 0 and z >= apery[z % e]

    minimal = [
        g for g in range(1, c + e + 1)
        if member(g) and not any(member(s) and member(g - s) for s in range(1, g))
    ]
    gaps = tuple(z for z in range(1, c) if not member(z))
    pf = tuple(f for f in gaps if all(member(f + a) for a in minimal))

    width = default_window(c, e)
    if window is not None:
        width = max(width, int(window))
    members = np.fromiter((member(z) for z in range(width)), dtype=np.uint8, count=width)
    ords = kernels.ord_table(np.asarray(minimal, dtype=np.int64), width)
    members.flags.writeable = False
    ords.flags.writeable = False

    return NumericalSemigroup(
        generators=tuple(minimal),
        multiplicity=e,
        frobenius=frobenius,
        gaps=gaps,
        pseudo_frobenius=pf,
        window=width,
        _apery=tuple(apery),
        _members=members,
        _ord=ords,
    )


def contains(S: NumericalSemigroup, z: int) -> bool:
    return z in S


def apery_set(S: NumericalSemigroup, a: int) -> tuple[int, ...]:
    return S.apery_set(a)


def pseudo_frobenius(S: NumericalSemigroup) -> tuple[int, ...]:
    return S.pseudo_frobenius


def ord(S: NumericalSemigroup, s: int) -> int:  # noqa: A001 - mirrors the math name
    return S.ord(s)
