"""Brute-force reference arithmetic on raw bit sets.

Nothing here touches the normal-form machinery in :mod:`sgpcalc.ideals`.
Sets are Python ints read as bit sets over a window [lo, hi), with every
integer >= hi assumed present. That assumption is only sound when ``hi``
exceeds the threshold of every ideal involved, so callers pick generous
windows. Products and colons run over *all* members in the window, not
over generators.
"""

from __future__ import annotations

from math import gcd


class Window:
    def __init__(self, semigroup_gens, lo: int, hi: int):
        if lo > 0:
            raise ValueError("oracle windows must start at or below 0")
        self.gens = tuple(sorted(set(int(a) for a in semigroup_gens)))
        g = 0
        for a in self.gens:
            g = gcd(g, a)
        if g != 1:
            raise ValueError("generators must be coprime")
        self.lo, self.hi = lo, hi
        self.n = hi - lo
        self.full = (1 << self.n) - 1
        self.pad = self.n  # extension used to honour the "present past hi" rule
        self.S = self._semigroup()
        self.m = self.S & ~self._bit(0)

    # -- bit helpers ---------------------------------------------------------

    def _bit(self, z):
        return 1 << (z - self.lo) if self.lo <= z < self.hi else 0

    def _ext(self, bits):
        return bits | (((1 << self.pad) - 1) << self.n)

    @staticmethod
    def _shift(bits, d):
        return bits << d if d >= 0 else bits >> (-d)

    def members(self, bits):
        """Members encoded in ``bits``; positions past the window are reported too."""
        out, p = [], 0
        while bits:
            if bits & 1:
                out.append(self.lo + p)
            bits >>= 1
            p += 1
        return out

    def contains(self, bits, z):
        if z >= self.hi:
            return True
        if z < self.lo:
            return False
        return bool(bits >> (z - self.lo) & 1)

    def _semigroup(self):
        width = self.hi
        s = 1
        mask = (1 << width) - 1
        while True:
            t = s
            for a in self.gens:
                t |= (s << a) & mask
            if t == s:
                break
            s = t
        return (s << (-self.lo)) & self.full

    # -- ideals ----------------------------------------------------------------

    def ideal(self, gens):
        """Bits of the ideal generated by the finite set ``gens``."""
        sx = self._ext(self.S)
        out = 0
        for g in gens:
            out |= self._shift(sx, g)
        return out & self.full

    def product(self, A, B):
        ax, bx = self._ext(A), self._ext(B)
        out = 0
        for b in self.members(bx):
            out |= self._shift(ax, b)
        return out & self.full

    def colon(self, A, B):
        """{z : z + B inside A}, read on the window."""
        ax = self._ext(A)
        out = self.full
        limit = self.hi - self.lo
        for b in self.members(self._ext(B)):
            if b >= limit:
                break
            out &= self._shift(ax, -b)
        return out & self.full

    def colon_r(self, A, B):
        return self.colon(A, B) & self.S

    def minimal_generators(self, A):
        """A minus mA."""
        return self.members(A & ~self.product(A, self.m))

    def mu(self, A):
        return len(self.minimal_generators(A))

    def normal_form(self, A):
        """(sporadic, threshold) of a set whose threshold lies inside the window."""
        missing = self.full & ~A
        if missing:
            threshold = self.lo + missing.bit_length()
        else:
            threshold = self.lo
        mem = [z for z in self.members(A) if z < threshold]
        return tuple(mem), threshold

    # -- ring-level objects -----------------------------------------------------

    @property
    def multiplicity(self):
        return self.gens[0]

    @property
    def frobenius(self):
        top = self.full & ~self.S
        gaps = [z for z in self.members(top) if z >= 0]
        return max(gaps) if gaps else -1

    def canonical(self):
        F = self.frobenius
        out = 0
        for z in range(max(self.lo, 0), self.hi):
            if F - z < 0 or not self.contains(self.S, F - z):
                out |= self._bit(z)
        return out

    def power_m(self, n):
        out = self.S
        for _ in range(n):
            out = self.product(out, self.m)
        return out

    def colength(self, A):
        return bin(self.S & ~A).count("1")

    # -- module invariants, computed without canonical duality -------------------

    def type_of_ideal(self, A):
        """dim socle of A / t^e A: z in A minus e+A with z + m inside e+A."""
        e = self.multiplicity
        eA = self._shift(self._ext(A), e) & self.full
        count = 0
        for z in self.members(A & ~eA):
            if all(self.contains(eA, z + s) for s in self.members(self.m) if z + s < self.hi):
                count += 1
        return count

    def type_of_quotient(self, A):
        return bin(self.colon_r(A, self.m) & ~A).count("1")

    def is_elias(self, A):
        return self.type_of_quotient(A) == self.type_of_ideal(A)

    def is_burch(self, A):
        return self.product(self.m, A) != self.product(self.m, self.colon_r(A, self.m))

    def is_ulrich(self, A):
        return self.mu(A) == self.multiplicity

    def subset(self, A, B):
        return A & ~B == 0

    def ord_table(self, top):
        """Maximal factorization length over all nonzero elements, by brute force."""
        mem = set(z for z in self.members(self.S) if z >= 0) | set(range(self.hi, top))
        ords = {0: 0}
        for s in range(1, top):
            if s not in mem:
                continue
            best = 1
            for p in range(1, s):
                if p in mem and (s - p) in ords and ords[s - p] + 1 > best:
                    best = ords[s - p] + 1
            ords[s] = best
        return ords
