"""Shared test utilities: random instances and the oracle comparison harness."""

import math
import random

from sgpcalc import make_semigroup
from sgpcalc.ideals import (
    colon_q,
    colon_r,
    ideal_from_generators,
    intersect,
    minimal_generators,
    product,
    sum_ideal,
)
from sgpcalc.oracle import Window

ORACLE_LO = -160
ORACLE_HI = 260
SEED = 20240611


def random_semigroup(rng, max_conductor=40):
    while True:
        gens = sorted(rng.sample(range(2, 16), rng.randint(2, 4)))
        if math.gcd(*gens) != 1:
            continue
        S = make_semigroup(gens)
        if S.conductor <= max_conductor:
            return S


def random_gens(rng, S, integral, kmax=4):
    k = rng.randint(1, kmax)
    if integral:
        pool = S.elements(0, S.conductor + 2 * S.multiplicity + 1)
        return sorted(set(rng.choice(pool) for _ in range(k)))
    return sorted(set(rng.randint(-12, 30) for _ in range(k)))


def oracle_nf(w, bits):
    sporadic, threshold = w.normal_form(bits)
    return {"generators": w.minimal_generators(bits), "sporadic": list(sporadic), "threshold": threshold}


# op name -> (needs integral inputs, package function, oracle function)
OPS = {
    "product": (False, product, lambda w, A, B: w.product(A, B)),
    "sum": (False, sum_ideal, lambda w, A, B: A | B),
    "colon_q": (False, colon_q, lambda w, A, B: w.colon(A, B)),
    "colon_r": (True, colon_r, lambda w, A, B: w.colon_r(A, B)),
    "intersect": (False, intersect, lambda w, A, B: A & B),
    "minimal_generators": (False, None, None),
}


def oracle_equivalence(op, n=1000, seed=SEED):
    """Run ``n`` seeded instances of ``op``; return the list of mismatches."""
    rng = random.Random(f"{seed}:{op}")
    integral, fn, ofn = OPS[op]
    bad = []
    windows = {}
    for _ in range(n):
        S = random_semigroup(rng)
        w = windows.setdefault(S.generators, Window(S.generators, ORACLE_LO, ORACLE_HI))
        a = random_gens(rng, S, integral)
        E = ideal_from_generators(S, a)
        A = w.ideal(a)
        if op == "minimal_generators":
            got = list(minimal_generators(E))
            want = w.minimal_generators(A)
            if got != want:
                bad.append((S.generators, a, got, want))
            continue
        b = random_gens(rng, S, integral)
        F = ideal_from_generators(S, b)
        got = fn(E, F).normal_form()
        want = oracle_nf(w, ofn(w, A, w.ideal(b)))
        if got != want:
            bad.append((S.generators, a, b, got, want))
    return bad
