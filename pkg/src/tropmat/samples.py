"""Standard small instances and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

from .matroid import Matroid, free, to_mask, uniform
from .perm import MonomialMap, PermGroup
from .valuated import ValuatedMatroid, trivial_valuation, validate_valuation

U24_BASES = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
WEIGHTED_U24_WEIGHTS = [-2, 0, 0, 0, 0, -1]
FANO_LINES = [(1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7), (5, 6, 1), (6, 7, 2), (7, 1, 3)]


def weighted_u24() -> ValuatedMatroid:
    M = uniform(2, 4)
    return validate_valuation(
        M, {to_mask(e - 1 for e in b): Fraction(w) for b, w in zip(U24_BASES, WEIGHTED_U24_WEIGHTS)}
    )


def k4_graphic() -> Matroid:
    """Cycle matroid of K4 with edges 12,13,14,23,24,34 numbered 1..6."""
    edges = list(combinations(range(4), 2))
    bases = []
    for T in combinations(range(6), 3):
        parent = list(range(4))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        acyclic = True
        for e in T:
            a, b = (find(v) for v in edges[e])
            if a == b:
                acyclic = False
                break
            parent[a] = b
        if acyclic:
            bases.append(to_mask(T))
    return Matroid(6, 3, bases)


def fano() -> Matroid:
    lines = {to_mask(e - 1 for e in L) for L in FANO_LINES}
    return Matroid(7, 3, [m for m in map(to_mask, combinations(range(7), 3)) if m not in lines])


def two_parallel_pairs() -> Matroid:
    """Bases 13, 14, 23, 24: elements 1,2 parallel and 3,4 parallel."""
    return Matroid(4, 2, [0b0101, 0b1001, 0b0110, 0b1010])


def simple_corpus() -> dict:
    """Named simple matroids with n <= 7."""
    return {
        "U23": uniform(2, 3),
        "U24": uniform(2, 4),
        "U25": uniform(2, 5),
        "U35": uniform(3, 5),
        "U36": uniform(3, 6),
        "free3": free(3),
        "free4": free(4),
        "K4": k4_graphic(),
        "Fano": fano(),
    }


def tropical_minor_valuation(rng: random.Random, d: int, n: int, lo: int = -3, hi: int = 3) -> ValuatedMatroid:
    """Tropical maximal minors of a random finite integer ``d x n`` matrix."""
    A = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(d)]
    weights = {}
    for S in combinations(range(n), d):
        weights[to_mask(S)] = Fraction(max(sum(A[i][S[p[i]]] for i in range(d)) for p in permutations(range(d))))
    return validate_valuation(uniform(d, n), weights)


def random_rescaling(rng: random.Random, VM: ValuatedMatroid, lo: int = -3, hi: int = 3) -> ValuatedMatroid:
    t = [Fraction(rng.randint(lo, hi), rng.randint(1, 3)) for _ in range(VM.n)]
    return VM.rescaled(t, Fraction(rng.randint(lo, hi)))


def random_valuated(rng: random.Random) -> ValuatedMatroid:
    """A valid valuated matroid on at most 6 elements with a simple underlying matroid."""
    kind = rng.randrange(4)
    if kind == 0:
        d = rng.choice([2, 3])
        return tropical_minor_valuation(rng, d, rng.randint(d + 1, 6))
    if kind == 1:
        return random_rescaling(rng, trivial_valuation(k4_graphic()))
    if kind == 2:
        return random_rescaling(rng, weighted_u24())
    return random_rescaling(rng, trivial_valuation(uniform(2, rng.randint(3, 5))))


def random_rational(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def random_permutation_group(rng: random.Random, n: int, ngens: int = 2) -> PermGroup:
    gens = []
    for _ in range(ngens):
        p = list(range(n))
        rng.shuffle(p)
        gens.append(tuple(p))
    return PermGroup.generate(n, gens)


def conjugated_monomial_generators(rng: random.Random, n: int, ngens: int = 2):
    """Generators ``D g D^-1`` of a finite monomial group, with the diagonal ``D`` used."""
    G = random_permutation_group(rng, n, ngens)
    D = MonomialMap.diagonal([random_rational(rng) for _ in range(n)])
    gens = [D @ MonomialMap(g, (0,) * n) @ D.inverse() for g in G.generators]
    return gens, D.c


def sample_points(rng: random.Random, gens, n: int, count: int) -> list:
    """Mix of generators, random tropical combinations of them, and random vectors."""
    from .scalar import BOTTOM, trop_mul

    pts = [tuple(g) for g in gens]
    while len(pts) < count:
        kind = rng.randrange(3)
        if kind == 0 and gens:
            x = [BOTTOM] * n
            for g in rng.sample(list(gens), rng.randint(1, len(gens))):
                lam = random_rational(rng)
                x = [max(a, trop_mul(lam, b)) for a, b in zip(x, g)]
            pts.append(tuple(x))
        elif kind == 1:
            pts.append(tuple(BOTTOM if rng.random() < 0.15 else random_rational(rng) for _ in range(n)))
        else:
            # small perturbation of a combination, often just off the space
            x = list(pts[rng.randrange(len(pts))]) if pts else [Fraction(0)] * n
            i = rng.randrange(n)
            x[i] = Fraction(rng.randint(-2, 2)) if x[i] is BOTTOM else x[i] + rng.choice([-1, 1]) * Fraction(1, rng.randint(1, 3))
            pts.append(tuple(x))
    return pts[:count]
