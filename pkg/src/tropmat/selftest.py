"""Randomized consistency checks runnable from the command line."""

from __future__ import annotations

import random

from .errors import TheoryViolation
from .groups import monomialize_torsion
from .linsub import partition_of_group
from .samples import conjugated_monomial_generators, random_valuated, sample_points
from .tropspace import aut_structure, contains, diagonal_aut_equations, diagonal_stabilizer, generators, in_span


def run_selftest(rng: random.Random, rounds: int = 20) -> dict:
    counts = {"membership_points": 0, "sections": 0, "stabilizer_cross_checks": 0, "monomializations": 0}
    for _ in range(rounds):
        VM = random_valuated(rng)
        gens = generators(VM)
        for x in sample_points(rng, gens.vectors, VM.n, 30):
            if contains(VM, x) != (in_span(x, gens.vectors) is not None):
                raise TheoryViolation("membership oracles disagree", counterexample={"x": [str(v) for v in x]})
            counts["membership_points"] += 1
        aut_structure(VM)
        counts["sections"] += 1
        if VM.n <= 5:
            p = partition_of_group(diagonal_aut_equations(VM, gens), VM.n)
            if p != diagonal_stabilizer(VM).partition:
                raise TheoryViolation("torus-subgroup partition differs from the diagonal stabilizer")
            counts["stabilizer_cross_checks"] += 1
        maps, _ = conjugated_monomial_generators(rng, rng.randint(2, 5))
        monomialize_torsion(maps)
        counts["monomializations"] += 1
    return {"rounds": rounds, "checks": counts, "failures": 0}
