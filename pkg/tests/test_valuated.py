from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest

from oracles import brute_weak_automorphisms, three_term_plucker_ok
from tropmat.errors import ExchangeValueFailure, NotSimple, SupportMismatch
from tropmat.matroid import elements, matroid_automorphisms, to_mask, uniform
from tropmat.perm import format_cycles, parse_perm
from tropmat.samples import U24_BASES, random_rescaling, random_valuated, two_parallel_pairs, weighted_u24
from tropmat.scalar import BOTTOM
from tropmat.valuated import (
    inverse_witness,
    is_weak_automorphism,
    projectively_equivalent,
    trivial_valuation,
    valuated_from_lists,
    validate_valuation,
    weak_automorphism_group,
    weak_automorphism_witnesses,
)

U24_MASKS = [to_mask(e - 1 for e in b) for b in U24_BASES]


def test_exchange_check_agrees_with_three_term_relation_on_a_grid():
    M = uniform(2, 4)
    for w in product([-1, 0, 1], repeat=6):
        weights = {m: Fraction(v) for m, v in zip(U24_MASKS, w)}
        try:
            validate_valuation(M, weights)
            ok = True
        except ExchangeValueFailure:
            ok = False
        assert ok == three_term_plucker_ok(w), w


def test_known_failing_assignment():
    with pytest.raises(ExchangeValueFailure) as err:
        valuated_from_lists(4, 2, U24_BASES, [0, 0, 0, 0, 0, 1])
    assert set(err.value.counterexample) == {"B", "B_prime", "u"}
    # skipping the check accepts it
    assert valuated_from_lists(4, 2, U24_BASES, [0, 0, 0, 0, 0, 1], check_exchange=False).n == 4


def test_support_must_be_the_basis_set():
    M = uniform(2, 4)
    with pytest.raises(SupportMismatch):
        validate_valuation(M, {m: Fraction(0) for m in U24_MASKS[:5]})
    with pytest.raises(SupportMismatch):
        validate_valuation(M, {**{m: Fraction(0) for m in U24_MASKS}, 0b0111: Fraction(0)})
    with pytest.raises(SupportMismatch):
        validate_valuation(M, {**{m: Fraction(0) for m in U24_MASKS}, U24_MASKS[0]: BOTTOM})


def test_cyclic_shift_is_not_a_weak_automorphism(wu24):
    assert is_weak_automorphism(wu24, parse_perm("(1 2 3 4)", 4)) is None


def test_double_transposition_witness(wu24):
    wit = is_weak_automorphism(wu24, parse_perm("(1 3)(2 4)", 4))
    assert wit.tau == (Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2))
    assert wit.check(wu24)
    inv = inverse_witness(wu24, wit)
    assert inv.check(wu24)


def test_weak_automorphism_group_of_weighted_u24(wu24):
    H = weak_automorphism_group(wu24)
    assert [format_cycles(p) for p in H] == [
        "()", "(3 4)", "(1 2)", "(1 2)(3 4)", "(1 3)(2 4)", "(1 3 2 4)", "(1 4 2 3)", "(1 4)(2 3)",
    ]


def test_non_simple_input_is_rejected():
    with pytest.raises(NotSimple):
        weak_automorphism_witnesses(trivial_valuation(two_parallel_pairs()))


def test_trivial_valuation_recovers_matroid_automorphisms():
    M = uniform(2, 5)
    assert weak_automorphism_group(trivial_valuation(M)) == matroid_automorphisms(M)


def _weights_by_set(VM):
    return {frozenset(elements(b)): v for b, v in VM.weights.items()}


def test_weak_automorphisms_match_rank_oracle_on_random_instances():
    rng = random.Random(11)
    for _ in range(15):
        VM = random_valuated(rng)
        got = sorted(weak_automorphism_group(VM))
        assert got == brute_weak_automorphisms(VM.n, _weights_by_set(VM))
        for s, wit in weak_automorphism_witnesses(VM).items():
            assert wit.check(VM)


def test_rescaling_does_not_change_the_weak_group():
    rng = random.Random(5)
    for _ in range(10):
        VM = random_valuated(rng)
        assert weak_automorphism_group(random_rescaling(rng, VM)) == weak_automorphism_group(VM)


def test_projective_equivalence_recovers_rescaling():
    rng = random.Random(2)
    VM = weighted_u24()
    W = random_rescaling(rng, VM)
    wit = projectively_equivalent(VM, W)
    assert wit is not None
    for b in VM.matroid.bases:
        assert W.weights[b] == VM.weights[b] + wit.alpha + sum(wit.tau[i] for i in elements(b))
    # the ambiguity: alpha trades against a uniform shift of tau
    assert len(wit.kernel_basis) == 1


def test_weak_automorphism_iff_permuted_valuation_is_equivalent(wu24):
    for s in matroid_automorphisms(wu24.matroid):
        assert (is_weak_automorphism(wu24, s) is None) == (projectively_equivalent(wu24, wu24.permuted(s)) is None)


def test_unrelated_valuations_are_not_equivalent(wu24):
    assert projectively_equivalent(wu24, trivial_valuation(uniform(2, 4))) is None
