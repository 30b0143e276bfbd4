from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tropmat.errors import CapExceeded, DimensionMismatch, NotAGroup
from tropmat.linsub import TropLinearEquation, member, partition_of_group
from tropmat.partition import Partition, PartitionSubspace
from tropmat.samples import random_rational, random_valuated
from tropmat.scalar import BOTTOM
from tropmat.tropspace import diagonal_aut_equations, diagonal_stabilizer, generators

F = Fraction
Z = F(0)


def test_member_examples():
    assert member([TropLinearEquation((Z, Z), (Z, Z))], (F(5), F(-1)))
    assert not member([TropLinearEquation((Z, Z), (Z, BOTTOM))], (Z, F(1)))
    assert member([TropLinearEquation((Z, Z), (Z, BOTTOM))], (Z, Z))
    with pytest.raises(DimensionMismatch):
        member([TropLinearEquation((Z, Z), (Z, Z))], (Z,))


def test_partition_examples():
    # max(x1, x2) = x1
    assert partition_of_group([TropLinearEquation((Z, Z), (Z, BOTTOM))]).to_json() == [[1, 2]]
    assert partition_of_group([], n=3).to_json() == [[1], [2], [3]]
    # max(x1, x2) = max(x2, x3)
    eq = TropLinearEquation((Z, Z, BOTTOM), (BOTTOM, Z, Z))
    assert partition_of_group([eq]).to_json() == [[1, 3], [2]]


def test_zero_must_be_a_member():
    with pytest.raises(NotAGroup):
        partition_of_group([TropLinearEquation((Z, BOTTOM), (F(1), BOTTOM))])


def test_cap():
    with pytest.raises(CapExceeded):
        partition_of_group([], n=11)


def _random_group_equations(rng, n, count):
    """Equations holding at 0: both sides share their maximum coefficient."""
    eqs = []
    for _ in range(count):
        a = [BOTTOM if rng.random() < 0.3 else F(rng.randint(-2, 0)) for _ in range(n)]
        b = [BOTTOM if rng.random() < 0.3 else F(rng.randint(-2, 0)) for _ in range(n)]
        a[rng.randrange(n)] = Z
        b[rng.randrange(n)] = Z
        eqs.append(TropLinearEquation(a, b))
    return eqs


def test_non_group_solution_set_is_reported_with_a_witness():
    # max(x1-2, x2, x3-2) = max(x1-2, x2, x3, x4-2) holds on 0 but is not a group
    m2 = F(-2)
    eq = TropLinearEquation((m2, Z, m2, BOTTOM), (m2, Z, Z, m2))
    with pytest.raises(NotAGroup) as err:
        partition_of_group([eq])
    cx = err.value.counterexample
    x, y = ([F(v) for v in cx[k]] for k in ("x", "y"))
    assert member([eq], x) and member([eq], y)
    assert not member([eq], [a + b for a, b in zip(x, y)])


def test_soundness_on_random_systems():
    rng = random.Random(21)
    solved = 0
    for _ in range(40):
        n = rng.randint(2, 5)
        eqs = _random_group_equations(rng, n, rng.randint(1, 3))
        try:
            p = partition_of_group(eqs)
        except NotAGroup as err:
            x, y = ([F(v) for v in err.counterexample[k]] for k in ("x", "y"))
            assert member(eqs, x) and member(eqs, y)
            assert not member(eqs, [a + b for a, b in zip(x, y)])
            continue
        solved += 1
        V = PartitionSubspace(p)
        for _ in range(50):
            assert member(eqs, V.vector([random_rational(rng) for _ in range(V.dim)]))
        # splitting any class gives points outside the group
        for blk in p.blocks:
            if len(blk) < 2:
                continue
            finer = Partition(n, tuple(b for b in p.blocks if b != blk) + ((blk[0],), blk[1:]))
            assert not all(e.class_max_ok(finer) for e in eqs)
            x = [Z] * n
            x[blk[0]] = F(100)
            found_outside = not member(eqs, x) or not member(eqs, [-v for v in x])
            assert found_outside
    assert solved >= 20


def test_strict_maximum_forces_equal_coefficients():
    rng = random.Random(22)
    for _ in range(40):
        n = rng.randint(2, 4)
        eqs = _random_group_equations(rng, n, 2)
        x = [random_rational(rng) for _ in range(n)]
        if member(eqs, x):
            k = max(range(n), key=lambda i: x[i])
            if sorted(x)[-1] != sorted(x)[-2]:
                assert all(e.a[k] == e.b[k] for e in eqs)


def test_cross_check_with_diagonal_stabilizer():
    rng = random.Random(23)
    checked = 0
    while checked < 8:
        VM = random_valuated(rng)
        if VM.n > 5:
            continue
        eqs = diagonal_aut_equations(VM, generators(VM))
        assert partition_of_group(eqs, VM.n) == diagonal_stabilizer(VM).partition
        checked += 1
